#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "tuttekit/graph.hpp"
#include "tuttekit/laurent.hpp"
#include "tuttekit/multiaffine.hpp"
#include "tuttekit/report.hpp"
#include "tuttekit/sparse_poly.hpp"
#include "tuttekit/zeros.hpp"

namespace tuttekit {

// Rationals travel as strings ("p" or "p/q") so precision never degrades.
nlohmann::json laurent_to_json(const LaurentPoly& p);       // [[exponent, "coeff"], ...]
LaurentPoly laurent_from_json(const nlohmann::json& j);

// {"universe": [ids], "terms": [{"vars": [ids], "coeff": <laurent>}]}
nlohmann::json multiaffine_to_json(const MultiAffinePoly& p);
MultiAffinePoly multiaffine_from_json(const nlohmann::json& j);

// {"terms": [{"vars": [[var, exp], ...], "coeff": "p/q"}]}
nlohmann::json sparse_to_json(const SparsePoly& p);

nlohmann::json graph_to_json(const Multigraph& g);
nlohmann::json report_to_json(const PropertyReport& r);
nlohmann::json rootset_to_json(const RootSet& r);

// Minimal structural JSON-schema validator (type, properties, required,
// items, enum, additionalProperties). Returns false and fills *error with a
// path-annotated message on the first violation.
bool validate_schema(const nlohmann::json& value, const nlohmann::json& schema,
                     std::string* error = nullptr);

// Built-in schemas: laurent, multiaffine, sparse, graph, report, rootset.
// Throws std::invalid_argument for unknown names.
nlohmann::json schema_for(const std::string& name);
std::vector<std::string> schema_names();

}  // namespace tuttekit
