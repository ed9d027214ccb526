#include "tuttekit/json_io.hpp"

#include <stdexcept>

namespace tuttekit {

using nlohmann::json;

namespace {

Rational rational_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(Int(s));
  return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

}  // namespace

json laurent_to_json(const LaurentPoly& p) {
  json out = json::array();
  for (auto& [exp, c] : p.terms()) out.push_back({exp, rational_to_string(c)});
  return out;
}

LaurentPoly laurent_from_json(const json& j) {
  LaurentPoly out;
  for (auto& pair : j) {
    int exp = pair.at(0).get<int>();
    out = out + LaurentPoly::var_power(exp, rational_from_string(pair.at(1).get<std::string>()));
  }
  return out;
}

json multiaffine_to_json(const MultiAffinePoly& p) {
  json terms = json::array();
  const auto& uni = p.universe();
  for (auto& [mask, c] : p.terms()) {
    json vars = json::array();
    for (size_t i = 0; i < uni.size(); ++i)
      if (mask & (uint32_t(1) << i)) vars.push_back(uni[i]);
    terms.push_back({{"vars", std::move(vars)}, {"coeff", laurent_to_json(c)}});
  }
  return {{"universe", p.universe()}, {"terms", std::move(terms)}};
}

MultiAffinePoly multiaffine_from_json(const json& j) {
  std::vector<int> universe = j.at("universe").get<std::vector<int>>();
  MultiAffinePoly out(universe);
  const auto& uni = out.universe();
  for (auto& term : j.at("terms")) {
    uint32_t mask = 0;
    for (auto& v : term.at("vars")) {
      int var = v.get<int>();
      auto it = std::lower_bound(uni.begin(), uni.end(), var);
      if (it == uni.end() || *it != var)
        throw std::invalid_argument("multiaffine_from_json: var outside universe");
      mask |= uint32_t(1) << (it - uni.begin());
    }
    out.add_term(mask, laurent_from_json(term.at("coeff")));
  }
  return out;
}

json sparse_to_json(const SparsePoly& p) {
  json terms = json::array();
  for (auto& [m, c] : p.terms()) {
    json vars = json::array();
    for (auto& [var, exp] : m.factors) vars.push_back({var, exp});
    terms.push_back({{"vars", std::move(vars)}, {"coeff", rational_to_string(c)}});
  }
  return {{"terms", std::move(terms)}};
}

json graph_to_json(const Multigraph& g) {
  json edges = json::array();
  for (auto& e : g.edges()) {
    json w;
    if (e.w.is_exact())
      w = {{"kind", "exact"}, {"value", rational_to_string(e.w.value)}};
    else
      w = {{"kind", "symbolic"}, {"name", e.w.name.empty() ? default_var_name(e.id) : e.w.name}};
    edges.push_back({{"id", e.id}, {"u", e.u}, {"v", e.v}, {"weight", std::move(w)}});
  }
  return {{"vertices", g.num_vertices()}, {"edges", std::move(edges)}};
}

json report_to_json(const PropertyReport& r) {
  return {{"property", r.property}, {"verdict", verdict_name(r.verdict)},
          {"samples", r.samples},   {"seed", r.seed},
          {"witness", r.witness},   {"detail", r.detail}};
}

json rootset_to_json(const RootSet& r) {
  json roots = json::array();
  for (size_t i = 0; i < r.roots.size(); ++i)
    roots.push_back({{"re", r.roots[i].real()},
                     {"im", r.roots[i].imag()},
                     {"multiplicity", r.multiplicity[i]}});
  return {{"degree", r.degree},
          {"tolerance", r.tolerance},
          {"max_residual", r.max_residual},
          {"source_hash", r.source_hash},
          {"roots", std::move(roots)}};
}

namespace {

const char* json_type_name(const json& v) {
  if (v.is_object()) return "object";
  if (v.is_array()) return "array";
  if (v.is_string()) return "string";
  if (v.is_boolean()) return "boolean";
  if (v.is_number_integer() || v.is_number_unsigned()) return "integer";
  if (v.is_number()) return "number";
  return "null";
}

bool matches_type(const json& v, const std::string& t) {
  if (t == "number") return v.is_number();
  if (t == "integer") return v.is_number_integer() || v.is_number_unsigned();
  return t == json_type_name(v);
}

bool validate_at(const json& value, const json& schema, const std::string& path,
                 std::string* error) {
  auto fail = [&](const std::string& msg) {
    if (error) *error = (path.empty() ? "$" : path) + ": " + msg;
    return false;
  };
  if (schema.contains("type")) {
    const std::string t = schema.at("type").get<std::string>();
    if (!matches_type(value, t))
      return fail("expected " + t + ", got " + json_type_name(value));
  }
  if (schema.contains("enum")) {
    bool hit = false;
    for (auto& opt : schema.at("enum"))
      if (opt == value) hit = true;
    if (!hit) return fail("value not in enum");
  }
  if (value.is_object()) {
    if (schema.contains("required"))
      for (auto& key : schema.at("required"))
        if (!value.contains(key.get<std::string>()))
          return fail("missing required key " + key.get<std::string>());
    const json* props = schema.contains("properties") ? &schema.at("properties") : nullptr;
    for (auto it = value.begin(); it != value.end(); ++it) {
      if (props && props->contains(it.key())) {
        if (!validate_at(it.value(), props->at(it.key()), path + "." + it.key(), error))
          return false;
      } else if (schema.contains("additionalProperties") &&
                 schema.at("additionalProperties") == false) {
        return fail("unexpected key " + it.key());
      }
    }
  }
  if (value.is_array() && schema.contains("items")) {
    const json& items = schema.at("items");
    for (size_t i = 0; i < value.size(); ++i)
      if (!validate_at(value[i], items, path + "[" + std::to_string(i) + "]", error))
        return false;
  }
  return true;
}

}  // namespace

bool validate_schema(const json& value, const json& schema, std::string* error) {
  return validate_at(value, schema, "", error);
}

json schema_for(const std::string& name) {
  // a rational in string form
  static const json rational = {{"type", "string"}};
  // [[exponent, coeff], ...]
  static const json laurent = {{"type", "array"}, {"items", {{"type", "array"}}}};
  if (name == "laurent") return laurent;
  if (name == "multiaffine")
    return {{"type", "object"},
            {"required", {"universe", "terms"}},
            {"additionalProperties", false},
            {"properties",
             {{"universe", {{"type", "array"}, {"items", {{"type", "integer"}}}}},
              {"terms",
               {{"type", "array"},
                {"items",
                 {{"type", "object"},
                  {"required", {"vars", "coeff"}},
                  {"additionalProperties", false},
                  {"properties",
                   {{"vars", {{"type", "array"}, {"items", {{"type", "integer"}}}}},
                    {"coeff", laurent}}}}}}}}}};
  if (name == "sparse")
    return {{"type", "object"},
            {"required", {"terms"}},
            {"additionalProperties", false},
            {"properties",
             {{"terms",
               {{"type", "array"},
                {"items",
                 {{"type", "object"},
                  {"required", {"vars", "coeff"}},
                  {"additionalProperties", false},
                  {"properties",
                   {{"vars", {{"type", "array"}, {"items", {{"type", "array"}}}}},
                    {"coeff", rational}}}}}}}}}};
  if (name == "graph")
    return {{"type", "object"},
            {"required", {"vertices", "edges"}},
            {"additionalProperties", false},
            {"properties",
             {{"vertices", {{"type", "integer"}}},
              {"edges",
               {{"type", "array"},
                {"items",
                 {{"type", "object"},
                  {"required", {"id", "u", "v", "weight"}},
                  {"additionalProperties", false},
                  {"properties",
                   {{"id", {{"type", "integer"}}},
                    {"u", {{"type", "integer"}}},
                    {"v", {{"type", "integer"}}},
                    {"weight",
                     {{"type", "object"},
                      {"required", {"kind"}},
                      {"properties",
                       {{"kind", {{"type", "string"}, {"enum", {"exact", "symbolic"}}}},
                        {"value", rational},
                        {"name", {{"type", "string"}}}}}}}}}}}}}}}};
  if (name == "report")
    return {{"type", "object"},
            {"required", {"property", "verdict", "samples", "seed", "witness", "detail"}},
            {"additionalProperties", false},
            {"properties",
             {{"property", {{"type", "string"}}},
              {"verdict",
               {{"type", "string"},
                {"enum", {"holds-on-samples", "falsified", "proven-exact", "inconclusive"}}}},
              {"samples", {{"type", "integer"}}},
              {"seed", {{"type", "integer"}}},
              {"witness", {{"type", "string"}}},
              {"detail", {{"type", "string"}}}}}};
  if (name == "rootset")
    return {{"type", "object"},
            {"required", {"degree", "tolerance", "max_residual", "source_hash", "roots"}},
            {"additionalProperties", false},
            {"properties",
             {{"degree", {{"type", "integer"}}},
              {"tolerance", {{"type", "number"}}},
              {"max_residual", {{"type", "number"}}},
              {"source_hash", {{"type", "string"}}},
              {"roots",
               {{"type", "array"},
                {"items",
                 {{"type", "object"},
                  {"required", {"re", "im", "multiplicity"}},
                  {"additionalProperties", false},
                  {"properties",
                   {{"re", {{"type", "number"}}},
                    {"im", {{"type", "number"}}},
                    {"multiplicity", {{"type", "integer"}}}}}}}}}}}};
  throw std::invalid_argument("unknown schema: " + name);
}

std::vector<std::string> schema_names() {
  return {"laurent", "multiaffine", "sparse", "graph", "report", "rootset"};
}

}  // namespace tuttekit
