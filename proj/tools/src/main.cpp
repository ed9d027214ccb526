#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "tuttekit/analysis.hpp"
#include "tuttekit/fixtures.hpp"
#include "tuttekit/flows.hpp"
#include "tuttekit/graph_io.hpp"
#include "tuttekit/grassmann.hpp"
#include "tuttekit/json_io.hpp"
#include "tuttekit/kirchhoff.hpp"
#include "tuttekit/matroid.hpp"
#include "tuttekit/matroid_io.hpp"
#include "tuttekit/multiaffine.hpp"
#include "tuttekit/tutte.hpp"
#include "tuttekit/two_rooted.hpp"
#include "tuttekit/zeros.hpp"

namespace {

using nlohmann::json;
using namespace tuttekit;

// exit codes: 0 ok, 1 property falsified, 2 usage/input error, 3 cap exceeded
constexpr int kExitOk = 0;
constexpr int kExitFalsified = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

struct Options {
  bool pretty = false;
  int jobs = 1;
  uint64_t seed = 0;
};

void emit(const json& j, const Options& o) {
  if (o.pretty)
    std::cout << j.dump(2) << std::endl;
  else
    std::cout << j.dump() << std::endl;  // one result per line
}

std::string var_display(int var) {
  if (var >= kVertexVarBase) return "w" + std::to_string(var - kVertexVarBase);
  return default_var_name(var);
}

Rational parse_rational_arg(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(s));
    return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw CLI::ValidationError("expected a rational like 3 or -3/7, got " + s);
  }
}

json fraction_to_json(const PolyFraction& f) {
  return {{"num", multiaffine_to_json(f.num)}, {"den", multiaffine_to_json(f.den)}};
}

int exit_for(const PropertyReport& r) {
  return r.verdict == Verdict::Falsified ? kExitFalsified : kExitOk;
}

// per-unit seeds stay deterministic regardless of --jobs
uint64_t unit_seed(uint64_t base, size_t index) {
  return base + 0x9e3779b97f4a7c15ULL * (index + 1);
}

template <typename Fn>
void parallel_for(size_t count, int jobs, Fn&& fn) {
  if (jobs <= 1 || count <= 1) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
  };
  std::vector<std::thread> pool;
  int n = std::min<int>(jobs, static_cast<int>(count));
  for (int t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

// --- compute ----------------------------------------------------------------

int run_compute(const std::string& path, const std::string& what, const Options& o) {
  Multigraph g = load_graph_file(path).graph;
  SolveOptions sopts;
  sopts.jobs = o.jobs;
  json out;
  std::string pretty;
  if (what == "z") {
    MultiAffinePoly z = graph_z(g, sopts);
    out = {{"what", "z"}, {"poly", multiaffine_to_json(z)}};
    pretty = z.to_string();
  } else if (what == "ztilde") {
    MultiAffinePoly z = graph_z(g, sopts).scaled(LaurentPoly::var_power(-g.num_vertices()));
    out = {{"what", "ztilde"}, {"poly", multiaffine_to_json(z)}};
    pretty = z.to_string();
  } else if (what == "chromatic") {
    LaurentPoly p = chromatic_poly(g, sopts);
    out = {{"what", "chromatic"}, {"poly", laurent_to_json(p)}};
    pretty = p.to_string("q");
  } else if (what == "flow") {
    LaurentPoly p = flow_poly(g, sopts);
    out = {{"what", "flow"}, {"poly", laurent_to_json(p)}};
    pretty = p.to_string("q");
  } else if (what == "flow-mv") {
    MultiAffinePoly p = flow_poly_multivariate(g, sopts);
    out = {{"what", "flow-mv"}, {"poly", multiaffine_to_json(p)}};
    pretty = p.to_string();
  } else if (what == "reliability") {
    LaurentPoly p = reliability_poly(g);
    out = {{"what", "reliability"}, {"poly", laurent_to_json(p)}};
    pretty = p.to_string("p");
  } else if (what == "tutte") {
    SparsePoly p = tutte_xy(g, sopts);
    out = {{"what", "tutte"}, {"poly", sparse_to_json(p)}};
    pretty = p.to_string();
  } else if (what == "c" || what == "f" || what == "t") {
    QZeroPolys lims = q_zero_limits(g);
    const MultiAffinePoly& p = what == "c" ? lims.c : what == "f" ? lims.f : lims.t;
    out = {{"what", what}, {"poly", multiaffine_to_json(p)}};
    pretty = p.to_string();
  } else {
    throw CLI::ValidationError("unknown --what " + what);
  }
  if (o.pretty)
    std::cout << pretty << std::endl;
  else
    emit(out, o);
  return kExitOk;
}

// --- eval -------------------------------------------------------------------

int run_eval(const std::string& path, const std::string& q_str,
             const std::vector<std::string>& sets, const std::string& fallback,
             const Options& o) {
  Multigraph g = load_graph_file(path).graph;
  Rational q = parse_rational_arg(q_str);
  std::map<std::string, Rational> by_key;
  for (auto& kv : sets) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) throw CLI::ValidationError("--set expects key=rational");
    by_key[kv.substr(0, eq)] = parse_rational_arg(kv.substr(eq + 1));
  }
  SolveOptions sopts;
  sopts.jobs = o.jobs;
  MultiAffinePoly z = graph_z(g, sopts);
  std::map<int, Rational> point;
  for (int var : z.appearing_vars()) {
    const Edge& e = g.edge(var);
    bool found = false;
    for (const std::string& key :
         {e.w.name, "v" + std::to_string(var), std::to_string(var)}) {
      if (key.empty()) continue;
      auto it = by_key.find(key);
      if (it != by_key.end()) {
        point[var] = it->second;
        found = true;
        break;
      }
    }
    if (!found && !fallback.empty()) {
      point[var] = parse_rational_arg(fallback);
      found = true;
    }
    if (!found)
      throw CLI::ValidationError("edge variable " + var_display(var) +
                                 " is unbound; use --set or --all-v");
  }
  Rational value = z.evaluate(q, point);
  emit({{"q", rational_to_string(q)}, {"value", rational_to_string(value)}}, o);
  return kExitOk;
}

// --- roots / discs ------------------------------------------------------------

int run_roots(const std::string& path, const std::string& spec, const std::string& v_str,
              double tol, const Options& o) {
  Multigraph g = load_graph_file(path).graph;
  RootSet rs;
  if (spec == "chromatic") {
    rs = chromatic_roots(g, tol);
  } else if (spec == "flow") {
    rs = complex_roots(flow_poly(g), tol);
  } else if (spec == "custom-q-at-v") {
    if (v_str.empty()) throw CLI::ValidationError("custom-q-at-v needs --v");
    LaurentPoly v(parse_rational_arg(v_str));
    MultiAffinePoly z = graph_z(g);
    std::map<int, LaurentPoly> bind;
    for (int var : z.appearing_vars()) bind[var] = v;
    rs = complex_roots(z.substitute_partial(bind).q_poly(), tol);
  } else {
    throw CLI::ValidationError("unknown --spec " + spec);
  }
  emit(rootset_to_json(rs), o);
  return kExitOk;
}

int run_discs(const std::string& path, long samples, bool conjectures, const Options& o) {
  Multigraph g = load_graph_file(path).graph;
  PropertyReport rep = zero_free_disc_check(g, samples, o.seed == 0 ? 1 : o.seed);
  emit(report_to_json(rep), o);
  if (conjectures) {
    ConjectureExperimentReport c = conjecture_experiments(g);
    emit({{"lambda", c.lambda},
          {"max_abs_root", c.max_abs_root},
          {"halfplane_re_le_lambda", c.halfplane_re_le_lambda},
          {"taylor_nonneg_at_lambda", c.taylor_nonneg_at_lambda},
          {"positive_beyond_lambda", c.positive_beyond_lambda},
          {"roots", rootset_to_json(c.roots)},
          {"notes", c.notes}},
         o);
  }
  return exit_for(rep);
}

// --- check --------------------------------------------------------------------

PropertyReport rayleigh_all_pairs(const Multigraph& g, long samples, const Options& o) {
  std::vector<std::pair<int, int>> pairs;
  const auto& es = g.edges();
  for (size_t i = 0; i < es.size(); ++i)
    for (size_t j = i + 1; j < es.size(); ++j) pairs.push_back({es[i].id, es[j].id});
  PropertyReport agg;
  agg.property = "rayleigh-graph";
  agg.seed = o.seed;
  if (pairs.empty()) {
    agg.verdict = Verdict::ProvenExact;
    agg.detail = "fewer than two edges, nothing to check";
    return agg;
  }
  std::vector<PropertyReport> reports(pairs.size());
  parallel_for(pairs.size(), o.jobs, [&](size_t i) {
    reports[i] = rayleigh_check_graph(g, pairs[i].first, pairs[i].second, samples,
                                      unit_seed(o.seed, i))
                     .report;
  });
  bool all_exact = true;
  for (size_t i = 0; i < reports.size(); ++i) {
    agg.samples += reports[i].samples;
    if (reports[i].verdict == Verdict::Falsified) {
      agg.verdict = Verdict::Falsified;
      agg.witness = "edge pair (" + std::to_string(pairs[i].first) + "," +
                    std::to_string(pairs[i].second) + "): " + reports[i].witness;
      return agg;
    }
    if (reports[i].verdict != Verdict::ProvenExact) all_exact = false;
  }
  agg.verdict = all_exact ? Verdict::ProvenExact : Verdict::HoldsOnSamples;
  agg.detail = std::to_string(pairs.size()) + " edge pairs checked";
  return agg;
}

int run_check(const std::string& property, const std::string& graph_path,
              const std::string& matroid_path, long samples, const std::string& edges_str,
              char bc_case, int grid, double theta_max, const Options& o) {
  std::optional<Multigraph> g;
  std::optional<RankOracle> mat;
  if (!graph_path.empty()) g = load_graph_file(graph_path).graph;
  if (!matroid_path.empty()) mat = load_matroid_file(matroid_path);
  auto need_graph = [&]() -> const Multigraph& {
    if (!g) throw CLI::ValidationError("--property " + property + " needs --graph");
    return *g;
  };
  auto hpp_object = [&]() -> MultiAffinePoly {
    if (mat) return matroid_basis_poly(*mat);
    return q_zero_limits(need_graph()).t;
  };
  uint64_t seed = o.seed == 0 ? 1 : o.seed;

  if (property == "hpp" || property == "hpp-complementary") {
    PropertyReport rep =
        hpp_sample_check(hpp_object(), samples, seed, property == "hpp-complementary");
    emit(report_to_json(rep), o);
    return exit_for(rep);
  }
  if (property == "hpp-float") {
    PropertyReport rep = hpp_float_falsifier(hpp_object(), std::max(1L, samples / 5), seed);
    emit(report_to_json(rep), o);
    return exit_for(rep);
  }
  if (property == "samephase") {
    PropertyReport rep = same_phase_check(hpp_object());
    emit(report_to_json(rep), o);
    return exit_for(rep);
  }
  if (property == "support-matroid") {
    PropertyReport rep = support_matroid_check(hpp_object());
    emit(report_to_json(rep), o);
    return exit_for(rep);
  }
  if (property == "rayleigh") {
    PropertyReport rep;
    if (!edges_str.empty()) {
      auto comma = edges_str.find(',');
      if (comma == std::string::npos) throw CLI::ValidationError("--edges expects e.g. 0,2");
      int e = std::stoi(edges_str.substr(0, comma));
      int f = std::stoi(edges_str.substr(comma + 1));
      rep = mat ? rayleigh_check_matroid(*mat, e, f, samples, seed).report
                : rayleigh_check_graph(need_graph(), e, f, samples, seed).report;
    } else if (mat) {
      throw CLI::ValidationError("matroid rayleigh needs --edges l1,l2");
    } else {
      rep = rayleigh_all_pairs(need_graph(), samples, o);
    }
    emit(report_to_json(rep), o);
    return exit_for(rep);
  }
  if (property == "bc") {
    if (mat) {
      PropertyReport rep = bc_matroid_check(*mat, samples, seed);
      emit(report_to_json(rep), o);
      return exit_for(rep);
    }
    PropertyReport exact = brown_colbourn_sample(need_graph(), samples, seed);
    emit(report_to_json(exact), o);
    PropertyReport search = bc_polydisc_falsifier(need_graph(), 60, seed);
    emit(report_to_json(search), o);
    return (exact.falsified() || search.falsified()) ? kExitFalsified : kExitOk;
  }
  if (property == "bc-trace") {
    std::vector<double> thetas;
    for (int i = 1; i <= grid; ++i) thetas.push_back(theta_max * i / grid);
    BcTraceResult r = bc_boundary_root_trace(bc_case, thetas);
    json path = json::array();
    for (auto& row : r.path) path.push_back({row[0], row[1], row[2]});
    emit({{"report", report_to_json(r.report)},
          {"min_abs_1pa", r.min_abs_1pa},
          {"theta_at_min", r.theta_at_min},
          {"path", std::move(path)}},
         o);
    return exit_for(r.report);
  }
  if (property == "leeyang" || property == "heilmannlieb") {
    VertexWeightScheme scheme = property == "leeyang" ? VertexWeightScheme::LeeYang
                                                      : VertexWeightScheme::HeilmannLieb;
    PropertyReport rep = lee_yang_sample_check(need_graph(), scheme, samples, seed);
    emit(report_to_json(rep), o);
    return exit_for(rep);
  }
  if (property == "hardcore") {
    PropertyReport rep = hardcore_disc_check(need_graph(), samples, seed);
    emit(report_to_json(rep), o);
    return exit_for(rep);
  }
  if (property == "polymer") {
    PropertyReport rep = polymer_representation_check(need_graph());
    emit(report_to_json(rep), o);
    return exit_for(rep);
  }
  throw CLI::ValidationError("unknown --property " + property);
}

// --- structural commands --------------------------------------------------------

int run_veff(const std::string& path, int x, int y, const Options& o) {
  Multigraph g = load_graph_file(path).graph;
  SolveOptions sopts;
  sopts.jobs = o.jobs;
  TwoRootedDecomposition d = decompose_two_rooted(g, x, y, sopts);
  PolyFraction ve = effective_coupling(g, x, y, sopts);
  PolyFraction tr = transmissivity(g, x, y, sopts);
  emit({{"a", multiaffine_to_json(d.a)},
        {"b", multiaffine_to_json(d.b)},
        {"veff", fraction_to_json(ve)},
        {"transmissivity", fraction_to_json(tr)}},
       o);
  return kExitOk;
}

int run_matrixtree(const std::string& path, const std::vector<int>& roots, const Options& o) {
  Multigraph g = load_graph_file(path).graph;
  MultiAffinePoly p =
      roots.size() == 1 ? matrix_tree(g, roots[0]) : rooted_forest_minor(g, roots);
  std::map<int, Rational> ones;
  for (int var : p.appearing_vars()) ones[var] = Rational(1);
  emit({{"poly", multiaffine_to_json(p)},
        {"count_at_unit_weights", rational_to_string(p.evaluate(Rational(1), ones))}},
       o);
  return kExitOk;
}

int run_conductance(const std::string& path, int x, int y, const Options& o) {
  Multigraph g = load_graph_file(path).graph;
  emit({{"conductance", fraction_to_json(effective_conductance(g, x, y))}}, o);
  return kExitOk;
}

int run_forests(const std::string& path, const Options& o) {
  Multigraph g = load_graph_file(path).graph;
  SparsePoly lhs = grassmann_forest_lhs(g);
  SparsePoly rhs = forest_poly_enumeration(g);
  emit({{"grassmann", sparse_to_json(lhs)},
        {"enumeration", sparse_to_json(rhs)},
        {"equal", lhs == rhs}},
       o);
  return kExitOk;
}

int run_matroid(const std::string& path, const std::string& what,
                const std::string& element_str, const Options& o) {
  RankOracle m = load_matroid_file(path);
  if (what == "ztilde") {
    emit({{"what", what}, {"poly", multiaffine_to_json(z_tilde_matroid(m))}}, o);
  } else if (what == "chromatic") {
    emit({{"what", what}, {"poly", laurent_to_json(matroid_chromatic(m))}}, o);
  } else if (what == "s" || what == "i" || what == "b") {
    MatroidQZero lims = q_zero_matroid_limits(m);
    const MultiAffinePoly& p = what == "s" ? lims.s : what == "i" ? lims.i : lims.b;
    emit({{"what", what}, {"poly", multiaffine_to_json(p)}}, o);
  } else if (what == "basis") {
    emit({{"what", what}, {"poly", multiaffine_to_json(matroid_basis_poly(m))}}, o);
  } else if (what == "rank") {
    emit({{"size", m.size()}, {"full_rank", m.full_rank()}, {"kind", m.kind()}}, o);
  } else if (what == "duality") {
    emit({{"holds", matroid_duality_identity(m)}}, o);
  } else if (what == "delcon") {
    if (element_str.empty()) throw CLI::ValidationError("delcon needs --element");
    emit({{"holds", matroid_delcon_identity(m, std::stoi(element_str))}}, o);
  } else {
    throw CLI::ValidationError("unknown --what " + what);
  }
  return kExitOk;
}

// --- fixtures -------------------------------------------------------------------

int run_fixtures_list(const Options& o) {
  for (auto& f : standard_fixtures())
    emit({{"name", f.name},
          {"vertices", f.graph.num_vertices()},
          {"edges", f.graph.num_edges()},
          {"embedding", f.rotation.has_value()},
          {"description", f.description}},
         o);
  for (auto& f : series_parallel_fixtures())
    emit({{"name", f.name},
          {"vertices", f.graph.num_vertices()},
          {"edges", f.graph.num_edges()},
          {"embedding", false},
          {"description", f.description}},
         o);
  emit({{"name", "uniform"}, {"description", "matroid: uniform --r R --n N"}}, o);
  emit({{"name", "fano"}, {"description", "matroid: the Fano plane over GF(2)"}}, o);
  return kExitOk;
}

int run_fixtures_emit(const std::string& name, const std::string& out_path, int n, int s, int p,
                      int r, const Options& o) {
  std::ostringstream text;
  if (name == "complete") {
    text << graph_to_text(complete_graph(n));
  } else if (name == "cycle") {
    std::optional<RotationSystem> rot;
    if (n >= 3) rot = cycle_embedding(n);
    text << graph_to_text(cycle_graph(n), rot ? &*rot : nullptr);
  } else if (name == "path") {
    text << graph_to_text(path_graph(n));
  } else if (name == "star") {
    text << graph_to_text(star_graph(n));
  } else if (name == "wheel") {
    RotationSystem rot = wheel_embedding(n);
    text << graph_to_text(wheel_graph(n), &rot);
  } else if (name == "theta") {
    text << graph_to_text(theta_graph(s, p));
  } else if (name == "petersen") {
    text << graph_to_text(petersen_graph());
  } else if (name == "tree") {
    text << graph_to_text(random_tree(n, o.seed == 0 ? 1 : o.seed));
  } else if (name == "uniform") {
    text << "uniform " << r << " " << n << "\n";
  } else if (name == "fano") {
    text << "linear gf2 3 7\n1 0 0 1 1 0 1\n0 1 0 1 0 1 1\n0 0 1 0 1 1 1\n";
  } else {
    bool found = false;
    for (auto& f : standard_fixtures())
      if (f.name == name) {
        text << graph_to_text(f.graph, f.rotation ? &*f.rotation : nullptr);
        found = true;
        break;
      }
    if (!found)
      for (auto& f : series_parallel_fixtures())
        if (f.name == name) {
          text << graph_to_text(f.graph);
          found = true;
          break;
        }
    if (!found) throw CLI::ValidationError("unknown fixture " + name);
  }
  if (!out_path.empty()) {
    std::ofstream of(out_path);
    if (!of) throw CLI::ValidationError("cannot write " + out_path);
    of << text.str();
  } else {
    std::cout << text.str();
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  if (const char* cap = std::getenv("TUTTEKIT_CAP_EDGES")) {
    try {
      set_multiaffine_universe_cap(std::stoi(cap));
    } catch (const std::exception& e) {
      std::cerr << "TUTTEKIT_CAP_EDGES: " << e.what() << std::endl;
      return kExitUsage;
    }
  }

  CLI::App app{"exact multivariate Tutte polynomials, specializations, and property checks"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opts;
  app.add_flag("--pretty", opts.pretty, "human-readable output instead of JSON lines");
  app.add_option("--jobs", opts.jobs, "worker threads (1 = sequential)")->capture_default_str();
  app.add_option("--seed", opts.seed, "seed for all sampling")->capture_default_str();

  auto* compute = app.add_subcommand("compute", "compute a polynomial of a graph");
  std::string c_graph, c_what = "z";
  compute->add_option("--graph", c_graph, "graph file")->required();
  compute->add_option("--what", c_what,
                      "z|ztilde|chromatic|flow|flow-mv|reliability|tutte|c|f|t");

  auto* eval = app.add_subcommand("eval", "evaluate Z at exact rationals");
  std::string e_graph, e_q, e_all;
  std::vector<std::string> e_sets;
  eval->add_option("--graph", e_graph, "graph file")->required();
  eval->add_option("--q", e_q, "rational value of q")->required();
  eval->add_option("--set", e_sets, "bind an edge weight, e.g. --set v0=1/2 or --set a=2");
  eval->add_option("--all-v", e_all, "default rational for unbound edge weights");

  auto* roots = app.add_subcommand("roots", "complex roots of a specialization");
  std::string r_graph, r_spec = "chromatic", r_v;
  double r_tol = 1e-10;
  roots->add_option("--graph", r_graph, "graph file")->required();
  roots->add_option("--spec", r_spec, "chromatic|flow|custom-q-at-v");
  roots->add_option("--v", r_v, "rational edge weight for custom-q-at-v");
  roots->add_option("--tol", r_tol, "residual tolerance")->capture_default_str();

  auto* discs = app.add_subcommand("discs", "zero-free disc report");
  std::string d_graph;
  long d_samples = 6;
  bool d_conj = false;
  discs->add_option("--graph", d_graph, "graph file")->required();
  discs->add_option("--samples", d_samples, "sampled weight vectors")->capture_default_str();
  discs->add_flag("--conjectures", d_conj, "append the experimental maxmaxflow predicates");

  auto* check = app.add_subcommand("check", "property checks emitting PropertyReport JSON");
  std::string k_property, k_graph, k_matroid, k_edges, k_case = "b";
  long k_samples = 200;
  int k_grid = 200;
  double k_theta_max = 0.5;
  check->add_option("--property", k_property,
                    "hpp|hpp-complementary|hpp-float|samephase|support-matroid|rayleigh|bc|"
                    "bc-trace|leeyang|heilmannlieb|hardcore|polymer")
      ->required();
  check->add_option("--graph", k_graph, "graph file");
  check->add_option("--matroid", k_matroid, "matroid file");
  check->add_option("--samples", k_samples)->capture_default_str();
  check->add_option("--edges", k_edges, "edge pair e,f for rayleigh");
  check->add_option("--case", k_case, "b|d for bc-trace")->capture_default_str();
  check->add_option("--grid", k_grid, "theta grid points for bc-trace")->capture_default_str();
  check->add_option("--theta-max", k_theta_max)->capture_default_str();

  auto* veff = app.add_subcommand("veff", "two-rooted decomposition and effective coupling");
  std::string v_graph;
  int v_x = 0, v_y = 1;
  veff->add_option("--graph", v_graph, "graph file")->required();
  veff->add_option("--x", v_x, "first root vertex")->required();
  veff->add_option("--y", v_y, "second root vertex")->required();

  auto* mtree = app.add_subcommand("matrixtree", "reduced-Laplacian forest polynomials");
  std::string m_graph;
  std::vector<int> m_roots{0};
  mtree->add_option("--graph", m_graph, "graph file")->required();
  mtree->add_option("--roots", m_roots, "root vertices (one = spanning trees)")
      ->capture_default_str();

  auto* cond = app.add_subcommand("conductance", "effective conductance between two vertices");
  std::string q_graph;
  int q_x = 0, q_y = 1;
  cond->add_option("--graph", q_graph, "graph file")->required();
  cond->add_option("--x", q_x, "source vertex")->required();
  cond->add_option("--y", q_y, "sink vertex")->required();

  auto* forests = app.add_subcommand("forests", "Grassmann forest integral vs enumeration");
  std::string f_graph;
  forests->add_option("--graph", f_graph, "graph file")->required();

  auto* matroid = app.add_subcommand("matroid", "matroid polynomials and identities");
  std::string mm_path, mm_what = "ztilde", mm_element;
  matroid->add_option("--matroid", mm_path, "matroid file")->required();
  matroid->add_option("--what", mm_what, "ztilde|chromatic|s|i|b|basis|rank|duality|delcon");
  matroid->add_option("--element", mm_element, "element label for delcon");

  auto* fixtures = app.add_subcommand("fixtures", "list or emit the named fixtures");
  fixtures->require_subcommand(1);
  auto* fx_list = fixtures->add_subcommand("list", "one JSON line per fixture");
  auto* fx_emit = fixtures->add_subcommand("emit", "write a fixture file");
  std::string fx_name, fx_out;
  int fx_n = 4, fx_s = 2, fx_p = 3, fx_r = 2;
  fx_emit->add_option("name", fx_name, "fixture or family name")->required();
  fx_emit->add_option("--out", fx_out, "output file (default stdout)");
  fx_emit->add_option("--n", fx_n, "size parameter")->capture_default_str();
  fx_emit->add_option("--s", fx_s, "theta strand length")->capture_default_str();
  fx_emit->add_option("--p", fx_p, "theta strand count")->capture_default_str();
  fx_emit->add_option("--r", fx_r, "uniform matroid rank")->capture_default_str();

  auto* schema = app.add_subcommand("schema", "print a built-in JSON schema");
  std::string s_name;
  schema->add_option("name", s_name, "laurent|multiaffine|sparse|graph|report|rootset")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*compute) return run_compute(c_graph, c_what, opts);
    if (*eval) return run_eval(e_graph, e_q, e_sets, e_all, opts);
    if (*roots) return run_roots(r_graph, r_spec, r_v, r_tol, opts);
    if (*discs) return run_discs(d_graph, d_samples, d_conj, opts);
    if (*check)
      return run_check(k_property, k_graph, k_matroid, k_samples, k_edges,
                       k_case.empty() ? 'b' : k_case[0], k_grid, k_theta_max, opts);
    if (*veff) return run_veff(v_graph, v_x, v_y, opts);
    if (*mtree) return run_matrixtree(m_graph, m_roots, opts);
    if (*cond) return run_conductance(q_graph, q_x, q_y, opts);
    if (*forests) return run_forests(f_graph, opts);
    if (*matroid) return run_matroid(mm_path, mm_what, mm_element, opts);
    if (*fixtures) {
      if (*fx_list) return run_fixtures_list(opts);
      if (*fx_emit) return run_fixtures_emit(fx_name, fx_out, fx_n, fx_s, fx_p, fx_r, opts);
    }
    if (*schema) {
      std::cout << schema_for(s_name).dump(2) << std::endl;
      return kExitOk;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return kExitUsage;
  } catch (const CapExceededError& e) {
    std::cerr << "cap exceeded: " << e.what() << std::endl;
    return kExitCap;
  } catch (const NonPlanarEmbeddingError& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return kExitUsage;
  } catch (const GraphParseError& e) {
    std::cerr << "graph parse error: " << e.what() << std::endl;
    return kExitUsage;
  } catch (const MatroidParseError& e) {
    std::cerr << "matroid parse error: " << e.what() << std::endl;
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return kExitUsage;
  }
  return kExitUsage;
}
