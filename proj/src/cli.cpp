#include "tinlab/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

#include "tinlab/algebras.hpp"
#include "tinlab/errors.hpp"
#include "tinlab/io.hpp"
#include "tinlab/lift.hpp"
#include "tinlab/packing.hpp"
#include "tinlab/sparse_dp.hpp"
#include "tinlab/testlab.hpp"

namespace tinlab::cli {

namespace {

using nlohmann::json;

json one_indexed(const std::vector<int>& s) {
  json out = json::array();
  for (int v : s) out.push_back(v + 1);
  return out;
}

struct Certificate {
  json command;
  json inputs = json::object();
  json result = json::object();
  json verdicts = json::object();

  void verdict(const std::string& name, bool pass) { verdicts[name] = pass ? "pass" : "fail"; }
  void skipped(const std::string& name, const std::string& why) { verdicts[name] = "skipped: " + why; }

  bool all_pass() const {
    return std::none_of(verdicts.begin(), verdicts.end(), [](const json& v) { return v == "fail"; });
  }

  void emit(std::ostream& out) const {
    out << json{{"record", "command"}, {"args", command}}.dump() << '\n';
    out << json{{"record", "inputs"}, {"files", inputs}}.dump() << '\n';
    out << json{{"record", "result"}, {"payload", result}}.dump() << '\n';
    out << json{{"record", "verdicts"}, {"checks", verdicts}, {"all_pass", all_pass()}}.dump() << '\n';
  }
};

// Reads an input file and records its digest.
std::string load(Certificate& cert, const std::string& role, const std::string& path) {
  std::string text = io::read_file(path);
  cert.inputs[role] = {{"path", path}, {"sha256", io::sha256_hex(text)}};
  return text;
}

Graph load_graph(Certificate& cert, const std::string& path, const std::string& weights_path) {
  Graph g = io::parse_graph(load(cert, "graph", path));
  if (!weights_path.empty()) g = g.with_weights(io::parse_weights(load(cert, "weights", weights_path), g.order()));
  return g;
}

TreeDecomposition load_td(Certificate& cert, const std::string& path, const Graph& g) {
  return io::parse_td(load(cert, "td", path), g.order());
}

// Writes PREFIX.ext when a prefix is given, otherwise embeds the text.
void deliver(Certificate& cert, const std::string& prefix, const std::string& ext, const std::string& text) {
  cert.result["outputs"][ext] = {{"sha256", io::sha256_hex(text)}};
  if (prefix.empty()) {
    cert.result["outputs"][ext]["text"] = text;
  } else {
    const std::string path = prefix + "." + ext;
    io::write_file(path, text);
    cert.result["outputs"][ext]["path"] = path;
  }
}

void record_decomposition_checks(Certificate& cert, const std::string& tag, const Graph& g, const TreeDecomposition& td,
                                 std::optional<int> alpha_bound) {
  ValidationReport report = validate(g, td);
  cert.verdict(tag + "_valid", report.ok());
  if (!report.ok()) {
    cert.result[tag + "_violation"] = report.message;
    return;
  }
  const int alpha = independence_number(g, td);
  cert.result[tag + "_alpha"] = alpha;
  if (alpha_bound) cert.verdict(tag + "_alpha_at_most_" + std::to_string(*alpha_bound), alpha <= *alpha_bound);
}

int finish(const Certificate& cert, std::ostream& out, std::ostream& err, int code = kExitOk) {
  cert.emit(out);
  if (!cert.all_pass() && code == kExitOk) {
    err << "error: certificate verification failed\n";
    return kExitError;
  }
  return code;
}

std::vector<testlab::Arc> parse_arcs(const std::string& text) {
  std::vector<testlab::Arc> arcs;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos) throw InputError("arc '" + item + "' must read start:length");
    try {
      arcs.push_back({std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1))});
    } catch (const std::logic_error&) {
      throw InputError("arc '" + item + "' must read start:length");
    }
  }
  return arcs;
}

struct Options {
  std::string graph, td, weights, family, lists, out_prefix, property = "mwis", h, arcs;
  int k = 0, distance = 2, kcap = 0;
  bool target = false;
  int n = 0, a = 0, b = 0, clique = 0, independent = 0, points = 0, count = 0;
  double density = 0.5, p = 0.5;
  std::uint64_t seed = 1;
};

int run_power(const Options& o, Certificate& cert, std::ostream& out, std::ostream& err) {
  Graph g = load_graph(cert, o.graph, o.weights);
  cert.result["k"] = o.k;
  if (o.td.empty()) {
    Graph gk = power(g, o.k);
    deliver(cert, o.out_prefix, "gr", io::write_graph(gk));
    cert.result["edges"] = gk.size();
    return finish(cert, out, err);
  }
  TreeDecomposition td = load_td(cert, o.td, g);
  require_valid(g, td);
  const int alpha = independence_number(g, td);
  auto [gk, tdk] = power_with_decomposition(g, td, o.k);
  cert.result["edges"] = gk.size();
  deliver(cert, o.out_prefix, "gr", io::write_graph(gk));
  deliver(cert, o.out_prefix, "td", io::write_td(tdk, gk.order()));
  cert.result["input_alpha"] = alpha;
  record_decomposition_checks(cert, "power_td", gk, tdk, alpha);
  return finish(cert, out, err);
}

int run_lift(const Options& o, Certificate& cert, std::ostream& out, std::ostream& err) {
  Graph g = load_graph(cert, o.graph, o.weights);
  TreeDecomposition td = load_td(cert, o.td, g);
  require_valid(g, td);
  SubgraphFamily fam = io::parse_family(load(cert, "family", o.family), g);
  const int alpha = independence_number(g, td);
  Graph blowup = blowup_graph(fam);
  TreeDecomposition lifted = lift_decomposition(fam, td);
  deliver(cert, o.out_prefix, "gr", io::write_graph(blowup));
  deliver(cert, o.out_prefix, "td", io::write_td(lifted, blowup.order()));
  deliver(cert, o.out_prefix, "w", io::write_weights(blowup));
  cert.result["input_alpha"] = alpha;
  record_decomposition_checks(cert, "lifted_td", blowup, lifted, alpha);
  return finish(cert, out, err);
}

int default_kcap(const Graph& g, const TreeDecomposition& td, int requested) {
  if (requested > 0) return requested;
  return std::max(1, independence_number(g, td));
}

int run_pack(const Options& o, Certificate& cert, std::ostream& out, std::ostream& err) {
  Graph g = load_graph(cert, o.graph, o.weights);
  TreeDecomposition td = load_td(cert, o.td, g);
  require_valid(g, td);
  SubgraphFamily fam = io::parse_family(load(cert, "family", o.family), g);
  const int kcap = default_kcap(g, td, o.kcap);
  PackingSolution sol = max_weight_distance_d_packing(fam, td, o.distance, kcap);
  cert.result["distance"] = o.distance;
  cert.result["kcap"] = kcap;
  cert.result["chosen"] = one_indexed(sol.chosen);
  cert.result["weight"] = format_weight(sol.total_weight);
  cert.result["max_state_size"] = sol.max_state_size;
  cert.verdict("input_td_valid", true);
  cert.verdict("packing_feasible", testlab::verify_packing(fam, sol.chosen, o.distance));
  Weight sum = 0;
  for (int j : sol.chosen) sum += fam.member_weights[static_cast<std::size_t>(j)];
  cert.verdict("weight_matches", sum == sol.total_weight);
  cert.verdict("state_bound", sol.max_state_size <= static_cast<std::size_t>(kcap));
  return finish(cert, out, err);
}

int run_solve(const Options& o, Certificate& cert, std::ostream& out, std::ostream& err) {
  Graph g = load_graph(cert, o.graph, o.weights);
  TreeDecomposition td = load_td(cert, o.td, g);
  require_valid(g, td);
  auto algebra = make_algebra(o.property);
  std::vector<std::vector<int>> lists;
  VertexAnnotations annotations;
  if (!o.lists.empty()) {
    lists = io::parse_lists(load(cert, "lists", o.lists), g.order());
    annotations = list_annotations(lists, algebra->chromatic_bound());
  } else if (o.property.starts_with("listcolor:")) {
    throw InputError("property " + o.property + " needs --lists");
  }
  const int kcap = default_kcap(g, td, o.kcap);
  auto sol = o.target ? solve_with_target(g, td, *algebra, kcap, annotations) : solve(g, td, *algebra, kcap, annotations);
  cert.result["property"] = algebra->name();
  cert.result["kcap"] = kcap;
  cert.result["target_mode"] = o.target;
  if (!sol) {
    cert.result["feasible"] = false;
    return finish(cert, out, err, kExitInfeasible);
  }
  cert.result["feasible"] = true;
  cert.result["F"] = one_indexed(sol->solution);
  if (sol->target) cert.result["X"] = one_indexed(*sol->target);
  cert.result["weight"] = format_weight(sol->total_weight);
  cert.result["states"] = sol->stats.states;
  cert.result["max_boundary"] = sol->stats.max_boundary;
  cert.result["boundary_cap"] = sol->stats.boundary_cap;

  auto query = testlab::parse_property(o.property, lists);
  const int r = algebra->chromatic_bound();
  if (sol->target) {
    cert.verdict("property_and_target", testlab::satisfies_target(g, sol->solution, *sol->target, query, r));
    cert.verdict("weight_matches", g.weight_of(*sol->target) == sol->total_weight);
  } else {
    cert.verdict("property", testlab::satisfies(g, sol->solution, query, r));
    cert.verdict("weight_matches", g.weight_of(sol->solution) == sol->total_weight);
  }
  cert.verdict("state_bound", sol->stats.max_boundary <= sol->stats.boundary_cap);
  return finish(cert, out, err);
}

int run_verify(const Options& o, Certificate& cert, std::ostream& out, std::ostream& err) {
  Graph g = load_graph(cert, o.graph, o.weights);
  TreeDecomposition td = load_td(cert, o.td, g);
  ValidationReport report = validate(g, td);
  cert.result["axiom"] = axiom_name(report.failed);
  cert.verdict("td_valid", report.ok());
  if (!report.ok()) {
    cert.result["message"] = report.message;
    cert.result["witness"] = one_indexed(report.witness);
    cert.emit(out);
    err << "error: " << report.message << '\n';
    return kExitError;
  }
  cert.result["alpha"] = independence_number(g, td);
  cert.result["max_bag"] = td.max_bag_size();
  return finish(cert, out, err);
}

void deliver_instance(Certificate& cert, const Options& o, const testlab::Instance& inst, std::optional<int> bound) {
  deliver(cert, o.out_prefix, "gr", io::write_graph(inst.graph));
  deliver(cert, o.out_prefix, "td", io::write_td(inst.td, inst.graph.order()));
  record_decomposition_checks(cert, "td", inst.graph, inst.td, bound);
}

int run_gen(const std::string& kind, const Options& o, Certificate& cert, std::ostream& out, std::ostream& err) {
  cert.result["kind"] = kind;
  if (kind == "chordal") {
    auto inst = testlab::gen_random_chordal(o.n, o.density, o.seed);
    deliver_instance(cert, o, inst, 1);
    cert.verdict("chordal", is_chordal(inst.graph).chordal);
  } else if (kind == "split") {
    auto inst = testlab::gen_split(o.clique, o.independent, o.p, o.seed);
    deliver_instance(cert, o, inst, 1);
    cert.verdict("chordal", is_chordal(inst.graph).chordal);
  } else if (kind == "kab") {
    deliver_instance(cert, o, testlab::gen_kab(o.a, o.b), std::nullopt);
  } else if (kind == "path") {
    deliver_instance(cert, o, testlab::gen_path(o.n), 1);
  } else if (kind == "cycle") {
    deliver_instance(cert, o, testlab::gen_cycle(o.n), std::nullopt);
  } else if (kind == "forked") {
    Graph h = io::parse_graph(load(cert, "h", o.h));
    auto ce = testlab::gen_forked_power_counterexample(h, o.k);
    deliver(cert, o.out_prefix, "gr", io::write_graph(ce.graph));
    deliver(cert, o.out_prefix, "x", io::write_vertex_set(ce.x));
    cert.verdict("chordal", is_chordal(ce.graph).chordal);
    InducedSubgraph restricted = induced(power(ce.graph, o.k), ce.x);
    if (h.order() <= testlab::active_guards().iso) {
      cert.verdict("power_restricted_isomorphic_to_h", testlab::is_isomorphic_small(restricted.graph, h));
    } else {
      cert.skipped("power_restricted_isomorphic_to_h", "h exceeds the isomorphism guard");
    }
  } else if (kind == "circular-arc") {
    std::vector<testlab::Arc> arcs;
    if (!o.arcs.empty()) {
      arcs = parse_arcs(o.arcs);
    } else {
      if (o.points < 1 || o.count < 1) throw InputError("circular-arc needs --arcs or --points and --count");
      std::mt19937_64 rng(o.seed);
      arcs = testlab::random_arcs(o.count, o.points, rng);
    }
    deliver_instance(cert, o, testlab::gen_circular_arc(arcs, o.points), 2);
  } else {
    throw InputError("unknown generator '" + kind + "'");
  }
  return finish(cert, out, err);
}

int run_oracle(const std::string& kind, const Options& o, Certificate& cert, std::ostream& out, std::ostream& err) {
  cert.result["kind"] = kind;
  Graph g = load_graph(cert, o.graph, o.weights);
  if (kind == "induced") {
    std::vector<std::vector<int>> lists;
    if (!o.lists.empty()) lists = io::parse_lists(load(cert, "lists", o.lists), g.order());
    auto query = testlab::parse_property(o.property, lists);
    const int r = query.chromatic_cap();
    if (o.target) {
      auto best = testlab::brute_best_target(g, query, r);
      cert.result["F"] = one_indexed(best.f);
      cert.result["X"] = one_indexed(best.x);
      cert.result["weight"] = format_weight(best.optimum);
      cert.verdict("witness", testlab::satisfies_target(g, best.f, best.x, query, r));
    } else {
      auto best = testlab::brute_best_induced(g, query, r);
      cert.result["F"] = one_indexed(best.witness);
      cert.result["weight"] = format_weight(best.optimum);
      cert.result["exhaustive"] = best.exhaustive;
      cert.verdict("witness", testlab::satisfies(g, best.witness, query, r));
    }
  } else if (kind == "packing") {
    SubgraphFamily fam = io::parse_family(load(cert, "family", o.family), g);
    auto best = testlab::brute_packing(fam, o.distance);
    cert.result["distance"] = o.distance;
    cert.result["chosen"] = one_indexed(best.witness);
    cert.result["weight"] = format_weight(best.optimum);
    cert.result["exhaustive"] = best.exhaustive;
    cert.verdict("witness", testlab::verify_packing(fam, best.witness, o.distance));
  } else if (kind == "tin") {
    cert.result["tin"] = testlab::exact_tin_small(g);
  } else {
    throw InputError("unknown oracle '" + kind + "'");
  }
  return finish(cert, out, err);
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"tinlab: tree-independence number toolkit"};
  app.require_subcommand(1);
  Options o;

  auto graph_opt = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--graph", o.graph, "graph file (.gr)");
    if (required) opt->required();
    sub->add_option("--weights", o.weights, "vertex weight sidecar");
  };
  auto td_opt = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--td", o.td, "tree decomposition (.td)");
    if (required) opt->required();
  };
  auto out_opt = [&](CLI::App* sub) { sub->add_option("--out", o.out_prefix, "write outputs to PREFIX.<ext>"); };

  auto* power_cmd = app.add_subcommand("power", "graph power with its decomposition (odd k)");
  graph_opt(power_cmd, true);
  td_opt(power_cmd, false);
  power_cmd->add_option("--k", o.k, "exponent")->required()->check(CLI::PositiveNumber);
  out_opt(power_cmd);

  auto* lift_cmd = app.add_subcommand("lift", "blow-up graph and lifted decomposition");
  graph_opt(lift_cmd, true);
  td_opt(lift_cmd, true);
  lift_cmd->add_option("--family", o.family, "family file")->required();
  out_opt(lift_cmd);

  auto* pack_cmd = app.add_subcommand("pack", "maximum-weight distance-d packing");
  graph_opt(pack_cmd, true);
  td_opt(pack_cmd, true);
  pack_cmd->add_option("--family", o.family, "family file")->required();
  pack_cmd->add_option("--distance", o.distance, "pairwise distance d (even)");
  pack_cmd->add_option("--kcap", o.kcap, "state budget (default: alpha of td)");

  auto* solve_cmd = app.add_subcommand("solve", "maximum-weight induced subgraph with a property");
  graph_opt(solve_cmd, true);
  td_opt(solve_cmd, true);
  solve_cmd->add_option("--property", o.property, "mwis | forest | bipartite | color:r | listcolor:r");
  solve_cmd->add_option("--lists", o.lists, "color lists file");
  solve_cmd->add_option("--kcap", o.kcap, "state budget (default: alpha of td)");
  solve_cmd->add_flag("--target", o.target, "maximize the weight of a target subset");

  auto* verify_cmd = app.add_subcommand("verify", "validate a decomposition and report alpha");
  graph_opt(verify_cmd, true);
  td_opt(verify_cmd, true);

  auto* gen_cmd = app.add_subcommand("gen", "generators");
  gen_cmd->require_subcommand(1);
  std::map<std::string, CLI::App*> gens;
  for (const char* kind : {"chordal", "split", "kab", "path", "cycle", "forked", "circular-arc"}) {
    auto* sub = gen_cmd->add_subcommand(kind);
    out_opt(sub);
    gens[kind] = sub;
  }
  gens["chordal"]->add_option("--n", o.n)->required();
  gens["chordal"]->add_option("--density", o.density);
  gens["chordal"]->add_option("--seed", o.seed);
  gens["split"]->add_option("--clique", o.clique)->required();
  gens["split"]->add_option("--independent", o.independent)->required();
  gens["split"]->add_option("--p", o.p);
  gens["split"]->add_option("--seed", o.seed);
  gens["kab"]->add_option("--a", o.a)->required();
  gens["kab"]->add_option("--b", o.b)->required();
  gens["path"]->add_option("--n", o.n)->required();
  gens["cycle"]->add_option("--n", o.n)->required();
  gens["forked"]->add_option("--pattern", o.h, "pattern graph h (.gr)")->required();
  gens["forked"]->add_option("--k", o.k)->required();
  gens["circular-arc"]->add_option("--points", o.points)->required();
  gens["circular-arc"]->add_option("--arcs", o.arcs, "start:length,... (0-based starts)");
  gens["circular-arc"]->add_option("--count", o.count);
  gens["circular-arc"]->add_option("--seed", o.seed);

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force oracles");
  oracle_cmd->require_subcommand(1);
  auto* oracle_induced = oracle_cmd->add_subcommand("induced");
  graph_opt(oracle_induced, true);
  oracle_induced->add_option("--property", o.property);
  oracle_induced->add_option("--lists", o.lists);
  oracle_induced->add_flag("--target", o.target);
  auto* oracle_packing = oracle_cmd->add_subcommand("packing");
  graph_opt(oracle_packing, true);
  oracle_packing->add_option("--family", o.family)->required();
  oracle_packing->add_option("--distance", o.distance);
  auto* oracle_tin = oracle_cmd->add_subcommand("tin");
  graph_opt(oracle_tin, true);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  Certificate cert;
  cert.command = args;
  try {
    if (power_cmd->parsed()) return run_power(o, cert, out, err);
    if (lift_cmd->parsed()) return run_lift(o, cert, out, err);
    if (pack_cmd->parsed()) return run_pack(o, cert, out, err);
    if (solve_cmd->parsed()) return run_solve(o, cert, out, err);
    if (verify_cmd->parsed()) return run_verify(o, cert, out, err);
    for (auto& [kind, sub] : gens) {
      if (sub->parsed()) return run_gen(kind, o, cert, out, err);
    }
    for (auto* sub : {oracle_induced, oracle_packing, oracle_tin}) {
      if (sub->parsed()) return run_oracle(sub->get_name(), o, cert, out, err);
    }
  } catch (const ContractViolation& e) {
    err << "contract violation: " << e.what() << '\n';
    return kExitError;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace tinlab::cli
