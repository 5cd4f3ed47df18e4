// stabset: stable set polytope invariants from the command line.
//
// Exit codes: 0 success, 1 user/guard error or failed verification,
// 2 internal consistency error.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "stabset/codegree.hpp"
#include "stabset/dsl.hpp"
#include "stabset/ehrhart.hpp"
#include "stabset/hperfect.hpp"
#include "stabset/idp.hpp"
#include "stabset/perfect.hpp"
#include "stabset/polytope.hpp"
#include "stabset/regularity.hpp"
#include "stabset/report.hpp"
#include "stabset/sweep.hpp"
#include "stabset/triples.hpp"

namespace {

using stabset::Json;

struct Options {
  std::string input;
  std::string format = "json";
  std::string method = "auto";
  int max_n = 0;          // 0: keep defaults
  int k_max = 0;
  int facet_budget = 0;
  std::uint64_t seed = 1;
  int workers = 1;
  int random_count = 0;   // verify/triples: random family size (0: all-labeled)
  int family_n = 0;       // verify/triples: family vertex count
  int points = 5;         // verify: random probes per dual-path check
};

stabset::Limits make_limits(const Options& opt) {
  stabset::Limits limits;
  if (opt.max_n > 0) limits.with_max_n(opt.max_n);
  if (opt.max_n > 0 && opt.max_n > limits.sweep_max_n) limits.sweep_max_n = opt.max_n;
  if (opt.k_max > 0) limits.idp_k_max = opt.k_max;
  if (opt.facet_budget > 0) limits.facet_max_n = opt.facet_budget;
  return limits;
}

stabset::Graph load_graph(const std::string& input) {
  if (std::filesystem::exists(input)) {
    std::ifstream in(input);
    std::ostringstream text;
    text << in.rdbuf();
    return stabset::build_graph(text.str());
  }
  return stabset::build_graph(input);
}

class Timer {
 public:
  long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// The report envelope. Timings go last so byte-identical re-runs differ
// only in the final field.
void emit_json(const std::string& command, const Json& input, const Json& result,
               const Timer& timer) {
  Json j;
  j["schema_version"] = stabset::kSchemaVersion;
  j["command"] = command;
  if (!input.is_null()) j["input"] = input;
  j["result"] = result;
  j["timings"] = Json{{"total_ms", timer.ms()}};
  std::cout << j.dump(2) << "\n";
}

Json input_echo(const std::string& text, const stabset::Graph& g) {
  Json j;
  j["expr"] = text;
  j["graph"] = stabset::graph_json(g);
  return j;
}

void table_line(const std::string& key, const std::string& value) {
  std::cout << "  " << key;
  for (std::size_t i = key.size(); i < 24; ++i) std::cout << ' ';
  std::cout << value << "\n";
}

std::string ineq_str(const stabset::Inequality& ineq) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t j = 0; j < ineq.coeffs.size(); ++j) {
    if (ineq.coeffs[j] == 0) continue;
    const std::string c = stabset::to_string(ineq.coeffs[j]);
    if (!first && ineq.coeffs[j] > 0) out << " + ";
    if (!first && ineq.coeffs[j] < 0) out << " - ";
    if (first && ineq.coeffs[j] < 0) out << "-";
    const std::string mag = ineq.coeffs[j] < 0 ? c.substr(1) : c;
    if (mag != "1") out << mag << "*";
    out << "x" << j + 1;
    first = false;
  }
  if (first) out << "0";
  out << " <= " << stabset::to_string(ineq.rhs);
  return out.str();
}

int run_invariants(const Options& opt) {
  const Timer timer;
  const stabset::Limits limits = make_limits(opt);
  const stabset::Graph g = load_graph(opt.input);
  const stabset::InvariantBundle inv = stabset::graph_invariants(g, limits);
  const stabset::PerfectnessCertificate perfect = stabset::is_perfect(g, limits);
  if (opt.format == "json") {
    Json result;
    result["invariants"] = stabset::invariants_json(inv);
    result["perfectness"] = stabset::perfect_json(perfect);
    emit_json("invariants", input_echo(opt.input, g), result, timer);
    return 0;
  }
  std::cout << "graph " << g.label() << "\n";
  table_line("n / m", std::to_string(inv.n) + " / " + std::to_string(inv.m));
  table_line("max degree", std::to_string(inv.max_degree));
  table_line("clique number", std::to_string(inv.clique_number));
  table_line("chromatic number", std::to_string(inv.chromatic_number));
  table_line("components", std::to_string(inv.components.size()));
  table_line("perfect", perfect.perfect ? "yes" : "no");
  if (!perfect.odd_hole.empty()) {
    std::ostringstream hole;
    for (int v : perfect.odd_hole) hole << v << " ";
    table_line("odd hole", hole.str());
  }
  if (!perfect.odd_antihole.empty()) {
    std::ostringstream hole;
    for (int v : perfect.odd_antihole) hole << v << " ";
    table_line("odd antihole", hole.str());
  }
  return 0;
}

stabset::CodegreeReport dispatch_codegree(const stabset::Graph& g,
                                          const Options& opt,
                                          const stabset::Limits& limits) {
  if (opt.method == "auto") return stabset::codegree_auto(g, limits);
  if (opt.method == "exact") return stabset::codegree_exact(g, limits);
  if (opt.method == "exact-lp") {
    stabset::Limits lp_limits = limits;
    lp_limits.facet_max_n = -1;  // keep the facet path out of reach
    return stabset::codegree_exact(g, lp_limits);
  }
  if (opt.method == "exact-facet") {
    stabset::Limits f_limits = limits;
    f_limits.facet_max_n = std::max(f_limits.facet_max_n, g.vertex_count());
    return stabset::codegree_exact(g, f_limits);
  }
  if (opt.method == "hperfect")
    return stabset::codegree_auto(g, limits, /*declared_h_perfect=*/true);
  throw CLI::ValidationError("--method must be one of auto, exact, exact-lp, "
                             "exact-facet, hperfect");
}

int run_codegree(const Options& opt) {
  const Timer timer;
  const stabset::Limits limits = make_limits(opt);
  const stabset::Graph g = load_graph(opt.input);
  const stabset::CodegreeReport r = dispatch_codegree(g, opt, limits);
  if (opt.format == "json") {
    emit_json("codegree", input_echo(opt.input, g), stabset::codegree_json(r),
              timer);
    return 0;
  }
  std::cout << "graph " << g.label() << "\n";
  table_line("omega+1", std::to_string(r.omega_plus_1));
  table_line("codeg", std::to_string(r.codeg));
  table_line("chi+1", std::to_string(r.chi_plus_1));
  table_line("degree", std::to_string(r.degree));
  table_line("method", stabset::method_name(r.method));
  table_line("triple class", stabset::triple_class_name(r.triple_class));
  table_line("blocking k", std::to_string(r.blocking.k));
  if (r.blocking.kind == stabset::BlockKind::facet ||
      r.blocking.kind == stabset::BlockKind::valid_inequality)
    table_line("blocking inequality", ineq_str(r.blocking.inequality));
  else if (r.blocking.kind == stabset::BlockKind::zero_direction)
    table_line("blocked direction", std::to_string(r.blocking.direction));
  else
    table_line("blocking", "all-ones outside (k-1)P");
  return 0;
}

int run_facets(const Options& opt) {
  const Timer timer;
  const stabset::Limits limits = make_limits(opt);
  const stabset::Graph g = load_graph(opt.input);
  const stabset::HPerfectCertificate cert = stabset::is_h_perfect(g, limits);
  if (cert.verdict == stabset::HPerfectVerdict::inconclusive)
    throw stabset::GuardError(cert.note);
  if (opt.format == "json") {
    Json result;
    result["facet_count"] = cert.facets.size();
    Json facets = Json::array();
    for (const auto& tag : cert.facets) {
      Json f = stabset::inequality_json(tag.facet);
      f["kind"] = stabset::facet_kind_name(tag.kind);
      if (!tag.witness.empty()) f["witness"] = tag.witness;
      facets.push_back(std::move(f));
    }
    result["facets"] = std::move(facets);
    emit_json("facets", input_echo(opt.input, g), result, timer);
    return 0;
  }
  std::cout << "facets of the stable set polytope of " << g.label() << " ("
            << cert.facets.size() << ")\n";
  for (const auto& tag : cert.facets)
    table_line(stabset::facet_kind_name(tag.kind), ineq_str(tag.facet));
  return 0;
}

int run_ehrhart(const Options& opt) {
  const Timer timer;
  const stabset::Limits limits = make_limits(opt);
  const stabset::Graph g = load_graph(opt.input);
  const stabset::VPolytope p = stable_set_polytope(g, limits);
  const stabset::EhrhartData data = stabset::ehrhart_h_star(p, limits);
  if (opt.format == "json") {
    emit_json("ehrhart", input_echo(opt.input, g), stabset::ehrhart_json(data),
              timer);
    return 0;
  }
  std::cout << "Ehrhart data for the stable set polytope of " << g.label() << "\n";
  std::ostringstream vals, hstar;
  for (const auto& v : data.values) vals << stabset::to_string(v) << " ";
  for (const auto& h : data.h_star) hstar << stabset::to_string(h) << " ";
  table_line("L(0..n)", vals.str());
  table_line("h*", hstar.str());
  table_line("degree", std::to_string(data.degree));
  return 0;
}

int run_hperfect(const Options& opt) {
  const Timer timer;
  const stabset::Limits limits = make_limits(opt);
  const stabset::Graph g = load_graph(opt.input);
  const stabset::HPerfectCertificate cert = stabset::is_h_perfect(g, limits);
  if (opt.format == "json") {
    emit_json("hperfect", input_echo(opt.input, g), stabset::hperfect_json(cert),
              timer);
    return 0;
  }
  std::cout << "h-perfectness of " << g.label() << "\n";
  table_line("verdict", stabset::h_perfect_verdict_name(cert.verdict));
  if (cert.verdict == stabset::HPerfectVerdict::inconclusive) {
    table_line("note", cert.note);
    return 0;
  }
  int trivial = 0, clique = 0, odd = 0, other = 0;
  for (const auto& tag : cert.facets) {
    switch (tag.kind) {
      case stabset::FacetKind::trivial: ++trivial; break;
      case stabset::FacetKind::clique: ++clique; break;
      case stabset::FacetKind::odd_cycle: ++odd; break;
      case stabset::FacetKind::other: ++other; break;
    }
  }
  table_line("facets", std::to_string(cert.facets.size()) + " (" +
                           std::to_string(trivial) + " trivial, " +
                           std::to_string(clique) + " clique, " +
                           std::to_string(odd) + " odd-cycle, " +
                           std::to_string(other) + " other)");
  if (cert.offender) table_line("offender", ineq_str(*cert.offender));
  return 0;
}

int run_regularity(const Options& opt) {
  const Timer timer;
  const stabset::Limits limits = make_limits(opt);
  const stabset::Graph g = load_graph(opt.input);
  const stabset::RegularityReport r = stabset::regularity_bounds(g, limits);
  if (opt.format == "json") {
    emit_json("regularity", input_echo(opt.input, g), stabset::regularity_json(r),
              timer);
    return 0;
  }
  std::cout << "regularity bounds for the toric ring of " << g.label() << "\n";
  table_line("lower bound (n-chi)", std::to_string(r.lower_bound));
  table_line("upper bound (n-omega)",
             std::to_string(r.conditional_upper) + " (valid if IDP/normal)");
  if (r.exact) table_line("exact (perfect)", std::to_string(*r.exact));
  table_line("deg P (n+1-codeg)", std::to_string(r.degree));
  table_line("spanning", r.spanning ? "yes" : "no");
  table_line("idp", r.idp_status + " (" + r.idp_detail + ")");
  return 0;
}

int run_matching(const Options& opt) {
  const Timer timer;
  const stabset::Limits limits = make_limits(opt);
  const stabset::Graph g = load_graph(opt.input);
  Json result;
  std::optional<stabset::CodegreeReport> formula, edmonds, exact;
  const bool all = opt.method == "auto";
  if (all || opt.method == "formula")
    formula = stabset::codegree_matching_formula(g, limits);
  if (all || opt.method == "edmonds")
    edmonds = stabset::codegree_matching_edmonds(g, limits);
  if (opt.method == "exact")
    exact = stabset::codegree_exact(g.line_graph(), limits);
  bool agree = true;
  if (formula && edmonds && formula->codeg != edmonds->codeg) agree = false;
  if (!agree)
    throw std::logic_error("matching paths disagree on codeg");
  const stabset::CodegreeReport& main =
      formula ? *formula : (edmonds ? *edmonds : *exact);
  if (opt.format == "json") {
    result["codegree"] = stabset::codegree_json(main);
    if (formula && edmonds) {
      result["paths"] = Json{{"formula", formula->codeg},
                             {"edmonds", edmonds->codeg}};
      result["agree"] = agree;
    }
    emit_json("matching", input_echo(opt.input, g), result, timer);
    return 0;
  }
  std::cout << "matching polytope codegree for " << g.label() << "\n";
  table_line("edges (ambient dim)", std::to_string(main.n));
  table_line("codeg", std::to_string(main.codeg));
  table_line("degree", std::to_string(main.degree));
  table_line("method", stabset::method_name(main.method));
  return 0;
}

int run_verify(const Options& opt) {
  const Timer timer;
  const stabset::Limits limits = make_limits(opt);
  std::vector<stabset::Graph> family;
  if (opt.random_count > 0) {
    const int n = opt.family_n > 0 ? opt.family_n : 5;
    family = stabset::random_graph_family(n, opt.random_count, opt.seed);
  } else {
    const int n_max = opt.max_n > 0 ? opt.max_n : 4;
    for (int n = 1; n <= n_max; ++n) {
      auto batch = stabset::all_labeled_graphs(n);
      std::move(batch.begin(), batch.end(), std::back_inserter(family));
    }
  }
  stabset::VerifyOptions vopt;
  vopt.random_points = opt.points;
  vopt.seed = opt.seed;
  std::vector<std::vector<std::string>> violations(family.size());
  stabset::parallel_for(static_cast<int>(family.size()), opt.workers, [&](int i) {
    violations[i] = stabset::verify_graph(family[i], limits, vopt);
  });
  std::vector<std::string> flat;
  for (const auto& v : violations) flat.insert(flat.end(), v.begin(), v.end());
  if (opt.format == "json") {
    Json result;
    result["graphs_checked"] = family.size();
    result["violations"] = flat;
    emit_json("verify", Json(), result, timer);
  } else {
    std::cout << "checked " << family.size() << " graphs: " << flat.size()
              << " violations\n";
    for (const auto& v : flat) std::cout << "  " << v << "\n";
  }
  return flat.empty() ? 0 : 1;
}

int run_triples(const Options& opt) {
  const Timer timer;
  const stabset::Limits limits = make_limits(opt);
  const int n_max = opt.max_n > 0 ? opt.max_n : 5;
  const stabset::TripleSearchResult result =
      opt.random_count > 0
          ? stabset::triple_search_random(n_max, opt.random_count, opt.seed, limits)
          : stabset::triple_search_all_labeled(n_max, limits);
  if (opt.format == "json") {
    emit_json("triples", Json(), stabset::triples_json(result), timer);
    return 0;
  }
  std::cout << "realized (omega+1, codeg, chi+1) triples over "
            << result.graphs_processed << " graphs\n";
  for (const auto& rec : result.records) {
    std::ostringstream line;
    line << "(" << rec.triple[0] << "," << rec.triple[1] << "," << rec.triple[2]
         << ") class " << stabset::triple_class_name(rec.cls) << "  count "
         << rec.count << "  witness " << rec.witness_label;
    std::cout << "  " << line.str() << "\n";
  }
  return 0;
}

// The fixed fixture battery: known values for the worked examples, each
// asserted exactly. Exit 0 iff everything matches.
int run_paper_examples(const Options& opt) {
  const Timer timer;
  std::vector<std::string> failures;
  Json checks = Json::array();
  const auto check = [&](const std::string& name, bool ok,
                         const std::string& detail) {
    checks.push_back(Json{{"name", name}, {"ok", ok}, {"detail", detail}});
    if (!ok) failures.push_back(name + ": " + detail);
  };
  stabset::Limits limits;

  {
    const stabset::Graph c5 = stabset::Graph::cycle(5);
    const auto r = stabset::codegree_exact(c5, limits);
    check("cycle5.codeg", r.codeg == 3, "codeg=" + std::to_string(r.codeg));
    check("cycle5.degree", r.degree == 3, "degree=" + std::to_string(r.degree));
    check("cycle5.class", r.triple_class == stabset::TripleClass::iii,
          "class=" + stabset::triple_class_name(r.triple_class));
  }
  {
    const stabset::Graph k5 = stabset::Graph::complete(5);
    const auto lg = k5.line_graph();
    const auto exact = stabset::codegree_exact(lg, limits);
    const auto formula = stabset::codegree_matching_formula(k5, limits);
    const auto edmonds = stabset::codegree_matching_edmonds(k5, limits);
    check("lineK5.codeg",
          exact.codeg == 6 && formula.codeg == 6 && edmonds.codeg == 6,
          "exact=" + std::to_string(exact.codeg) +
              " formula=" + std::to_string(formula.codeg) +
              " edmonds=" + std::to_string(edmonds.codeg));
    check("lineK5.sandwich",
          exact.omega_plus_1 == 5 && exact.chi_plus_1 == 6 &&
              exact.triple_class == stabset::TripleClass::ii,
          "omega+1=" + std::to_string(exact.omega_plus_1) +
              " chi+1=" + std::to_string(exact.chi_plus_1));
  }
  {
    const stabset::Graph g = stabset::Graph::join(
        stabset::Graph::cycle(5), stabset::Graph::complete(5).line_graph());
    const auto inv = stabset::graph_invariants(g, limits);
    const auto r = stabset::codegree_exact(g, limits);
    check("joinC5LK5.invariants",
          g.vertex_count() == 15 && inv.clique_number == 6 &&
              inv.chromatic_number == 8,
          "n=" + std::to_string(g.vertex_count()) +
              " omega=" + std::to_string(inv.clique_number) +
              " chi=" + std::to_string(inv.chromatic_number));
    check("joinC5LK5.codeg", r.codeg == 8, "codeg=" + std::to_string(r.codeg));
    check("joinC5LK5.class", r.triple_class == stabset::TripleClass::iv,
          "class=" + stabset::triple_class_name(r.triple_class));
  }
  {
    const stabset::Graph g =
        stabset::Graph::join(stabset::Graph::cycle(5), stabset::Graph::cycle(5));
    const auto inv = stabset::graph_invariants(g, limits);
    const auto r = stabset::codegree_exact(g, limits);
    check("joinC5C5.values",
          inv.clique_number == 4 && inv.chromatic_number == 6 && r.codeg == 6 &&
              r.degree == 5,
          "omega=" + std::to_string(inv.clique_number) +
              " chi=" + std::to_string(inv.chromatic_number) +
              " codeg=" + std::to_string(r.codeg) +
              " degree=" + std::to_string(r.degree));
    // Additivity fails under join: degree 5 != 3+3, codeg 6 != 3+3-1.
    check("joinC5C5.additivity_failure", r.degree != 6 && r.codeg != 5,
          "degree=" + std::to_string(r.degree) +
              " codeg=" + std::to_string(r.codeg));
  }
  for (int n = 1; n <= 6; ++n) {
    const auto r = stabset::codegree_exact(stabset::Graph::complete(n), limits);
    check("completeK" + std::to_string(n), r.codeg == n + 1,
          "codeg=" + std::to_string(r.codeg));
  }
  {
    const stabset::Graph g = stabset::Graph::disjoint_union(
                                 stabset::Graph::cycle(5), stabset::Graph::cycle(5))
                                 .complemented();
    stabset::Limits wide = limits;
    wide.ehrhart_max_n = 10;
    wide.idp_k_max = 5;
    const auto inv = stabset::graph_invariants(g, wide);
    const auto r = stabset::codegree_exact(g, wide);
    check("complement2C5.invariants",
          inv.clique_number == 4 && inv.chromatic_number == 6,
          "omega=" + std::to_string(inv.clique_number) +
              " chi=" + std::to_string(inv.chromatic_number));
    check("complement2C5.codeg", r.codeg == 6, "codeg=" + std::to_string(r.codeg));
    const auto hp = stabset::is_h_perfect(g, wide);
    check("complement2C5.not_h_perfect",
          hp.verdict == stabset::HPerfectVerdict::not_h_perfect,
          stabset::h_perfect_verdict_name(hp.verdict));
    const auto p = stable_set_polytope(g, wide);
    const auto idp = stabset::is_idp_up_to(p, 5, wide);
    const bool all_ones_witness =
        !idp.pass && *idp.failing_k == 5 &&
        *idp.failing_point == stabset::Point(10, 1);
    check("complement2C5.not_idp", all_ones_witness,
          idp.pass ? "pass up to 5"
                   : "fails at k=" + std::to_string(*idp.failing_k));
  }

  if (opt.format == "json") {
    Json result;
    result["checks"] = std::move(checks);
    result["failures"] = failures;
    emit_json("paper-examples", Json(), result, timer);
  } else {
    for (const auto& c : checks)
      std::cout << (c["ok"].get<bool>() ? "ok   " : "FAIL ")
                << c["name"].get<std::string>() << "  "
                << c["detail"].get<std::string>() << "\n";
  }
  return failures.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stable set polytope toolkit: invariants, codegree, facets, "
               "Ehrhart data, and verification sweeps"};
  app.require_subcommand(1);
  Options opt;

  const auto add_common = [&](CLI::App* cmd, bool with_input) {
    if (with_input)
      cmd->add_option("input", opt.input,
                      "edge-list file or generator expression")
          ->required();
    cmd->add_option("--format", opt.format, "output format: json|table")
        ->check(CLI::IsMember({"json", "table"}));
    cmd->add_option("--max-n", opt.max_n, "override the size guards");
    cmd->add_option("--k-max", opt.k_max, "bounded IDP check depth");
    cmd->add_option("--facet-budget", opt.facet_budget,
                    "facet enumeration dimension budget");
    cmd->add_option("--seed", opt.seed, "PRNG seed for sweeps");
    cmd->add_option("--workers", opt.workers, "sweep worker threads");
  };

  auto* invariants = app.add_subcommand("invariants", "graph invariants and perfectness");
  add_common(invariants, true);
  auto* codegree = app.add_subcommand("codegree", "codegree of the stable set polytope");
  add_common(codegree, true);
  codegree->add_option("--method", opt.method,
                       "auto|exact|exact-lp|exact-facet|hperfect");
  auto* facets = app.add_subcommand("facets", "facet list with kind tags");
  add_common(facets, true);
  auto* ehrhart = app.add_subcommand("ehrhart", "Ehrhart values and h*-vector");
  add_common(ehrhart, true);
  auto* hperfect = app.add_subcommand("hperfect", "h-perfectness classification");
  add_common(hperfect, true);
  auto* regularity = app.add_subcommand("regularity", "regularity bounds report");
  add_common(regularity, true);
  auto* matching = app.add_subcommand("matching", "matching polytope codegree");
  add_common(matching, true);
  matching->add_option("--method", opt.method, "auto|formula|edmonds|exact");
  auto* verify = app.add_subcommand("verify", "sweep a family, assert invariants");
  add_common(verify, false);
  verify->add_flag("--all-labeled", "use all labeled graphs up to --max-n (default)");
  verify->add_option("--random", opt.random_count, "use a seeded random family");
  verify->add_option("--graph-n", opt.family_n, "vertex count of random graphs");
  verify->add_option("--points", opt.points, "random probes per dual-path check");
  auto* triples = app.add_subcommand("triples", "realized (omega+1,codeg,chi+1) triples");
  add_common(triples, false);
  triples->add_option("--random", opt.random_count, "random family of this size");
  auto* paper = app.add_subcommand("paper-examples", "assert the worked examples");
  add_common(paper, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (invariants->parsed()) return run_invariants(opt);
    if (codegree->parsed()) return run_codegree(opt);
    if (facets->parsed()) return run_facets(opt);
    if (ehrhart->parsed()) return run_ehrhart(opt);
    if (hperfect->parsed()) return run_hperfect(opt);
    if (regularity->parsed()) return run_regularity(opt);
    if (matching->parsed()) return run_matching(opt);
    if (verify->parsed()) return run_verify(opt);
    if (triples->parsed()) return run_triples(opt);
    if (paper->parsed()) return run_paper_examples(opt);
  } catch (const stabset::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const stabset::GuardError& e) {
    std::cerr << "guard: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
