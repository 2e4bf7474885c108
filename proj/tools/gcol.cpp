// gcol: exact solvers, verifiers, gadget generators, hardness-reduction
// builders and the K_{t,t}-free decision pipeline, over DIMACS/JSON graphs.
//
// Exit codes: 0 yes/success, 1 no, 2 usage error, 3 cap exceeded,
// 4 structural contract breach (e.g. a K_{t,t} in a graph asserted free).

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gcol/coloring.hpp"
#include "gcol/exact.hpp"
#include "gcol/fpt.hpp"
#include "gcol/generators.hpp"
#include "gcol/graph_ops.hpp"
#include "gcol/io.hpp"
#include "gcol/props.hpp"
#include "gcol/reductions.hpp"

namespace {

using nlohmann::json;

int env_cap(const char* name, int fallback) {
  const char* v = std::getenv(name);
  if (!v) return fallback;
  try {
    return std::stoi(v);
  } catch (...) {
    throw std::invalid_argument(std::string("bad integer in ") + name);
  }
}

gcol::Graph input_graph(const std::string& path) {
  if (path.empty() || path == "-") return gcol::load_graph_auto(std::cin);
  return gcol::load_graph(path);
}

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot open " + out_path);
    out << j.dump(2) << "\n";
  }
}

void emit_text(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot open " + out_path);
    out << text;
  }
}

json solve_payload(const gcol::SolveResult& res) {
  json j;
  j["schema_version"] = gcol::kSchemaVersion;
  j["value"] = res.value;
  j["certificate"] = gcol::certificate_to_json(res.certificate);
  return j;
}

std::vector<int> parse_order(const std::string& spec) {
  std::vector<int> order;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    order.push_back(std::stoi(item) - 1);  // 1-based like the file formats
  }
  return order;
}

std::string graph_payload(const gcol::Graph& g, const std::string& format) {
  if (format == "json") return gcol::graph_to_json(g).dump(2) + "\n";
  if (format == "dimacs") return gcol::to_dimacs(g);
  if (format == "dot") return gcol::to_dot(g);
  throw std::invalid_argument("unknown format: " + format);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"greedy-coloring solvers, gadgets, reductions, and FPT pipeline"};
  app.require_subcommand(1);

  std::string input, output, format = "json";
  app.add_option("--input,-i", input, "graph/instance file ('-' = stdin)")->capture_default_str();
  app.add_option("--output,-o", output, "output file ('-' = stdout)");

  // grundy / rooted-grundy / partial-grundy / bcore ------------------------
  auto* grundy = app.add_subcommand("grundy", "exact Grundy number with certificate");
  int grundy_cap = env_cap("GCOL_GRUNDY_CAP", gcol::ExactCaps{}.grundy);
  grundy->add_option("--cap", grundy_cap, "vertex cap for the subset solver");

  auto* rooted = app.add_subcommand("rooted-grundy", "max greedy color of a fixed vertex");
  int rooted_vertex = 1;
  int rooted_cap = env_cap("GCOL_ROOTED_CAP", gcol::ExactCaps{}.rooted);
  rooted->add_option("--vertex", rooted_vertex, "root vertex (1-based)")->required();
  rooted->add_option("--cap", rooted_cap, "vertex cap");

  auto* partial = app.add_subcommand("partial-grundy", "exact partial Grundy number");
  int partial_cap = env_cap("GCOL_PARTIAL_CAP", gcol::ExactCaps{}.partial);
  partial->add_option("--cap", partial_cap, "vertex cap");

  auto* bcore = app.add_subcommand("bcore", "exact b-chromatic core order");
  int bcore_cap = env_cap("GCOL_BCORE_CAP", gcol::ExactCaps{}.bcore);
  bcore->add_option("--cap", bcore_cap, "vertex cap");

  // firstfit ----------------------------------------------------------------
  auto* firstfit = app.add_subcommand("firstfit", "run first-fit on a given ordering");
  std::string order_spec;
  firstfit->add_option("--order", order_spec, "comma-separated 1-based vertex order")
      ->required();

  // verify -------------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "verify a witness certificate (exit 0/1)");
  std::string cert_path;
  verify->add_option("--certificate", cert_path, "certificate JSON file")->required();

  // gen ------------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "generate a gadget family member");
  std::string family;
  std::string params;
  gen->add_option("--family", family, "binomial-tree|pruned-binomial-tree|half-graph|"
                                      "half-graph-path|half-graph-cycle|anti-matching|"
                                      "star-forest|t5-edge-tree")->required();
  gen->add_option("--params", params, "k=..,t=..,l=..,i=..,x=..,count=..,leaves=..");
  gen->add_option("--format", format, "json|dimacs|dot")->capture_default_str();

  // reduce / certify -------------------------------------------------------
  auto* reduce = app.add_subcommand("reduce", "build a hardness-reduction instance");
  std::string from;
  int budget_q = 0;
  reduce->add_option("--from", from, "mis|mcsi|gridtiling")->required();
  reduce->add_option("--budget-q", budget_q,
                     "materialize the MCSI top tree at this q' (12..16); the result is "
                     "flagged as not equivalence-preserving");
  reduce->add_option("--format", format, "json|dimacs|dot")->capture_default_str();

  auto* certify = app.add_subcommand("certify", "turn a source solution into a certificate");
  std::string solution_path;
  certify->add_option("--from", from, "mcsi|gridtiling")->required();
  certify->add_option("--solution", solution_path, "solution JSON file")->required();

  // fpt ----------------------------------------------------------------------
  auto* fpt = app.add_subcommand("fpt", "K_{t,t}-free decision procedure");
  std::string problem_name = "bcore", mode_name = "faithful";
  int fpt_k = 1, fpt_t = 2;
  std::string n_t_eps, f_override, g_override, m_override;
  fpt->add_option("--problem", problem_name, "partial-grundy|bcore")->capture_default_str();
  fpt->add_option("--k", fpt_k, "target order")->required();
  fpt->add_option("--t", fpt_t, "biclique parameter")->capture_default_str();
  fpt->add_option("--mode", mode_name, "faithful|practical")->capture_default_str();
  fpt->add_option("--n-t-eps", n_t_eps, "N(t,1/k); required in faithful mode");
  fpt->add_option("--f", f_override, "practical f threshold");
  fpt->add_option("--g", g_override, "practical g threshold");
  fpt->add_option("--m-prime", m_override, "practical M' threshold");

  // props / bench ---------------------------------------------------------
  auto* props = app.add_subcommand("props", "run the invariant suite");
  std::vector<std::string> suites;
  bool quick = false;
  std::uint64_t seed = 0x9cb1e5;
  props->add_option("--suite", suites, "run only the named suites");
  props->add_flag("--quick", quick, "reduced workloads");
  props->add_option("--seed", seed, "sampler seed")->capture_default_str();

  auto* bench = app.add_subcommand("bench", "sweep gadget families, report timings");
  int bench_samples = 2000;
  bench->add_option("--samples", bench_samples, "orderings sampled per instance")
      ->capture_default_str();
  bench->add_option("--seed", seed, "sampler seed")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*grundy) {
      auto res = gcol::grundy_number(input_graph(input), grundy_cap);
      emit(solve_payload(res), output);
      return 0;
    }
    if (*rooted) {
      gcol::Graph g = input_graph(input);
      int value = gcol::rooted_grundy(g, rooted_vertex - 1, rooted_cap);
      json j;
      j["schema_version"] = gcol::kSchemaVersion;
      j["vertex"] = rooted_vertex;
      j["value"] = value;
      emit(j, output);
      return 0;
    }
    if (*partial) {
      auto res = gcol::partial_grundy_number(input_graph(input), partial_cap);
      emit(solve_payload(res), output);
      return 0;
    }
    if (*bcore) {
      auto res = gcol::b_chromatic_core_order(input_graph(input), bcore_cap);
      emit(solve_payload(res), output);
      return 0;
    }
    if (*firstfit) {
      gcol::Graph g = input_graph(input);
      auto coloring = gcol::first_fit(g, parse_order(order_spec));
      json j;
      j["schema_version"] = gcol::kSchemaVersion;
      j["order"] = coloring.order;
      j["colors"] = coloring.colors;
      emit(j, output);
      return 0;
    }
    if (*verify) {
      gcol::Graph g = input_graph(input);
      auto cert = gcol::certificate_from_json(gcol::load_json(cert_path));
      auto res = gcol::verify_certificate(g, cert);
      json j;
      j["schema_version"] = gcol::kSchemaVersion;
      j["ok"] = res.ok;
      j["reason"] = res.reason;
      emit(j, output);
      return res.ok ? 0 : 1;
    }
    if (*gen) {
      gcol::GadgetSpec spec;
      spec.family = gcol::gadget_family_from_name(family);
      std::stringstream ss(params);
      std::string item;
      while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
          throw std::invalid_argument("bad parameter: " + item);
        spec.parameters[item.substr(0, eq)] = std::stoi(item.substr(eq + 1));
      }
      emit_text(graph_payload(gcol::build_gadget(spec), format), output);
      return 0;
    }
    if (*reduce) {
      json inst_json = input.empty() || input == "-"
                           ? json::parse(std::cin)
                           : gcol::load_json(input);
      if (from == "mis") {
        auto red = gcol::reduce_mis_to_rooted_grundy(gcol::mis_from_json(inst_json));
        json j;
        j["schema_version"] = gcol::kSchemaVersion;
        j["target"] = red.target;
        j["root"] = red.root + 1;
        j["graph"] = gcol::graph_to_json(red.graph);
        emit(j, output);
      } else if (from == "mcsi") {
        auto mode = budget_q > 0 ? gcol::McsiMode::Budget(budget_q)
                                 : gcol::McsiMode::Faithful();
        auto red = gcol::reduce_mcsi_to_grundy(gcol::mcsi_from_json(inst_json), mode);
        json j;
        j["schema_version"] = gcol::kSchemaVersion;
        j["target_q"] = red.target_q;
        j["budget_mode"] = red.budget_mode;
        if (red.budget_mode) j["equivalence_preserving"] = false;
        j["top_tree"] = {{"q", red.summary.q},
                         {"total_vertices", red.summary.total_vertices.str()},
                         {"color7_vertices", red.summary.color7_vertices.str()},
                         {"f_vertices", red.summary.f_vertex_count},
                         {"removed_vertices", red.summary.removed_vertices.str()},
                         {"lazy_vertices", red.summary.lazy_vertices.str()}};
        j["graph"] = gcol::graph_to_json(red.graph);
        emit(j, output);
      } else if (from == "gridtiling") {
        auto red = gcol::reduce_gridtiling_to_bcore(gcol::gridtiling_from_json(inst_json));
        json j;
        j["schema_version"] = gcol::kSchemaVersion;
        j["target_q"] = red.q;
        j["dz_audit"] = gcol::dz_audit_table(static_cast<int>(red.a.size()));
        j["graph"] = gcol::graph_to_json(red.graph);
        emit(j, output);
      } else {
        throw std::invalid_argument("unknown reduction source: " + from);
      }
      return 0;
    }
    if (*certify) {
      json inst_json = input.empty() || input == "-"
                           ? json::parse(std::cin)
                           : gcol::load_json(input);
      json sol = gcol::load_json(solution_path);
      if (from == "mcsi") {
        auto inst = gcol::mcsi_from_json(inst_json);
        auto red = gcol::reduce_mcsi_to_grundy(inst);
        std::vector<int> solution;
        for (const auto& v : sol.at("solution")) solution.push_back(v.get<int>() - 1);
        auto cert = gcol::mcsi_solution_certificate(inst, red, solution);
        json j;
        j["schema_version"] = gcol::kSchemaVersion;
        json ones = json::array();
        for (int v : cert.color1_set) ones.push_back(v + 1);
        j["color1_set"] = std::move(ones);
        j["tree_certificates"] = json::array();
        for (const auto& c : cert.tree_certificates)
          j["tree_certificates"].push_back(gcol::certificate_to_json(c));
        emit(j, output);
      } else if (from == "gridtiling") {
        auto inst = gcol::gridtiling_from_json(inst_json);
        auto red = gcol::reduce_gridtiling_to_bcore(inst);
        std::vector<std::vector<std::pair<int, int>>> solution;
        for (const auto& row : sol.at("solution")) {
          solution.emplace_back();
          for (const auto& p : row)
            solution.back().emplace_back(p[0].get<int>(), p[1].get<int>());
        }
        auto cert = gcol::gridtiling_certificate(inst, red, solution);
        json j;
        j["schema_version"] = gcol::kSchemaVersion;
        j["order"] = cert.order();
        j["certificate"] = gcol::certificate_to_json(cert);
        emit(j, output);
      } else {
        throw std::invalid_argument("unknown certify source: " + from);
      }
      return 0;
    }
    if (*fpt) {
      gcol::Graph g = input_graph(input);
      gcol::CoreProblem problem;
      if (problem_name == "partial-grundy") problem = gcol::CoreProblem::PartialGrundy;
      else if (problem_name == "bcore") problem = gcol::CoreProblem::BCore;
      else throw std::invalid_argument("unknown problem: " + problem_name);
      gcol::Thresholds th;
      if (mode_name == "faithful") {
        if (n_t_eps.empty())
          throw std::invalid_argument("faithful mode requires --n-t-eps");
        th = gcol::thresholds(fpt_t, fpt_k, gcol::FptMode::Faithful,
                              gcol::BigInt(n_t_eps));
      } else if (mode_name == "practical") {
        gcol::BigInt f = f_override.empty() ? gcol::BigInt(fpt_k) : gcol::BigInt(f_override);
        gcol::BigInt gg = g_override.empty() ? gcol::BigInt(fpt_k) : gcol::BigInt(g_override);
        gcol::BigInt mp = m_override.empty() ? gcol::BigInt(1) : gcol::BigInt(m_override);
        gcol::BigInt nte = n_t_eps.empty() ? gcol::BigInt(1) : gcol::BigInt(n_t_eps);
        th = gcol::practical_thresholds(fpt_t, fpt_k, f, gg, mp, nte);
      } else {
        throw std::invalid_argument("unknown mode: " + mode_name);
      }
      auto res = gcol::solve_ktt_free(g, fpt_k, fpt_t, problem, th);
      json j;
      j["schema_version"] = gcol::kSchemaVersion;
      j["decision"] = res.yes;
      j["branch"] = res.branch;
      j["mode"] = mode_name;
      j["thresholds"] = {
          {"f", res.used.f_tk.saturated ? ">=2^64" : res.used.f_tk.value.str()},
          {"g", res.used.g_tk.saturated ? ">=2^64" : res.used.g_tk.value.str()},
          {"m_prime", res.used.M_prime.saturated ? ">=2^64" : res.used.M_prime.value.str()},
          {"n_t_eps", res.used.n_t_eps.str()}};
      if (res.certificate) j["certificate"] = gcol::certificate_to_json(*res.certificate);
      emit(j, output);
      return res.yes ? 0 : 1;
    }
    if (*props) {
      gcol::PropsReport report;
      if (suites.empty()) {
        report = gcol::run_props(quick, seed);
      } else {
        for (const auto& s : suites) {
          auto part = gcol::run_suite(s, quick, seed);
          report.checks.insert(report.checks.end(), part.checks.begin(), part.checks.end());
        }
      }
      std::ostringstream text;
      for (const auto& c : report.checks)
        text << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  (" << c.detail << ")  ["
             << c.seconds << "s]\n";
      text << "seed " << seed << (quick ? ", quick workloads" : "") << "\n";
      emit_text(text.str(), output);
      return report.all_pass() ? 0 : 1;
    }
    if (*bench) {
      std::ostringstream text;
      text << "family,params,n,m,exact_grundy,sampled_max,seconds\n";
      auto row = [&](const std::string& name, const std::string& p, const gcol::Graph& g,
                     bool exact) {
        auto start = std::chrono::steady_clock::now();
        int exact_val = -1;
        if (exact) exact_val = gcol::grundy_number(g).value;
        int sampled = gcol::sampled_grundy_lower_bound(g, bench_samples, seed);
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        text << name << "," << p << "," << g.vertex_count() << "," << g.edge_count() << ",";
        if (exact_val >= 0) text << exact_val;
        text << "," << sampled << "," << secs << "\n";
      };
      for (int k = 1; k <= 5; ++k)
        row("binomial-tree", "k=" + std::to_string(k), gcol::binomial_tree(k).graph, true);
      for (int t = 2; t <= 6; t += 2)
        row("half-graph", "t=" + std::to_string(t), gcol::half_graph(t).graph, true);
      for (int l = 2; l <= 4; ++l)
        for (int t : {4, 10, 30})
          row("half-graph-path", "l=" + std::to_string(l) + ",t=" + std::to_string(t),
              gcol::half_graph_path(l, t).graph, l == 2 && t == 4);
      for (int t = 2; t <= 5; ++t)
        row("anti-matching", "t=" + std::to_string(t), gcol::anti_matching(t), true);
      text << "seed " << seed << ", samples " << bench_samples << "\n";
      emit_text(text.str(), output);
      return 0;
    }
  } catch (const gcol::CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const gcol::ContractBreach& e) {
    std::cerr << "contract breach: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "bad input: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
