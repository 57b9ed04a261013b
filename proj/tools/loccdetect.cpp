#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <Eigen/Core>
#include <json.hpp>

#include "locc/asymmetry.hpp"
#include "locc/constructions.hpp"
#include "locc/detector.hpp"
#include "locc/setio.hpp"
#include "locc/witness.hpp"

using namespace locc;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";

struct CommonOpts {
  unsigned d = 0;
  std::string family;
  std::string set_path;
  std::string variant = "once";
  bool as_json = false;
  std::uint64_t seed = 1;
  unsigned samples = 200;
  double tolerance = 1e-9;
};

XiVariant parse_variant(const std::string& v) {
  if (v == "once") return XiVariant::ExtraOnce;
  if (v == "product") return XiVariant::FullProduct;
  throw CLI::ValidationError("--variant must be 'once' or 'product'");
}

MesSet resolve_set(const CommonOpts& opt) {
  if (!opt.set_path.empty()) return load_set_file(opt.set_path);
  if (opt.family == "gamma_d") return gamma_d_set(opt.d);
  if (opt.family == "gamma_e") return gamma_e_set(opt.d);
  if (opt.family == "xi") return xi_set(opt.d, parse_variant(opt.variant)).members;
  if (!opt.family.empty()) return named_example(opt.family);
  throw CLI::ValidationError("need --set <file> or --family <name>");
}

json labels_to_json(const WeylStructure& st, const std::set<WeylLabel>& labels) {
  json arr = json::array();
  for (const auto& l : labels) arr.push_back(label_to_string(st, l));
  return arr;
}

void emit(const json& report, bool as_json) {
  if (as_json) {
    std::cout << report.dump(2) << "\n";
    return;
  }
  // plain rendering: flat key: value lines
  std::function<void(const json&, const std::string&)> walk =
      [&](const json& node, const std::string& prefix) {
        if (node.is_object()) {
          for (const auto& [k, v] : node.items())
            walk(v, prefix.empty() ? k : prefix + "." + k);
        } else if (node.is_array() && !node.empty() && node[0].is_object()) {
          for (std::size_t i = 0; i < node.size(); ++i)
            walk(node[i], prefix + "[" + std::to_string(i) + "]");
        } else {
          std::cout << prefix << ": " << node.dump() << "\n";
        }
      };
  walk(report, "");
}

json analyze_mes(const MesSet& set) {
  json rep;
  rep["input"]["members"] = set.size();
  rep["input"]["dim"] = set.structure.total_dim();
  const auto orth = check_orthogonality(set);
  rep["checks"]["orthogonality"]["status"] = orth.orthogonal ? "pass" : "fail";
  rep["checks"]["orthogonality"]["max_violation"] = orth.max_violation;
  if (set.label_backed()) {
    const auto lemma = lemma_verdict(set);
    rep["checks"]["kernel_criterion"]["status"] =
        lemma.verdict == Verdict::CertifiedLoccIndistinguishable ? "pass" : "inconclusive";
    rep["checks"]["kernel_criterion"]["kernel"] = labels_to_json(set.structure, lemma.kernel);
    rep["checks"]["kernel_criterion"]["difference"] =
        labels_to_json(set.structure, lemma.difference);
    rep["verdict"] = verdict_to_string(lemma.verdict);
  } else {
    rep["checks"]["kernel_criterion"]["status"] = "inconclusive";
    rep["checks"]["kernel_criterion"]["note"] = "matrix-backed set; no label algebra";
    rep["verdict"] = verdict_to_string(Verdict::Inconclusive);
  }
  return rep;
}

json analyze_theorem1(unsigned d) {
  json rep;
  const auto set = theorem1_product_set(d);
  rep["input"]["dim"] = d;
  rep["input"]["members"] = set.pairs.size();
  for (Party party : {Party::Alice, Party::Bob}) {
    const auto fm = first_move_report(set, party);
    json r;
    r["solution_dim"] = fm.solution_dim;
    r["nontrivial_exists"] = fm.nontrivial_exists;
    r["status"] = fm.nontrivial_exists ? "inconclusive" : "pass";
    rep["checks"][party == Party::Alice ? "first_move_alice" : "first_move_bob"] = r;
  }
  rep["verdict"] = verdict_to_string(locally_indistinguishable_by_symmetry(set));
  return rep;
}

int run(int argc, char** argv) {
  if (const char* threads = std::getenv("LOCCW_THREADS"))
    Eigen::setNbThreads(std::max(1, std::atoi(threads)));

  CLI::App app{"local-distinguishability certificate toolkit"};
  app.require_subcommand(1);
  CommonOpts opt;

  auto add_common = [&](CLI::App* sub, bool with_set = true) {
    sub->add_option("--d", opt.d, "local dimension");
    sub->add_flag("--json", opt.as_json, "emit the stable JSON schema");
    if (with_set) {
      sub->add_option("--family", opt.family,
                      "built-in family: gamma_d, gamma_e, xi, quintuple5, "
                      "quadrupleBGK, pauliL4, theorem1, theorem2");
      sub->add_option("--set", opt.set_path, "set description file (JSON)");
      sub->add_option("--variant", opt.variant, "xi variant: once|product");
    }
  };

  auto* analyze = app.add_subcommand("analyze", "orthogonality + applicable certificates");
  add_common(analyze);

  auto* gamma_tab = app.add_subcommand("gamma-table", "exact gamma for every basis label");
  add_common(gamma_tab);

  auto* detector = app.add_subcommand("detector", "detector-state eigenvalue bounds");
  add_common(detector);
  std::string measurement_path;
  detector->add_option("--measurement", measurement_path,
                       "measurement operator (matrix JSON) for --family asymmetric");

  auto* asymmetry = app.add_subcommand("asymmetry", "first-move solution space");
  add_common(asymmetry);
  std::string party_name = "alice";
  asymmetry->add_option("--party", party_name, "alice|bob");

  auto* witness = app.add_subcommand("witness", "separable-measurement obstruction ledger");
  add_common(witness, false);
  witness->add_option("--samples", opt.samples, "falsifier sample count");
  witness->add_option("--seed", opt.seed, "falsifier rng seed");

  auto* kmin = app.add_subcommand("kmin", "smallest certified set size per dimension");
  add_common(kmin, false);
  unsigned max_dim = 24;
  kmin->add_option("--max-dim", max_dim, "table upper bound (<= 64)");

  auto* exp = app.add_subcommand("export", "write a built-in family as JSON");
  add_common(exp);
  std::string out_path;
  exp->add_option("--out", out_path, "output path (default stdout)");

  app.add_option("--tolerance", opt.tolerance, "numeric tolerance for reports");

  CLI11_PARSE(app, argc, argv);

  json report;
  report["tool_version"] = kVersion;

  if (analyze->parsed()) {
    report["command"] = "analyze";
    if (opt.family == "theorem1")
      report.update(analyze_theorem1(opt.d ? opt.d : 3));
    else
      report.update(analyze_mes(resolve_set(opt)));
  } else if (gamma_tab->parsed()) {
    report["command"] = "gamma-table";
    const auto set = resolve_set(opt);
    if (!set.label_backed())
      throw std::invalid_argument("gamma-table needs a label-backed set");
    json rows = json::array();
    unsigned kernel_rows = 0;
    for (const auto& U : all_labels(set.structure)) {
      const CycNumber g = gamma(set, U);
      json row;
      row["label"] = label_to_string(set.structure, U);
      json coeffs = json::array();
      for (const auto& c : g.coeffs()) coeffs.push_back(c.str());
      row["gamma_coeffs"] = coeffs;
      const auto z = g.to_complex();
      row["gamma_complex"] = {z.real(), z.imag()};
      row["in_kernel"] = g.is_zero();
      if (g.is_zero()) ++kernel_rows;
      rows.push_back(row);
    }
    report["rows"] = rows;
    report["kernel_rows"] = kernel_rows;
  } else if (detector->parsed()) {
    report["command"] = "detector";
    if (opt.family == "theorem2" || opt.family.empty()) {
      const unsigned d = opt.d ? opt.d : 3;
      const auto det = build_detector_theorem2(d);
      const double l1 = det.lambda1();
      report["family"] = "theorem2";
      report["d"] = d;
      report["lambda1"] = l1;
      report["analytic_bound"] = theorem2_analytic_bound(d);
      report["block_lambda1"] = tilde_m_2x2(d).lambda1;
      report["transfer_possible"] = nielsen_transfer_possible(l1, d);
      report["verdict"] = nielsen_transfer_possible(l1, d)
                              ? verdict_to_string(Verdict::Inconclusive)
                              : verdict_to_string(Verdict::CertifiedLoccIndistinguishable);
    } else if (opt.family == "asymmetric") {
      if (measurement_path.empty())
        throw std::invalid_argument("--family asymmetric needs --measurement");
      std::ifstream in(measurement_path);
      if (!in) throw std::runtime_error("cannot open " + measurement_path);
      std::string text((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
      const Matrix M = parse_matrix_json(text);
      CommonOpts set_opt = opt;
      set_opt.family = opt.set_path.empty() ? "gamma_d" : "";
      const auto set = resolve_set(set_opt);
      const auto res = asymmetric_bound(M, set);
      report["family"] = "asymmetric";
      report["bound"] = res.bound;
      report["lambda1"] = res.lambda1_numeric;
      report["twirl_deviation"] = res.twirl_deviation;
      report["transfer_possible"] =
          nielsen_transfer_possible(res.lambda1_numeric, set.structure.total_dim());
    } else {
      throw std::invalid_argument("detector --family must be theorem2 or asymmetric");
    }
  } else if (asymmetry->parsed()) {
    report["command"] = "asymmetry";
    const Party party = party_name == "bob" ? Party::Bob : Party::Alice;
    json r;
    if (opt.family == "theorem1") {
      const auto fm = first_move_report(theorem1_product_set(opt.d ? opt.d : 3), party);
      r["solution_dim"] = fm.solution_dim;
      r["nontrivial_exists"] = fm.nontrivial_exists;
    } else {
      const auto fm = first_move_report(resolve_set(opt), party);
      r["solution_dim"] = fm.solution_dim;
      r["nontrivial_exists"] = fm.nontrivial_exists;
    }
    r["party"] = party_name == "bob" ? "bob" : "alice";
    report.update(r);
  } else if (witness->parsed()) {
    report["command"] = "witness";
    const unsigned d = opt.d ? opt.d : 2;
    const auto led = contradiction_ledger(d);
    report["d"] = d;
    report["xi_size"] = led.xi_size;
    report["xi_size_full"] = led.xi_size_full;
    report["trace_H_2d"] = led.trace_H_2d;
    report["sigma"] = led.sigma;
    report["consistent"] = led.consistent;
    report["dominance_min_eig"] = dominance_check(d);
    const unsigned p = factorization_params(d).p;
    if (p % 2 == 1) {
      const auto trace = rank_obstruction(p);
      report["rank_obstruction"]["p"] = trace.p;
      report["rank_obstruction"]["contradiction"] = trace.contradiction;
      report["rank_obstruction"]["contradiction_index"] = trace.contradiction_index;
      const auto fal = rank2_falsifier(p, opt.samples, opt.seed);
      report["falsifier"]["samples"] = fal.samples;
      report["falsifier"]["seed"] = fal.seed;
      report["falsifier"]["collapsed"] = fal.collapsed;
      report["falsifier"]["feasible_found"] = fal.feasible_found;
    }
  } else if (kmin->parsed()) {
    report["command"] = "kmin";
    if (max_dim > 64) throw std::invalid_argument("kmin: --max-dim must be <= 64");
    json rows = json::array();
    for (const auto& r : kmin_table(max_dim)) {
      json row;
      row["dim"] = r.dim;
      row["kmin"] = r.kmin;
      row["rule"] = r.rule;
      row["theorem"] = r.theorem;
      rows.push_back(row);
    }
    report["rows"] = rows;
  } else if (exp->parsed()) {
    report["command"] = "export";
    const auto set = resolve_set(opt);
    const std::string text = set_to_json(set);
    if (out_path.empty()) {
      std::cout << text << "\n";
      return 0;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << text << "\n";
    report["written"] = out_path;
  }

  emit(report, opt.as_json);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
