// clusterforge — synthesize, verify, and account entangler-based
// cluster-state construction schedules.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "clusterforge/compiler.hpp"
#include "clusterforge/error_model.hpp"
#include "clusterforge/graph.hpp"
#include "clusterforge/parallel.hpp"
#include "clusterforge/schedule_json.hpp"
#include "clusterforge/verify.hpp"

namespace cf = clusterforge;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

std::size_t dense_cap_from_env() {
  if (const char* env = std::getenv("CLUSTERFORGE_DENSE_CAP")) {
    const long v = std::atol(env);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  return cf::kDefaultDenseCap;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
}

struct BuildOptions {
  std::optional<std::size_t> string_n, star_k, lattice_n;
  bool box1 = false, box2 = false;
  std::string out = "-";
  std::string dot;
};

int run_build(const BuildOptions& opt) {
  cf::Schedule s;
  const int chosen = static_cast<int>(opt.string_n.has_value()) +
                     static_cast<int>(opt.star_k.has_value()) +
                     static_cast<int>(opt.lattice_n.has_value()) +
                     static_cast<int>(opt.box1) + static_cast<int>(opt.box2);
  if (chosen != 1) {
    std::cerr << "build: choose exactly one target\n";
    return kExitUsage;
  }
  try {
    if (opt.string_n) s = cf::build_string(*opt.string_n);
    else if (opt.star_k) s = cf::build_star(*opt.star_k);
    else if (opt.lattice_n) s = cf::build_lattice(*opt.lattice_n);
    else if (opt.box1) s = cf::build_box_type1();
    else s = cf::build_box_type2();
  } catch (const std::invalid_argument& e) {
    std::cerr << "build: " << e.what() << "\n";
    return kExitUsage;
  }
  write_text(opt.out, cf::schedule_to_json(s));
  if (!opt.dot.empty()) write_text(opt.dot, cf::to_dot(s.target, "target"));
  return kExitPass;
}

int run_verify(const std::string& path, const std::string& backend, std::uint64_t seed) {
  const cf::Schedule s = cf::load_schedule(path);
  bool passed = true;
  if (backend == "tableau" || backend == "both") {
    const auto report = cf::verify_tableau(s, seed);
    std::cout << cf::report_to_json(report);
    passed = passed && report.passed;
  }
  if (backend == "dense" || backend == "both") {
    const std::size_t cap = dense_cap_from_env();
    if (s.qubit_count() > cap) {
      std::cerr << "verify: schedule has " << s.qubit_count()
                << " qubits, dense cap is " << cap << "\n";
      return kExitUsage;
    }
    const auto report = cf::verify_dense(s, seed, cap);
    std::cout << cf::report_to_json(report);
    passed = passed && report.passed;
  }
  return passed ? kExitPass : kExitVerifyFail;
}

int run_count(const std::string& path) {
  const cf::Schedule s = cf::load_schedule(path);
  const cf::ResourceCount rc = cf::count_resources(s);
  const std::size_t bonds = s.target.edges.size();
  const double ratio = bonds == 0 ? 0.0
                                  : static_cast<double>(rc.entangler_equiv) /
                                        static_cast<double>(bonds);
  std::printf("target            %s\n", s.name.c_str());
  std::printf("photons           %zu\n", rc.photons);
  std::printf("entanglers        %zu\n", rc.entanglers);
  std::printf("cz_gates          %zu\n", rc.cz_gates);
  std::printf("entangler_equiv   %zu\n", rc.entangler_equiv);
  std::printf("ancilla_photons   %zu\n", rc.ancilla_photons);
  std::printf("bonds             %zu\n", bonds);
  std::printf("equiv_per_bond    %.2f\n", ratio);
  nlohmann::ordered_json doc;
  doc["target"] = s.name;
  doc["photons"] = rc.photons;
  doc["entanglers"] = rc.entanglers;
  doc["cz_gates"] = rc.cz_gates;
  doc["entangler_equiv"] = rc.entangler_equiv;
  doc["ancilla_photons"] = rc.ancilla_photons;
  doc["bonds"] = bonds;
  doc["equiv_per_bond"] = ratio;
  std::cout << doc.dump(2) << "\n";
  return kExitPass;
}

int run_parallelize(const std::string& path) {
  const cf::Schedule s = cf::load_schedule(path);
  const cf::TimedSchedule ts = cf::parallelize(s);
  nlohmann::ordered_json doc;
  doc["target"] = ts.name;
  doc["makespan"] = ts.makespan;
  doc["max_concurrent_entanglers"] = ts.max_concurrent_entanglers;
  nlohmann::ordered_json steps = nlohmann::ordered_json::array();
  for (const auto& step : ts.steps) {
    nlohmann::ordered_json ops = nlohmann::ordered_json::array();
    for (const cf::PrimOp& op : step) {
      nlohmann::ordered_json o;
      o["kind"] = cf::op_kind_name(op.kind);
      if (cf::is_two_qubit(op.kind))
        o["operands"] = {op.a, op.b};
      else
        o["operands"] = {op.a};
      ops.push_back(std::move(o));
    }
    steps.push_back(std::move(ops));
  }
  doc["steps"] = std::move(steps);
  std::cout << doc.dump(2) << "\n";
  return kExitPass;
}

struct ErrorOptions {
  cf::EntanglerParams params;
  std::string sweep_spec;  // axis=start:stop:steps
  double threshold = 10.0;
  std::string out = "-";
};

int run_error(const ErrorOptions& opt) {
  if (opt.sweep_spec.empty()) {
    const double pe = cf::error_probability(opt.params);
    const auto regime = cf::regime_check(opt.params, opt.threshold);
    nlohmann::ordered_json doc;
    doc["p_error"] = pe;
    doc["alpha_sin_theta"] = regime.alpha_sin_theta;
    doc["eta_gamma2_theta2"] = regime.eta_gamma2_theta2;
    doc["deterministic"] = regime.deterministic;
    std::cout << doc.dump(2) << "\n";
    return kExitPass;
  }
  const auto eq = opt.sweep_spec.find('=');
  if (eq == std::string::npos) throw CLI::ValidationError("--sweep", "expected axis=start:stop:steps");
  const std::string axis = opt.sweep_spec.substr(0, eq);
  double start = 0, stop = 0;
  int steps = 0;
  if (std::sscanf(opt.sweep_spec.c_str() + eq + 1, "%lf:%lf:%d", &start, &stop, &steps) != 3 ||
      steps < 1)
    throw CLI::ValidationError("--sweep", "expected axis=start:stop:steps");
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    const double t = steps == 1 ? 0.0 : static_cast<double>(i) / (steps - 1);
    values.push_back(start + t * (stop - start));
  }
  const auto rows = cf::sweep(opt.params, axis, values);
  write_text(opt.out, cf::sweep_csv(axis, rows));
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"entangler-based cluster-state schedule compiler and verifier"};
  app.require_subcommand(1);

  BuildOptions build_opt;
  auto* build = app.add_subcommand("build", "synthesize a construction schedule");
  build->add_option("--string", build_opt.string_n, "string cluster of N qubits");
  build->add_option("--star", build_opt.star_k, "star cluster with K leaves");
  build->add_option("--lattice", build_opt.lattice_n, "N x N lattice cluster");
  build->add_flag("--box1", build_opt.box1, "standalone box (three entanglers)");
  build->add_flag("--box2", build_opt.box2, "bridged box (two entanglers + CZ)");
  build->add_option("--out,-o", build_opt.out, "output path ('-' for stdout)");
  build->add_option("--dot", build_opt.dot, "also write target graph as DOT");

  std::string verify_path, verify_backend = "tableau";
  std::uint64_t seed = 0;
  auto* verify = app.add_subcommand("verify", "simulate a schedule and check its target");
  verify->add_option("schedule", verify_path, "schedule JSON path")->required();
  verify->add_option("--backend", verify_backend, "tableau|dense|both")
      ->check(CLI::IsMember({"tableau", "dense", "both"}));
  verify->add_option("--seed", seed, "measurement-branch seed");

  std::string count_path;
  auto* count = app.add_subcommand("count", "resource table for a schedule");
  count->add_option("schedule", count_path, "schedule JSON path")->required();

  std::string par_path;
  auto* par = app.add_subcommand("parallelize", "time-stepped schedule under gate reuse");
  par->add_option("schedule", par_path, "schedule JSON path")->required();

  ErrorOptions error_opt;
  auto* err = app.add_subcommand("error", "entangler error probability and sweeps");
  err->add_option("--alpha", error_opt.params.alpha, "coherent-beam amplitude")->required();
  err->add_option("--gamma", error_opt.params.gamma, "QND probe amplitude")->required();
  err->add_option("--theta", error_opt.params.theta, "XPM phase shift [rad]")->required();
  err->add_option("--eta", error_opt.params.eta, "detector efficiency")->required();
  err->add_option("--sweep", error_opt.sweep_spec, "axis=start:stop:steps");
  err->add_option("--threshold", error_opt.threshold, "deterministic-regime threshold");
  err->add_option("--out,-o", error_opt.out, "output path ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (build->parsed()) return run_build(build_opt);
    if (verify->parsed()) return run_verify(verify_path, verify_backend, seed);
    if (count->parsed()) return run_count(count_path);
    if (par->parsed()) return run_parallelize(par_path);
    if (err->parsed()) return run_error(error_opt);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
