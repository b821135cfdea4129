#include "clusterforge/verify.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace clusterforge {

Tableau run_schedule_tableau(const Schedule& s, OutcomeSource& src) {
  validate(s);
  Tableau t = Tableau::plus_state(s.qubit_count());
  for (const PrimOp& op : s.ops) {
    switch (op.kind) {
      case OpKind::NewPlus: break;  // declared qubits start in |+>
      case OpKind::Entangle: t.entangler(op.a, op.b, src); break;
      case OpKind::Hadamard: t.apply_h(op.a); break;
      case OpKind::CZ: t.apply_cz(op.a, op.b); break;
      case OpKind::PauliX: t.apply_x(op.a); break;
      case OpKind::PauliZ: t.apply_z(op.a); break;
    }
  }
  return t;
}

StateVector run_schedule_dense(const Schedule& s, std::mt19937_64& rng, std::size_t cap) {
  validate(s);
  StateVector v = StateVector::all_plus(s.qubit_count(), cap);
  for (const PrimOp& op : s.ops) {
    switch (op.kind) {
      case OpKind::NewPlus: break;
      case OpKind::Entangle: v.entangler(op.a, op.b, std::nullopt, &rng); break;
      case OpKind::Hadamard: v.apply_h(op.a); break;
      case OpKind::CZ: v.apply_cz(op.a, op.b); break;
      case OpKind::PauliX: v.apply_x(op.a); break;
      case OpKind::PauliZ: v.apply_z(op.a); break;
    }
  }
  return v;
}

VerificationReport verify_tableau(const Schedule& s, std::uint64_t seed) {
  OutcomeSource src = OutcomeSource::seeded(seed);
  const Tableau t = run_schedule_tableau(s, src);
  VerificationReport report;
  report.target = s.name;
  report.backend = "tableau";
  const auto generators = graph_stabilizers(s.target);
  report.generators_checked = generators.size();
  for (std::size_t v = 0; v < generators.size(); ++v) {
    if (!t.is_stabilized_by(generators[v])) {
      report.violations.push_back(
          {v, generators[v].str(), t.deterministic_sign(generators[v])});
    }
  }
  report.passed = report.violations.empty();
  return report;
}

VerificationReport verify_dense(const Schedule& s, std::uint64_t seed, std::size_t cap) {
  std::mt19937_64 rng(seed);
  const StateVector v = run_schedule_dense(s, rng, cap);
  VerificationReport report;
  report.target = s.name;
  report.backend = "dense";
  const auto generators = graph_stabilizers(s.target);
  report.generators_checked = generators.size();
  constexpr double tol = 1e-10;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const double e = expectation(v, generators[i]);
    if (std::abs(e - 1.0) > tol) {
      const int observed = std::abs(e + 1.0) <= tol ? -1 : 0;
      report.violations.push_back({i, generators[i].str(), observed});
    }
  }
  report.passed = report.violations.empty();
  return report;
}

StateVector graph_state_dense(const Graph& g, std::size_t cap) {
  StateVector v = StateVector::all_plus(g.vertex_count, cap);
  for (const auto& [a, b] : g.edges) v.apply_cz(a, b);
  return v;
}

std::string report_to_json(const VerificationReport& r) {
  nlohmann::ordered_json doc;
  doc["target"] = r.target;
  doc["backend"] = r.backend;
  doc["generators_checked"] = r.generators_checked;
  nlohmann::ordered_json violations = nlohmann::ordered_json::array();
  for (const Violation& v : r.violations) {
    nlohmann::ordered_json item;
    item["vertex"] = v.vertex;
    item["expected"] = v.generator;
    item["observed_sign"] = v.observed_sign;
    violations.push_back(std::move(item));
  }
  doc["violations"] = std::move(violations);
  doc["pauli_frame"] = r.pauli_frame ? nlohmann::ordered_json(*r.pauli_frame)
                                     : nlohmann::ordered_json(nullptr);
  doc["verdict"] = r.passed ? "pass" : "fail";
  return doc.dump(2) + "\n";
}

}  // namespace clusterforge
