#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "clusterforge/dense.hpp"
#include "clusterforge/schedule.hpp"
#include "clusterforge/tableau.hpp"

namespace clusterforge {

struct Violation {
  std::size_t vertex = 0;
  std::string generator;   // the expected stabilizer, e.g. "+XZIZ"
  int observed_sign = 0;   // +1/-1 when forced, 0 when the outcome is random
};

struct VerificationReport {
  std::string target;
  std::string backend;
  std::size_t generators_checked = 0;
  std::vector<Violation> violations;
  /// Trailing single-qubit Pauli corrections, when the simulated state equals
  /// the target only up to a recorded frame. Empty for every builder here.
  std::optional<std::string> pauli_frame;
  bool passed = false;
};

/// Executes the schedule on the tableau backend. All declared qubits start
/// in |+>; NEW is a declaration.
Tableau run_schedule_tableau(const Schedule& s, OutcomeSource& src);

/// Dense execution; throws when the qubit count exceeds the cap.
StateVector run_schedule_dense(const Schedule& s, std::mt19937_64& rng,
                               std::size_t cap = kDefaultDenseCap);

/// Simulates and checks every target-graph stabilizer generator.
VerificationReport verify_tableau(const Schedule& s, std::uint64_t seed);
VerificationReport verify_dense(const Schedule& s, std::uint64_t seed,
                                std::size_t cap = kDefaultDenseCap);

/// Reference graph state built directly as a CZ product on |+...+>.
StateVector graph_state_dense(const Graph& g, std::size_t cap = kDefaultDenseCap);

std::string report_to_json(const VerificationReport& r);

}  // namespace clusterforge
