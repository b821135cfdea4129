#pragma once

#include "clusterforge/schedule.hpp"

namespace clusterforge {

/// Schedule arranged into time steps whose ops have pairwise-disjoint
/// operands, so each step can run on reused physical gate setups.
struct TimedSchedule {
  std::string name;
  Graph target;
  std::vector<std::vector<PrimOp>> steps;
  std::size_t makespan = 0;
  /// Peak per-step demand for entangler devices, counting a CZ as two.
  std::size_t max_concurrent_entanglers = 0;
};

/// Greedy earliest-step assignment; two ops conflict iff they share an
/// operand. Per-qubit op order is preserved.
TimedSchedule parallelize(const Schedule& s);

/// Flattens the steps back into an ordinary schedule (topological-order
/// permutation of the input). Ops within a step are ordered by kind rank,
/// then smallest operand.
Schedule flatten(const TimedSchedule& ts);

}  // namespace clusterforge
