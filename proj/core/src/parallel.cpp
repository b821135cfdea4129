#include "clusterforge/parallel.hpp"

#include <algorithm>

namespace clusterforge {

TimedSchedule parallelize(const Schedule& s) {
  TimedSchedule ts;
  ts.name = s.name;
  ts.target = s.target;
  std::vector<std::size_t> next_free(s.qubit_count(), 0);
  for (const PrimOp& op : s.ops) {
    std::size_t step = next_free[op.a];
    if (is_two_qubit(op.kind)) step = std::max(step, next_free[op.b]);
    if (step >= ts.steps.size()) ts.steps.resize(step + 1);
    ts.steps[step].push_back(op);
    next_free[op.a] = step + 1;
    if (is_two_qubit(op.kind)) next_free[op.b] = step + 1;
  }
  for (auto& step : ts.steps) {
    std::sort(step.begin(), step.end(), [](const PrimOp& l, const PrimOp& r) {
      if (l.kind != r.kind) return static_cast<int>(l.kind) < static_cast<int>(r.kind);
      const std::size_t lo = is_two_qubit(l.kind) ? std::min(l.a, l.b) : l.a;
      const std::size_t ro = is_two_qubit(r.kind) ? std::min(r.a, r.b) : r.a;
      return lo < ro;
    });
    std::size_t demand = 0;
    for (const PrimOp& op : step) {
      if (op.kind == OpKind::Entangle) demand += 1;
      if (op.kind == OpKind::CZ) demand += 2;
    }
    ts.max_concurrent_entanglers = std::max(ts.max_concurrent_entanglers, demand);
  }
  ts.makespan = ts.steps.size();
  return ts;
}

Schedule flatten(const TimedSchedule& ts) {
  Schedule s;
  s.name = ts.name;
  s.target = ts.target;
  for (const auto& step : ts.steps)
    s.ops.insert(s.ops.end(), step.begin(), step.end());
  return s;
}

}  // namespace clusterforge
