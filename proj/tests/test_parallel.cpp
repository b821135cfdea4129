#include <doctest.h>

#include <algorithm>
#include <set>

#include "clusterforge/compiler.hpp"
#include "clusterforge/parallel.hpp"
#include "clusterforge/verify.hpp"

using namespace clusterforge;

namespace {

std::vector<PrimOp> ops_touching(const std::vector<PrimOp>& ops, std::size_t q) {
  std::vector<PrimOp> out;
  for (const PrimOp& op : ops)
    if (op.touches(q)) out.push_back(op);
  return out;
}

void check_well_formed(const Schedule& s, const TimedSchedule& ts) {
  CHECK(ts.name == s.name);
  CHECK(ts.target == s.target);
  CHECK(ts.makespan == ts.steps.size());

  std::size_t total_ops = 0;
  std::size_t peak = 0;
  for (const auto& step : ts.steps) {
    CHECK_FALSE(step.empty());
    std::set<std::size_t> used;
    std::size_t demand = 0;
    for (const PrimOp& op : step) {
      CHECK(used.insert(op.a).second);
      if (is_two_qubit(op.kind)) CHECK(used.insert(op.b).second);
      if (op.kind == OpKind::Entangle) demand += 1;
      if (op.kind == OpKind::CZ) demand += 2;
    }
    peak = std::max(peak, demand);
    total_ops += step.size();
  }
  CHECK(total_ops == s.ops.size());
  CHECK(ts.max_concurrent_entanglers == peak);

  // Per-qubit op order matches the sequential schedule.
  const Schedule flat = flatten(ts);
  CHECK(flat.ops.size() == s.ops.size());
  for (std::size_t q = 0; q < s.qubit_count(); ++q)
    CHECK(ops_touching(flat.ops, q) == ops_touching(s.ops, q));
}

}  // namespace

TEST_CASE("string entanglers stay sequential") {
  const Schedule s = build_string(3);
  const TimedSchedule ts = parallelize(s);
  check_well_formed(s, ts);
  CHECK(ts.max_concurrent_entanglers == 1);
  // All three NEW declarations are independent and land in the first step.
  CHECK(ts.steps[0].size() == 3);
  for (const PrimOp& op : ts.steps[0]) CHECK(op.kind == OpKind::NewPlus);
  CHECK(ts.makespan == 5);
}

TEST_CASE("disjoint components run concurrently") {
  Schedule s;
  s.name = "pair";
  s.target.vertex_count = 4;
  s.target.add_edge(0, 1);
  s.target.add_edge(2, 3);
  s.new_plus(0);
  s.new_plus(1);
  s.entangle(0, 1);
  s.h(1);
  s.new_plus(2);
  s.new_plus(3);
  s.entangle(2, 3);
  s.h(3);
  validate(s);

  const TimedSchedule ts = parallelize(s);
  check_well_formed(s, ts);
  CHECK(ts.makespan == 3);
  CHECK(ts.max_concurrent_entanglers == 2);
}

TEST_CASE("empty schedule") {
  const Schedule s;
  const TimedSchedule ts = parallelize(s);
  CHECK(ts.makespan == 0);
  CHECK(ts.steps.empty());
  CHECK(ts.max_concurrent_entanglers == 0);
  CHECK(flatten(ts).ops.empty());
}

TEST_CASE("flattening preserves the produced state") {
  for (const Schedule& s :
       {build_star(4), build_box_type1(), build_box_type2(), build_lattice(3),
        build_lattice(4), build_lattice(5)}) {
    const TimedSchedule ts = parallelize(s);
    check_well_formed(s, ts);
    Schedule flat = flatten(ts);
    validate(flat);
    CHECK(verify_tableau(flat, 17).passed);
  }
}

TEST_CASE("5x5 lattice timing fixture") {
  const TimedSchedule ts = parallelize(build_lattice(5));
  CHECK(ts.makespan == 24);
  CHECK(ts.max_concurrent_entanglers == 8);
}
