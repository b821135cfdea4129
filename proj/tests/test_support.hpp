#pragma once

#include <random>
#include <vector>

#include "clusterforge/dense.hpp"
#include "clusterforge/schedule.hpp"
#include "clusterforge/tableau.hpp"

namespace clusterforge::test {

/// Random ops from {H, X, Z, CZ} over the qubits in `allowed`.
inline std::vector<PrimOp> random_clifford_ops(std::mt19937_64& rng,
                                               const std::vector<std::size_t>& allowed,
                                               std::size_t count) {
  std::vector<PrimOp> ops;
  std::uniform_int_distribution<int> kind_dist(0, 3);
  std::uniform_int_distribution<std::size_t> qubit_dist(0, allowed.size() - 1);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t a = allowed[qubit_dist(rng)];
    switch (kind_dist(rng)) {
      case 0: ops.push_back({OpKind::Hadamard, a}); break;
      case 1: ops.push_back({OpKind::PauliX, a}); break;
      case 2: ops.push_back({OpKind::PauliZ, a}); break;
      default: {
        if (allowed.size() < 2) {
          ops.push_back({OpKind::Hadamard, a});
          break;
        }
        std::size_t b = allowed[qubit_dist(rng)];
        while (b == a) b = allowed[qubit_dist(rng)];
        ops.push_back({OpKind::CZ, a, b});
        break;
      }
    }
  }
  return ops;
}

inline void apply_ops(Tableau& t, const std::vector<PrimOp>& ops) {
  for (const PrimOp& op : ops) {
    switch (op.kind) {
      case OpKind::Hadamard: t.apply_h(op.a); break;
      case OpKind::PauliX: t.apply_x(op.a); break;
      case OpKind::PauliZ: t.apply_z(op.a); break;
      case OpKind::CZ: t.apply_cz(op.a, op.b); break;
      default: break;
    }
  }
}

inline void apply_ops(StateVector& v, const std::vector<PrimOp>& ops) {
  for (const PrimOp& op : ops) {
    switch (op.kind) {
      case OpKind::Hadamard: v.apply_h(op.a); break;
      case OpKind::PauliX: v.apply_x(op.a); break;
      case OpKind::PauliZ: v.apply_z(op.a); break;
      case OpKind::CZ: v.apply_cz(op.a, op.b); break;
      default: break;
    }
  }
}

}  // namespace clusterforge::test
