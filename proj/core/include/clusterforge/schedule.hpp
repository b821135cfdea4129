#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "clusterforge/graph.hpp"

namespace clusterforge {

/// Primitive operation alphabet. NewPlus declares a qubit prepared in |+>;
/// Entangle is the parity-projection primitive with feedforward.
enum class OpKind { NewPlus, Entangle, Hadamard, CZ, PauliX, PauliZ };

bool is_two_qubit(OpKind kind);
std::string_view op_kind_name(OpKind kind);
OpKind op_kind_from_name(std::string_view name);

struct PrimOp {
  OpKind kind;
  std::size_t a = 0;
  std::size_t b = 0;  // unused for single-qubit ops

  bool touches(std::size_t q) const { return a == q || (is_two_qubit(kind) && b == q); }
  bool operator==(const PrimOp&) const = default;
};

/// Ordered primitive-op list together with the cluster-state topology it is
/// meant to produce. Qubit indices coincide with target-graph vertices.
struct Schedule {
  std::string name;
  Graph target;
  std::vector<PrimOp> ops;

  std::size_t qubit_count() const { return target.vertex_count; }

  void new_plus(std::size_t q) { ops.push_back({OpKind::NewPlus, q}); }
  void entangle(std::size_t p, std::size_t q) { push_two(OpKind::Entangle, p, q); }
  void h(std::size_t q) { ops.push_back({OpKind::Hadamard, q}); }
  void cz(std::size_t p, std::size_t q) { push_two(OpKind::CZ, p, q); }
  void x(std::size_t q) { ops.push_back({OpKind::PauliX, q}); }
  void z(std::size_t q) { ops.push_back({OpKind::PauliZ, q}); }

  bool operator==(const Schedule&) const = default;

 private:
  void push_two(OpKind kind, std::size_t p, std::size_t q);
};

struct ResourceCount {
  std::size_t entanglers = 0;
  std::size_t cz_gates = 0;
  std::size_t entangler_equiv = 0;  // entanglers + 2 * cz_gates
  std::size_t ancilla_photons = 0;  // 1 when any CZ is present (recyclable)
  std::size_t photons = 0;

  bool operator==(const ResourceCount&) const = default;
};

ResourceCount count_resources(const Schedule& s);

/// Checks the schedule contract: every qubit declared by exactly one NewPlus
/// before any gate touches it, indices dense against the target graph,
/// two-qubit operands distinct. Throws std::invalid_argument on violation.
void validate(const Schedule& s);

}  // namespace clusterforge
