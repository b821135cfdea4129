#include "clusterforge/schedule.hpp"

#include <stdexcept>

namespace clusterforge {

bool is_two_qubit(OpKind kind) { return kind == OpKind::Entangle || kind == OpKind::CZ; }

std::string_view op_kind_name(OpKind kind) {
  switch (kind) {
    case OpKind::NewPlus: return "NEW";
    case OpKind::Entangle: return "E";
    case OpKind::Hadamard: return "H";
    case OpKind::CZ: return "CZ";
    case OpKind::PauliX: return "X";
    case OpKind::PauliZ: return "Z";
  }
  throw std::logic_error("unreachable");
}

OpKind op_kind_from_name(std::string_view name) {
  if (name == "NEW") return OpKind::NewPlus;
  if (name == "E") return OpKind::Entangle;
  if (name == "H") return OpKind::Hadamard;
  if (name == "CZ") return OpKind::CZ;
  if (name == "X") return OpKind::PauliX;
  if (name == "Z") return OpKind::PauliZ;
  throw std::invalid_argument("unknown op kind: " + std::string(name));
}

void Schedule::push_two(OpKind kind, std::size_t p, std::size_t q) {
  if (p == q) throw std::invalid_argument("two-qubit op operands must differ");
  ops.push_back({kind, p, q});
}

ResourceCount count_resources(const Schedule& s) {
  ResourceCount rc;
  for (const PrimOp& op : s.ops) {
    switch (op.kind) {
      case OpKind::NewPlus: ++rc.photons; break;
      case OpKind::Entangle: ++rc.entanglers; break;
      case OpKind::CZ: ++rc.cz_gates; break;
      default: break;
    }
  }
  rc.entangler_equiv = rc.entanglers + 2 * rc.cz_gates;
  rc.ancilla_photons = rc.cz_gates > 0 ? 1 : 0;
  return rc;
}

void validate(const Schedule& s) {
  const std::size_t n = s.qubit_count();
  std::vector<bool> declared(n, false);
  auto check_declared = [&](std::size_t q) {
    if (q >= n) throw std::invalid_argument("operand out of range");
    if (!declared[q]) throw std::invalid_argument("operand used before NEW");
  };
  for (const PrimOp& op : s.ops) {
    if (op.kind == OpKind::NewPlus) {
      if (op.a >= n) throw std::invalid_argument("NEW index out of range");
      if (declared[op.a]) throw std::invalid_argument("duplicate NEW");
      declared[op.a] = true;
      continue;
    }
    check_declared(op.a);
    if (is_two_qubit(op.kind)) {
      if (op.a == op.b) throw std::invalid_argument("two-qubit op operands must differ");
      check_declared(op.b);
    }
  }
  for (std::size_t q = 0; q < n; ++q)
    if (!declared[q]) throw std::invalid_argument("target vertex never declared");
}

}  // namespace clusterforge
