#pragma once

#include <array>

#include "clusterforge/schedule.hpp"

namespace clusterforge {

/// Path cluster state on n qubits: n-1 entanglers, no CZ.
Schedule build_string(std::size_t n);

/// Star cluster state, hub 0 with k leaves: k entanglers.
Schedule build_star(std::size_t k);

/// Appends one fresh |+> photon bonded to existing qubit p (one entangler).
/// Returns the new qubit index; the target graph gains the edge (p, q).
std::size_t add_photon(Schedule& s, std::size_t p);

/// Standalone 4-cycle box on qubits 0-1-2-3-0, three entanglers, no CZ.
Schedule build_box_type1();

/// Appends a box p-q-r-s to an existing qubit p: three fresh photons, three
/// entanglers; the last entangler creates the bonds s-p and s-r at once.
/// Returns the indices {q, r, s}.
std::array<std::size_t, 3> add_box_type1(Schedule& s, std::size_t p);

/// Appends a box p-q-r-s bridging two existing qubits p and s (possibly in
/// different components): two entanglers plus one CZ. The bond p-s must not
/// already exist. Returns the indices {q, r}.
std::array<std::size_t, 2> add_box_type2(Schedule& s, std::size_t p, std::size_t sq);

/// Box built from two independent photons via the bridging construction.
Schedule build_box_type2();

/// n x n lattice cluster state. Resource totals: n^2-1 entanglers, with
/// (n-1)^2/2 CZ gates for odd n >= 3 and n(n-2)/2 for even n >= 4; n=2
/// degenerates to the standalone box.
Schedule build_lattice(std::size_t n);

/// Per-op entangler-equivalent accounting: each CZ costs two entanglers and
/// needs the shared recyclable ancilla photon. The op list is not rewritten.
struct CzExpansion {
  struct Annotation {
    std::size_t op_index;
    std::size_t entangler_equiv;
    bool uses_ancilla;
  };
  Schedule schedule;
  std::vector<Annotation> annotations;
  std::size_t total_entangler_equiv = 0;
};

CzExpansion cz_expansion(const Schedule& s);

}  // namespace clusterforge
