#include "clusterforge/compiler.hpp"

#include <algorithm>
#include <stdexcept>

namespace clusterforge {

namespace {

void require_existing(const Schedule& s, std::size_t p) {
  if (p >= s.qubit_count()) throw std::invalid_argument("unknown qubit");
}

// NEW q, E(p,q), H(q): bonds q to p (one entangler per added photon).
void emit_add_photon(Schedule& s, std::size_t p, std::size_t q) {
  s.new_plus(q);
  s.entangle(p, q);
  s.h(q);
}

// Completes a box around the path p-q-r: H(q), NEW s, E(q,s), H(q), H(s).
// Valid when q's only bonds are to p and r; the single entangler creates the
// two bonds s-p and s-r.
void emit_double_bond(Schedule& s, std::size_t q, std::size_t fresh) {
  s.h(q);
  s.new_plus(fresh);
  s.entangle(q, fresh);
  s.h(q);
  s.h(fresh);
}

// Bridging box: photons q, r are added to p, then H(q) CZ(q,sq) H(q) creates
// the bonds sq-r and sq-p in one CZ.
void emit_box_bridge(Schedule& s, std::size_t p, std::size_t q, std::size_t r,
                     std::size_t sq) {
  emit_add_photon(s, p, q);
  emit_add_photon(s, q, r);
  s.h(q);
  s.cz(q, sq);
  s.h(q);
}

}  // namespace

Schedule build_string(std::size_t n) {
  if (n < 1) throw std::invalid_argument("string length must be positive");
  Schedule s;
  s.name = "string:" + std::to_string(n);
  s.target = string_graph(n);
  s.new_plus(0);
  for (std::size_t i = 1; i < n; ++i) emit_add_photon(s, i - 1, i);
  return s;
}

Schedule build_star(std::size_t k) {
  if (k < 1) throw std::invalid_argument("star needs at least one leaf");
  Schedule s;
  s.name = "star:" + std::to_string(k);
  s.target = star_graph(k);
  s.new_plus(0);
  for (std::size_t i = 1; i <= k; ++i) emit_add_photon(s, 0, i);
  return s;
}

std::size_t add_photon(Schedule& s, std::size_t p) {
  require_existing(s, p);
  const std::size_t q = s.target.vertex_count++;
  s.target.add_edge(p, q);
  emit_add_photon(s, p, q);
  return q;
}

Schedule build_box_type1() {
  Schedule s = build_string(3);
  s.name = "box1";
  s.target = box_graph();
  emit_double_bond(s, 1, 3);
  return s;
}

std::array<std::size_t, 3> add_box_type1(Schedule& s, std::size_t p) {
  require_existing(s, p);
  const std::size_t q = s.target.vertex_count++;
  const std::size_t r = s.target.vertex_count++;
  const std::size_t fresh = s.target.vertex_count++;
  s.target.add_edge(p, q);
  s.target.add_edge(q, r);
  s.target.add_edge(r, fresh);
  s.target.add_edge(fresh, p);
  emit_add_photon(s, p, q);
  emit_add_photon(s, q, r);
  emit_double_bond(s, q, fresh);
  return {q, r, fresh};
}

std::array<std::size_t, 2> add_box_type2(Schedule& s, std::size_t p, std::size_t sq) {
  require_existing(s, p);
  require_existing(s, sq);
  if (p == sq) throw std::invalid_argument("box corners must differ");
  if (s.target.has_edge(p, sq))
    throw std::invalid_argument("bridged corners already share a bond");
  const std::size_t q = s.target.vertex_count++;
  const std::size_t r = s.target.vertex_count++;
  s.target.add_edge(p, q);
  s.target.add_edge(q, r);
  s.target.add_edge(r, sq);
  s.target.add_edge(sq, p);
  emit_box_bridge(s, p, q, r, sq);
  return {q, r};
}

Schedule build_box_type2() {
  Schedule s;
  s.name = "box2";
  s.target.vertex_count = 2;
  s.new_plus(0);
  s.new_plus(1);
  add_box_type2(s, 0, 1);
  return s;
}

Schedule build_lattice(std::size_t n) {
  if (n < 2) throw std::invalid_argument("lattice size must be at least 2");
  Schedule s;
  s.name = "lattice:" + std::to_string(n);
  s.target = grid_graph(n, n);
  const auto idx = [n](std::size_t r, std::size_t c) { return r * n + c; };

  Graph built;  // bonds created so far, to derive the final CZ links
  built.vertex_count = n * n;
  auto add_photon_at = [&](std::size_t p, std::size_t q) {
    emit_add_photon(s, p, q);
    built.add_edge(p, q);
  };
  auto double_bond_at = [&](std::size_t p, std::size_t q, std::size_t r,
                            std::size_t fresh) {
    emit_double_bond(s, q, fresh);
    built.add_edge(fresh, p);
    built.add_edge(fresh, r);
  };
  auto bridge_at = [&](std::size_t p, std::size_t q, std::size_t r, std::size_t sq) {
    emit_box_bridge(s, p, q, r, sq);
    built.add_edge(p, q);
    built.add_edge(q, r);
    built.add_edge(r, sq);
    built.add_edge(sq, p);
  };

  // (1) Staircase string along the diagonal cells:
  // (0,0),(0,1),(1,1),(1,2),...,(n-1,n-1).
  s.new_plus(idx(0, 0));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    add_photon_at(idx(i, i), idx(i, i + 1));
    add_photon_at(idx(i, i + 1), idx(i + 1, i + 1));
  }

  // (2) Close each diagonal cell into a box with one entangler.
  for (std::size_t i = 0; i + 1 < n; ++i)
    double_bond_at(idx(i, i), idx(i, i + 1), idx(i + 1, i + 1), idx(i + 1, i));

  // (3)+(4) Fill the remaining checkerboard cells band by band. Band k holds
  // the cells at diagonal offset 2k; its first cell hangs off a single
  // existing corner (three entanglers), later cells bridge two existing
  // corners (two entanglers plus a CZ).
  for (std::size_t k = 1; 2 * k + 1 <= n - 1; ++k) {
    const std::size_t cells = n - 1 - 2 * k;
    // First cells, above then below the diagonal.
    add_photon_at(idx(1, 2 * k), idx(0, 2 * k));
    add_photon_at(idx(0, 2 * k), idx(0, 2 * k + 1));
    double_bond_at(idx(1, 2 * k), idx(0, 2 * k), idx(0, 2 * k + 1), idx(1, 2 * k + 1));

    add_photon_at(idx(2 * k, 1), idx(2 * k, 0));
    add_photon_at(idx(2 * k, 0), idx(2 * k + 1, 0));
    double_bond_at(idx(2 * k, 1), idx(2 * k, 0), idx(2 * k + 1, 0), idx(2 * k + 1, 1));

    // Bridged cells.
    for (std::size_t i = 1; i < cells; ++i) {
      const std::size_t j = i + 2 * k;
      bridge_at(idx(i, j), idx(i, j + 1), idx(i + 1, j + 1), idx(i + 1, j));
    }
    for (std::size_t i = 1; i < cells; ++i) {
      const std::size_t j = i + 2 * k;
      bridge_at(idx(j, i), idx(j + 1, i), idx(j + 1, i + 1), idx(j, i + 1));
    }
  }

  // (5) For odd n the two anti-diagonal corners are not covered by any cell.
  if (n % 2 == 1) {
    add_photon_at(idx(0, n - 2), idx(0, n - 1));
    add_photon_at(idx(n - 2, 0), idx(n - 1, 0));
  }

  // (6) CZ gates for every remaining bond.
  for (const auto& [a, b] : s.target.edges) {
    if (!built.has_edge(a, b)) s.cz(a, b);
  }
  return s;
}

CzExpansion cz_expansion(const Schedule& s) {
  CzExpansion out;
  out.schedule = s;
  for (std::size_t i = 0; i < s.ops.size(); ++i) {
    switch (s.ops[i].kind) {
      case OpKind::Entangle:
        out.annotations.push_back({i, 1, false});
        out.total_entangler_equiv += 1;
        break;
      case OpKind::CZ:
        out.annotations.push_back({i, 2, true});
        out.total_entangler_equiv += 2;
        break;
      default:
        break;
    }
  }
  return out;
}

}  // namespace clusterforge
