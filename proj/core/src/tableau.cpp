#include "clusterforge/tableau.hpp"

#include <stdexcept>

namespace clusterforge {

Tableau::Tableau(std::size_t n)
    : n_(n), w_((n + 63) / 64), xs_(2 * n * w_, 0), zs_(2 * n * w_, 0), signs_(2 * n, 0) {}

Tableau Tableau::plus_state(std::size_t n) {
  Tableau t(n);
  for (std::size_t i = 0; i < n; ++i) {
    t.set_zbit(i, i, true);       // destabilizer i = Z_i
    t.set_xbit(n + i, i, true);   // stabilizer i = X_i
  }
  return t;
}

void Tableau::check_index(std::size_t q) const {
  if (q >= n_) throw std::out_of_range("qubit index out of range");
}

void Tableau::set_xbit(std::size_t row, std::size_t q, bool v) {
  const auto mask = std::uint64_t{1} << (q % 64);
  if (v)
    xs_[row * w_ + q / 64] |= mask;
  else
    xs_[row * w_ + q / 64] &= ~mask;
}

void Tableau::set_zbit(std::size_t row, std::size_t q, bool v) {
  const auto mask = std::uint64_t{1} << (q % 64);
  if (v)
    zs_[row * w_ + q / 64] |= mask;
  else
    zs_[row * w_ + q / 64] &= ~mask;
}

void Tableau::apply_h(std::size_t q) {
  check_index(q);
  for (std::size_t r = 0; r < 2 * n_; ++r) {
    const bool x = xbit(r, q), z = zbit(r, q);
    signs_[r] ^= static_cast<std::uint8_t>(x && z);
    set_xbit(r, q, z);
    set_zbit(r, q, x);
  }
}

void Tableau::apply_x(std::size_t q) {
  check_index(q);
  for (std::size_t r = 0; r < 2 * n_; ++r) signs_[r] ^= static_cast<std::uint8_t>(zbit(r, q));
}

void Tableau::apply_z(std::size_t q) {
  check_index(q);
  for (std::size_t r = 0; r < 2 * n_; ++r) signs_[r] ^= static_cast<std::uint8_t>(xbit(r, q));
}

void Tableau::apply_cnot(std::size_t control, std::size_t target) {
  check_index(control);
  check_index(target);
  if (control == target) throw std::invalid_argument("CNOT operands must differ");
  for (std::size_t r = 0; r < 2 * n_; ++r) {
    const bool xc = xbit(r, control), zc = zbit(r, control);
    const bool xt = xbit(r, target), zt = zbit(r, target);
    signs_[r] ^= static_cast<std::uint8_t>(xc && zt && (xt == zc));
    set_xbit(r, target, xt ^ xc);
    set_zbit(r, control, zc ^ zt);
  }
}

void Tableau::apply_cz(std::size_t p, std::size_t q) {
  if (p == q) throw std::invalid_argument("CZ operands must differ");
  check_index(p);
  check_index(q);
  apply_h(q);
  apply_cnot(p, q);
  apply_h(q);
}

PauliString Tableau::row_pauli(std::size_t row) const {
  PauliString p(n_);
  for (std::size_t q = 0; q < n_; ++q) {
    p.set_x(q, xbit(row, q));
    p.set_z(q, zbit(row, q));
  }
  p.set_sign(signs_[row] ? -1 : +1);
  return p;
}

void Tableau::set_row(std::size_t row, const PauliString& p) {
  for (std::size_t q = 0; q < n_; ++q) {
    set_xbit(row, q, p.x_bit(q));
    set_zbit(row, q, p.z_bit(q));
  }
  signs_[row] = p.sign() < 0 ? 1 : 0;
}

bool Tableau::row_anticommutes(std::size_t row, const PauliString& p) const {
  int parity = 0;
  for (std::size_t q = 0; q < n_; ++q) {
    parity ^= static_cast<int>((xbit(row, q) && p.z_bit(q)) ^ (zbit(row, q) && p.x_bit(q)));
  }
  return parity != 0;
}

namespace {

// Exponent of i contributed by one qubit when left-multiplying (x1,z1) into
// (x2,z2); the usual CHP bookkeeping.
int phase_g(bool x1, bool z1, bool x2, bool z2) {
  if (!x1 && !z1) return 0;
  if (x1 && z1) return static_cast<int>(z2) - static_cast<int>(x2);
  if (x1) return z2 ? (x2 ? 1 : -1) : 0;   // X
  return x2 ? (z2 ? -1 : 1) : 0;           // Z
}

}  // namespace

void Tableau::rowsum(std::size_t h, std::size_t i) {
  int total = 2 * signs_[h] + 2 * signs_[i];
  for (std::size_t q = 0; q < n_; ++q)
    total += phase_g(xbit(i, q), zbit(i, q), xbit(h, q), zbit(h, q));
  total = ((total % 4) + 4) % 4;
  if (total != 0 && total != 2) throw std::logic_error("rowsum produced imaginary sign");
  signs_[h] = static_cast<std::uint8_t>(total == 2);
  for (std::size_t j = 0; j < w_; ++j) {
    xs_[h * w_ + j] ^= xs_[i * w_ + j];
    zs_[h * w_ + j] ^= zs_[i * w_ + j];
  }
}

void Tableau::rowsum_into(PauliString& scratch, int& phase4, std::size_t i) const {
  for (std::size_t q = 0; q < n_; ++q)
    phase4 += phase_g(xbit(i, q), zbit(i, q), scratch.x_bit(q), scratch.z_bit(q));
  phase4 += 2 * signs_[i];
  for (std::size_t q = 0; q < n_; ++q) {
    scratch.set_x(q, scratch.x_bit(q) ^ xbit(i, q));
    scratch.set_z(q, scratch.z_bit(q) ^ zbit(i, q));
  }
}

void Tableau::swap_rows(std::size_t a, std::size_t b) {
  for (std::size_t j = 0; j < w_; ++j) {
    std::swap(xs_[a * w_ + j], xs_[b * w_ + j]);
    std::swap(zs_[a * w_ + j], zs_[b * w_ + j]);
  }
  std::swap(signs_[a], signs_[b]);
}

MeasurementOutcome Tableau::measure_pauli(const PauliString& obs, OutcomeSource& src) {
  if (obs.size() != n_) throw std::invalid_argument("observable length mismatch");
  PauliString base = obs;
  base.set_sign(+1);

  // Look for a stabilizer row anticommuting with the observable.
  std::size_t pivot = 2 * n_;
  for (std::size_t i = n_; i < 2 * n_; ++i) {
    if (row_anticommutes(i, base)) {
      pivot = i;
      break;
    }
  }

  if (pivot == 2 * n_) {
    // Outcome forced: decompose through the destabilizers.
    PauliString scratch(n_);
    int phase4 = 0;
    for (std::size_t i = 0; i < n_; ++i)
      if (row_anticommutes(i, base)) rowsum_into(scratch, phase4, n_ + i);
    phase4 = ((phase4 % 4) + 4) % 4;
    if (phase4 != 0 && phase4 != 2) throw std::logic_error("non-real deterministic outcome");
    const int base_value = phase4 == 2 ? -1 : +1;
    return {base_value * obs.sign(), false};
  }

  // Random outcome.
  const bool minus = src.next_minus();
  const int value = minus ? -1 : +1;
  const int base_eigenvalue = value * obs.sign();
  // The pivot's own destabilizer is replaced below, so it is not rowsummed
  // (it anticommutes with the pivot row).
  for (std::size_t r = 0; r < 2 * n_; ++r) {
    if (r != pivot && r != pivot - n_ && row_anticommutes(r, base)) rowsum(r, pivot);
  }
  // Old stabilizer row becomes the paired destabilizer; the observable joins
  // the stabilizer group with the measured sign.
  for (std::size_t j = 0; j < w_; ++j) {
    xs_[(pivot - n_) * w_ + j] = xs_[pivot * w_ + j];
    zs_[(pivot - n_) * w_ + j] = zs_[pivot * w_ + j];
  }
  signs_[pivot - n_] = signs_[pivot];
  PauliString stab = base;
  stab.set_sign(base_eigenvalue);
  set_row(pivot, stab);
  return {value, true};
}

MeasurementOutcome Tableau::measure_zz(std::size_t p, std::size_t q, OutcomeSource& src) {
  if (p == q) throw std::invalid_argument("ZZ measurement operands must differ");
  check_index(p);
  check_index(q);
  PauliString zz(n_);
  zz.set_z(p, true);
  zz.set_z(q, true);
  return measure_pauli(zz, src);
}

void Tableau::entangler(std::size_t p, std::size_t q, OutcomeSource& src) {
  const auto outcome = measure_zz(p, q, src);
  if (outcome.value == -1) apply_x(q);
}

int Tableau::deterministic_sign(const PauliString& obs) const {
  if (obs.size() != n_) throw std::invalid_argument("observable length mismatch");
  PauliString base = obs;
  base.set_sign(+1);
  for (std::size_t i = n_; i < 2 * n_; ++i)
    if (row_anticommutes(i, base)) return 0;
  PauliString scratch(n_);
  int phase4 = 0;
  for (std::size_t i = 0; i < n_; ++i)
    if (row_anticommutes(i, base)) rowsum_into(scratch, phase4, n_ + i);
  phase4 = ((phase4 % 4) + 4) % 4;
  if (phase4 != 0 && phase4 != 2) throw std::logic_error("non-real deterministic sign");
  return (phase4 == 2 ? -1 : +1) * obs.sign();
}

bool Tableau::is_stabilized_by(const PauliString& s) const {
  if (s.size() != n_) throw std::invalid_argument("stabilizer length mismatch");
  PauliString base = s;
  base.set_sign(+1);
  for (std::size_t i = n_; i < 2 * n_; ++i)
    if (row_anticommutes(i, base)) return false;
  PauliString scratch(n_);
  int phase4 = 0;
  for (std::size_t i = 0; i < n_; ++i)
    if (row_anticommutes(i, base)) rowsum_into(scratch, phase4, n_ + i);
  phase4 = ((phase4 % 4) + 4) % 4;
  scratch.set_sign(phase4 == 2 ? -1 : +1);
  return scratch == s;
}

Tableau Tableau::canonical() const {
  Tableau t = *this;
  const std::size_t n = n_;
  // stab row i lives at n + i; elimination keeps the destabilizer pairing:
  // stab i *= stab j implies destab j *= destab i.
  auto multiply = [&t, n](std::size_t i, std::size_t j) {
    t.rowsum(n + i, n + j);
    t.rowsum(j, i);
  };
  std::size_t rank = 0;
  // X block, lowest qubit index first.
  for (std::size_t q = 0; q < n && rank < n; ++q) {
    std::size_t pivot = n;
    for (std::size_t i = rank; i < n; ++i) {
      if (t.xbit(n + i, q)) {
        pivot = i;
        break;
      }
    }
    if (pivot == n) continue;
    if (pivot != rank) {
      t.swap_rows(n + pivot, n + rank);
      t.swap_rows(pivot, rank);
    }
    for (std::size_t i = 0; i < n; ++i)
      if (i != rank && t.xbit(n + i, q)) multiply(i, rank);
    ++rank;
  }
  // Z block over the remaining (Z-only) rows.
  for (std::size_t q = 0; q < n && rank < n; ++q) {
    std::size_t pivot = n;
    for (std::size_t i = rank; i < n; ++i) {
      if (t.zbit(n + i, q)) {
        pivot = i;
        break;
      }
    }
    if (pivot == n) continue;
    if (pivot != rank) {
      t.swap_rows(n + pivot, n + rank);
      t.swap_rows(pivot, rank);
    }
    for (std::size_t i = 0; i < n; ++i)
      if (i != rank && t.zbit(n + i, q)) multiply(i, rank);
    ++rank;
  }
  return t;
}

void Tableau::check_valid() const {
  for (std::size_t i = 0; i < n_; ++i) {
    const PauliString stab_i = row_pauli(n_ + i);
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (!row_pauli(n_ + j).commutes_with(stab_i))
        throw std::logic_error("stabilizer rows do not commute");
      if (!row_pauli(j).commutes_with(row_pauli(i)))
        throw std::logic_error("destabilizer rows do not commute");
    }
    for (std::size_t j = 0; j < n_; ++j) {
      const bool anticommutes = !row_pauli(j).commutes_with(stab_i);
      if (anticommutes != (i == j))
        throw std::logic_error("destabilizer pairing violated");
    }
  }
}

bool same_state(const Tableau& a, const Tableau& b) {
  if (a.n_ != b.n_) return false;
  const Tableau ca = a.canonical();
  const Tableau cb = b.canonical();
  for (std::size_t i = 0; i < a.n_; ++i) {
    if (ca.row_pauli(a.n_ + i) != cb.row_pauli(b.n_ + i)) return false;
  }
  return true;
}

}  // namespace clusterforge
