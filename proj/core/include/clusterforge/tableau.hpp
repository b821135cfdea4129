#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <vector>

#include "clusterforge/pauli.hpp"

namespace clusterforge {

/// Result of a ZZ-parity (or general Pauli) measurement. was_random=false
/// means the value was forced by the state.
struct MeasurementOutcome {
  int value = +1;  // +1 or -1
  bool was_random = false;
};

/// Supplies the bit chosen when a measurement outcome is random. Seeded for
/// reproducibility; forced variants let tests drive both feedforward branches.
class OutcomeSource {
 public:
  static OutcomeSource seeded(std::uint64_t seed) {
    auto rng = std::make_shared<std::mt19937_64>(seed);
    return OutcomeSource([rng]() { return ((*rng)() & 1) != 0; });
  }
  /// Every random outcome resolves to `minus` (-1 if true, +1 if false).
  static OutcomeSource forced(bool minus) {
    return OutcomeSource([minus]() { return minus; });
  }

  bool next_minus() { return fn_(); }

 private:
  explicit OutcomeSource(std::function<bool()> fn) : fn_(std::move(fn)) {}
  std::function<bool()> fn_;
};

/// Stabilizer-formalism state of n qubits: n destabilizer rows followed by
/// n stabilizer rows, bit-packed with 64-bit word granularity.
class Tableau {
 public:
  /// All n qubits stabilized by +X_i.
  static Tableau plus_state(std::size_t n);

  std::size_t qubit_count() const { return n_; }

  void apply_h(std::size_t q);
  void apply_x(std::size_t q);
  void apply_z(std::size_t q);
  void apply_cnot(std::size_t control, std::size_t target);
  void apply_cz(std::size_t p, std::size_t q);

  /// Projects onto a +/-1 eigenspace of Z_p Z_q.
  MeasurementOutcome measure_zz(std::size_t p, std::size_t q, OutcomeSource& src);

  /// Measures an arbitrary signed Pauli observable.
  MeasurementOutcome measure_pauli(const PauliString& obs, OutcomeSource& src);

  /// ZZ-parity measurement followed by a conditional X on q (feedforward).
  /// With q fresh in |+> this is the deterministic two-qubit entangling map.
  void entangler(std::size_t p, std::size_t q, OutcomeSource& src);

  /// True iff `s` (with its sign) lies in the stabilizer group.
  bool is_stabilized_by(const PauliString& s) const;

  /// +1/-1 when the observable is forced by the state, 0 when random.
  int deterministic_sign(const PauliString& obs) const;

  /// Unique row-reduced representative; two tableaus describe the same state
  /// iff their canonical stabilizer rows match.
  Tableau canonical() const;

  PauliString stabilizer_row(std::size_t i) const { return row_pauli(n_ + i); }
  PauliString destabilizer_row(std::size_t i) const { return row_pauli(i); }

  /// Symplectic-basis sanity check; throws std::logic_error on violation.
  void check_valid() const;

  friend bool same_state(const Tableau& a, const Tableau& b);

 private:
  explicit Tableau(std::size_t n);

  bool xbit(std::size_t row, std::size_t q) const {
    return (xs_[row * w_ + q / 64] >> (q % 64)) & 1;
  }
  bool zbit(std::size_t row, std::size_t q) const {
    return (zs_[row * w_ + q / 64] >> (q % 64)) & 1;
  }
  void set_xbit(std::size_t row, std::size_t q, bool v);
  void set_zbit(std::size_t row, std::size_t q, bool v);

  PauliString row_pauli(std::size_t row) const;
  void set_row(std::size_t row, const PauliString& p);
  bool row_anticommutes(std::size_t row, const PauliString& p) const;

  // row h <- row h * row i, with sign tracking.
  void rowsum(std::size_t h, std::size_t i);
  // Same accumulation into an external scratch Pauli (sign in scratch_sign,
  // 0 => +1, 1 => -1).
  void rowsum_into(PauliString& scratch, int& phase4, std::size_t i) const;
  void swap_rows(std::size_t a, std::size_t b);

  void check_index(std::size_t q) const;

  std::size_t n_ = 0;
  std::size_t w_ = 0;  // words per row
  std::vector<std::uint64_t> xs_, zs_;  // 2n rows
  std::vector<std::uint8_t> signs_;     // 0 => +1, 1 => -1
};

/// State equality through canonical forms.
bool same_state(const Tableau& a, const Tableau& b);

}  // namespace clusterforge
