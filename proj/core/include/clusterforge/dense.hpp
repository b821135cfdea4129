#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "clusterforge/pauli.hpp"

namespace clusterforge {

/// Single-qubit preparation: amplitudes for |0> and |1>.
struct Ket {
  std::complex<double> a0, a1;
  static Ket zero() { return {1.0, 0.0}; }
  static Ket one() { return {0.0, 1.0}; }
  static Ket plus();
  static Ket minus();
};

inline constexpr std::size_t kDefaultDenseCap = 14;

/// Exact 2^n-amplitude state for small instances. Qubit 0 is the leftmost
/// factor (most significant bit of the basis index).
class StateVector {
 public:
  /// Tensor product of the listed kets, in order.
  static StateVector prepare(std::span<const Ket> kets, std::size_t cap = kDefaultDenseCap);

  /// All n qubits in |+>.
  static StateVector all_plus(std::size_t n, std::size_t cap = kDefaultDenseCap);

  /// Normalized sum of product-ket terms written with letters {0,1,+,-},
  /// e.g. {1,"0+0"} + {1,"0-1"} + ... Eliminates hand-typed amplitude tables.
  static StateVector ket_sum(
      std::span<const std::pair<std::complex<double>, std::string_view>> terms,
      std::size_t cap = kDefaultDenseCap);

  std::size_t qubit_count() const { return n_; }
  std::span<const std::complex<double>> amplitudes() const { return amp_; }

  void apply_h(std::size_t q);
  void apply_x(std::size_t q);
  void apply_z(std::size_t q);
  void apply_cz(std::size_t p, std::size_t q);

  /// ZZ-parity projection (sampled from Born probabilities unless forced)
  /// followed by a conditional X on q. Returns the outcome (+1/-1).
  /// Throws if a forced outcome has zero probability.
  int entangler(std::size_t p, std::size_t q, std::optional<int> forced = std::nullopt,
                std::mt19937_64* rng = nullptr);

  double norm() const;

 private:
  StateVector(std::size_t n, std::size_t size) : n_(n), amp_(size) {}

  bool index_bit(std::size_t idx, std::size_t q) const {
    return (idx >> (n_ - 1 - q)) & 1;
  }
  void check_index(std::size_t q) const;

  std::size_t n_ = 0;
  std::vector<std::complex<double>> amp_;
};

/// |<a|b>|^2 — global-phase-insensitive state comparison.
double fidelity(const StateVector& a, const StateVector& b);

/// <s|P|s> for a signed Pauli observable.
double expectation(const StateVector& s, const PauliString& p);

}  // namespace clusterforge
