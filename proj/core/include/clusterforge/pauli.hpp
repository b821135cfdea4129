#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace clusterforge {

/// Signed n-qubit Pauli operator in binary-symplectic form.
/// The letter at qubit q is encoded by an (x,z) bit pair:
/// I=(0,0), X=(1,0), Z=(0,1), Y=(1,1).
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::size_t n)
      : n_(n), x_((n + 63) / 64, 0), z_((n + 63) / 64, 0) {}

  /// Parses "+XZI", "-XX" or "XZ" (sign optional, defaults to +).
  static PauliString from_string(std::string_view text);

  std::size_t size() const { return n_; }

  int sign() const { return negative_ ? -1 : +1; }
  void set_sign(int s) { negative_ = s < 0; }

  bool x_bit(std::size_t q) const { return (x_[q / 64] >> (q % 64)) & 1; }
  bool z_bit(std::size_t q) const { return (z_[q / 64] >> (q % 64)) & 1; }
  void set_x(std::size_t q, bool v) { set_bit(x_, q, v); }
  void set_z(std::size_t q, bool v) { set_bit(z_, q, v); }

  char letter(std::size_t q) const {
    static constexpr char table[4] = {'I', 'X', 'Z', 'Y'};
    return table[(x_bit(q) ? 1 : 0) | (z_bit(q) ? 2 : 0)];
  }
  void set_letter(std::size_t q, char l);

  /// True iff the symplectic inner product with `other` vanishes.
  bool commutes_with(const PauliString& other) const {
    if (other.n_ != n_) throw std::invalid_argument("PauliString length mismatch");
    int parity = 0;
    for (std::size_t j = 0; j < x_.size(); ++j) {
      parity ^= std::popcount((x_[j] & other.z_[j]) ^ (z_[j] & other.x_[j])) & 1;
    }
    return parity == 0;
  }

  std::size_t weight() const {
    std::size_t w = 0;
    for (std::size_t j = 0; j < x_.size(); ++j) w += std::popcount(x_[j] | z_[j]);
    return w;
  }

  std::string str() const;

  bool operator==(const PauliString&) const = default;

 private:
  static void set_bit(std::vector<std::uint64_t>& bits, std::size_t q, bool v) {
    if (v)
      bits[q / 64] |= std::uint64_t{1} << (q % 64);
    else
      bits[q / 64] &= ~(std::uint64_t{1} << (q % 64));
  }

  std::size_t n_ = 0;
  bool negative_ = false;
  std::vector<std::uint64_t> x_, z_;
};

}  // namespace clusterforge
