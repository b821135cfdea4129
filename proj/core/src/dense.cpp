#include "clusterforge/dense.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace clusterforge {

namespace {
constexpr double kNormTol = 1e-12;
const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;
}  // namespace

Ket Ket::plus() { return {kInvSqrt2, kInvSqrt2}; }
Ket Ket::minus() { return {kInvSqrt2, -kInvSqrt2}; }

void StateVector::check_index(std::size_t q) const {
  if (q >= n_) throw std::out_of_range("qubit index out of range");
}

StateVector StateVector::prepare(std::span<const Ket> kets, std::size_t cap) {
  const std::size_t n = kets.size();
  if (n > cap) throw std::invalid_argument("qubit count exceeds dense cap");
  for (const Ket& k : kets) {
    const double norm = std::norm(k.a0) + std::norm(k.a1);
    if (std::abs(norm - 1.0) > kNormTol)
      throw std::invalid_argument("single-qubit ket is not normalized");
  }
  StateVector s(n, std::size_t{1} << n);
  for (std::size_t idx = 0; idx < s.amp_.size(); ++idx) {
    std::complex<double> a = 1.0;
    for (std::size_t q = 0; q < n; ++q)
      a *= s.index_bit(idx, q) ? kets[q].a1 : kets[q].a0;
    s.amp_[idx] = a;
  }
  return s;
}

StateVector StateVector::all_plus(std::size_t n, std::size_t cap) {
  std::vector<Ket> kets(n, Ket::plus());
  return prepare(kets, cap);
}

StateVector StateVector::ket_sum(
    std::span<const std::pair<std::complex<double>, std::string_view>> terms,
    std::size_t cap) {
  if (terms.empty()) throw std::invalid_argument("empty ket sum");
  const std::size_t n = terms.front().second.size();
  if (n > cap) throw std::invalid_argument("qubit count exceeds dense cap");
  StateVector s(n, std::size_t{1} << n);
  for (const auto& [coeff, letters] : terms) {
    if (letters.size() != n) throw std::invalid_argument("ket term length mismatch");
    for (std::size_t idx = 0; idx < s.amp_.size(); ++idx) {
      std::complex<double> a = coeff;
      for (std::size_t q = 0; q < n && a != 0.0; ++q) {
        const bool bit = s.index_bit(idx, q);
        switch (letters[q]) {
          case '0': if (bit) a = 0.0; break;
          case '1': if (!bit) a = 0.0; break;
          case '+': a *= kInvSqrt2; break;
          case '-': a *= bit ? -kInvSqrt2 : kInvSqrt2; break;
          default: throw std::invalid_argument("bad ket letter");
        }
      }
      s.amp_[idx] += a;
    }
  }
  const double norm = s.norm();
  if (norm < kNormTol) throw std::invalid_argument("ket sum vanishes");
  const double scale = 1.0 / std::sqrt(norm);
  for (auto& a : s.amp_) a *= scale;
  return s;
}

void StateVector::apply_h(std::size_t q) {
  check_index(q);
  const std::size_t stride = std::size_t{1} << (n_ - 1 - q);
  for (std::size_t idx = 0; idx < amp_.size(); ++idx) {
    if (idx & stride) continue;
    const auto a = amp_[idx], b = amp_[idx | stride];
    amp_[idx] = (a + b) * kInvSqrt2;
    amp_[idx | stride] = (a - b) * kInvSqrt2;
  }
}

void StateVector::apply_x(std::size_t q) {
  check_index(q);
  const std::size_t stride = std::size_t{1} << (n_ - 1 - q);
  for (std::size_t idx = 0; idx < amp_.size(); ++idx)
    if (!(idx & stride)) std::swap(amp_[idx], amp_[idx | stride]);
}

void StateVector::apply_z(std::size_t q) {
  check_index(q);
  const std::size_t stride = std::size_t{1} << (n_ - 1 - q);
  for (std::size_t idx = 0; idx < amp_.size(); ++idx)
    if (idx & stride) amp_[idx] = -amp_[idx];
}

void StateVector::apply_cz(std::size_t p, std::size_t q) {
  if (p == q) throw std::invalid_argument("CZ operands must differ");
  check_index(p);
  check_index(q);
  const std::size_t mp = std::size_t{1} << (n_ - 1 - p);
  const std::size_t mq = std::size_t{1} << (n_ - 1 - q);
  for (std::size_t idx = 0; idx < amp_.size(); ++idx)
    if ((idx & mp) && (idx & mq)) amp_[idx] = -amp_[idx];
}

int StateVector::entangler(std::size_t p, std::size_t q, std::optional<int> forced,
                           std::mt19937_64* rng) {
  if (p == q) throw std::invalid_argument("entangler operands must differ");
  check_index(p);
  check_index(q);
  const std::size_t mp = std::size_t{1} << (n_ - 1 - p);
  const std::size_t mq = std::size_t{1} << (n_ - 1 - q);
  double prob_plus = 0.0;
  for (std::size_t idx = 0; idx < amp_.size(); ++idx)
    if (((idx & mp) != 0) == ((idx & mq) != 0)) prob_plus += std::norm(amp_[idx]);

  int outcome;
  if (forced) {
    if (*forced != +1 && *forced != -1) throw std::invalid_argument("forced outcome must be +/-1");
    const double prob = *forced == +1 ? prob_plus : 1.0 - prob_plus;
    if (prob < kNormTol) throw std::invalid_argument("forced outcome has zero probability");
    outcome = *forced;
  } else {
    static std::mt19937_64 fallback{0x5eed};
    std::mt19937_64& gen = rng ? *rng : fallback;
    outcome = std::uniform_real_distribution<double>{}(gen) < prob_plus ? +1 : -1;
  }

  const bool keep_equal = outcome == +1;
  for (std::size_t idx = 0; idx < amp_.size(); ++idx) {
    const bool equal = ((idx & mp) != 0) == ((idx & mq) != 0);
    if (equal != keep_equal) amp_[idx] = 0.0;
  }
  const double remaining = norm();
  const double scale = 1.0 / std::sqrt(remaining);
  for (auto& a : amp_) a *= scale;
  if (outcome == -1) apply_x(q);
  return outcome;
}

double StateVector::norm() const {
  double total = 0.0;
  for (const auto& a : amp_) total += std::norm(a);
  return total;
}

double fidelity(const StateVector& a, const StateVector& b) {
  if (a.qubit_count() != b.qubit_count()) throw std::invalid_argument("qubit count mismatch");
  std::complex<double> overlap = 0.0;
  const auto av = a.amplitudes(), bv = b.amplitudes();
  for (std::size_t idx = 0; idx < av.size(); ++idx) overlap += std::conj(av[idx]) * bv[idx];
  return std::norm(overlap);
}

double expectation(const StateVector& s, const PauliString& p) {
  const std::size_t n = s.qubit_count();
  if (p.size() != n) throw std::invalid_argument("observable length mismatch");
  std::size_t xmask = 0, zmask = 0, y_count = 0;
  for (std::size_t q = 0; q < n; ++q) {
    const std::size_t bit = std::size_t{1} << (n - 1 - q);
    if (p.x_bit(q)) xmask |= bit;
    if (p.z_bit(q)) zmask |= bit;
    if (p.x_bit(q) && p.z_bit(q)) ++y_count;
  }
  const std::complex<double> i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const std::complex<double> global = i_pow[y_count % 4] * static_cast<double>(p.sign());
  const auto amp = s.amplitudes();
  std::complex<double> total = 0.0;
  for (std::size_t idx = 0; idx < amp.size(); ++idx) {
    const int z_parity = std::popcount(idx & zmask) & 1;
    const std::complex<double> phase = z_parity ? -global : global;
    total += std::conj(amp[idx ^ xmask]) * phase * amp[idx];
  }
  return total.real();
}

}  // namespace clusterforge
