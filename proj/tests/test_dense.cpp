#include <doctest.h>

#include <array>
#include <cmath>
#include <complex>

#include "clusterforge/dense.hpp"
#include "clusterforge/graph.hpp"
#include "clusterforge/verify.hpp"

using namespace clusterforge;
using cplx = std::complex<double>;

namespace {

constexpr double kTol = 1e-12;

StateVector make(std::initializer_list<Ket> kets) {
  std::vector<Ket> v(kets);
  return StateVector::prepare(v);
}

}  // namespace

TEST_CASE("prepare and indexing") {
  // Qubit 0 is the leftmost tensor factor, i.e. the most significant bit.
  const StateVector s = make({Ket::one(), Ket::zero()});
  REQUIRE(s.qubit_count() == 2);
  CHECK(std::abs(s.amplitudes()[2] - 1.0) < kTol);
  CHECK(std::abs(s.amplitudes()[0]) < kTol);
  CHECK(s.norm() == doctest::Approx(1.0));

  const StateVector p = StateVector::all_plus(3);
  for (const cplx& a : p.amplitudes())
    CHECK(std::abs(a - cplx(1.0 / std::sqrt(8.0))) < kTol);

  CHECK_THROWS_AS(make({Ket{0.0, 0.0}}), std::invalid_argument);
  CHECK_THROWS_AS(StateVector::all_plus(20, 14), std::invalid_argument);
  CHECK(StateVector::all_plus(16, 16).qubit_count() == 16);
}

TEST_CASE("single qubit gates") {
  StateVector s = make({Ket::zero()});
  s.apply_h(0);
  CHECK(fidelity(s, make({Ket::plus()})) == doctest::Approx(1.0));
  s.apply_z(0);
  CHECK(fidelity(s, make({Ket::minus()})) == doctest::Approx(1.0));
  s.apply_h(0);
  CHECK(fidelity(s, make({Ket::one()})) == doctest::Approx(1.0));
  s.apply_x(0);
  CHECK(fidelity(s, make({Ket::zero()})) == doctest::Approx(1.0));
  CHECK_THROWS_AS(s.apply_h(1), std::out_of_range);
}

TEST_CASE("cz phases") {
  StateVector s = make({Ket::one(), Ket::one()});
  s.apply_cz(0, 1);
  CHECK(std::abs(s.amplitudes()[3] + 1.0) < kTol);

  StateVector t = StateVector::all_plus(2);
  t.apply_cz(0, 1);
  CHECK(fidelity(t, graph_state_dense(string_graph(2))) == doctest::Approx(1.0));
  CHECK_THROWS_AS(t.apply_cz(1, 1), std::invalid_argument);
}

TEST_CASE("entangler maps a|0>|+> + b|1>|+> to a|00> + b|11>") {
  const Ket psi{0.6, 0.8};
  for (const int forced : {+1, -1}) {
    StateVector s = make({psi, Ket::plus()});
    const int out = s.entangler(0, 1, forced);
    CHECK(out == forced);
    CHECK(s.norm() == doctest::Approx(1.0));
    const StateVector want =
        StateVector::ket_sum(std::array<std::pair<cplx, std::string_view>, 2>{
            {{0.6, "00"}, {0.8, "11"}}});
    CHECK(fidelity(s, want) == doctest::Approx(1.0));
  }
}

TEST_CASE("entangler sampling is reproducible and valid") {
  std::mt19937_64 rng(99);
  int minus_seen = 0;
  for (int trial = 0; trial < 32; ++trial) {
    StateVector s = StateVector::all_plus(2);
    const int out = s.entangler(0, 1, std::nullopt, &rng);
    if (out == -1) ++minus_seen;
    CHECK(s.norm() == doctest::Approx(1.0));
    const double zz = expectation(s, PauliString::from_string("+ZZ"));
    CHECK(zz == doctest::Approx(1.0));
  }
  CHECK(minus_seen > 0);
  CHECK(minus_seen < 32);
}

TEST_CASE("forcing a zero-probability branch throws") {
  StateVector s = make({Ket::zero(), Ket::zero()});
  CHECK_THROWS_AS(s.entangler(0, 1, -1), std::invalid_argument);
  StateVector t = make({Ket::zero(), Ket::one()});
  CHECK_THROWS_AS(t.entangler(0, 1, +1), std::invalid_argument);
}

TEST_CASE("three photon string fixture") {
  const StateVector fixture =
      StateVector::ket_sum(std::array<std::pair<cplx, std::string_view>, 4>{
          {{1, "0+0"}, {1, "0-1"}, {1, "1-0"}, {1, "1+1"}}});
  CHECK(fidelity(fixture, graph_state_dense(string_graph(3))) == doctest::Approx(1.0));
}

TEST_CASE("box from a three photon string and one extra entangler") {
  // String of three photons, Hadamard on the middle one...
  StateVector s =
      StateVector::ket_sum(std::array<std::pair<cplx, std::string_view>, 4>{
          {{1, "0+0"}, {1, "0-1"}, {1, "1-0"}, {1, "1+1"}}});
  s.apply_h(1);
  const StateVector mid =
      StateVector::ket_sum(std::array<std::pair<cplx, std::string_view>, 4>{
          {{1, "000"}, {1, "011"}, {1, "110"}, {1, "101"}}});
  CHECK(fidelity(s, mid) == doctest::Approx(1.0));

  // ...then one entangler copying it onto a fresh photon...
  StateVector four =
      StateVector::ket_sum(std::array<std::pair<cplx, std::string_view>, 4>{
          {{1, "000+"}, {1, "011+"}, {1, "110+"}, {1, "101+"}}});
  four.entangler(1, 3, +1);
  const StateVector pre_h =
      StateVector::ket_sum(std::array<std::pair<cplx, std::string_view>, 4>{
          {{1, "0000"}, {1, "0111"}, {1, "1101"}, {1, "1010"}}});
  CHECK(fidelity(four, pre_h) == doctest::Approx(1.0));

  // ...and Hadamards on both bonded photons close the box.
  four.apply_h(1);
  four.apply_h(3);
  const StateVector box =
      StateVector::ket_sum(std::array<std::pair<cplx, std::string_view>, 4>{
          {{1, "0+0+"}, {1, "0-1-"}, {1, "1-0-"}, {1, "1+1+"}}});
  CHECK(fidelity(four, box) == doctest::Approx(1.0));
  CHECK(fidelity(four, graph_state_dense(box_graph())) == doctest::Approx(1.0));
}

TEST_CASE("ket_sum validation") {
  CHECK_THROWS_AS(StateVector::ket_sum(std::array<std::pair<cplx, std::string_view>, 2>{
                      {{1, "00"}, {1, "0"}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(StateVector::ket_sum(std::array<std::pair<cplx, std::string_view>, 1>{
                      {{1, "0x"}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(StateVector::ket_sum(std::array<std::pair<cplx, std::string_view>, 2>{
                      {{1, "+"}, {-1, "+"}}}),
                  std::invalid_argument);
}

TEST_CASE("expectation values") {
  const StateVector plus = make({Ket::plus()});
  CHECK(expectation(plus, PauliString::from_string("+X")) == doctest::Approx(1.0));
  CHECK(expectation(plus, PauliString::from_string("-X")) == doctest::Approx(-1.0));
  CHECK(expectation(plus, PauliString::from_string("+Z")) == doctest::Approx(0.0));

  const StateVector one = make({Ket::one()});
  CHECK(expectation(one, PauliString::from_string("+Z")) == doctest::Approx(-1.0));

  const Ket yplus{1.0 / std::sqrt(2.0), cplx(0.0, 1.0) / std::sqrt(2.0)};
  CHECK(expectation(make({yplus}), PauliString::from_string("+Y")) == doctest::Approx(1.0));

  const StateVector g = graph_state_dense(grid_graph(2, 2));
  for (const PauliString& gen : graph_stabilizers(grid_graph(2, 2)))
    CHECK(expectation(g, gen) == doctest::Approx(1.0));
}

TEST_CASE("fidelity ignores global phase") {
  StateVector a = StateVector::all_plus(2);
  StateVector b = StateVector::all_plus(2);
  b.apply_z(0);
  b.apply_x(0);
  b.apply_z(0);
  b.apply_x(0);  // net -1 global phase
  CHECK(fidelity(a, b) == doctest::Approx(1.0));
  StateVector c = StateVector::all_plus(2);
  c.apply_z(0);
  CHECK(fidelity(a, c) == doctest::Approx(0.0));
}
