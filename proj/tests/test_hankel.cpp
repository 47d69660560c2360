#include "support.hpp"

#include "stieltjes/errors.hpp"
#include "stieltjes/hankel.hpp"

#include <doctest.h>

using namespace stieltjes;
using namespace testing_support;

TEST_CASE("hankel determinants") {
  const MomentSequence s{1, 1, 2, 6};
  CHECK(hankel_det(s, 0, HankelShift::Plain) == Rational(1));
  CHECK(hankel_det(s, 1, HankelShift::Plain) == Rational(1));
  CHECK(hankel_det(s, 2, HankelShift::Plain) == Rational(1));
  CHECK(hankel_det(s, 2, HankelShift::Shifted) == Rational(2));  // 1*6 - 2*2
  CHECK_THROWS_AS(hankel_det(s, 3, HankelShift::Plain), InsufficientMoments);
  CHECK(max_hankel_order(s, HankelShift::Plain) == 2);
  CHECK(max_hankel_order(s, HankelShift::Shifted) == 2);
}

TEST_CASE("normal indices") {
  CHECK(normal_indices(MomentSequence{1, 1, 2, 6}) == std::vector<std::size_t>{1, 2});
  CHECK(normal_indices(MomentSequence{0, 0, 1, 0}).empty());
  CHECK(normal_indices(MomentSequence{0, 1, 0, 0}) == std::vector<std::size_t>{2});
}

TEST_CASE("inertia examples") {
  const MomentSequence lag{Rational(-1), Rational(1, 2), Rational(1, 4), Rational(3, 8)};
  CHECK(hankel_det(lag, 1, HankelShift::Plain) == Rational(-1));
  CHECK(hankel_det(lag, 2, HankelShift::Plain) == Rational(-1, 2));
  CHECK(inertia(lag, 2, HankelShift::Plain) == Inertia{1, 0, 1});
  CHECK(symmetric_inertia({{0, 1}, {1, 0}}) == Inertia{1, 0, 1});
  CHECK(symmetric_inertia({{0, 0}, {0, 0}}) == Inertia{0, 2, 0});
}

TEST_CASE("bareiss against cofactor expansion") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 5);
    Matrix a(n, std::vector<Rational>(n));
    for (auto& row : a)
      for (auto& x : row) x = small_rational(rng, false);
    CHECK(bareiss_det(a) == cofactor_det(a));
  }
}

TEST_CASE("hankel determinants and inertia against independent oracles") {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Rational> v;
    for (int k = 0; k < 9; ++k) v.push_back(trial % 4 == 0 && k < 2 ? Rational(0) : small_rational(rng, false));
    const MomentSequence s(v);
    for (auto shift : {HankelShift::Plain, HankelShift::Shifted})
      for (std::size_t n = 1; n <= max_hankel_order(s, shift); ++n) {
        const Matrix h = hankel_matrix(s, n, shift);
        CHECK(hankel_det(s, n, shift) == cofactor_det(h));
        CHECK(inertia(s, n, shift) == charpoly_inertia(h));
      }
  }
}

TEST_CASE("scaling by a negative constant swaps the inertia") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> v;
    for (int k = 0; k < 7; ++k) v.push_back(small_rational(rng, false));
    const MomentSequence s(v);
    const Inertia a = inertia(s, 3, HankelShift::Plain);
    const Inertia b = inertia(s.scaled(Rational(-2)), 3, HankelShift::Plain);
    CHECK(a.negative == b.positive);
    CHECK(a.positive == b.negative);
    CHECK(a.zero == b.zero);
  }
}

TEST_CASE("class indices report") {
  const MomentSequence lag{Rational(-1), Rational(1, 2), Rational(1, 4), Rational(3, 8), Rational(15, 16), Rational(105, 32)};
  const HankelReport r = class_indices(lag);
  CHECK(r.normal_indices == std::vector<std::size_t>{1, 2, 3});
  CHECK(r.kappa == std::optional<std::size_t>(1));
  CHECK(r.k_plus == std::optional<std::size_t>(0));
  CHECK(r.regular);
  CHECK(r.dets_plus.at(0) == Rational(1, 2));
  CHECK(r.dets_plus.at(1) == Rational(1, 8));
}
