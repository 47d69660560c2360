#include "support.hpp"

#include "stieltjes/errors.hpp"
#include "stieltjes/fractions.hpp"

#include <doctest.h>

using namespace stieltjes;
using namespace testing_support;

namespace {

MomentSequence factorials(std::size_t n) {
  std::vector<Rational> v{Rational(1)};
  for (std::size_t k = 1; k < n; ++k) v.push_back(v.back() * Rational(static_cast<long>(k)));
  return MomentSequence(v);
}

}  // namespace

TEST_CASE("Schur algorithm on factorial moments") {
  const SchurResult r = schur_s_fraction(factorials(10), 4);
  REQUIRE(r.fraction.size() == 4);
  for (std::size_t j = 1; j <= 4; ++j) {
    CHECK(r.fraction.pairs[j - 1].m == Poly(1));
    CHECK(r.fraction.pairs[j - 1].l == Rational(1, static_cast<long>(j)));
  }
  CHECK(r.induced.size() == 2);

  const PFraction p = p_fraction(factorials(10));
  REQUIRE(p.size() == 5);
  CHECK_FALSE(p.truncated);
  for (std::size_t n = 1; n <= 5; ++n) {
    CHECK(p.a[n - 1] == Poly{Rational(1 - 2 * static_cast<long>(n)), 1});
    if (n < 5) CHECK(p.b[n] == Rational(static_cast<long>(n * n)));
  }
  CHECK(p.b[0] == Rational(1));
}

TEST_CASE("Schur algorithm on the indefinite Laguerre moments") {
  const MomentSequence s{Rational(-1), Rational(1, 2), Rational(1, 4), Rational(3, 8), Rational(15, 16), Rational(105, 32)};
  const SFraction sf = schur_s_fraction(s, 2).fraction;
  CHECK(sf.pairs[0] == SPair{Poly(-1), Rational(2)});
  CHECK(sf.pairs[1] == SPair{Poly(Rational(1, 2)), Rational(4)});
  const PFraction p = p_fraction(s);
  CHECK(p.b[0] == Rational(-1));
  CHECK(p.b[1] == Rational(-1, 2));
  CHECK(p.a[0] == Poly{Rational(1, 2), 1});
}

TEST_CASE("errors carry the global moment count and step") {
  try {
    schur_s_fraction(factorials(5), 3);
    FAIL("expected InsufficientMoments");
  } catch (const InsufficientMoments& e) {
    CHECK(e.required() == 6);
    CHECK(e.available() == 5);
  }
  // s = (1, 0, 1, 0): the second step inverts a tail with zero constant term.
  CHECK_THROWS_AS(schur_s_fraction(MomentSequence{1, 0, 1, 0, 1, 0}, 2), NotRegular);
  try {
    schur_s_fraction(MomentSequence{1, 0, 1, 0, 1, 0}, 2);
  } catch (const NotRegular& e) {
    CHECK(e.step() == 1);
  }
  CHECK(schur_s_fraction_all(MomentSequence{1, 0, 1, 0}).size() == 0);
}

TEST_CASE("single moment") {
  const PFraction p = p_fraction(MomentSequence{1, 0});
  REQUIRE(p.size() == 1);
  CHECK(p.a[0] == Poly::z());
  CHECK(p.b[0] == Rational(1));
  CHECK(convergent(p, 1) == RationalFunction{Poly(-1), Poly::z()});
}

TEST_CASE("leading zeros give higher-degree atoms") {
  const PFraction p = p_fraction(MomentSequence{0, 1, 3, 5});
  REQUIRE(p.size() == 1);
  CHECK(p.a[0] == Poly{4, -3, 1});
  CHECK(p.normal_index(1) == 2);
}

TEST_CASE("property: moments of a random fraction reproduce it") {
  std::mt19937 rng(20240601);
  for (int trial = 0; trial < 100; ++trial) {
    const auto [sf, s] = random_regular(rng);
    const SchurResult r = schur_s_fraction(s, sf.size());
    CHECK(r.fraction == sf);
    CHECK(r.induced.size() == 0);
    CHECK(moments_from_s_fraction(sf, s.size()) == s);
  }
}

TEST_CASE("property: P-fraction conversions") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 100; ++trial) {
    const auto [sf, s] = random_regular(rng);
    const PFraction direct = p_fraction(s);
    const PFraction converted = p_from_s(sf);
    CHECK(direct == converted);
    CHECK(s_from_p(direct) == sf);
    for (std::size_t j = 1; j <= sf.size(); ++j) {
      CHECK(convergent(sf, 2 * j) == convergent(direct, j));
      CHECK(direct.normal_index(j) == sf.normal_index(j));
    }
  }
}

TEST_CASE("property: determinant formulas agree with each Schur step") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const auto [sf, s] = random_regular(rng);
    MomentSequence current = s;
    for (std::size_t j = 1; j <= sf.size(); ++j) {
      CHECK(s_pair_from_determinants(current) == sf.pairs[j - 1]);
      current = schur_s_fraction(current, 1).induced;
    }
  }
}

TEST_CASE("property: induced sequences") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto [sf, s] = random_regular(rng);
    for (std::size_t N = 0; N <= sf.size(); ++N) {
      const SchurResult head = schur_s_fraction(s, N);
      const InducedSequence ind = induced_sequence(sf, N, head.induced.size());
      CHECK_FALSE(ind.truncated);
      CHECK(ind.moments == head.induced);
      CHECK(induced_sequence(sf, N, head.induced.size() + 1).truncated);
    }
  }
}

TEST_CASE("property: raw random moment prefixes") {
  // Random data, not generated from a fraction: whatever Schur manages
  // must still match the P-fraction and its convergents.
  std::mt19937 rng(424242);
  int regular_runs = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rational> v;
    for (int k = 0; k < 10; ++k) v.push_back(small_rational(rng, false));
    const MomentSequence s(v);
    const SFraction sf = schur_s_fraction_all(s);
    const PFraction p = p_fraction(s);
    for (std::size_t j = 1; j <= sf.size(); ++j) {
      CHECK(convergent(sf, 2 * j) == convergent(p, j));
      CHECK(p.normal_index(j) == sf.normal_index(j));
    }
    if (sf.size() > 0) ++regular_runs;
  }
  CHECK(regular_runs > 50);
}
