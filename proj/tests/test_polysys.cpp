#include "support.hpp"

#include "stieltjes/laguerre.hpp"
#include "stieltjes/polysys.hpp"

#include <doctest.h>

using namespace stieltjes;
using namespace testing_support;

TEST_CASE("Lanczos polynomials of the factorial moments") {
  const LanczosPolys L = lanczos(laguerre_moments(laguerre_config(Rational(0), 10)), 3);
  CHECK(L.P[-1].is_zero());
  CHECK(L.P[0] == Poly(1));
  CHECK(L.Q[-1] == Poly(-1));
  CHECK(L.Q[0].is_zero());
  CHECK(L.P[1] == Poly{-1, 1});
  CHECK(L.Q[1] == Poly(1));
  CHECK(L.P[2] == Poly{2, -4, 1});
}

TEST_CASE("first Stieltjes polynomials") {
  const SFraction sf{{{Poly{3, 1}, Rational(1, 2)}}};
  const StieltjesPolys S = stieltjes_polys(sf, 1);
  const Poly zm = Poly::z() * Poly{3, 1};
  CHECK(S.P[1] == -zm);
  CHECK(S.Q[1] == Poly(1));
  CHECK(S.P[2] == Poly(1) - zm * Rational(1, 2));
  CHECK(S.Q[2] == Poly(Rational(1, 2)));
  CHECK(S.P[2] * S.Q[1] - S.Q[2] * S.P[1] == Poly(1));
}

TEST_CASE("indefinite Laguerre: P+_2 = 1 + 2z") {
  const LaguerreConfig cfg = laguerre_config(Rational(-3, 2), 10);
  const SFraction sf = schur_s_fraction(laguerre_moments(cfg), 2).fraction;
  CHECK(stieltjes_polys(sf, 1).P[2] == Poly{1, 2});
}

TEST_CASE("identity suites on the Laguerre demos") {
  for (const Rational alpha : {Rational(0), Rational(-3, 2)}) {
    const LaguerreConfig cfg = laguerre_config(alpha, 12);
    const SFraction sf = schur_s_fraction(laguerre_moments(cfg), 6).fraction;
    const IdentityReport r = verify_identities(build_poly_system(sf, 6), sf);
    CHECK(r.checks.size() > 30);
    for (const auto& f : r.failures()) FAIL_CHECK(f.name << "[" << f.index << "]: " << f.lhs << " vs " << f.rhs);
    CHECK(r.all_passed());
  }
}

TEST_CASE("identity report names a broken identity") {
  const LaguerreConfig cfg = laguerre_config(Rational(0), 8);
  const SFraction sf = schur_s_fraction(laguerre_moments(cfg), 3).fraction;
  SFraction tampered = sf;
  tampered.pairs[1].l = Rational(7);
  const IdentityReport r = verify_identities(build_poly_system(sf, 3), tampered);
  CHECK_FALSE(r.all_passed());
  bool named = false;
  for (const auto& f : r.failures()) named = named || (f.name == "l_from_lanczos" && f.index == 2);
  CHECK(named);
}

TEST_CASE("property: recurrence and determinant forms agree") {
  std::mt19937 rng(2718);
  for (int trial = 0; trial < 100; ++trial) {
    const auto [sf, s] = random_regular(rng);
    const std::size_t N = sf.size();
    const StieltjesPolys rec = stieltjes_polys(sf, N);
    const StieltjesPolys det = stieltjes_by_determinants(p_fraction(s), N);
    CHECK(rec.P == det.P);
    CHECK(rec.Q == det.Q);
    for (long j = 1; j <= static_cast<long>(N); ++j) {
      CHECK(*rec.P[2 * j].degree() == sf.normal_index(static_cast<std::size_t>(j)));
      CHECK(*rec.P[2 * j - 1].degree() == sf.normal_index(static_cast<std::size_t>(j)));
      CHECK(rec.P[2 * j](Rational(0)) == Rational(1));
      CHECK(rec.P[2 * j - 1](Rational(0)) == Rational(0));
    }
  }
}

TEST_CASE("property: identity suite on random regular data") {
  std::mt19937 rng(1618);
  for (int trial = 0; trial < 100; ++trial) {
    const auto [sf, s] = random_regular(rng);
    for (std::size_t N = 1; N <= sf.size(); ++N) {
      const IdentityReport r = verify_identities(build_poly_system(sf, N), sf);
      CHECK(r.all_passed());
    }
    const LanczosPolys L = lanczos(s, sf.size());
    const PolySystem ps = build_poly_system(sf, sf.size());
    CHECK(L.P == ps.lanczos_P);
    CHECK(L.Q == ps.lanczos_Q);
  }
}
