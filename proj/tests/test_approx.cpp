#include "support.hpp"

#include "stieltjes/approx.hpp"
#include "stieltjes/errors.hpp"
#include "stieltjes/laguerre.hpp"
#include "stieltjes/polysys.hpp"
#include "stieltjes/resolvent.hpp"

#include <doctest.h>

using namespace stieltjes;
using namespace testing_support;

namespace {

SFraction geometric(std::size_t N) {
  SFraction sf;
  Rational t(1);
  for (std::size_t j = 0; j < N; ++j) {
    t *= Rational(1, 2);
    sf.pairs.push_back({Poly(t), t});
  }
  return sf;
}

}  // namespace

TEST_CASE("Pade examples") {
  const PadeResult one = pade(MomentSequence{1, 0, 0, 0}, 1, PadeKind::Diagonal);
  CHECK(RationalFunction{one.numer, one.denom} == RationalFunction{Poly(-1), Poly::z()});
  CHECK(one.verified_order >= 2);

  const PadeResult two = pade(MomentSequence{1, 1, 2, 6}, 2, PadeKind::Diagonal);
  CHECK(two.denom == Poly{2, -4, 1});
  CHECK(two.verified_order == 4);
  CHECK(two.n == 2);

  const MomentSequence lag = laguerre_moments(laguerre_config(Rational(-3, 2), 10));
  const PadeResult sub = pade(lag, 2, PadeKind::Subdiagonal);
  CHECK(sub.denom(Rational(0)) == Rational(0));
  CHECK(sub.verified_order >= 3);
  CHECK(*sub.denom.degree() == 2);

  CHECK_THROWS_AS(pade(MomentSequence{1, 1, 2, 6}, 3, PadeKind::Diagonal), DomainError);
  CHECK_THROWS_AS(pade(MomentSequence{1, 0, 1, 0, 1, 0}, 1, PadeKind::Subdiagonal), NotRegular);
}

TEST_CASE("diagonal Pade through both fraction forms") {
  std::mt19937 rng(123);
  for (int trial = 0; trial < 100; ++trial) {
    const auto [sf, s] = random_regular(rng);
    const StieltjesPolys S = stieltjes_polys(sf, sf.size());
    for (std::size_t j = 1; j <= sf.size(); ++j) {
      const PadeResult d = pade(s, j, PadeKind::Diagonal);
      const long jj = static_cast<long>(j);
      CHECK(RationalFunction{d.numer, d.denom} == RationalFunction{S.Q[2 * jj], S.P[2 * jj]});
      CHECK(d.verified_order >= 2 * d.n);
      const PadeResult sd = pade(s, j, PadeKind::Subdiagonal);
      CHECK(sd.verified_order >= 2 * sd.n - 1);
    }
  }
}

TEST_CASE("factored Pade identity") {
  for (const Rational alpha : {Rational(0), Rational(-3, 2)}) {
    const MomentSequence s = laguerre_moments(laguerre_config(alpha, 12));
    for (auto [N, j] : {std::pair<std::size_t, std::size_t>{0, 2}, {1, 3}, {2, 4}, {1, 5}}) {
      const FactoredPadeCheck c = pade_factored_check(s, N, j);
      CHECK(c.diagonal);
      CHECK(c.subdiagonal_checked);
      CHECK(c.subdiagonal);
    }
  }
  CHECK_THROWS_AS(pade_factored_check(MomentSequence{1, 1, 2, 6}, 2, 2), DomainError);
}

TEST_CASE("determinacy evidence") {
  const DeterminacyReport g = determinacy(geometric(10), 10);
  CHECK(g.partial_M.back() == Rational(1023, 1024));
  CHECK(g.partial_L.back() == Rational(1023, 1024));
  CHECK(g.l_all_positive);
  CHECK(g.inertia_series.size() == 9);
  CHECK(g.verdict == Verdict::IndeterminateEvidence);

  const SFraction lag = schur_s_fraction_all(laguerre_moments(laguerre_config(Rational(0), 24)));
  const DeterminacyReport h = determinacy(lag, lag.size());
  CHECK(h.l_trend == Trend::Divergent);
  CHECK(h.verdict == Verdict::DeterminateEvidence);

  CHECK(determinacy(SFraction{}, 0).verdict == Verdict::Inconclusive);
  CHECK(determinacy(geometric(3), 3).verdict == Verdict::Inconclusive);
}

TEST_CASE("series trend heuristics") {
  std::vector<Rational> harmonic, alternating;
  for (long k = 1; k <= 8; ++k) {
    harmonic.push_back(Rational(1, k));
    alternating.push_back(Rational(k % 2 == 0 ? 1 : -1));
  }
  CHECK(series_trend(harmonic) == Trend::Divergent);
  CHECK(series_trend(alternating) == Trend::Unclear);
  CHECK(series_trend({1, 2}) == Trend::Unclear);
}

TEST_CASE("W probe") {
  const SFraction sf = geometric(16);
  CHECK(winf_probe(sf, {Rational(1)}, {}).empty());
  const auto rows = winf_probe(sf, {Rational(0), Rational(1)}, {2, 4, 8});
  REQUIRE(rows.size() == 6);
  for (const auto& r : rows)
    if (r.z.is_zero()) {
      CHECK(r.W.w11 == Rational(1));
      CHECK(r.W.w21 == Rational(0));
    }
  // Exact values agree with the polynomial matrix.
  const auto one = winf_probe(sf, {Rational(1, 3)}, {4});
  const ResolventMatrix W = resolvent(sf, 4, Parity::Even);
  CHECK(one[0].W == evaluate(W.W, Rational(1, 3)));
  // Successive differences shrink.
  const auto p = winf_probe(sf, {Rational(1)}, {2, 4, 8, 16});
  CHECK(max_entry_difference(p[1].W, p[2].W) < max_entry_difference(p[0].W, p[1].W));
  CHECK(max_entry_difference(p[2].W, p[3].W) < max_entry_difference(p[1].W, p[2].W));
}
