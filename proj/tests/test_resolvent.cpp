#include "support.hpp"

#include "stieltjes/errors.hpp"
#include "stieltjes/laguerre.hpp"
#include "stieltjes/resolvent.hpp"

#include <doctest.h>

using namespace stieltjes;
using namespace testing_support;

TEST_CASE("one-step resolvent") {
  const Poly m{2, 1};
  const Rational l(3, 4);
  const SFraction sf{{{m, l}}};
  const ResolventMatrix W = resolvent(sf, 1, Parity::Even);
  const Poly zm = Poly::z() * m;
  CHECK(W.W == PolyMatrix2{Poly(1), Poly(l), -zm, Poly(1) - zm * l});
  CHECK(W.factors.size() == 2);
  const ResolventMatrix V = resolvent(sf, 1, Parity::Odd);
  CHECK(V.W == PolyMatrix2{Poly(1), Poly(), -zm, Poly(1)});
  CHECK(resolvent(sf, 0, Parity::Even).W == PolyMatrix2::identity());
  CHECK_THROWS_AS(resolvent(sf, 2, Parity::Even), DomainError);
}

TEST_CASE("determinant and nesting on Laguerre data") {
  const MomentSequence s0 = laguerre_moments(laguerre_config(Rational(0), 12));
  const SFraction sf0 = schur_s_fraction_all(s0);
  const SchurResult head = schur_s_fraction(s0, 2);
  const SFraction induced = schur_s_fraction_all(head.induced);
  CHECK(resolvent(sf0, 4, Parity::Even).W ==
        resolvent(sf0, 2, Parity::Even).W * resolvent(induced, 2, Parity::Even).W);

  const SFraction sf = schur_s_fraction_all(laguerre_moments(laguerre_config(Rational(-3, 2), 12)));
  for (std::size_t N = 1; N <= 5; ++N) {
    CHECK(resolvent(sf, N, Parity::Even).W.det() == Poly(1));
    CHECK(resolvent(sf, N, Parity::Odd).W.det() == Poly(1));
  }
}

TEST_CASE("index budgets of the Laguerre demos") {
  const SFraction sf0 = schur_s_fraction_all(laguerre_moments(laguerre_config(Rational(0), 10)));
  const IndexBudget b0 = index_budget(sf0, 5);
  CHECK(b0.kappa_N == 0);
  CHECK(b0.k_N_plus == 0);
  const SFraction sf = schur_s_fraction_all(laguerre_moments(laguerre_config(Rational(-3, 2), 10)));
  for (std::size_t N = 1; N <= 5; ++N) {
    const IndexBudget b = index_budget(sf, N);
    CHECK(b.kappa_N == 1);
    CHECK(b.k_N_plus == 0);
    CHECK(b.k_N == 0);
  }
}

TEST_CASE("property: budget equals Hankel inertia") {
  std::mt19937 rng(8080);
  for (int trial = 0; trial < 100; ++trial) {
    const auto [sf, s] = random_regular(rng);
    for (std::size_t N = 1; N <= sf.size(); ++N) {
      const IndexBudget b = index_budget(sf, N);
      const std::size_t n = sf.normal_index(N);
      CHECK(b.kappa_N == inertia(s, n, HankelShift::Plain).negative);
      if (2 * n <= s.size()) CHECK(b.k_N_plus == inertia(s, n, HankelShift::Shifted).negative);
    }
  }
}

TEST_CASE("property: factor products, determinants and nesting") {
  std::mt19937 rng(4711);
  for (int trial = 0; trial < 100; ++trial) {
    const auto [sf, s] = random_regular(rng);
    const std::size_t N = sf.size();
    for (std::size_t j = 1; j <= N; ++j) {
      // resolvent() throws InternalError if the two assemblies disagree.
      CHECK(resolvent(sf, j, Parity::Even).W.det() == Poly(1));
      CHECK(resolvent(sf, j, Parity::Odd).W.det() == Poly(1));
    }
    for (std::size_t M = 1; M < N; ++M) {
      const SFraction induced = schur_s_fraction_all(schur_s_fraction(s, M).induced);
      REQUIRE(induced.size() == N - M);
      CHECK(resolvent(sf, N, Parity::Even).W ==
            resolvent(sf, M, Parity::Even).W * resolvent(induced, N - M, Parity::Even).W);
    }
  }
}

TEST_CASE("solution candidates") {
  for (const Rational alpha : {Rational(0), Rational(-3, 2)}) {
    const MomentSequence s = laguerre_moments(laguerre_config(alpha, 12));
    const SFraction sf = schur_s_fraction_all(s);
    for (std::size_t N = 1; N <= sf.size(); ++N) {
      const std::size_t n = sf.normal_index(N);
      const auto even = solution_candidate(resolvent(sf, N, Parity::Even), TauSymbol::Zero, s);
      CHECK(even.matched_order >= 2 * n);
      const auto odd = solution_candidate(resolvent(sf, N, Parity::Odd), TauSymbol::Infinity, s);
      CHECK(odd.matched_order >= 2 * n - 1);
    }
  }
  const MomentSequence s0 = laguerre_moments(laguerre_config(Rational(0), 12));
  const SFraction sf0 = schur_s_fraction_all(s0);
  const RationalFunction minus_inv_z{Poly(-1), Poly::z()};
  CHECK(solution_candidate(resolvent(sf0, 2, Parity::Even), minus_inv_z, s0).matched_order >= 4);
}

TEST_CASE("parameter side conditions") {
  const MomentSequence s0 = laguerre_moments(laguerre_config(Rational(0), 8));
  const SFraction sf0 = schur_s_fraction_all(s0);
  const ResolventMatrix even = resolvent(sf0, 2, Parity::Even);
  const ResolventMatrix odd = resolvent(sf0, 2, Parity::Odd);
  CHECK_THROWS_WITH_AS(solution_candidate(even, TauSymbol::Infinity, s0), "parameter class violation", DomainError);
  CHECK_THROWS_WITH_AS(solution_candidate(even, RationalFunction{Poly(1), Poly(1)}, s0), "parameter class violation",
                       DomainError);
  CHECK_THROWS_WITH_AS(solution_candidate(odd, TauSymbol::Zero, s0), "parameter class violation", DomainError);
  CHECK_THROWS_WITH_AS(solution_candidate(odd, RationalFunction{Poly(1), Poly::z()}, s0), "parameter class violation",
                       DomainError);
  CHECK_NOTHROW(solution_candidate(odd, RationalFunction{Poly(2), Poly(1)}, s0));
  CHECK_NOTHROW(solution_candidate(odd, RationalFunction{Poly{0, 1}, Poly(1)}, s0));
}

TEST_CASE("property: admissible random parameters keep the interpolation order") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    const auto [sf, s] = random_regular(rng);
    const std::size_t N = sf.size();
    const std::size_t n = sf.normal_index(N);
    // even: tau = c / (z - a), odd: tau = z + c or a constant
    const RationalFunction even_tau{Poly(small_rational(rng)), Poly{small_rational(rng, false), 1}};
    const RationalFunction odd_tau{Poly{small_rational(rng, false), Rational(trial % 2)}, Poly(1)};
    if (odd_tau.numer.is_zero()) continue;
    try {
      CHECK(solution_candidate(resolvent(sf, N, Parity::Even), even_tau, s).matched_order >= 2 * n);
      CHECK(solution_candidate(resolvent(sf, N, Parity::Odd), odd_tau, s).matched_order >= 2 * n - 1);
    } catch (const DomainError& e) {
      // T_W[tau] can degenerate for an unlucky tau; that is not an order failure.
      CHECK(std::string(e.what()) == "degenerate transform");
    }
  }
}
