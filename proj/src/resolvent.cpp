#include "stieltjes/resolvent.hpp"

#include "stieltjes/errors.hpp"
#include "stieltjes/polysys.hpp"

namespace stieltjes {

PolyMatrix2 m_factor(const Poly& m) { return {Poly(1), Poly(), -(Poly::z() * m), Poly(1)}; }

PolyMatrix2 l_factor(const Rational& l) { return {Poly(1), Poly(l), Poly(), Poly(1)}; }

ResolventMatrix resolvent(const SFraction& sf, std::size_t N, Parity parity) {
  if (N > sf.size())
    throw DomainError("fraction has only " + std::to_string(sf.size()) + " pairs, need " + std::to_string(N));
  if (parity == Parity::Odd && N == 0) throw DomainError("odd resolvent needs N >= 1");
  ResolventMatrix r;
  r.parity = parity;
  r.N = N;
  PolyMatrix2 prod = PolyMatrix2::identity();
  for (std::size_t j = 0; j < N; ++j) {
    r.factors.push_back(m_factor(sf.pairs[j].m));
    prod = prod * r.factors.back();
    if (parity == Parity::Odd && j + 1 == N) break;
    r.factors.push_back(l_factor(sf.pairs[j].l));
    prod = prod * r.factors.back();
  }
  if (N == 0) {
    r.W = prod;
    return r;
  }
  const StieltjesPolys S = stieltjes_polys(sf, N);
  const long n = static_cast<long>(N);
  if (parity == Parity::Even)
    r.W = {S.Q[2 * n - 1], S.Q[2 * n], S.P[2 * n - 1], S.P[2 * n]};
  else
    r.W = {S.Q[2 * n - 1], S.Q[2 * n - 2], S.P[2 * n - 1], S.P[2 * n - 2]};
  if (!(r.W == prod)) throw InternalError("resolvent: factor product disagrees with Stieltjes polynomials");
  return r;
}

IndexBudget index_budget(const SFraction& sf, std::size_t N) {
  if (N > sf.size())
    throw DomainError("fraction has only " + std::to_string(sf.size()) + " pairs, need " + std::to_string(N));
  IndexBudget b;
  for (std::size_t j = 0; j < N; ++j) {
    const SPair& pr = sf.pairs[j];
    FactorIndex f{neg_index(Poly::z() * pr.m), neg_index(pr.m), neg_index(Poly::z() * pr.l)};
    b.kappa_N += f.kappa_zm;
    b.k_N_plus += f.kappa_m + f.kappa_zl;
    b.per_factor.push_back(f);
  }
  b.k_N = N == 0 ? 0 : b.k_N_plus - b.per_factor.back().kappa_zl;
  return b;
}

std::size_t matched_order(const RationalFunction& f, const MomentSequence& s) {
  if (s.empty()) return 0;
  LaurentTail t;
  try {
    t = series_at_infinity(f.numer, f.denom, s.size() - 1);
  } catch (const DomainError&) {
    return 0;
  }
  std::size_t k = 0;
  while (k < s.size() && t[k] == s[k]) ++k;
  return k;
}

namespace {

bool admissible(const Tau& tau, Parity parity) {
  if (const auto* sym = std::get_if<TauSymbol>(&tau))
    return parity == Parity::Even ? *sym == TauSymbol::Zero : *sym == TauSymbol::Infinity;
  const auto& f = std::get<RationalFunction>(tau);
  if (f.denom.is_zero()) return false;
  if (parity == Parity::Even) return f.numer.is_zero() || *f.numer.degree() < *f.denom.degree();
  return !f.numer.is_zero() && *f.denom.degree() <= *f.numer.degree();
}

}  // namespace

SolutionCandidate solution_candidate(const ResolventMatrix& W, const Tau& tau, const MomentSequence& s) {
  if (!admissible(tau, W.parity)) throw DomainError("parameter class violation");
  RationalFunction f = matrix_apply(W.W, tau);
  const std::size_t order = matched_order(f, s);
  return {std::move(f), order};
}

}  // namespace stieltjes
