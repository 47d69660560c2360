#pragma once

// Resolvent matrices of the truncated even/odd problems, their elementary
// factors and the negative-index budget.

#include "stieltjes/fractions.hpp"
#include "stieltjes/matrix.hpp"

#include <vector>

namespace stieltjes {

enum class Parity { Even, Odd };

struct ResolventMatrix {
  PolyMatrix2 W;
  Parity parity = Parity::Even;
  std::size_t N = 0;
  /// M_1, L_1, M_2, ... in multiplication order.
  std::vector<PolyMatrix2> factors;
};

/// M_j = [[1, 0], [-z m_j, 1]].
PolyMatrix2 m_factor(const Poly& m);
/// L_j = [[1, l_j], [0, 1]].
PolyMatrix2 l_factor(const Rational& l);

/// Even: W_{2N} = [[Q+_{2N-1}, Q+_{2N}], [P+_{2N-1}, P+_{2N}]] = M_1 L_1 ... M_N L_N.
/// Odd:  W_{2N-1} = [[Q+_{2N-1}, Q+_{2N-2}], [P+_{2N-1}, P+_{2N-2}]] = M_1 L_1 ... L_{N-1} M_N.
/// Both assemblies are computed; a mismatch throws InternalError.
ResolventMatrix resolvent(const SFraction& sf, std::size_t N, Parity parity);

struct FactorIndex {
  std::size_t kappa_zm = 0;  ///< kappa_-(z m_j)
  std::size_t kappa_m = 0;   ///< kappa_-(m_j)
  std::size_t kappa_zl = 0;  ///< kappa_-(z l_j), i.e. 1 iff l_j < 0
};

struct IndexBudget {
  std::size_t kappa_N = 0;
  std::size_t k_N = 0;
  std::size_t k_N_plus = 0;
  std::vector<FactorIndex> per_factor;
};

IndexBudget index_budget(const SFraction& sf, std::size_t N);

struct SolutionCandidate {
  RationalFunction f;
  /// Leading Laurent coefficients of f that agree with s.
  std::size_t matched_order = 0;
};

/// f = T_W[tau]. Even W needs tau = o(1) at infinity (deg numer < deg denom,
/// or Zero); odd W needs 1/tau = o(z) (deg denom <= deg numer, or
/// Infinity). Anything else throws DomainError("parameter class violation").
SolutionCandidate solution_candidate(const ResolventMatrix& W, const Tau& tau, const MomentSequence& s);

/// Number of leading coefficients of the expansion of f at infinity that
/// agree with s (0 when f does not vanish at infinity).
std::size_t matched_order(const RationalFunction& f, const MomentSequence& s);

}  // namespace stieltjes
