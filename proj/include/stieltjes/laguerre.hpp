#pragma once

// Laguerre moments s_n = Gamma(n + alpha + 1), divided by |Gamma(1 + alpha)|
// so that everything stays rational while the sign (and with it every
// inertia) is preserved.

#include "stieltjes/fractions.hpp"

#include <utility>

namespace stieltjes {

struct LaguerreConfig {
  Rational alpha;
  std::size_t count = 0;  ///< number of moments
  int gamma_sign = 1;     ///< sign of Gamma(1 + alpha)
};

/// Validates alpha (negative integers are Gamma poles) and fills in
/// gamma_sign from the sign alternation of Gamma on (-k-1, -k).
LaguerreConfig laguerre_config(const Rational& alpha, std::size_t count);

/// sign * (alpha+1)(alpha+2)...(alpha+n), n = 0..count-1.
MomentSequence laguerre_moments(const LaguerreConfig& cfg);

struct LaguerreClosedForms {
  SFraction s_fraction;
  PFraction p_fraction;
};

/// Closed-form S-fraction (count/2 pairs) and P-fraction atoms:
///   l_n = sign (n-1)! / prod_{j<=n}(alpha+j),  m_n = sign prod_{j<n}(alpha+j) / (n-1)!,
///   b_0 = sign, b_n = n(n+alpha), a_{n-1} = z - 2n - alpha + 1.
LaguerreClosedForms laguerre_closed_forms(const LaguerreConfig& cfg);

/// Monic Laguerre polynomial and its second-kind companion, normalized
/// like the moments.
std::pair<Poly, Poly> laguerre_polys(const LaguerreConfig& cfg, std::size_t n);

}  // namespace stieltjes
