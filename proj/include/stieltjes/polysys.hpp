#pragma once

// Lanczos polynomials P_j, Q_j of a P-fraction and the generalized
// Stieltjes polynomials P_j^+, Q_j^+ of an S-fraction.

#include "stieltjes/fractions.hpp"

#include <string>
#include <vector>

namespace stieltjes {

/// A list indexed from -1.
template <class T>
class FromMinusOne {
public:
  FromMinusOne() = default;
  explicit FromMinusOne(std::vector<T> v) : v_(std::move(v)) {}

  const T& operator[](long i) const { return v_.at(static_cast<std::size_t>(i + 1)); }
  /// Largest valid index.
  long last() const { return static_cast<long>(v_.size()) - 2; }
  void push_back(T x) { v_.push_back(std::move(x)); }
  const std::vector<T>& raw() const { return v_; }
  friend bool operator==(const FromMinusOne&, const FromMinusOne&) = default;

private:
  std::vector<T> v_;
};

struct LanczosPolys {
  FromMinusOne<Poly> P;  ///< P_{-1} .. P_N
  FromMinusOne<Poly> Q;  ///< Q_{-1} .. Q_N
};

struct StieltjesPolys {
  FromMinusOne<Poly> P;  ///< P^+_{-1} .. P^+_{2N}
  FromMinusOne<Poly> Q;  ///< Q^+_{-1} .. Q^+_{2N}
};

struct PolySystem {
  FromMinusOne<Poly> lanczos_P, lanczos_Q;
  FromMinusOne<Poly> stieltjes_P, stieltjes_Q;
  std::vector<Rational> btilde;  ///< btilde_i = b_0 ... b_i
};

/// y_{j+1} = a_j y_j - b_j y_{j-1}, with P_{-1}=0, P_0=1, Q_{-1}=-1, Q_0=0.
LanczosPolys lanczos(const PFraction& p, std::size_t N);
LanczosPolys lanczos(const MomentSequence& s, std::size_t N);

/// Two-step recurrence
///   y_{2j-1} = y_{2j-3} - z m_j y_{2j-2},  y_{2j} = y_{2j-2} + l_j y_{2j-1}
/// with P^+_{-1}=0, P^+_0=1, Q^+_{-1}=1, Q^+_0=0.
StieltjesPolys stieltjes_polys(const SFraction& sf, std::size_t N);

/// The same polynomials assembled from Lanczos polynomials:
///   P^+_{2i-1} = -(P_i P_{i-1}(0) - P_{i-1} P_i(0)) / btilde_{i-1},  P^+_{2i} = P_i / P_i(0)
/// and likewise for Q^+. Needs P_i(0) != 0.
StieltjesPolys stieltjes_by_determinants(const PFraction& p, std::size_t N);

std::vector<Rational> btilde(const PFraction& p);

/// P-fraction, Lanczos and Stieltjes polynomials of the first N steps.
PolySystem build_poly_system(const SFraction& sf, std::size_t N);

struct IdentityCheck {
  std::string name;
  long index = 0;
  bool passed = false;
  std::string lhs;
  std::string rhs;
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;
  bool all_passed() const;
  std::vector<IdentityCheck> failures() const;
};

/// Exact identity suite for a system built from sf (N = number of Lanczos
/// steps in ps).
IdentityReport verify_identities(const PolySystem& ps, const SFraction& sf);

}  // namespace stieltjes
