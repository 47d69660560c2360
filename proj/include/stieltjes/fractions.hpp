#pragma once

// Schur algorithm and the two continued-fraction forms attached to a
// moment sequence:
//
//   generalized S-fraction  1/(-z m_1(z) + 1/(l_1 + 1/(-z m_2(z) + ...)))
//   P-fraction              -b_0/(a_0(z) - b_1/(a_1(z) - ...))

#include "stieltjes/hankel.hpp"
#include "stieltjes/laurent.hpp"
#include "stieltjes/matrix.hpp"
#include "stieltjes/poly.hpp"

#include <cstddef>
#include <vector>

namespace stieltjes {

struct SPair {
  Poly m;     ///< nonzero polynomial
  Rational l; ///< nonzero
  friend bool operator==(const SPair&, const SPair&) = default;
};

struct SFraction {
  std::vector<SPair> pairs;

  std::size_t size() const { return pairs.size(); }
  /// n_j = sum_{i<=j} (deg m_i + 1); n_0 = 0.
  std::size_t normal_index(std::size_t j) const;
  /// Pairs j0+1 .. end, i.e. the fraction left after j0 steps.
  SFraction tail_after(std::size_t j0) const;
  friend bool operator==(const SFraction&, const SFraction&) = default;
};

/// Atoms (a_j, b_j), j = 0..size()-1, with a_j monic.
struct PFraction {
  std::vector<Poly> a;
  std::vector<Rational> b;
  /// Extraction stopped because the data ran out, not because the
  /// expansion terminated.
  bool truncated = false;

  std::size_t size() const { return a.size(); }
  /// n_j = deg a_0 + ... + deg a_{j-1}.
  std::size_t normal_index(std::size_t j) const;
  friend bool operator==(const PFraction& x, const PFraction& y) { return x.a == y.a && x.b == y.b; }
};

struct SchurResult {
  SFraction fraction;
  /// s^(N): the tail left after N steps.
  MomentSequence induced;
};

/// N steps of the Schur algorithm on Laurent tails. Throws NotRegular when
/// an inverted tail has vanishing constant term and InsufficientMoments
/// when the prefix cannot support step N.
SchurResult schur_s_fraction(const MomentSequence& s, std::size_t N);

/// Runs the Schur algorithm as far as the data allows and stops at the first
/// step that cannot be completed (too few moments or irregular).
SFraction schur_s_fraction_all(const MomentSequence& s);

/// P-fraction atoms by repeated tail inversion. Returns the atoms found
/// before the data ran out.
PFraction p_fraction(const MomentSequence& s);

/// Values P_0(0)..P_N(0) of the Lanczos polynomials of p.
std::vector<Rational> lanczos_at_zero(const PFraction& p);

/// S-fraction from P-fraction atoms and P_0(0)..P_N(0).
SFraction s_from_p(const PFraction& p, const std::vector<Rational>& p_at_zero);
SFraction s_from_p(const PFraction& p);
/// P-fraction from S-fraction pairs.
PFraction p_from_s(const SFraction& sf);

struct InducedSequence {
  MomentSequence moments;
  bool truncated = false;
};

/// Expansion of the fraction formed by pairs N+1.. of sf.
InducedSequence induced_sequence(const SFraction& sf, std::size_t from_step, std::size_t length);

/// First `length` moments of the fraction sf (remaining tail taken as 0).
MomentSequence moments_from_s_fraction(const SFraction& sf, std::size_t length);

/// j-th convergent, 1 <= j <= 2N.
RationalFunction convergent(const SFraction& sf, std::size_t j);
/// j-th convergent -Q_j/P_j, 1 <= j <= N.
RationalFunction convergent(const PFraction& p, std::size_t j);

/// Cross-check of one Schur step against the determinant formulas
/// m_j = (-1)^{nu+1}/D_nu * det(...), l_j = (-1)^{nu+1} s_{nu-1} D_nu/D_nu^+
/// on the current induced sequence.
SPair s_pair_from_determinants(const MomentSequence& induced);

}  // namespace stieltjes
