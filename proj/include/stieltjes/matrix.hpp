#pragma once

#include "stieltjes/poly.hpp"

#include <ostream>
#include <string>
#include <variant>

namespace stieltjes {

/// numer/denom, stored unreduced. Equality compares canonical forms.
struct RationalFunction {
  Poly numer;
  Poly denom = Poly(1);

  /// Cancels the gcd and makes the denominator monic. Throws on a zero
  /// denominator.
  RationalFunction reduced() const;
  Rational operator()(const Rational& z) const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b);
  std::string to_string() const;
};

/// The symbolic parameter values 0 and infinity of a linear-fractional map.
enum class TauSymbol { Zero, Infinity };

/// A linear-fractional parameter: either a rational function or one of
/// the two symbols.
using Tau = std::variant<RationalFunction, TauSymbol>;

/// Real 2x2 matrix of polynomials
///   ( w11  w12 )
///   ( w21  w22 ).
struct PolyMatrix2 {
  Poly w11 = Poly(1), w12, w21, w22 = Poly(1);

  static PolyMatrix2 identity() { return {}; }
  Poly det() const { return w11 * w22 - w12 * w21; }

  friend PolyMatrix2 operator*(const PolyMatrix2& a, const PolyMatrix2& b);
  friend bool operator==(const PolyMatrix2& a, const PolyMatrix2& b) = default;
};

/// Same 2x2 shape over Q, used for pointwise evaluation.
struct RationalMatrix2 {
  Rational w11 = 1, w12 = 0, w21 = 0, w22 = 1;
  friend RationalMatrix2 operator*(const RationalMatrix2& a, const RationalMatrix2& b);
  friend bool operator==(const RationalMatrix2& a, const RationalMatrix2& b) = default;
};

RationalMatrix2 evaluate(const PolyMatrix2& w, const Rational& z);

/// Homogeneous (projective) pair tau = num/den; Zero is (0,1), Infinity
/// is (1,0).
struct ProjectivePair {
  Poly num;
  Poly den;
};

ProjectivePair to_projective(const Tau& tau);
/// (w11 num + w12 den, w21 num + w22 den) without any degeneracy check.
ProjectivePair apply(const PolyMatrix2& w, const ProjectivePair& tau);

/// T_W[tau] = (w11 tau + w12) / (w21 tau + w22). Throws
/// DomainError("degenerate transform") when the denominator vanishes
/// identically.
RationalFunction matrix_apply(const PolyMatrix2& w, const Tau& tau);

}  // namespace stieltjes
