#pragma once

// Truncated expansions at infinity. Everything here is phrased in the
// local variable w = 1/z.

#include "stieltjes/poly.hpp"
#include "stieltjes/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace stieltjes {

/// Power series a_0 + a_1 w + ... + a_{n-1} w^{n-1} + O(w^n).
/// The precision n is the number of stored coefficients.
class Series {
public:
  Series() = default;
  explicit Series(std::vector<Rational> coeffs) : a_(std::move(coeffs)) {}

  std::size_t precision() const { return a_.size(); }
  const std::vector<Rational>& coeffs() const { return a_; }
  const Rational& operator[](std::size_t k) const { return a_.at(k); }

  Series truncated(std::size_t n) const;
  /// 1/s; requires a_0 != 0.
  Series inverse() const;

  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Series& b);
  friend Series operator*(const Rational& c, const Series& a);

private:
  std::vector<Rational> a_;
};

/// The expansion -c_0/z - c_1/z^2 - ... - c_L/z^{L+1} + O(z^{-L-2}).
/// Sign convention matches moments: the tail of a moment sequence s is
/// the LaurentTail with c_j = s_j.
class LaurentTail {
public:
  LaurentTail() = default;
  explicit LaurentTail(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {}

  /// Number of known coefficients (order + 1).
  std::size_t size() const { return c_.size(); }
  /// Highest stored index L; meaningless for an empty tail.
  std::size_t order() const { return c_.empty() ? 0 : c_.size() - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& operator[](std::size_t j) const { return c_.at(j); }

  /// Series in w: 0 - c_0 w - c_1 w^2 - ..., precision size()+1.
  Series to_series() const;
  /// Inverse of to_series; requires a zero constant term.
  static LaurentTail from_series(const Series& s);

  friend LaurentTail operator+(const LaurentTail& a, const LaurentTail& b);
  friend LaurentTail operator*(const LaurentTail& a, const LaurentTail& b);

  /// -1/f split as (polynomial part in z) + (vanishing remainder), valid
  /// when the first nonzero coefficient sits at index nu-1 and size() >= 2nu.
  using Inversion = struct TailInversion;
  TailInversion negated_reciprocal() const;

  /// Index of the first nonzero coefficient, if any.
  std::optional<std::size_t> first_nonzero() const;

  friend bool operator==(const LaurentTail& a, const LaurentTail& b) = default;

private:
  std::vector<Rational> c_;
};

struct TailInversion {
  std::size_t nu;
  Poly polynomial_part;
  LaurentTail remainder;
};

/// Coefficients c_0..c_order with numer/denom = -sum c_j z^{-j-1} + O(z^{-order-2}).
/// Throws DomainError("zero denominator") or DomainError("nonvanishing at infinity").
LaurentTail series_at_infinity(const Poly& numer, const Poly& denom, std::size_t order);

}  // namespace stieltjes
