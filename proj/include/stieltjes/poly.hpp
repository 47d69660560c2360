#pragma once

#include "stieltjes/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace stieltjes {

/// Degree of a polynomial; std::nullopt stands for the zero polynomial.
using Degree = std::optional<std::size_t>;

/// Univariate polynomial over Q, coefficients lowest degree first.
/// Canonical form: no trailing zero coefficients, so the zero polynomial
/// has an empty coefficient list.
class Poly {
public:
  Poly() = default;
  Poly(std::initializer_list<Rational> coeffs);
  explicit Poly(std::vector<Rational> coeffs);
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
  Poly(int c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static Poly z() { return Poly{0, 1}; }
  /// c * z^k
  static Poly monomial(const Rational& c, std::size_t k);

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  Degree degree() const;
  /// Coefficient of z^k (zero beyond the degree).
  Rational coeff(std::size_t k) const;
  /// Leading coefficient; zero for the zero polynomial.
  Rational leading() const;
  bool is_monic() const { return !is_zero() && c_.back() == Rational(1); }

  Rational operator()(const Rational& x) const;
  Poly derivative() const;
  /// (p(z) - p(0)) / z
  Poly drop_constant_shift() const;
  /// z^k * p(z)
  Poly shifted_up(std::size_t k) const;
  Poly monic() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator-(const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  std::string to_string(char var = 'z') const;
  friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

private:
  void trim();
  std::vector<Rational> c_;
};

/// Euclidean division: a = q*b + r with deg r < deg b. Throws on b == 0.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Monic gcd (zero when both inputs are zero).
Poly gcd(Poly a, Poly b);

/// Number of negative squares kappa_-(p) of a real polynomial viewed as a
/// generalized Nevanlinna function: floor((deg+1)/2) for odd degree with
/// negative leading coefficient, floor(deg/2) otherwise. Zero maps to 0.
std::size_t neg_index(const Poly& p);

}  // namespace stieltjes
