#include "stieltjes/laurent.hpp"

#include "stieltjes/errors.hpp"

#include <algorithm>

namespace stieltjes {

Series Series::truncated(std::size_t n) const {
  std::vector<Rational> v(a_.begin(), a_.begin() + static_cast<std::ptrdiff_t>(std::min(n, a_.size())));
  return Series(std::move(v));
}

Series Series::inverse() const {
  if (a_.empty() || a_[0].is_zero())
    throw DomainError("series inverse: vanishing constant term");
  const std::size_t n = a_.size();
  const Rational inv0 = a_[0].inverse();
  std::vector<Rational> b(n);
  b[0] = inv0;
  for (std::size_t k = 1; k < n; ++k) {
    Rational acc;
    for (std::size_t i = 1; i <= k; ++i) acc += a_[i] * b[k - i];
    b[k] = -acc * inv0;
  }
  return Series(std::move(b));
}

Series operator+(const Series& a, const Series& b) {
  const std::size_t n = std::min(a.precision(), b.precision());
  std::vector<Rational> v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = a.a_[k] + b.a_[k];
  return Series(std::move(v));
}

Series operator-(const Series& a, const Series& b) { return a + Rational(-1) * b; }

Series operator*(const Series& a, const Series& b) {
  const std::size_t n = std::min(a.precision(), b.precision());
  std::vector<Rational> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.a_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) v[i + j] += a.a_[i] * b.a_[j];
  }
  return Series(std::move(v));
}

Series operator*(const Rational& c, const Series& a) {
  std::vector<Rational> v = a.a_;
  for (auto& x : v) x *= c;
  return Series(std::move(v));
}

Series LaurentTail::to_series() const {
  std::vector<Rational> v(c_.size() + 1);
  for (std::size_t j = 0; j < c_.size(); ++j) v[j + 1] = -c_[j];
  return Series(std::move(v));
}

LaurentTail LaurentTail::from_series(const Series& s) {
  if (s.precision() == 0) return {};
  if (!s[0].is_zero()) throw DomainError("series does not vanish at infinity");
  std::vector<Rational> c(s.precision() - 1);
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = -s[j + 1];
  return LaurentTail(std::move(c));
}

LaurentTail operator+(const LaurentTail& a, const LaurentTail& b) {
  const std::size_t n = std::min(a.size(), b.size());
  std::vector<Rational> c(n);
  for (std::size_t j = 0; j < n; ++j) c[j] = a.c_[j] + b.c_[j];
  return LaurentTail(std::move(c));
}

LaurentTail operator*(const LaurentTail& a, const LaurentTail& b) {
  // Each factor is O(w); the product is known through w^{min+1}.
  const std::size_t n = std::min(a.size(), b.size()) + 1;
  std::vector<Rational> c(n);
  for (std::size_t m = 1; m < n; ++m)
    for (std::size_t j = 0; j + 1 <= m; ++j) {
      const std::size_t k = m - 1 - j;
      if (j < a.size() && k < b.size()) c[m] -= a.c_[j] * b.c_[k];
    }
  return LaurentTail(std::move(c));
}

std::optional<std::size_t> LaurentTail::first_nonzero() const {
  for (std::size_t j = 0; j < c_.size(); ++j)
    if (!c_[j].is_zero()) return j;
  return std::nullopt;
}

LaurentTail::Inversion LaurentTail::negated_reciprocal() const {
  const auto first = first_nonzero();
  if (!first)
    throw InsufficientMoments(2 * (c_.size() + 1), c_.size(),
                              "inverting a tail with no nonzero coefficient");
  const std::size_t nu = *first + 1;
  if (c_.size() < 2 * nu)
    throw InsufficientMoments(2 * nu, c_.size(), "inverting a tail of valuation " + std::to_string(nu));
  // f = -w^nu H(w), H_k = c_{nu-1+k}; -1/f = z^nu G(w) with G = 1/H.
  std::vector<Rational> h(c_.begin() + static_cast<std::ptrdiff_t>(nu - 1), c_.end());
  const Series g = Series(std::move(h)).inverse();
  std::vector<Rational> poly(nu + 1);
  for (std::size_t k = 0; k <= nu; ++k) poly[nu - k] = g[k];
  // Remainder sum_{i>=1} G_{nu+i} w^i, i.e. tail coefficient -G_{nu+1+j}.
  std::vector<Rational> rem;
  for (std::size_t k = nu + 1; k < g.precision(); ++k) rem.push_back(-g[k]);
  return {nu, Poly(std::move(poly)), LaurentTail(std::move(rem))};
}

LaurentTail series_at_infinity(const Poly& numer, const Poly& denom, std::size_t order) {
  if (denom.is_zero()) throw DomainError("zero denominator");
  const std::size_t d = *denom.degree();
  if (numer.degree() && *numer.degree() >= d) throw DomainError("nonvanishing at infinity");
  // Reverse both polynomials against z^d and divide as power series in w.
  const std::size_t prec = order + 2;
  std::vector<Rational> nr(prec), dr(prec);
  for (std::size_t k = 0; k < prec && k <= d; ++k) {
    nr[k] = numer.coeff(d - k);
    dr[k] = denom.coeff(d - k);
  }
  const Series q = Series(std::move(nr)) * Series(std::move(dr)).inverse();
  return LaurentTail::from_series(q);
}

}  // namespace stieltjes
