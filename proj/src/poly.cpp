#include "stieltjes/poly.hpp"

#include "stieltjes/errors.hpp"

#include <algorithm>
#include <sstream>

namespace stieltjes {

Poly::Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(const Rational& c) {
  if (!c.is_zero()) c_.push_back(c);
}

Poly Poly::monomial(const Rational& c, std::size_t k) {
  if (c.is_zero()) return {};
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Degree Poly::degree() const {
  if (c_.empty()) return std::nullopt;
  return c_.size() - 1;
}

Rational Poly::coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

Rational Poly::leading() const { return c_.empty() ? Rational(0) : c_.back(); }

Rational Poly::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Rational(static_cast<long>(k));
  return Poly(std::move(d));
}

Poly Poly::drop_constant_shift() const {
  if (c_.size() <= 1) return {};
  return Poly(std::vector<Rational>(c_.begin() + 1, c_.end()));
}

Poly Poly::shifted_up(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<Rational> v(k);
  v.insert(v.end(), c_.begin(), c_.end());
  return Poly(std::move(v));
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  return *this * leading().inverse();
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(r));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= c;
  return *this;
}

Poly operator-(const Poly& a) { return a * Rational(-1); }

std::string Poly::to_string(char var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Rational& c = c_[k];
    if (c.is_zero()) continue;
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == Rational(1);
    if (k == 0 || !unit) os << mag;
    if (k >= 1) {
      if (!unit) os << "*";
      os << var;
      if (k >= 2) os << "^" << k;
    }
  }
  return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  Poly r = a;
  const std::size_t db = *b.degree();
  const Rational lead_inv = b.leading().inverse();
  std::vector<Rational> q;
  while (!r.is_zero() && *r.degree() >= db) {
    const std::size_t shift = *r.degree() - db;
    const Rational t = r.leading() * lead_inv;
    if (q.size() < shift + 1) q.resize(shift + 1);
    q[shift] = t;
    r -= Poly::monomial(t, shift) * b;
  }
  return {Poly(std::move(q)), r};
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::size_t neg_index(const Poly& p) {
  const Degree d = p.degree();
  if (!d) return 0;
  const std::size_t nu = *d;
  if (nu % 2 == 1 && p.leading().sign() < 0) return (nu + 1) / 2;
  return nu / 2;
}

}  // namespace stieltjes
