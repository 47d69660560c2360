#include "stieltjes/matrix.hpp"

#include "stieltjes/errors.hpp"

namespace stieltjes {

RationalFunction RationalFunction::reduced() const {
  if (denom.is_zero()) throw DomainError("zero denominator");
  if (numer.is_zero()) return {Poly(), Poly(1)};
  const Poly g = gcd(numer, denom);
  Poly n = divmod(numer, g).first;
  Poly d = divmod(denom, g).first;
  const Rational lead = d.leading();
  return {n * lead.inverse(), d * lead.inverse()};
}

Rational RationalFunction::operator()(const Rational& z) const { return numer(z) / denom(z); }

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  const RationalFunction ra = a.reduced();
  const RationalFunction rb = b.reduced();
  return ra.numer == rb.numer && ra.denom == rb.denom;
}

std::string RationalFunction::to_string() const {
  return "(" + numer.to_string() + ") / (" + denom.to_string() + ")";
}

PolyMatrix2 operator*(const PolyMatrix2& a, const PolyMatrix2& b) {
  return {a.w11 * b.w11 + a.w12 * b.w21, a.w11 * b.w12 + a.w12 * b.w22,
          a.w21 * b.w11 + a.w22 * b.w21, a.w21 * b.w12 + a.w22 * b.w22};
}

RationalMatrix2 operator*(const RationalMatrix2& a, const RationalMatrix2& b) {
  return {a.w11 * b.w11 + a.w12 * b.w21, a.w11 * b.w12 + a.w12 * b.w22,
          a.w21 * b.w11 + a.w22 * b.w21, a.w21 * b.w12 + a.w22 * b.w22};
}

RationalMatrix2 evaluate(const PolyMatrix2& w, const Rational& z) {
  return {w.w11(z), w.w12(z), w.w21(z), w.w22(z)};
}

ProjectivePair to_projective(const Tau& tau) {
  if (const auto* sym = std::get_if<TauSymbol>(&tau))
    return *sym == TauSymbol::Zero ? ProjectivePair{Poly(), Poly(1)} : ProjectivePair{Poly(1), Poly()};
  const auto& f = std::get<RationalFunction>(tau);
  return {f.numer, f.denom};
}

ProjectivePair apply(const PolyMatrix2& w, const ProjectivePair& tau) {
  return {w.w11 * tau.num + w.w12 * tau.den, w.w21 * tau.num + w.w22 * tau.den};
}

RationalFunction matrix_apply(const PolyMatrix2& w, const Tau& tau) {
  const ProjectivePair in = to_projective(tau);
  if (in.num.is_zero() && in.den.is_zero()) throw DomainError("degenerate transform");
  const ProjectivePair out = apply(w, in);
  if (out.den.is_zero()) throw DomainError("degenerate transform");
  return {out.num, out.den};
}

}  // namespace stieltjes
