#include "stieltjes/fractions.hpp"

#include "stieltjes/errors.hpp"

#include <utility>

namespace stieltjes {

namespace {

struct SchurStep {
  std::size_t nu;
  SPair pair;
  LaurentTail next;
};

// One S-fraction step: -1/f = z m(z) - 1/(l + f_1).
SchurStep schur_step(const LaurentTail& tail, std::size_t step) {
  const LaurentTail::Inversion inv = tail.negated_reciprocal();
  const Rational p0 = inv.polynomial_part.coeff(0);
  if (p0.is_zero()) throw NotRegular(step);
  const Rational l = -p0.inverse();
  Poly m = inv.polynomial_part.drop_constant_shift();
  // -1/g = p0 + R, g = l + f_1.
  std::vector<Rational> c = inv.remainder.to_series().coeffs();
  c[0] = p0;
  std::vector<Rational> f1 = (Rational(-1) * Series(std::move(c)).inverse()).coeffs();
  f1[0] -= l;
  return {inv.nu, {std::move(m), l}, LaurentTail::from_series(Series(std::move(f1)))};
}

std::size_t tail_requirement(const LaurentTail& tail) {
  const auto first = tail.first_nonzero();
  return first ? 2 * (*first + 1) : 2 * (tail.size() + 1);
}

}  // namespace

std::size_t SFraction::normal_index(std::size_t j) const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < j; ++i) n += *pairs.at(i).m.degree() + 1;
  return n;
}

SFraction SFraction::tail_after(std::size_t j0) const {
  if (j0 > pairs.size()) throw DomainError("tail_after: step beyond fraction length");
  return SFraction{std::vector<SPair>(pairs.begin() + static_cast<std::ptrdiff_t>(j0), pairs.end())};
}

std::size_t PFraction::normal_index(std::size_t j) const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < j; ++i) n += *a.at(i).degree();
  return n;
}

SchurResult schur_s_fraction(const MomentSequence& s, std::size_t N) {
  LaurentTail tail(s.values());
  SFraction sf;
  std::size_t consumed = 0;
  for (std::size_t j = 1; j <= N; ++j) {
    const std::size_t need = tail_requirement(tail);
    if (tail.size() < need)
      throw InsufficientMoments(consumed + need, s.size(), "Schur step " + std::to_string(j));
    SchurStep st = schur_step(tail, j);
    consumed += 2 * st.nu;
    sf.pairs.push_back(std::move(st.pair));
    tail = std::move(st.next);
  }
  return {std::move(sf), MomentSequence(tail.coeffs())};
}

SFraction schur_s_fraction_all(const MomentSequence& s) {
  LaurentTail tail(s.values());
  SFraction sf;
  for (std::size_t j = 1;; ++j) {
    if (tail.size() < tail_requirement(tail)) break;
    const LaurentTail::Inversion inv = tail.negated_reciprocal();
    if (inv.polynomial_part.coeff(0).is_zero()) break;
    SchurStep st = schur_step(tail, j);
    sf.pairs.push_back(std::move(st.pair));
    tail = std::move(st.next);
  }
  return sf;
}

PFraction p_fraction(const MomentSequence& s) {
  PFraction p;
  LaurentTail tail(s.values());
  while (tail.size() > 0) {
    if (tail.size() < tail_requirement(tail)) {
      p.truncated = true;
      break;
    }
    const LaurentTail::Inversion inv = tail.negated_reciprocal();
    const Rational b = tail[inv.nu - 1];
    p.a.push_back(inv.polynomial_part * b);
    p.b.push_back(b);
    std::vector<Rational> next = inv.remainder.coeffs();
    for (auto& c : next) c *= b;
    tail = LaurentTail(std::move(next));
  }
  return p;
}

std::vector<Rational> lanczos_at_zero(const PFraction& p) {
  std::vector<Rational> v{Rational(1)};
  Rational prev(0);
  for (std::size_t j = 0; j < p.size(); ++j) {
    Rational next = p.a[j].coeff(0) * v.back() - p.b[j] * prev;
    prev = v.back();
    v.push_back(std::move(next));
  }
  return v;
}

SFraction s_from_p(const PFraction& p, const std::vector<Rational>& p_at_zero) {
  if (p_at_zero.size() < p.size() + 1)
    throw DomainError("s_from_p: need P_0(0) .. P_N(0)");
  SFraction sf;
  Rational btilde(1);
  for (std::size_t i = 1; i <= p.size(); ++i) {
    btilde *= p.b[i - 1];  // btilde_{i-1}
    const Rational& prev = p_at_zero[i - 1];
    const Rational& cur = p_at_zero[i];
    if (cur.is_zero() || prev.is_zero()) throw NotRegular(i);
    const Rational d = prev * prev / btilde;
    const Rational l = -btilde / (prev * cur);
    const Poly& a = p.a[i - 1];
    Poly m = (a - Poly(a.coeff(0))).drop_constant_shift() * d;
    sf.pairs.push_back({std::move(m), l});
  }
  return sf;
}

SFraction s_from_p(const PFraction& p) { return s_from_p(p, lanczos_at_zero(p)); }

PFraction p_from_s(const SFraction& sf) {
  PFraction p;
  const std::size_t N = sf.size();
  std::vector<Rational> d(N);
  for (std::size_t j = 0; j < N; ++j) {
    d[j] = sf.pairs[j].m.leading();
    if (d[j].is_zero()) throw DomainError("degenerate leading coefficient at pair " + std::to_string(j + 1));
    if (sf.pairs[j].l.is_zero()) throw DomainError("zero l at pair " + std::to_string(j + 1));
  }
  const Poly z = Poly::z();
  for (std::size_t j = 0; j < N; ++j) {
    const SPair& next = sf.pairs[j];  // pair j+1 in one-based numbering
    if (j == 0) {
      p.b.push_back(d[0].inverse());
      p.a.push_back((z * next.m - Poly(next.l.inverse())) * d[0].inverse());
    } else {
      const Rational& lj = sf.pairs[j - 1].l;
      p.b.push_back((lj * lj * d[j - 1] * d[j]).inverse());
      p.a.push_back((z * next.m - Poly(lj.inverse() + next.l.inverse())) * d[j].inverse());
    }
  }
  return p;
}

RationalFunction convergent(const SFraction& sf, std::size_t j) {
  if (j < 1 || j > 2 * sf.size()) throw DomainError("convergent index out of range");
  // u: Q^+ (u_{-1}=1, u_0=0), v: P^+ (v_{-1}=0, v_0=1)
  Poly u_odd(1), u_even, v_odd, v_even(1);
  const Poly z = Poly::z();
  for (std::size_t i = 1; 2 * i - 1 <= j; ++i) {
    const SPair& pr = sf.pairs[i - 1];
    u_odd = u_odd - z * pr.m * u_even;
    v_odd = v_odd - z * pr.m * v_even;
    if (2 * i - 1 == j) return {u_odd, v_odd};
    u_even = u_even + u_odd * pr.l;
    v_even = v_even + v_odd * pr.l;
    if (2 * i == j) return {u_even, v_even};
  }
  throw InternalError("convergent: unreachable");
}

RationalFunction convergent(const PFraction& p, std::size_t j) {
  if (j < 1 || j > p.size()) throw DomainError("convergent index out of range");
  Poly P_prev, P(1), Q_prev(-1), Q;
  for (std::size_t i = 0; i < j; ++i) {
    Poly Pn = p.a[i] * P - P_prev * p.b[i];
    Poly Qn = p.a[i] * Q - Q_prev * p.b[i];
    P_prev = std::exchange(P, std::move(Pn));
    Q_prev = std::exchange(Q, std::move(Qn));
  }
  return {-Q, P};
}

InducedSequence induced_sequence(const SFraction& sf, std::size_t from_step, std::size_t length) {
  if (from_step > sf.size()) throw DomainError("induced_sequence: step beyond fraction length");
  const SFraction rest = sf.tail_after(from_step);
  const std::size_t determined = 2 * rest.normal_index(rest.size());
  return {moments_from_s_fraction(rest, length), length > determined};
}

MomentSequence moments_from_s_fraction(const SFraction& sf, std::size_t length) {
  if (length == 0) return {};
  if (sf.size() == 0) return MomentSequence(std::vector<Rational>(length));
  const RationalFunction f = convergent(sf, 2 * sf.size());
  return MomentSequence(series_at_infinity(f.numer, f.denom, length - 1).coeffs());
}

SPair s_pair_from_determinants(const MomentSequence& s) {
  const LaurentTail tail(s.values());
  const auto first = tail.first_nonzero();
  if (!first) throw InsufficientMoments(2 * (s.size() + 1), s.size(), "determinant formulas");
  const std::size_t nu = *first + 1;
  if (s.size() < 2 * nu) throw InsufficientMoments(2 * nu, s.size(), "determinant formulas");
  const Rational D = hankel_det(s, nu, HankelShift::Plain);
  const Rational Dplus = hankel_det(s, nu, HankelShift::Shifted);
  if (Dplus.is_zero()) throw NotRegular(1);
  const Rational sign = nu % 2 == 1 ? Rational(1) : Rational(-1);  // (-1)^{nu+1}
  // Rows i < nu-1 hold s_{i+j+1}; the last row is 1, z, ..., z^{nu-1}.
  // Expand along the last row.
  std::vector<Rational> m(nu);
  for (std::size_t col = 0; col < nu; ++col) {
    std::vector<std::vector<Rational>> minor;
    for (std::size_t i = 0; i + 1 < nu; ++i) {
      std::vector<Rational> row;
      for (std::size_t j = 0; j < nu; ++j)
        if (j != col) row.push_back(s[i + j + 1]);
      minor.push_back(std::move(row));
    }
    const Rational cof = ((nu - 1 + col) % 2 == 0 ? Rational(1) : Rational(-1)) * bareiss_det(minor);
    m[col] = sign * cof / D;
  }
  const Rational l = sign * s[nu - 1] * D / Dplus;
  return {Poly(std::move(m)), l};
}

}  // namespace stieltjes
