#include "stieltjes/polysys.hpp"

#include "stieltjes/errors.hpp"

namespace stieltjes {

namespace {

SFraction prefix(const SFraction& sf, std::size_t N) {
  if (N > sf.size()) throw DomainError("fraction has only " + std::to_string(sf.size()) + " pairs, need " + std::to_string(N));
  return SFraction{std::vector<SPair>(sf.pairs.begin(), sf.pairs.begin() + static_cast<std::ptrdiff_t>(N))};
}

void record(IdentityReport& r, std::string name, long index, const Rational& lhs, const Rational& rhs) {
  r.checks.push_back({std::move(name), index, lhs == rhs, lhs.to_string(), rhs.to_string()});
}

void record(IdentityReport& r, std::string name, long index, const Poly& lhs, const Poly& rhs) {
  r.checks.push_back({std::move(name), index, lhs == rhs, lhs.to_string(), rhs.to_string()});
}

}  // namespace

LanczosPolys lanczos(const PFraction& p, std::size_t N) {
  if (N > p.size())
    throw DomainError("P-fraction has only " + std::to_string(p.size()) + " atoms, need " + std::to_string(N));
  LanczosPolys out{FromMinusOne<Poly>({Poly(), Poly(1)}), FromMinusOne<Poly>({Poly(-1), Poly()})};
  for (long j = 0; j < static_cast<long>(N); ++j) {
    const Poly& a = p.a[static_cast<std::size_t>(j)];
    const Rational& b = p.b[static_cast<std::size_t>(j)];
    out.P.push_back(a * out.P[j] - out.P[j - 1] * b);
    out.Q.push_back(a * out.Q[j] - out.Q[j - 1] * b);
  }
  return out;
}

LanczosPolys lanczos(const MomentSequence& s, std::size_t N) { return lanczos(p_fraction(s), N); }

StieltjesPolys stieltjes_polys(const SFraction& sf, std::size_t N) {
  if (N > sf.size())
    throw DomainError("fraction has only " + std::to_string(sf.size()) + " pairs, need " + std::to_string(N));
  StieltjesPolys out{FromMinusOne<Poly>({Poly(), Poly(1)}), FromMinusOne<Poly>({Poly(1), Poly()})};
  const Poly z = Poly::z();
  for (long j = 1; j <= static_cast<long>(N); ++j) {
    const SPair& pr = sf.pairs[static_cast<std::size_t>(j - 1)];
    const Poly zm = z * pr.m;
    out.P.push_back(out.P[2 * j - 3] - zm * out.P[2 * j - 2]);
    out.Q.push_back(out.Q[2 * j - 3] - zm * out.Q[2 * j - 2]);
    out.P.push_back(out.P[2 * j - 2] + out.P[2 * j - 1] * pr.l);
    out.Q.push_back(out.Q[2 * j - 2] + out.Q[2 * j - 1] * pr.l);
  }
  return out;
}

std::vector<Rational> btilde(const PFraction& p) {
  std::vector<Rational> out;
  Rational acc(1);
  for (const auto& b : p.b) {
    acc *= b;
    out.push_back(acc);
  }
  return out;
}

StieltjesPolys stieltjes_by_determinants(const PFraction& p, std::size_t N) {
  const LanczosPolys L = lanczos(p, N);
  const std::vector<Rational> bt = btilde(p);
  StieltjesPolys out{FromMinusOne<Poly>({Poly(), Poly(1)}), FromMinusOne<Poly>({Poly(1), Poly()})};
  for (long i = 1; i <= static_cast<long>(N); ++i) {
    const Rational prev0 = L.P[i - 1](Rational(0));
    const Rational cur0 = L.P[i](Rational(0));
    if (cur0.is_zero()) throw NotRegular(static_cast<std::size_t>(i));
    const Rational inv_bt = bt[static_cast<std::size_t>(i - 1)].inverse();
    out.P.push_back((L.P[i] * prev0 - L.P[i - 1] * cur0) * (-inv_bt));
    out.Q.push_back((L.Q[i] * prev0 - L.Q[i - 1] * cur0) * inv_bt);
    out.P.push_back(L.P[i] * cur0.inverse());
    out.Q.push_back(L.Q[i] * (-cur0.inverse()));
  }
  return out;
}

PolySystem build_poly_system(const SFraction& sf, std::size_t N) {
  const SFraction head = prefix(sf, N);
  const PFraction p = p_from_s(head);
  LanczosPolys L = lanczos(p, N);
  StieltjesPolys S = stieltjes_polys(head, N);
  return {std::move(L.P), std::move(L.Q), std::move(S.P), std::move(S.Q), btilde(p)};
}

bool IdentityReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

std::vector<IdentityCheck> IdentityReport::failures() const {
  std::vector<IdentityCheck> out;
  for (const auto& c : checks)
    if (!c.passed) out.push_back(c);
  return out;
}

IdentityReport verify_identities(const PolySystem& ps, const SFraction& sf) {
  IdentityReport r;
  const long N = ps.lanczos_P.last();
  if (ps.stieltjes_P.last() < 2 * N || static_cast<long>(sf.size()) < N)
    throw DomainError("verify_identities: inconsistent system sizes");
  const Rational zero(0);
  const auto& P = ps.lanczos_P;
  const auto& Q = ps.lanczos_Q;
  const auto& Pp = ps.stieltjes_P;
  const auto& Qp = ps.stieltjes_Q;

  Rational sum_l, sum_m0;
  for (long i = 1; i <= N; ++i) {
    const auto iu = static_cast<std::size_t>(i);
    const SPair& pr = sf.pairs[iu - 1];
    record(r, "liouville_ostrogradsky", i, Q[i] * P[i - 1] - Q[i - 1] * P[i], Poly(ps.btilde[iu - 1]));
    record(r, "stieltjes_det", i, Pp[2 * i] * Qp[2 * i - 1] - Qp[2 * i] * Pp[2 * i - 1], Poly(1));
    record(r, "P+_odd_at_0", 2 * i - 1, Pp[2 * i - 1](zero), zero);
    record(r, "P+_even_at_0", 2 * i - 2, Pp[2 * i - 2](zero), Rational(1));
    record(r, "Q+_odd_at_0", 2 * i - 1, Qp[2 * i - 1](zero), Rational(1));

    const Rational Pi0 = P[i](zero);
    const Rational Pprev0 = P[i - 1](zero);
    if (Pi0.is_zero()) {
      r.checks.push_back({"P_at_0_nonzero", i, false, "0", "nonzero"});
      continue;
    }
    record(r, "l_from_lanczos", i, pr.l, -Q[i](zero) / Pi0 + Q[i - 1](zero) / Pprev0);
    // The leading coefficient of m_i against P_{i-1}(0)^2 / btilde_{i-1}.
    // The absolute-value form |P_{i-1}(0)^2| / btilde_{i-1} is the same
    // number since P_{i-1}(0) is real.
    record(r, "d_from_lanczos", i, pr.m.leading(), Pprev0 * Pprev0 / ps.btilde[iu - 1]);
    sum_l += pr.l;
    sum_m0 += pr.m.coeff(0);
  }
  if (N >= 1) {
    const Rational PN0 = P[N](zero);
    if (!PN0.is_zero()) record(r, "sum_l", N, sum_l, -Q[N](zero) / PN0);
    record(r, "sum_m_at_0", N, sum_m0, -Pp[2 * N - 1].derivative()(zero));
  }
  return r;
}

}  // namespace stieltjes
