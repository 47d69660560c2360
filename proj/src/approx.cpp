#include "stieltjes/approx.hpp"

#include "stieltjes/errors.hpp"
#include "stieltjes/resolvent.hpp"

#include <algorithm>

namespace stieltjes {

PadeResult pade(const MomentSequence& s, std::size_t j, PadeKind kind) {
  if (j == 0) throw DomainError("pade: j must be at least 1");
  PadeResult r;
  r.kind = kind;
  RationalFunction f;
  std::size_t required = 0;
  if (kind == PadeKind::Diagonal) {
    const PFraction p = p_fraction(s);
    if (j > p.size())
      throw DomainError("pade: j = " + std::to_string(j) + " outside the normal-index range (" +
                        std::to_string(p.size()) + " available)");
    r.n = p.normal_index(j);
    f = convergent(p, j);
    required = 2 * r.n;
  } else {
    const SFraction sf = schur_s_fraction(s, j).fraction;
    r.n = sf.normal_index(j);
    f = convergent(sf, 2 * j - 1);
    if (!f.denom(Rational(0)).is_zero())
      throw InternalError("subdiagonal denominator does not vanish at 0");
    required = 2 * r.n - 1;
  }
  if (*f.denom.degree() != r.n) throw InternalError("pade: denominator degree differs from n_j");
  r.numer = std::move(f.numer);
  r.denom = std::move(f.denom);
  r.verified_order = matched_order({r.numer, r.denom}, s);
  if (r.verified_order < std::min(required, s.size()))
    throw InternalError("pade: order condition fails (" + std::to_string(r.verified_order) + " < " +
                        std::to_string(required) + ")");
  return r;
}

FactoredPadeCheck pade_factored_check(const MomentSequence& s, std::size_t N, std::size_t j) {
  if (N >= j) throw DomainError("pade_factored_check: need N < j");
  const SchurResult head = schur_s_fraction(s, N);
  const ResolventMatrix W = resolvent(head.fraction, N, Parity::Even);
  FactoredPadeCheck out;

  const PadeResult f = pade(s, j, PadeKind::Diagonal);
  const PadeResult g = pade(head.induced, j - N, PadeKind::Diagonal);
  out.diagonal = RationalFunction{f.numer, f.denom} == matrix_apply(W.W, RationalFunction{g.numer, g.denom});

  try {
    const PadeResult fs = pade(s, j, PadeKind::Subdiagonal);
    const PadeResult gs = pade(head.induced, j - N, PadeKind::Subdiagonal);
    out.subdiagonal_checked = true;
    out.subdiagonal =
        RationalFunction{fs.numer, fs.denom} == matrix_apply(W.W, RationalFunction{gs.numer, gs.denom});
  } catch (const NotRegular&) {
    out.subdiagonal_checked = false;
  }
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::IndeterminateEvidence: return "indeterminate-evidence";
    case Verdict::DeterminateEvidence: return "determinate-evidence";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

Trend series_trend(const std::vector<Rational>& terms, const DeterminacyConfig& cfg) {
  if (cfg.window < 2 || terms.size() < cfg.window) return Trend::Unclear;
  const std::size_t start = terms.size() - cfg.window;

  bool decaying = true;
  for (std::size_t k = start; k + 1 < terms.size(); ++k) {
    if (terms[k].is_zero()) {
      decaying = decaying && terms[k + 1].is_zero();
      continue;
    }
    if (!(terms[k + 1].abs() < cfg.ratio * terms[k].abs())) decaying = false;
  }

  // Terms indexed from 1, so t_k sits at position k-1.
  bool growing = true;
  const int sign = terms[start].sign();
  for (std::size_t k = start; k < terms.size(); ++k) {
    if (sign == 0 || terms[k].sign() != sign) growing = false;
    if (k + 1 < terms.size()) {
      const Rational a = Rational(static_cast<long>(k + 1)) * terms[k].abs();
      const Rational b = Rational(static_cast<long>(k + 2)) * terms[k + 1].abs();
      if (b < a) growing = false;
    }
  }
  if (growing) return Trend::Divergent;
  if (decaying) return Trend::Convergent;
  return Trend::Unclear;
}

DeterminacyReport determinacy(const SFraction& sf, std::size_t N, const DeterminacyConfig& cfg) {
  if (N > sf.size())
    throw DomainError("fraction has only " + std::to_string(sf.size()) + " pairs, need " + std::to_string(N));
  DeterminacyReport r;
  r.N = N;
  std::vector<Rational> m_terms, l_terms;
  Rational sm, sl;
  r.l_all_positive = N > 0;
  for (std::size_t j = 0; j < N; ++j) {
    const SPair& pr = sf.pairs[j];
    m_terms.push_back(pr.m.coeff(0));
    l_terms.push_back(pr.l);
    sm += pr.m.coeff(0);
    sl += pr.l;
    r.partial_M.push_back(sm);
    r.partial_L.push_back(sl);
    if (pr.l.sign() <= 0) r.l_all_positive = false;
  }
  if (r.l_all_positive) {
    Rational acc;
    for (std::size_t i = 1; i < N; ++i) {
      const Rational& Li = r.partial_L[i - 1];
      acc += Li * Li * sf.pairs[i].m.leading();
      r.inertia_series.push_back(acc);
    }
  }
  if (N == 0) return r;
  r.m_trend = series_trend(m_terms, cfg);
  r.l_trend = series_trend(l_terms, cfg);
  if (r.m_trend == Trend::Divergent || r.l_trend == Trend::Divergent)
    r.verdict = Verdict::DeterminateEvidence;
  else if (r.m_trend == Trend::Convergent && r.l_trend == Trend::Convergent)
    r.verdict = Verdict::IndeterminateEvidence;
  return r;
}

std::vector<ProbeRow> winf_probe(const SFraction& sf, const std::vector<Rational>& points,
                                 const std::vector<std::size_t>& N_list) {
  std::vector<ProbeRow> rows;
  for (std::size_t N : N_list) {
    if (N > sf.size())
      throw DomainError("fraction has only " + std::to_string(sf.size()) + " pairs, need " + std::to_string(N));
    for (const Rational& z : points) {
      RationalMatrix2 W;
      for (std::size_t j = 0; j < N; ++j) {
        const SPair& pr = sf.pairs[j];
        W = W * RationalMatrix2{1, 0, -(z * pr.m(z)), 1};
        W = W * RationalMatrix2{1, pr.l, 0, 1};
      }
      rows.push_back({N, z, W});
    }
  }
  return rows;
}

double max_entry_difference(const RationalMatrix2& a, const RationalMatrix2& b) {
  return std::max({(a.w11 - b.w11).abs().to_double(), (a.w12 - b.w12).abs().to_double(),
                   (a.w21 - b.w21).abs().to_double(), (a.w22 - b.w22).abs().to_double()});
}

}  // namespace stieltjes
