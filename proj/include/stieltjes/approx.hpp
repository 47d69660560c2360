#pragma once

// Pade approximants at infinity, the factored Pade identity, determinacy
// evidence from a finite fraction and pointwise probes of W_{2N}.

#include "stieltjes/fractions.hpp"
#include "stieltjes/matrix.hpp"

#include <string>
#include <vector>

namespace stieltjes {

enum class PadeKind { Diagonal, Subdiagonal };

struct PadeResult {
  PadeKind kind = PadeKind::Diagonal;
  std::size_t n = 0;  ///< normal index n_j
  Poly numer;
  Poly denom;
  std::size_t verified_order = 0;
};

/// Diagonal [n_j/n_j] = -Q_j/P_j (needs only the P-fraction) or
/// subdiagonal [n_j/n_j - 1] = Q+_{2j-1}/P+_{2j-1} (needs j regular Schur
/// steps). verified_order comes from an exact series comparison and is
/// checked against 2n_j, respectively 2n_j - 1.
PadeResult pade(const MomentSequence& s, std::size_t j, PadeKind kind);

struct FactoredPadeCheck {
  bool diagonal = false;
  bool subdiagonal = false;
  /// False when the subdiagonal side could not be built (irregular data).
  bool subdiagonal_checked = false;
};

/// f^{[n_j/n_j]} = T_{W_{2N}}[g^{[n_j - n_N / n_j - n_N]}] with g taken from
/// the induced sequence s^(N); likewise for the subdiagonal approximants.
FactoredPadeCheck pade_factored_check(const MomentSequence& s, std::size_t N, std::size_t j);

enum class Verdict { IndeterminateEvidence, DeterminateEvidence, Inconclusive };
std::string to_string(Verdict v);

/// Thresholds of the tail heuristics.
struct DeterminacyConfig {
  std::size_t window = 5;         ///< trailing terms examined
  Rational ratio = Rational(9, 10);  ///< |t_{k+1}/t_k| below this counts as decay
};

enum class Trend { Convergent, Divergent, Unclear };

struct DeterminacyReport {
  std::size_t N = 0;
  std::vector<Rational> partial_M;       ///< sum_{j<=i} m_j(0), i = 1..N
  std::vector<Rational> partial_L;       ///< sum_{j<=i} l_j, i = 1..N
  bool l_all_positive = false;
  /// Partial sums of (l_1 + ... + l_i)^2 d_{i+1}, i = 1..N-1; empty unless
  /// every l_j > 0.
  std::vector<Rational> inertia_series;
  Trend m_trend = Trend::Unclear;
  Trend l_trend = Trend::Unclear;
  Verdict verdict = Verdict::Inconclusive;
};

/// Classifies the trailing terms of a series: geometric decay gives
/// Convergent, k|t_k| non-decreasing with constant sign gives Divergent.
Trend series_trend(const std::vector<Rational>& terms, const DeterminacyConfig& cfg = {});

/// Evidence only: finite data cannot decide a statement about infinite sums.
DeterminacyReport determinacy(const SFraction& sf, std::size_t N, const DeterminacyConfig& cfg = {});

struct ProbeRow {
  std::size_t N = 0;
  Rational z;
  RationalMatrix2 W;  ///< W_{2N}(z), exact
};

/// W_{2N}(z) for every z in points and N in N_list, from the factor
/// product evaluated pointwise.
std::vector<ProbeRow> winf_probe(const SFraction& sf, const std::vector<Rational>& points,
                                 const std::vector<std::size_t>& N_list);

/// max |a_ij - b_ij| rendered as a double.
double max_entry_difference(const RationalMatrix2& a, const RationalMatrix2& b);

}  // namespace stieltjes
