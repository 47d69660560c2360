#pragma once

// Hankel bookkeeping for a finite moment prefix: determinants, normal
// indices, exact inertia and the class indices (kappa, k).

#include "stieltjes/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

namespace stieltjes {

/// s_0 ... s_L, exact.
class MomentSequence {
public:
  MomentSequence() = default;
  MomentSequence(std::initializer_list<Rational> s) : s_(s) {}
  explicit MomentSequence(std::vector<Rational> s) : s_(std::move(s)) {}

  std::size_t size() const { return s_.size(); }
  bool empty() const { return s_.empty(); }
  const Rational& operator[](std::size_t j) const { return s_.at(j); }
  const std::vector<Rational>& values() const { return s_; }

  MomentSequence scaled(const Rational& c) const;
  MomentSequence prefix(std::size_t n) const;

  friend bool operator==(const MomentSequence&, const MomentSequence&) = default;

private:
  std::vector<Rational> s_;
};

enum class HankelShift { Plain = 0, Shifted = 1 };

struct Inertia {
  std::size_t negative = 0;
  std::size_t zero = 0;
  std::size_t positive = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Square Hankel matrix (s_{i+j+shift})_{i,j<n}.
std::vector<std::vector<Rational>> hankel_matrix(const MomentSequence& s, std::size_t n,
                                                 HankelShift shift);

/// Largest n for which the Hankel matrix of the given shift is available
/// (entries up to s_{2n-2+shift}).
std::size_t max_hankel_order(const MomentSequence& s, HankelShift shift);

/// D_n or D_n^+ by fraction-free (Bareiss) elimination; D_0 = 1.
Rational hankel_det(const MomentSequence& s, std::size_t n, HankelShift shift);

/// Exact determinant of a square rational matrix by Bareiss elimination.
Rational bareiss_det(std::vector<std::vector<Rational>> a);

/// All n with 2n-1 <= L and D_n != 0, increasing.
std::vector<std::size_t> normal_indices(const MomentSequence& s);

/// Inertia of a real symmetric matrix by congruence (1x1 and 2x2 pivots).
Inertia symmetric_inertia(std::vector<std::vector<Rational>> a);

Inertia inertia(const MomentSequence& s, std::size_t n, HankelShift shift);

struct HankelReport {
  std::vector<std::size_t> normal_indices;
  std::vector<Rational> dets;        ///< D_1 .. D_nmax
  std::vector<Rational> dets_plus;   ///< D_1^+ .. D_nmax^+
  std::vector<Inertia> inertia;      ///< of S_1 .. S_nmax
  std::vector<Inertia> inertia_plus; ///< of S_1^+ .. S_nmax^+
  std::optional<std::size_t> kappa;  ///< nu_-(S_n) at the largest feasible n
  std::optional<std::size_t> k_plus; ///< nu_-(S_n^+) at the largest feasible n
  bool kappa_stabilized = false;
  bool k_plus_stabilized = false;
  bool regular = false;
};

/// Full report. kappa (k) is the negative index at the largest feasible n
/// and is flagged stabilized when it is constant over the last ceil(half)
/// of the feasible orders. regular means D_n^+ != 0 at every detected
/// normal index (and at least one normal index exists).
HankelReport class_indices(const MomentSequence& s);

}  // namespace stieltjes
