#include "stieltjes/hankel.hpp"

#include "stieltjes/errors.hpp"

#include <utility>

namespace stieltjes {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

void require_order(const MomentSequence& s, std::size_t n, HankelShift shift) {
  if (n == 0) return;
  const std::size_t needed = 2 * n - 1 + static_cast<std::size_t>(shift);
  if (s.size() < needed)
    throw InsufficientMoments(needed, s.size(),
                              std::string(shift == HankelShift::Plain ? "S_" : "S^+_") +
                                  std::to_string(n));
}

Inertia inertia_of_stable_window(const std::vector<Inertia>& v, std::optional<std::size_t>& value,
                                 bool& stabilized) {
  if (v.empty()) {
    value.reset();
    stabilized = false;
    return {};
  }
  value = v.back().negative;
  const std::size_t window = (v.size() + 1) / 2;
  stabilized = true;
  for (std::size_t i = v.size() - window; i < v.size(); ++i)
    if (v[i].negative != *value) stabilized = false;
  return v.back();
}

}  // namespace

MomentSequence MomentSequence::scaled(const Rational& c) const {
  std::vector<Rational> v = s_;
  for (auto& x : v) x *= c;
  return MomentSequence(std::move(v));
}

MomentSequence MomentSequence::prefix(std::size_t n) const {
  if (n > s_.size()) throw InsufficientMoments(n, s_.size(), "prefix");
  return MomentSequence(std::vector<Rational>(s_.begin(), s_.begin() + static_cast<std::ptrdiff_t>(n)));
}

Matrix hankel_matrix(const MomentSequence& s, std::size_t n, HankelShift shift) {
  require_order(s, n, shift);
  const auto off = static_cast<std::size_t>(shift);
  Matrix a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = s[i + j + off];
  return a;
}

std::size_t max_hankel_order(const MomentSequence& s, HankelShift shift) {
  const std::size_t len = s.size() + 1 - static_cast<std::size_t>(shift);
  return s.size() < static_cast<std::size_t>(shift) ? 0 : len / 2;
}

Rational bareiss_det(Matrix a) {
  const std::size_t n = a.size();
  if (n == 0) return Rational(1);
  Rational prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a[p][k].is_zero()) ++p;
      if (p == n) return Rational(0);
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = Rational(0);
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

Rational hankel_det(const MomentSequence& s, std::size_t n, HankelShift shift) {
  if (n == 0) return Rational(1);
  return bareiss_det(hankel_matrix(s, n, shift));
}

std::vector<std::size_t> normal_indices(const MomentSequence& s) {
  std::vector<std::size_t> out;
  for (std::size_t n = 1; 2 * n <= s.size(); ++n)
    if (!hankel_det(s, n, HankelShift::Plain).is_zero()) out.push_back(n);
  return out;
}

Inertia symmetric_inertia(Matrix a) {
  Inertia result;
  std::size_t n = a.size();
  // Active block is the leading n x n corner; eliminated rows are removed.
  while (n > 0) {
    std::size_t piv = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!a[i][i].is_zero()) {
        piv = i;
        break;
      }
    if (piv < n) {
      // Symmetric swap of index piv to the end, then a 1x1 Schur complement.
      std::swap(a[piv], a[n - 1]);
      for (auto& row : a) std::swap(row[piv], row[n - 1]);
      const Rational d = a[n - 1][n - 1];
      (d.sign() > 0 ? result.positive : result.negative) += 1;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        if (a[i][n - 1].is_zero()) continue;
        const Rational f = a[i][n - 1] / d;
        for (std::size_t j = 0; j + 1 < n; ++j) a[i][j] -= f * a[n - 1][j];
      }
      --n;
      continue;
    }
    // Zero diagonal: look for an off-diagonal a_ij != 0 for a 2x2 pivot
    // [[0, b], [b, 0]], which carries one negative and one positive square.
    std::size_t pi = n, pj = n;
    for (std::size_t i = 0; i < n && pi == n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (!a[i][j].is_zero()) {
          pi = i;
          pj = j;
          break;
        }
    if (pi == n) {
      result.zero += n;
      break;
    }
    auto move_to = [&](std::size_t from, std::size_t to) {
      std::swap(a[from], a[to]);
      for (auto& row : a) std::swap(row[from], row[to]);
    };
    move_to(pj, n - 1);
    move_to(pi == n - 1 ? pj : pi, n - 2);
    const Rational b = a[n - 2][n - 1];
    result.negative += 1;
    result.positive += 1;
    // Inverse of [[0,b],[b,0]] is [[0,1/b],[1/b,0]].
    const Rational binv = b.inverse();
    for (std::size_t i = 0; i + 2 < n; ++i) {
      const Rational u = a[i][n - 2];
      const Rational v = a[i][n - 1];
      if (u.is_zero() && v.is_zero()) continue;
      for (std::size_t j = 0; j + 2 < n; ++j) {
        // row_i -= [u v] * P^{-1} * [a_{n-2,j}; a_{n-1,j}]
        a[i][j] -= (u * a[n - 1][j] + v * a[n - 2][j]) * binv;
      }
    }
    n -= 2;
  }
  return result;
}

Inertia inertia(const MomentSequence& s, std::size_t n, HankelShift shift) {
  return symmetric_inertia(hankel_matrix(s, n, shift));
}

HankelReport class_indices(const MomentSequence& s) {
  HankelReport r;
  r.normal_indices = normal_indices(s);
  const std::size_t nmax = max_hankel_order(s, HankelShift::Plain);
  const std::size_t nmax_plus = max_hankel_order(s, HankelShift::Shifted);
  for (std::size_t n = 1; n <= nmax; ++n) {
    r.dets.push_back(hankel_det(s, n, HankelShift::Plain));
    r.inertia.push_back(inertia(s, n, HankelShift::Plain));
  }
  for (std::size_t n = 1; n <= nmax_plus; ++n) {
    r.dets_plus.push_back(hankel_det(s, n, HankelShift::Shifted));
    r.inertia_plus.push_back(inertia(s, n, HankelShift::Shifted));
  }
  inertia_of_stable_window(r.inertia, r.kappa, r.kappa_stabilized);
  inertia_of_stable_window(r.inertia_plus, r.k_plus, r.k_plus_stabilized);
  r.regular = !r.normal_indices.empty();
  for (std::size_t n : r.normal_indices)
    if (r.dets_plus.at(n - 1).is_zero()) r.regular = false;
  return r;
}

}  // namespace stieltjes
