#pragma once

// Generators and brute-force oracles shared by the test programs.

#include "stieltjes/fractions.hpp"
#include "stieltjes/hankel.hpp"

#include <random>
#include <vector>

namespace testing_support {

using stieltjes::MomentSequence;
using stieltjes::Poly;
using stieltjes::Rational;
using stieltjes::SFraction;
using stieltjes::SPair;

using Matrix = std::vector<std::vector<Rational>>;

inline Rational small_rational(std::mt19937& rng, bool nonzero = true) {
  std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
  for (;;) {
    Rational r(num(rng), den(rng));
    if (!nonzero || !r.is_zero()) return r;
  }
}

/// S-fraction with deg m_j <= max_deg, m_j(0) != 0 and l_j != 0.
inline SFraction random_fraction(std::mt19937& rng, std::size_t N, std::size_t max_deg) {
  std::uniform_int_distribution<std::size_t> deg(0, max_deg);
  SFraction sf;
  for (std::size_t j = 0; j < N; ++j) {
    std::vector<Rational> c;
    const std::size_t d = deg(rng);
    c.push_back(small_rational(rng));
    for (std::size_t k = 1; k <= d; ++k) c.push_back(small_rational(rng, k < d));
    sf.pairs.push_back({Poly(std::move(c)), small_rational(rng)});
  }
  return sf;
}

/// Regular moment prefix of length 2 n_N produced by a random fraction
/// whose n_N stays within max_len / 2.
inline std::pair<SFraction, MomentSequence> random_regular(std::mt19937& rng, std::size_t max_len = 12) {
  for (;;) {
    std::uniform_int_distribution<std::size_t> pairs(1, 4);
    SFraction sf = random_fraction(rng, pairs(rng), 2);
    const std::size_t len = 2 * sf.normal_index(sf.size());
    if (len > max_len) continue;
    MomentSequence s = stieltjes::moments_from_s_fraction(sf, len);
    return {std::move(sf), std::move(s)};
  }
}

/// Laplace expansion along the first row.
inline Rational cofactor_det(const Matrix& a) {
  const std::size_t n = a.size();
  if (n == 0) return Rational(1);
  if (n == 1) return a[0][0];
  Rational acc;
  for (std::size_t col = 0; col < n; ++col) {
    if (a[0][col].is_zero()) continue;
    Matrix minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Rational> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != col) row.push_back(a[i][j]);
      minor.push_back(std::move(row));
    }
    const Rational term = a[0][col] * cofactor_det(minor);
    acc += col % 2 == 0 ? term : -term;
  }
  return acc;
}

/// Inertia of a symmetric matrix from its characteristic polynomial: all
/// roots are real, so Descartes' rule counts them exactly.
inline stieltjes::Inertia charpoly_inertia(const Matrix& a) {
  const std::size_t n = a.size();
  // Faddeev-LeVerrier: c_n = 1, M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
  std::vector<Rational> c(n + 1);
  c[n] = Rational(1);
  Matrix M(n, std::vector<Rational>(n));
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix AM(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rational s;
        for (std::size_t l = 0; l < n; ++l) s += a[i][l] * M[l][j];
        AM[i][j] = s;
      }
    for (std::size_t i = 0; i < n; ++i) AM[i][i] += c[n - k + 1];
    M = AM;
    Rational tr;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) tr += a[i][l] * M[l][i];
    c[n - k] = -tr / Rational(static_cast<long>(k));
  }
  stieltjes::Inertia out;
  std::size_t z = 0;
  while (z <= n && c[z].is_zero()) ++z;
  out.zero = z;
  auto changes = [&](bool flip) {
    std::size_t count = 0;
    int last = 0;
    for (std::size_t k = z; k <= n; ++k) {
      int s = c[k].sign();
      if (flip && k % 2 == 1) s = -s;
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  };
  out.positive = changes(false);
  out.negative = changes(true);
  return out;
}

}  // namespace testing_support
