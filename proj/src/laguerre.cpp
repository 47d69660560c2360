#include "stieltjes/laguerre.hpp"

#include "stieltjes/errors.hpp"

namespace stieltjes {

namespace {

// g(m) = (alpha+1)...(alpha+m) = Gamma(alpha+m+1)/Gamma(alpha+1).
std::vector<Rational> rising(const Rational& alpha, std::size_t n) {
  std::vector<Rational> g{Rational(1)};
  for (std::size_t j = 1; j <= n; ++j) g.push_back(g.back() * (alpha + Rational(static_cast<long>(j))));
  return g;
}

Rational binomial(std::size_t n, std::size_t k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Rational(r);
}

Rational factorial(std::size_t n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return Rational(r);
}

}  // namespace

LaguerreConfig laguerre_config(const Rational& alpha, std::size_t count) {
  if (alpha.sign() < 0 && alpha.denominator() == 1) throw DomainError("Gamma pole");
  LaguerreConfig cfg{alpha, count, 1};
  const Rational x = alpha + Rational(1);
  if (x.sign() < 0) {
    // x in (-k-1, -k): Gamma has sign (-1)^{k+1}.
    mpz_class k;
    const mpq_class negx = -x.value();
    mpz_fdiv_q(k.get_mpz_t(), negx.get_num_mpz_t(), negx.get_den_mpz_t());
    cfg.gamma_sign = mpz_even_p(k.get_mpz_t()) ? -1 : 1;
  }
  return cfg;
}

MomentSequence laguerre_moments(const LaguerreConfig& cfg) {
  std::vector<Rational> s = rising(cfg.alpha, cfg.count == 0 ? 0 : cfg.count - 1);
  s.resize(cfg.count);
  for (auto& x : s) x *= Rational(cfg.gamma_sign);
  return MomentSequence(std::move(s));
}

LaguerreClosedForms laguerre_closed_forms(const LaguerreConfig& cfg) {
  const std::size_t N = cfg.count / 2;
  const Rational sign(cfg.gamma_sign);
  const std::vector<Rational> g = rising(cfg.alpha, N);
  LaguerreClosedForms out;
  for (std::size_t n = 1; n <= N; ++n) {
    const Rational f = factorial(n - 1);
    out.s_fraction.pairs.push_back({Poly(sign * g[n - 1] / f), sign * f / g[n]});
    const Rational nn(static_cast<long>(n));
    out.p_fraction.b.push_back(n == 1 ? sign : (nn - 1) * (nn - 1 + cfg.alpha));
    out.p_fraction.a.push_back(Poly{Rational(1) - Rational(2) * nn - cfg.alpha, Rational(1)});
  }
  return out;
}

std::pair<Poly, Poly> laguerre_polys(const LaguerreConfig& cfg, std::size_t n) {
  const std::vector<Rational> g = rising(cfg.alpha, n);
  std::vector<Rational> p(n + 1), q(n);
  for (std::size_t k = 0; k <= n; ++k) {
    const Rational sgn = (n + k) % 2 == 0 ? Rational(1) : Rational(-1);
    p[k] = sgn * binomial(n, k) * g[n] / g[k];
  }
  for (std::size_t k = 1; k <= n; ++k) {
    Rational acc;
    for (std::size_t j = 0; j + k <= n; ++j) {
      const Rational sgn = (n + k + j) % 2 == 0 ? Rational(1) : Rational(-1);
      acc += sgn * binomial(n, k + j) * g[j] / g[k + j];
    }
    q[k - 1] = Rational(cfg.gamma_sign) * g[n] * acc;
  }
  return {Poly(std::move(p)), Poly(std::move(q))};
}

}  // namespace stieltjes
