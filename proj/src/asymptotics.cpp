#include "ferrocasimir/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

#include "ferrocasimir/errors.hpp"
#include "ferrocasimir/units.hpp"

namespace ferrocasimir {
namespace {

constexpr double kZeta2 = 1.6449340668482264;  // pi^2/6
constexpr double kZeta3 = 1.2020569031595943;

// zeta(m) for m = 1-k and m = 0 arguments appearing in the log-series
// below, indexed as zeta_neg[j] = zeta(-j). zeta(-even) = 0.
constexpr double kZetaNeg[] = {
    -0.5,                      // zeta(0)
    -1.0 / 12.0,               // zeta(-1)
    0.0,                       // zeta(-2)
    1.0 / 120.0,               // zeta(-3)
    0.0,                       // zeta(-4)
    -1.0 / 252.0,              // zeta(-5)
    0.0,                       // zeta(-6)
    1.0 / 240.0,               // zeta(-7)
    0.0,                       // zeta(-8)
    -1.0 / 132.0,              // zeta(-9)
    0.0,                       // zeta(-10)
    691.0 / 32760.0,           // zeta(-11)
    0.0,                       // zeta(-12)
    -1.0 / 12.0,               // zeta(-13)
    0.0,                       // zeta(-14)
    3617.0 / 8160.0,           // zeta(-15)
    0.0,                       // zeta(-16)
    -43867.0 / 14364.0,        // zeta(-17)
    0.0,                       // zeta(-18)
};

// Direct defining series; converges to < 1e-16 absolute within 52 terms
// for |x| <= 1/2.
double polylog_series(int s, double x) {
  double sum = 0.0;
  double xj = 1.0;
  for (int j = 1; j <= 52; ++j) {
    xj *= x;
    sum += (s == 2) ? xj / (j * j) : xj / (double(j) * j * j);
  }
  return sum;
}

// Expansion of Li_s(e^mu) in powers of mu = log(x) < 0, valid for
// x in (1/2, 1). The k = s-1 power carries the log(-mu) term; all other
// coefficients are zeta values.
double polylog_log_series(int s, double x) {
  const double mu = std::log(x);
  double sum;
  if (s == 2) {
    sum = kZeta2 + mu * (1.0 - std::log(-mu));
    double muk = mu;  // mu^k / k!
    for (int k = 2; k <= 20; ++k) {
      muk *= mu / k;
      sum += kZetaNeg[k - 2] * muk;
    }
  } else {
    sum = kZeta3 + kZeta2 * mu + 0.5 * mu * mu * (1.5 - std::log(-mu));
    double muk = 0.5 * mu * mu;  // mu^k / k!
    for (int k = 3; k <= 21; ++k) {
      muk *= mu / k;
      sum += kZetaNeg[k - 3] * muk;
    }
  }
  return sum;
}

double polylog_positive(int s, double x) {
  if (x == 1.0) return (s == 2) ? kZeta2 : kZeta3;
  if (x <= 0.5) return polylog_series(s, x);
  return polylog_log_series(s, x);
}

// Shared -(kB T / 8 pi ell^3) prefactor of all thermal closed forms, in Pa.
double thermal_prefactor(double ell_nm, double temperature_k) {
  const double kbt = units::k_boltzmann_ev_per_k * temperature_k;
  return -kbt / (8.0 * units::pi * ell_nm * ell_nm * ell_nm) *
         units::pa_per_ev_nm3;
}

double contrast(double u, double v) { return (u - v) / (u + v); }

}  // namespace

double polylog(int s, double x) {
  if (s != 2 && s != 3) throw std::domain_error("polylog: order must be 2 or 3");
  if (!(std::fabs(x) <= 1.0)) throw std::domain_error("polylog: |x| must be <= 1");
  if (x == 0.0) return 0.0;
  if (x >= -0.5) {
    if (x < 0.0) return polylog_series(s, x);
    return polylog_positive(s, x);
  }
  // Duplication identity for x in [-1, -1/2).
  const double scale = (s == 2) ? 0.5 : 0.25;  // 2^{1-s}
  return scale * polylog_positive(s, x * x) - polylog_positive(s, -x);
}

double te_thermal(double ell_nm, double mu0, double temperature_k) {
  const double r = (mu0 - 1.0) / (mu0 + 1.0);
  return thermal_prefactor(ell_nm, temperature_k) * polylog(3, r * r);
}

double tm_R(double x, const StaticTriple& t) {
  const double a = contrast(t.eps_a0, t.eps_m0);
  const double b = contrast(t.eps_b1_0, t.eps_m0);
  return a * (b + x) / (1.0 + b * x);
}

double tm_thermal(double ell_nm, double b1_nm, const StaticTriple& t,
                  double temperature_k) {
  const double x = std::exp(-2.0 * b1_nm / ell_nm);
  return thermal_prefactor(ell_nm, temperature_k) * polylog(3, tm_R(x, t));
}

double tm_thermal_large_gap(double ell_nm, double b1_nm,
                            const StaticTriple& t, double temperature_k) {
  const double a = contrast(t.eps_a0, t.eps_m0);
  const double correction =
      2.0 * t.eps_m0 / t.eps_b1_0 * polylog(2, a) * (b1_nm / ell_nm);
  return thermal_prefactor(ell_nm, temperature_k) * (polylog(3, a) - correction);
}

double tm_thermal_small_gap(double ell_nm, const StaticTriple& t,
                            double temperature_k) {
  const double a = contrast(t.eps_a0, t.eps_m0);
  const double b = contrast(t.eps_b1_0, t.eps_m0);
  return thermal_prefactor(ell_nm, temperature_k) * polylog(3, a * b);
}

SignRegime sign_regime(const StaticTriple& t) {
  const double a = t.eps_a0, m = t.eps_m0, b1 = t.eps_b1_0;
  if (b1 < a && a < m) return SignRegime::ATTRACT_SMALL_REPEL_LARGE;
  if (b1 < m && m < a) return SignRegime::REPEL_SMALL_ATTRACT_LARGE;
  if (m < b1 && b1 < a) return SignRegime::ALWAYS_ATTRACT;
  throw ConfigError("sign_regime: unclassified static permittivity ordering");
}

}  // namespace ferrocasimir
