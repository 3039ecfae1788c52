#include "ferrocasimir/engine.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ferrocasimir/analysis.hpp"
#include "ferrocasimir/errors.hpp"
#include "ferrocasimir/quadrature.hpp"
#include "ferrocasimir/units.hpp"

namespace ferrocasimir {
namespace {

/// Neumaier-compensated accumulator: deterministic ascending-order sums
/// that keep low-order bits even when terms exceed the running total.
struct CompensatedSum {
  double sum = 0.0;
  double comp = 0.0;
  void add(double v) {
    const double t = sum + v;
    if (std::fabs(sum) >= std::fabs(v))
      comp += (sum - t) + v;
    else
      comp += (v - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

/// Frequency-dependent optical constants of all four layers, hoisted out
/// of the wavevector integrand (they depend on xi only).
struct TermOptics {
  double xi_ev;
  double q;  ///< xi / hbar c in nm^-1
  double eps_a = 1.0, eps_b1 = 1.0, eps_b = 1.0;
  bool flag_a = false, flag_b1 = false, flag_b = false;
  double eps_m = 1.0, mu_m = 1.0;

  TermOptics(int n, const FourLayerStack& stack, const EngineConfig& cfg) {
    xi_ev = matsubara_energy(n, cfg.temperature_k);
    q = xi_ev / units::hbar_c_ev_nm;
    const auto probe = [&](const PermittivityModel& model, double& eps,
                           bool& flag) {
      if (xi_ev == 0.0 && std::holds_alternative<DrudeModel>(model))
        flag = true;
      else
        eps = eval_permittivity(model, xi_ev);
    };
    probe(stack.a.model, eps_a, flag_a);
    probe(stack.coating.model, eps_b1, flag_b1);
    probe(stack.substrate.model, eps_b, flag_b);
    eps_m = ferrofluid_permittivity(stack.gap, xi_ev);
    mu_m = (n == 0) ? static_permeability(stack.gap.phi, stack.gap.ms_a_per_m,
                                          stack.gap.diameter_nm,
                                          stack.gap.temperature_k)
                    : 1.0;
  }

  /// Layer optics with kz anchored on the gap's kz:
  ///   kz_j^2 = k_par^2 + eps_j mu_j q^2 = kz_m^2 + (eps_j mu_j - eps_m mu_m) q^2.
  /// Writing it as a contrast against the gap makes a layer made of the
  /// gap's own material reflect exactly zero (bitwise equal kz), instead of
  /// leaving sign-flipping cancellation noise that adaptive refinement
  /// would chase to its depth limit.
  LayerOptics layer(double eps, bool flag, double k_par, double kzm,
                    double mu = 1.0) const {
    if (flag) return LayerOptics{1.0, 1.0, k_par, true};
    const double kz2 = kzm * kzm + (eps * mu - eps_m * mu_m) * q * q;
    return LayerOptics{eps, mu, std::sqrt(std::max(kz2, 0.0)), false};
  }

  /// r1 r2 e^{-y}/(1 - r1 r2 e^{-y}) at substituted variable y = 2 kz_m ell.
  double ratio(Polarization mode, double y, double k_par, double ell_nm,
               double b1_nm) const {
    const double kzm = y / (2.0 * ell_nm);
    const LayerOptics m{eps_m, mu_m, kzm, false};
    const LayerOptics a = layer(eps_a, flag_a, k_par, kzm);
    const LayerOptics b1 = layer(eps_b1, flag_b1, k_par, kzm);
    const LayerOptics b = layer(eps_b, flag_b, k_par, kzm);
    const double r1 = fresnel(mode, a, m);
    const double r_b1m = fresnel(mode, b1, m);
    const double r_bb1 = fresnel(mode, b, b1);
    const double x = std::exp(-2.0 * b1.kz * b1_nm);
    const double r2 = (r_b1m + r_bb1 * x) / (1.0 + r_b1m * r_bb1 * x);
    const double qq = r1 * r2 * std::exp(-y);
    return qq / (1.0 - qq);
  }

  double y_min(double ell_nm) const {
    return 2.0 * ell_nm * std::sqrt(eps_m * mu_m) * q;
  }
};

double term_prefactor(int n, const EngineConfig& cfg, double ell_nm) {
  const double w = (n == 0) ? 0.5 : 1.0;
  const double kbt = units::k_boltzmann_ev_per_k * cfg.temperature_k;
  return -(kbt * w / (2.0 * units::pi)) /
         (4.0 * ell_nm * ell_nm * ell_nm) * units::pa_per_ev_nm3;
}

}  // namespace

void EngineConfig::validate() const {
  if (!(temperature_k > 0.0))
    throw ConfigError("engine: temperature_k must be > 0");
  if (!(rel_tol > 0.0 && rel_tol <= 1e-3))
    throw ConfigError("engine: rel_tol must be in (0, 1e-3]");
  if (!(y_cut >= 30.0)) throw ConfigError("engine: y_cut must be >= 30");
  if (n_cap < 1) throw ConfigError("engine: n_cap must be >= 1");
  if (tail_stop < 1) throw ConfigError("engine: tail_stop must be >= 1");
}

double matsubara_energy(int n, double temperature_k) {
  return 2.0 * units::pi * n * units::k_boltzmann_ev_per_k * temperature_k;
}

double mode_term(int n, Polarization mode, double ell_nm,
                 const FourLayerStack& stack, const EngineConfig& cfg,
                 std::int64_t* evals) {
  if (!(ell_nm > 0.0)) throw ConfigError("mode_term: ell must be > 0");
  const TermOptics opt(n, stack, cfg);
  const double y_min = opt.y_min(ell_nm);
  const auto integrand = [&](double y) {
    const double k_par =
        std::sqrt(std::max(y - y_min, 0.0) * (y + y_min)) / (2.0 * ell_nm);
    return y * y * opt.ratio(mode, y, k_par, ell_nm, stack.b1_nm);
  };
  QuadResult quad;
  try {
    quad = integrate_adaptive(integrand, y_min, y_min + cfg.y_cut, cfg.rel_tol);
  } catch (const NumericError& e) {
    throw NumericError(std::string(e.what()) + " (n=" + std::to_string(n) +
                       ", mode=" + (mode == Polarization::TE ? "TE" : "TM") +
                       ", ell=" + std::to_string(ell_nm) + " nm)");
  }
  if (evals) *evals += quad.evals;
  return term_prefactor(n, cfg, ell_nm) * quad.value;
}

PressureBreakdown casimir_pressure(double ell_nm, const FourLayerStack& stack,
                                   const EngineConfig& cfg) {
  cfg.validate();
  PressureBreakdown out;
  out.te0 = mode_term(0, Polarization::TE, ell_nm, stack, cfg, &out.quad_evals);
  out.tm0 = mode_term(0, Polarization::TM, ell_nm, stack, cfg, &out.quad_evals);

  CompensatedSum te_pos, tm_pos;
  int consecutive = 0;
  double last_te = 0.0, last_tm = 0.0;
  out.truncated = true;
  for (int n = 1; n <= cfg.n_cap; ++n) {
    last_te = mode_term(n, Polarization::TE, ell_nm, stack, cfg, &out.quad_evals);
    last_tm = mode_term(n, Polarization::TM, ell_nm, stack, cfg, &out.quad_evals);
    te_pos.add(last_te);
    tm_pos.add(last_tm);
    const bool te_small =
        std::fabs(last_te) <=
        cfg.rel_tol * std::fabs(out.te0 + te_pos.value()) + 1e-300;
    const bool tm_small =
        std::fabs(last_tm) <=
        cfg.rel_tol * std::fabs(out.tm0 + tm_pos.value()) + 1e-300;
    if (te_small && tm_small) {
      if (++consecutive >= cfg.tail_stop) {
        out.truncated = false;
        break;
      }
    } else {
      consecutive = 0;
      out.n_used = n + 1;
    }
  }
  out.te_pos = te_pos.value();
  out.tm_pos = tm_pos.value();
  out.total = out.te0 + out.tm0 + out.te_pos + out.tm_pos;
  if (out.truncated) {
    const double tail = std::max(std::fabs(last_te), std::fabs(last_tm));
    if (tail > 1e-6 * std::fabs(out.total))
      throw NumericError(
          "casimir_pressure: Matsubara sum truncated at n_cap with a "
          "non-negligible tail (ell=" + std::to_string(ell_nm) + " nm)");
  }
  out.normalized = out.total / std::fabs(perfect_conductor_pressure(ell_nm));
  return out;
}

double brute_force_pressure(double ell_nm, const FourLayerStack& stack,
                            int n_max, int grid_points) {
  if (!(ell_nm > 0.0)) throw ConfigError("brute_force_pressure: ell must be > 0");
  if (grid_points < 2)
    throw ConfigError("brute_force_pressure: grid_points must be >= 2");
  EngineConfig cfg;  // defaults; only temperature matters here
  cfg.temperature_k = stack.gap.temperature_k;
  constexpr double kYCut = 60.0;

  double total = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    const TermOptics opt(n, stack, cfg);
    const double y_min = opt.y_min(ell_nm);
    const double k_lo = 1e-5 / ell_nm;
    const double k_hi =
        std::sqrt(kYCut * (2.0 * y_min + kYCut)) / (2.0 * ell_nm);
    const double du = std::log(k_hi / k_lo) / (grid_points - 1);
    for (Polarization mode : {Polarization::TE, Polarization::TM}) {
      double acc = 0.0;
      for (int i = 0; i < grid_points; ++i) {
        const double k = k_lo * std::exp(i * du);
        const double kzm =
            std::sqrt(k * k + opt.eps_m * opt.mu_m * opt.q * opt.q);
        const double y = 2.0 * kzm * ell_nm;
        const double f =
            k * 2.0 * kzm * opt.ratio(mode, y, k, ell_nm, stack.b1_nm);
        const double g = k * f;  // Jacobian for the log-spaced grid
        acc += (i == 0 || i == grid_points - 1) ? 0.5 * g : g;
      }
      const double w = (n == 0) ? 0.5 : 1.0;
      const double kbt = units::k_boltzmann_ev_per_k * cfg.temperature_k;
      total += -(kbt * w / (2.0 * units::pi)) * acc * du *
               units::pa_per_ev_nm3;
    }
  }
  return total;
}

}  // namespace ferrocasimir
