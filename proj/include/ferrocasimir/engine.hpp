#pragma once

#include <cstdint>

#include "ferrocasimir/stack.hpp"

namespace ferrocasimir {

/// Convergence controls for the Matsubara sum and the per-term
/// wavevector quadrature.
struct EngineConfig {
  double temperature_k = 300.0;
  double rel_tol = 1e-9;  ///< per-term quadrature and tail threshold
  double y_cut = 60.0;    ///< upper bound of the substituted variable range
  int n_cap = 10000;      ///< hard Matsubara index cap
  int tail_stop = 3;      ///< consecutive negligible terms ending the sum

  /// Throws ConfigError unless rel_tol in (0, 1e-3], y_cut >= 30,
  /// n_cap >= 1, tail_stop >= 1, temperature_k > 0.
  void validate() const;
};

/// Pressure decomposed by polarization and by zero/positive Matsubara
/// order, in Pa; negative values are attractive.
struct PressureBreakdown {
  double te0 = 0.0;
  double tm0 = 0.0;
  double te_pos = 0.0;
  double tm_pos = 0.0;
  double total = 0.0;
  double normalized = 0.0;  ///< total / |ideal-conductor pressure|, signed
  int n_used = 1;           ///< 1 + largest index that contributed
  std::int64_t quad_evals = 0;
  bool truncated = false;   ///< sum hit n_cap before the tail criterion
};

/// Matsubara energy hbar*xi_n = 2 pi n kB T in eV.
double matsubara_energy(int n, double temperature_k);

/// One (n, polarization) term of the pressure sum:
///   -(kB T w_n / 2 pi) * Int k_par 2 k_zm q/(1-q) dk_par,
///   q = R_Am R_eff e^{-2 k_zm ell},  w_0 = 1/2, w_{n>0} = 1,
/// evaluated after the substitution y = 2 k_zm ell on
/// [y_min, y_min + y_cut], y_min = 2 ell sqrt(eps mu) xi_n / hbar c.
/// `evals`, when non-null, accumulates integrand evaluations.
double mode_term(int n, Polarization mode, double ell_nm,
                 const FourLayerStack& stack, const EngineConfig& cfg,
                 std::int64_t* evals = nullptr);

/// Full pressure at gap ell: ascending-n compensated summation per
/// polarization until `tail_stop` consecutive terms fall below rel_tol of
/// the running per-mode totals, or n_cap (sets `truncated`; throws
/// NumericError if the capped tail is still above 1e-6 of the total).
PressureBreakdown casimir_pressure(double ell_nm, const FourLayerStack& stack,
                                   const EngineConfig& cfg);

/// Deliberately naive oracle: the same sum over n = 0..n_max with each
/// term integrated by a fixed trapezoid rule on a geometric k_par grid
/// (uniform in log k with the k d(log k) Jacobian). No adaptivity; used
/// only as an independent cross-check in tests.
double brute_force_pressure(double ell_nm, const FourLayerStack& stack,
                            int n_max, int grid_points);

}  // namespace ferrocasimir
