#pragma once

#include <string>
#include <variant>
#include <vector>

#include "ferrocasimir/engine.hpp"

namespace ferrocasimir {

/// Ideal-conductor vacuum pressure -pi^2 hbar c / (240 ell^4), in Pa.
/// Used as the normalization denominator for plotted curves.
double perfect_conductor_pressure(double ell_nm);

struct CurvePoint {
  double ell_nm = 0.0;
  PressureBreakdown breakdown;
};

/// Evaluates casimir_pressure on a strictly increasing separation grid.
/// Engine errors are rethrown with the offending separation attached.
std::vector<CurvePoint> pressure_curve(const std::vector<double>& ells_nm,
                                       const FourLayerStack& stack,
                                       const EngineConfig& cfg);

enum class EquilibriumKind { STABLE, UNSTABLE };

struct Equilibrium {
  double ell_star_nm = 0.0;
  EquilibriumKind kind = EquilibriumKind::STABLE;
  double bracket_lo_nm = 0.0;
  double bracket_hi_nm = 0.0;
  double residual_pa = 0.0;  ///< |P(ell_star)|
};

/// Scans a curve for sign changes of the total pressure and refines each
/// bracket by bisection until its width is <= refine_tol_nm.  A root where
/// the pressure goes + -> - with increasing separation is STABLE (repulsion
/// inside, attraction outside); - -> + is UNSTABLE.  Results are ordered by
/// ell_star.  Throws NumericError if both bracket endpoints evaluate to
/// exactly zero (degenerate root).
std::vector<Equilibrium> find_equilibria(const std::vector<CurvePoint>& curve,
                                         const FourLayerStack& stack,
                                         const EngineConfig& cfg,
                                         double refine_tol_nm);

enum class SweepAxis { METAL, B1_THICKNESS, PHI, DIAMETER, SOLVENT };

/// Material-name axes (METAL, SOLVENT) take strings; the rest take numbers.
using SweepValue = std::variant<double, std::string>;

struct SweepEntry {
  std::string label;          ///< material name or shortest-round-trip number
  std::vector<CurvePoint> curve;
  std::vector<Equilibrium> equilibria;
};

/// Runs pressure_curve + find_equilibria once per value of the chosen axis,
/// applied on top of the base stack.  All values are validated (material
/// names resolved against the database, numbers checked against the stack
/// invariants) before any pressure is computed, so a bad entry fails fast.
/// Output order follows input order.
std::vector<SweepEntry> sweep(SweepAxis axis,
                              const std::vector<SweepValue>& values,
                              const FourLayerStack& base_stack,
                              const MaterialDatabase& db,
                              const std::vector<double>& ells_nm,
                              const EngineConfig& cfg, double refine_tol_nm);

}  // namespace ferrocasimir
