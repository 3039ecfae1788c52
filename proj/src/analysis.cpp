#include "ferrocasimir/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ferrocasimir/errors.hpp"
#include "ferrocasimir/io.hpp"
#include "ferrocasimir/units.hpp"

namespace ferrocasimir {

double perfect_conductor_pressure(double ell_nm) {
  if (!(ell_nm > 0.0))
    throw ConfigError("perfect_conductor_pressure: ell must be > 0");
  const double ell4 = ell_nm * ell_nm * ell_nm * ell_nm;
  return -units::pi * units::pi * units::hbar_c_ev_nm / (240.0 * ell4) *
         units::pa_per_ev_nm3;
}

std::vector<CurvePoint> pressure_curve(const std::vector<double>& ells_nm,
                                       const FourLayerStack& stack,
                                       const EngineConfig& cfg) {
  for (std::size_t i = 0; i < ells_nm.size(); ++i) {
    if (!(ells_nm[i] > 0.0))
      throw ConfigError("pressure_curve: separations must be > 0");
    if (i > 0 && !(ells_nm[i] > ells_nm[i - 1]))
      throw ConfigError("pressure_curve: separations must be strictly increasing");
  }
  std::vector<CurvePoint> curve;
  curve.reserve(ells_nm.size());
  for (double ell : ells_nm) {
    try {
      curve.push_back({ell, casimir_pressure(ell, stack, cfg)});
    } catch (const NumericError& e) {
      throw NumericError("pressure_curve at ell=" + io::format_double(ell) +
                         " nm: " + e.what());
    }
  }
  return curve;
}

std::vector<Equilibrium> find_equilibria(const std::vector<CurvePoint>& curve,
                                         const FourLayerStack& stack,
                                         const EngineConfig& cfg,
                                         double refine_tol_nm) {
  if (curve.size() < 2)
    throw ConfigError("find_equilibria: curve needs at least two points");
  if (!(refine_tol_nm > 0.0))
    throw ConfigError("find_equilibria: refine_tol_nm must be > 0");

  std::vector<Equilibrium> roots;
  for (std::size_t i = 0; i + 1 < curve.size(); ++i) {
    double lo = curve[i].ell_nm;
    double hi = curve[i + 1].ell_nm;
    double p_lo = curve[i].breakdown.total;
    double p_hi = curve[i + 1].breakdown.total;
    if (!(p_lo * p_hi < 0.0)) continue;

    const bool stable = p_lo > 0.0;  // repulsion below, attraction above
    while (hi - lo > refine_tol_nm) {
      if (p_lo == 0.0 && p_hi == 0.0)
        throw NumericError(
            "find_equilibria: degenerate root near ell=" +
            io::format_double(0.5 * (lo + hi)) +
            " nm (both bracket endpoints evaluate to zero)");
      const double mid = 0.5 * (lo + hi);
      const double p_mid = casimir_pressure(mid, stack, cfg).total;
      if (p_mid == 0.0) {
        lo = hi = mid;
        break;
      }
      if ((p_mid > 0.0) == (p_lo > 0.0)) {
        lo = mid;
        p_lo = p_mid;
      } else {
        hi = mid;
        p_hi = p_mid;
      }
    }
    Equilibrium eq;
    eq.ell_star_nm = 0.5 * (lo + hi);
    eq.kind = stable ? EquilibriumKind::STABLE : EquilibriumKind::UNSTABLE;
    eq.bracket_lo_nm = lo;
    eq.bracket_hi_nm = hi;
    eq.residual_pa =
        std::fabs(casimir_pressure(eq.ell_star_nm, stack, cfg).total);
    roots.push_back(eq);
  }
  std::stable_sort(roots.begin(), roots.end(),
                   [](const Equilibrium& a, const Equilibrium& b) {
                     return a.ell_star_nm < b.ell_star_nm;
                   });
  return roots;
}

namespace {

FourLayerStack apply_axis(const FourLayerStack& base, SweepAxis axis,
                          const SweepValue& value, const MaterialDatabase& db) {
  FourLayerStack stack = base;
  const auto need_name = [&]() -> const std::string& {
    if (!std::holds_alternative<std::string>(value))
      throw ConfigError("sweep: this axis takes material names");
    return std::get<std::string>(value);
  };
  const auto need_number = [&]() -> double {
    if (!std::holds_alternative<double>(value))
      throw ConfigError("sweep: this axis takes numbers");
    return std::get<double>(value);
  };
  switch (axis) {
    case SweepAxis::METAL:
      stack.substrate = db.at(need_name());
      break;
    case SweepAxis::SOLVENT:
      stack.gap.solvent = db.at(need_name());
      break;
    case SweepAxis::B1_THICKNESS: {
      const double v = need_number();
      if (!(v > 0.0))
        throw ConfigError("sweep: coating thickness must be > 0 nm");
      stack.b1_nm = v;
      break;
    }
    case SweepAxis::PHI: {
      const double v = need_number();
      if (!(v >= 0.0 && v < 1.0))
        throw ConfigError("sweep: volume fraction must be in [0, 1)");
      stack.gap.phi = v;
      break;
    }
    case SweepAxis::DIAMETER: {
      const double v = need_number();
      if (!(v > 0.0))
        throw ConfigError("sweep: particle diameter must be > 0 nm");
      stack.gap.diameter_nm = v;
      break;
    }
  }
  return stack;
}

std::string value_label(const SweepValue& value) {
  if (std::holds_alternative<std::string>(value))
    return std::get<std::string>(value);
  return io::format_double(std::get<double>(value));
}

}  // namespace

std::vector<SweepEntry> sweep(SweepAxis axis,
                              const std::vector<SweepValue>& values,
                              const FourLayerStack& base_stack,
                              const MaterialDatabase& db,
                              const std::vector<double>& ells_nm,
                              const EngineConfig& cfg, double refine_tol_nm) {
  // Resolve every value up front so a bad entry fails before any pressure
  // evaluation is spent on the good ones.
  std::vector<FourLayerStack> stacks;
  stacks.reserve(values.size());
  for (const SweepValue& v : values)
    stacks.push_back(apply_axis(base_stack, axis, v, db));

  std::vector<SweepEntry> entries;
  entries.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    SweepEntry entry;
    entry.label = value_label(values[i]);
    entry.curve = pressure_curve(ells_nm, stacks[i], cfg);
    entry.equilibria = find_equilibria(entry.curve, stacks[i], cfg, refine_tol_nm);
    entries.push_back(std::move(entry));
  }
  return entries;
}

}  // namespace ferrocasimir
