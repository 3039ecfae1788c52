#include "ferrocasimir/stack.hpp"

#include <cmath>

#include "ferrocasimir/units.hpp"

namespace ferrocasimir {

double kz(double k_par, double eps, double mu, double xi_ev) {
  if (xi_ev == 0.0) return k_par;
  const double q = xi_ev / units::hbar_c_ev_nm;
  return std::sqrt(k_par * k_par + eps * mu * q * q);
}

LayerOptics make_layer(const PermittivityModel& model, double k_par,
                       double xi_ev, double mu) {
  LayerOptics out;
  out.mu = mu;
  if (xi_ev == 0.0 && std::holds_alternative<DrudeModel>(model)) {
    out.ideal_metal_static = true;
    out.kz = k_par;
    return out;
  }
  out.eps = eval_permittivity(model, xi_ev);
  out.kz = kz(k_par, out.eps, mu, xi_ev);
  return out;
}

LayerOptics make_gap_layer(const FerrofluidSpec& gap, double k_par,
                           double xi_ev) {
  LayerOptics out;
  out.eps = ferrofluid_permittivity(gap, xi_ev);
  out.mu = (xi_ev == 0.0)
               ? static_permeability(gap.phi, gap.ms_a_per_m, gap.diameter_nm,
                                     gap.temperature_k)
               : 1.0;
  out.kz = kz(k_par, out.eps, out.mu, xi_ev);
  return out;
}

double fresnel(Polarization mode, const LayerOptics& i, const LayerOptics& j) {
  if (i.ideal_metal_static || j.ideal_metal_static) {
    if (mode == Polarization::TE) return 0.0;
    if (i.ideal_metal_static && j.ideal_metal_static) return 0.0;
    return i.ideal_metal_static ? 1.0 : -1.0;
  }
  const double wi = (mode == Polarization::TM) ? i.eps : i.mu;
  const double wj = (mode == Polarization::TM) ? j.eps : j.mu;
  if (i.kz == 0.0 && j.kz == 0.0) return (wi - wj) / (wi + wj);
  return (j.kz * wi - i.kz * wj) / (j.kz * wi + i.kz * wj);
}

double effective_reflection(Polarization mode, double k_par, double xi_ev,
                            const FourLayerStack& stack) {
  const LayerOptics m = make_gap_layer(stack.gap, k_par, xi_ev);
  const LayerOptics b1 = make_layer(stack.coating.model, k_par, xi_ev);
  const LayerOptics b = make_layer(stack.substrate.model, k_par, xi_ev);
  const double r_b1m = fresnel(mode, b1, m);
  const double r_bb1 = fresnel(mode, b, b1);
  const double x = std::exp(-2.0 * b1.kz * stack.b1_nm);
  return (r_b1m + r_bb1 * x) / (1.0 + r_b1m * r_bb1 * x);
}

double gap_reflection_Am(Polarization mode, double k_par, double xi_ev,
                         const FourLayerStack& stack) {
  const LayerOptics a = make_layer(stack.a.model, k_par, xi_ev);
  const LayerOptics m = make_gap_layer(stack.gap, k_par, xi_ev);
  return fresnel(mode, a, m);
}

}  // namespace ferrocasimir
