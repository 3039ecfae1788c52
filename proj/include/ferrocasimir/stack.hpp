#pragma once

#include "ferrocasimir/materials.hpp"

namespace ferrocasimir {

enum class Polarization { TE, TM };

/// Optical state of one layer at a fixed (k_par, xi) evaluation point.
/// `ideal_metal_static` marks the zero-frequency limit of a free-carrier
/// metal (diverging eps), which is handled by exact reflection limits
/// instead of a finite permittivity.
struct LayerOptics {
  double eps = 1.0;
  double mu = 1.0;
  double kz = 0.0;  ///< z-wavevector in nm^-1 at the evaluation point
  bool ideal_metal_static = false;
};

/// Planar geometry A | gap m (thickness ell, supplied per evaluation) |
/// coating B1 (thickness b1) | substrate B. All layers are non-magnetic
/// except the gap fluid, whose static permeability enters only the
/// zero-frequency term.
struct FourLayerStack {
  MaterialRecord a;         ///< facing half-space
  FerrofluidSpec gap;       ///< fluid filling the gap
  MaterialRecord coating;   ///< film on the substrate
  double b1_nm = 0.0;       ///< coating thickness
  MaterialRecord substrate; ///< coated half-space
};

/// z-wavevector sqrt(k_par^2 + eps*mu*(xi/hbar c)^2) in nm^-1; equals
/// k_par exactly at xi = 0 and is always >= k_par.
double kz(double k_par, double eps, double mu, double xi_ev);

/// Assemble the optical state of a permittivity model at (k_par, xi).
/// At xi = 0 a Drude model becomes the ideal-metal static limit; other
/// models evaluate normally. `mu` is 1 unless supplied by the caller
/// (only the gap layer at xi = 0 carries mu != 1).
LayerOptics make_layer(const PermittivityModel& model, double k_par,
                       double xi_ev, double mu = 1.0);

/// Optical state of the gap fluid at (k_par, xi): Rayleigh-mixture
/// permittivity, and the colloid's static permeability when xi = 0.
LayerOptics make_gap_layer(const FerrofluidSpec& gap, double k_par,
                           double xi_ev);

/// Single-interface reflection coefficient with medium i listed first:
///   TM: (kz_j eps_i - kz_i eps_j) / (kz_j eps_i + kz_i eps_j),
///   TE: (kz_j mu_i  - kz_i mu_j ) / (kz_j mu_i  + kz_i mu_j ).
/// Ideal-metal static limits: i flagged -> TM +1, TE 0; j flagged ->
/// TM -1, TE 0 (fresnel(i,j) = -fresnel(j,i) holds everywhere); both
/// flagged -> 0. Degenerate kz_i = kz_j = 0 points use the eps/mu
/// contrast limit directly.
double fresnel(Polarization mode, const LayerOptics& i, const LayerOptics& j);

/// Reflection of the coated substrate seen from the gap:
///   (R_B1m + R_BB1 e^{-2 kz_B1 b1}) / (1 + R_B1m R_BB1 e^{-2 kz_B1 b1}).
/// At b1 = 0 this collapses to the direct B|m coefficient; at xi = 0 the
/// TE value is independent of b1 and of the substrate because
/// R_BB1^TE(0) = 0.
double effective_reflection(Polarization mode, double k_par, double xi_ev,
                            const FourLayerStack& stack);

/// Reflection at the A|m interface (i = A), with the gap's static
/// permeability (TE) and mixture permittivity (TM) applied at xi = 0.
double gap_reflection_Am(Polarization mode, double k_par, double xi_ev,
                         const FourLayerStack& stack);

}  // namespace ferrocasimir
