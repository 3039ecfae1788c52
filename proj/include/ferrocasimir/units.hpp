#pragma once

#include <numbers>

/// Unit conventions used throughout the library:
///   - photon/Matsubara energies  hbar*xi  in eV,
///   - lengths in nm,
///   - pressures in Pa (negative = attraction),
///   - magnetization in A/m, temperature in K.
namespace ferrocasimir::units {

/// hbar*c in eV*nm.
inline constexpr double hbar_c_ev_nm = 197.3269804;

/// Boltzmann constant in eV/K.
inline constexpr double k_boltzmann_ev_per_k = 8.617333262e-5;

/// Conversion factor: 1 eV/nm^3 expressed in Pa.
inline constexpr double pa_per_ev_nm3 = 1.602176634e8;

/// Vacuum permeability in N/A^2 (SI).
inline constexpr double mu0_si = 1.25663706212e-6;

/// Boltzmann constant in J/K (SI).
inline constexpr double k_boltzmann_si = 1.380649e-23;

inline constexpr double pi = std::numbers::pi;

}  // namespace ferrocasimir::units
