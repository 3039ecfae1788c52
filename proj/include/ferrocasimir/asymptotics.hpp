#pragma once

namespace ferrocasimir {

/// Static (zero-frequency) permittivities of the three dielectric layers
/// that control the thermal TM pressure term: the facing half-space A,
/// the intervening fluid m, and the coating B1.
struct StaticTriple {
  double eps_a0;   ///< half-space A, evaluated at zero frequency
  double eps_m0;   ///< gap fluid m, evaluated at zero frequency
  double eps_b1_0; ///< coating B1, evaluated at zero frequency
};

/// Transition pattern of the thermal TM pressure sign as the gap grows
/// past the coating thickness. Classified from the static permittivity
/// ordering alone.
enum class SignRegime {
  ATTRACT_SMALL_REPEL_LARGE,  ///< eps_b1 < eps_a < eps_m
  REPEL_SMALL_ATTRACT_LARGE,  ///< eps_b1 < eps_m < eps_a
  ALWAYS_ATTRACT,             ///< eps_m < eps_b1 < eps_a
};

/// Polylogarithm Li_s(x) = sum_{j>=1} x^j / j^s for s in {2, 3} and
/// |x| <= 1, accurate to better than 1e-13 absolute. Direct series for
/// |x| <= 1/2; a zeta-coefficient expansion in log(x) near x = 1; the
/// duplication identity Li_s(-x) = 2^{1-s} Li_s(x^2) - Li_s(x) for
/// x < -1/2. Throws std::domain_error outside s in {2,3} or |x| > 1.
double polylog(int s, double x);

/// Closed-form thermal (zero-frequency) TE pressure in Pa for a gap of
/// static permeability mu0 between non-magnetic media:
///   -(kB*T / 8 pi ell^3) * Li3( ((mu0-1)/(mu0+1))^2 ).
/// Always attractive (<= 0) and exactly proportional to ell^-3.
double te_thermal(double ell_nm, double mu0, double temperature_k);

/// Mobius-composed static reflection ratio R(x) = a (b + x) / (1 + b x)
/// with a = (eps_a0-eps_m0)/(eps_a0+eps_m0) and
/// b = (eps_b1_0-eps_m0)/(eps_b1_0+eps_m0); x is the coating
/// transmission weight in [0, 1] (x=1: coating invisible; x=0: coating
/// infinitely thick over an ideal metal).
double tm_R(double x, const StaticTriple& triple);

/// Closed-form thermal TM pressure in Pa for a coated metallic wall:
///   -(kB*T / 8 pi ell^3) * Li3( R(e^{-2 b1/ell}) ).
/// Exact in the small- and large-gap limits; an approximation in between.
double tm_thermal(double ell_nm, double b1_nm, const StaticTriple& triple,
                  double temperature_k);

/// Large-gap (ell >> b1) expansion of tm_thermal to first order in b1/ell:
///   -(kB*T / 8 pi ell^3) * { Li3(a) - (2 eps_m0/eps_b1_0) Li2(a) b1/ell }.
double tm_thermal_large_gap(double ell_nm, double b1_nm,
                            const StaticTriple& triple, double temperature_k);

/// Small-gap (ell << b1) limit of tm_thermal: -(kB*T/8 pi ell^3) Li3(a*b).
double tm_thermal_small_gap(double ell_nm, const StaticTriple& triple,
                            double temperature_k);

/// Classify the static ordering into one of the three transition patterns.
/// Orderings outside the three listed cases (including ties) throw
/// ConfigError("unclassified ...").
SignRegime sign_regime(const StaticTriple& triple);

}  // namespace ferrocasimir
