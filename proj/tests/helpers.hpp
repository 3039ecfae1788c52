#pragma once

// Shared utilities for the test binaries: ad-hoc material records, canonical
// stacks, and a pinned deterministic RNG whose stream is identical on every
// platform (mt19937_64 with a fixed 53-bit mantissa mapping, bypassing the
// implementation-defined std::uniform_real_distribution).

#include <cmath>
#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "ferrocasimir/materials.hpp"
#include "ferrocasimir/stack.hpp"

namespace testutil {

inline ferrocasimir::MaterialRecord constant_record(const std::string& name,
                                                    double eps) {
  return {name, ferrocasimir::ConstantModel{eps}, "test fixture"};
}

inline ferrocasimir::MaterialRecord vacuum_record(const std::string& name = "vac") {
  return {name, ferrocasimir::VacuumModel{}, "test fixture"};
}

inline ferrocasimir::MaterialRecord drude_record(const std::string& name,
                                                 double omega_p_ev,
                                                 double gamma_ev) {
  return {name, ferrocasimir::DrudeModel{omega_p_ev, gamma_ev}, "test fixture"};
}

/// A gap spec that contributes nothing magnetic and whose mixture equals the
/// solvent exactly (phi = 0).
inline ferrocasimir::FerrofluidSpec plain_gap(ferrocasimir::MaterialRecord solvent,
                                              double temperature_k = 300.0) {
  ferrocasimir::FerrofluidSpec g;
  g.solvent = std::move(solvent);
  g.particle = vacuum_record("inert");
  g.phi = 0.0;
  g.diameter_nm = 1.0;
  g.ms_a_per_m = 0.0;
  g.temperature_k = temperature_k;
  return g;
}

/// Saturation magnetization that makes static_permeability(...) land exactly
/// on `mu_target`, inverting the linear-in-phi, cubic-in-D susceptibility.
inline double ms_for_static_mu(double mu_target, double phi, double diameter_nm,
                               double temperature_k) {
  const double mu0_si = 1.25663706212e-6;
  const double kb_si = 1.380649e-23;
  const double pi = 3.14159265358979323846;
  const double d_m = diameter_nm * 1e-9;
  const double denom =
      (2.0 * pi * pi / 9.0) * phi * mu0_si * d_m * d_m * d_m;
  return std::sqrt((mu_target - 1.0) * kb_si * temperature_k / denom);
}

/// Stack in which every layer is the same non-dispersive dielectric and the
/// gap fluid is magnetically inert: all reflection coefficients vanish, so
/// every pressure the engine reports must be exactly zero.
inline ferrocasimir::FourLayerStack uniform_stack(double eps,
                                                  double b1_nm = 10.0,
                                                  double temperature_k = 300.0) {
  ferrocasimir::FourLayerStack s;
  s.a = constant_record("slab", eps);
  s.gap = plain_gap(constant_record("fluid", eps), temperature_k);
  s.coating = constant_record("film", eps);
  s.b1_nm = b1_nm;
  s.substrate = constant_record("wall", eps);
  return s;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline ferrocasimir::MaterialDatabase load_db(const std::string& path) {
  return ferrocasimir::MaterialDatabase::from_json_text(read_text_file(path));
}

/// The default ship configuration: polystyrene facing a teflon-coated gold
/// wall across a magnetite-in-toluene colloid.
inline ferrocasimir::FourLayerStack reference_stack(
    const ferrocasimir::MaterialDatabase& db) {
  ferrocasimir::FourLayerStack s;
  s.a = db.at("polystyrene");
  s.gap.solvent = db.at("toluene");
  s.gap.particle = db.at("magnetite");
  s.gap.phi = 0.05;
  s.gap.diameter_nm = 20.0;
  s.gap.ms_a_per_m = 6.7e4;
  s.gap.temperature_k = 300.0;
  s.coating = db.at("teflon");
  s.b1_nm = 10.0;
  s.substrate = db.at("gold");
  return s;
}

/// Deterministic uniform [0,1) stream; identical across standard libraries.
class PinnedRng {
 public:
  explicit PinnedRng(std::uint64_t seed) : engine_(seed) {}

  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace testutil
