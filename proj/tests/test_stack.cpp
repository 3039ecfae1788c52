#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>

#include "ferrocasimir/materials.hpp"
#include "ferrocasimir/stack.hpp"

#include "helpers.hpp"

using namespace ferrocasimir;

namespace {

LayerOptics dielectric(double eps, double k_par, double mu = 1.0) {
  LayerOptics out;
  out.eps = eps;
  out.mu = mu;
  out.kz = k_par;  // the xi = 0 dispersion
  return out;
}

FourLayerStack load_default_stack() {
  const auto db = MaterialDatabase::from_json_text(testutil::read_text_file(
      std::string(TEST_DATA_DIR) + "/materials.json"));
  FourLayerStack s;
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

}  // namespace

TEST_CASE("z-wavevector dispersion") {
  // xi = 0 collapses onto k_par exactly, for any material constants.
  CHECK(kz(0.37, 5.0, 3.0, 0.0) == 0.37);
  CHECK(kz(0.0, 4.0, 1.0, 1.0) ==
        doctest::Approx(0.01013546143535879).epsilon(1e-14));
  // Vacuum dispersion is hypot(k_par, xi / hbar c).
  CHECK(kz(0.3, 1.0, 1.0, 2.5) ==
        doctest::Approx(std::hypot(0.3, 2.5 / 197.3269804)).epsilon(1e-15));
  for (double k : {0.0, 0.01, 0.1, 1.0})
    for (double xi : {0.0, 0.1, 1.0, 10.0})
      CHECK(kz(k, 2.25, 1.0, xi) >= k);
}

TEST_CASE("layer assembly applies the static metal convention") {
  const DrudeModel gold{9.0, 0.03};
  const auto metal0 = make_layer(gold, 0.05, 0.0);
  CHECK(metal0.ideal_metal_static);
  CHECK(metal0.kz == 0.05);

  const auto metal1 = make_layer(gold, 0.05, 0.5);
  CHECK_FALSE(metal1.ideal_metal_static);
  CHECK(metal1.eps > 100.0);

  const auto diel = make_layer(ConstantModel{2.4}, 0.05, 0.0);
  CHECK_FALSE(diel.ideal_metal_static);
  CHECK(diel.eps == 2.4);
  CHECK(diel.kz == 0.05);
}

TEST_CASE("gap layer carries the colloid permeability only at xi = 0") {
  FerrofluidSpec gap = load_default_stack().gap;
  const auto at0 = make_gap_layer(gap, 0.1, 0.0);
  CHECK(at0.mu == static_permeability(gap.phi, gap.ms_a_per_m,
                                       gap.diameter_nm, gap.temperature_k));
  CHECK(at0.mu > 1.0);
  CHECK(at0.eps == ferrofluid_permittivity(gap, 0.0));

  const auto at1 = make_gap_layer(gap, 0.1, 1.0);
  CHECK(at1.mu == 1.0);
}

TEST_CASE("single-interface reflection coefficients") {
  const double k = 0.05;
  const auto teflon = dielectric(2.1, k);
  const auto fluid = dielectric(2.5, k);

  // No contrast, no reflection.
  CHECK(fresnel(Polarization::TM, teflon, teflon) == 0.0);
  CHECK(fresnel(Polarization::TE, teflon, teflon) == 0.0);

  // Static dielectric contrast: TM sees (eps_i - eps_j)/(eps_i + eps_j),
  // TE sees nothing without magnetic contrast.
  CHECK(fresnel(Polarization::TM, teflon, fluid) ==
        doctest::Approx(-0.08695652173913043).epsilon(1e-12));
  CHECK(fresnel(Polarization::TE, teflon, fluid) == 0.0);

  // Ideal-metal static limits.
  LayerOptics metal;
  metal.ideal_metal_static = true;
  metal.kz = k;
  CHECK(fresnel(Polarization::TM, metal, teflon) == 1.0);
  CHECK(fresnel(Polarization::TM, teflon, metal) == -1.0);
  CHECK(fresnel(Polarization::TE, metal, teflon) == 0.0);
  CHECK(fresnel(Polarization::TE, teflon, metal) == 0.0);
  CHECK(fresnel(Polarization::TM, metal, metal) == 0.0);

  // Degenerate kz = 0 points fall back to the material contrast.
  const auto za = dielectric(2.0, 0.0);
  const auto zb = dielectric(3.0, 0.0);
  CHECK(fresnel(Polarization::TM, za, zb) == doctest::Approx(-0.2));
  CHECK(fresnel(Polarization::TE, za, zb) == 0.0);
  const auto zmu = dielectric(2.0, 0.0, 2.0);
  CHECK(fresnel(Polarization::TE, zmu, za) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("reflection is antisymmetric under interface reversal") {
  const double k = 0.02, xi = 0.8;
  const auto db = MaterialDatabase::from_json_text(testutil::read_text_file(
      std::string(TEST_DATA_DIR) + "/materials.json"));
  const auto a = make_layer(db.at("polystyrene").model, k, xi);
  const auto b = make_layer(db.at("gold").model, k, xi);
  const auto c = make_layer(db.at("teflon").model, k, 0.0);
  LayerOptics metal0;
  metal0.ideal_metal_static = true;
  metal0.kz = k;

  for (auto mode : {Polarization::TE, Polarization::TM}) {
    CHECK(fresnel(mode, a, b) == -fresnel(mode, b, a));
    CHECK(fresnel(mode, c, metal0) == -fresnel(mode, metal0, c));
    // Reversing both interfaces of a round trip leaves the product intact.
    CHECK(fresnel(mode, a, b) * fresnel(mode, c, metal0) ==
          fresnel(mode, b, a) * fresnel(mode, metal0, c));
  }
}

TEST_CASE("reflection magnitudes never exceed unity") {
  const auto db = MaterialDatabase::from_json_text(testutil::read_text_file(
      std::string(TEST_DATA_DIR) + "/materials.json"));
  const char* names[] = {"gold", "polystyrene", "teflon", "toluene", "vacuum"};
  for (const char* ni : names)
    for (const char* nj : names)
      for (double k : {1e-4, 0.01, 0.3})
        for (double xi : {0.0, 0.16, 3.0, 40.0}) {
          const auto li = make_layer(db.at(ni).model, k, xi);
          const auto lj = make_layer(db.at(nj).model, k, xi);
          CHECK(std::fabs(fresnel(Polarization::TM, li, lj)) <= 1.0);
          CHECK(std::fabs(fresnel(Polarization::TE, li, lj)) <= 1.0);
        }
}

TEST_CASE("reflection at the facing half-space") {
  auto stack = load_default_stack();

  // Static TM contrast between a 2.4 half-space and a 2.2 fluid.
  stack.a = testutil::constant_record("a", 2.4);
  stack.gap = testutil::plain_gap(testutil::constant_record("m", 2.2));
  CHECK(gap_reflection_Am(Polarization::TM, 0.1, 0.0, stack) ==
        doctest::Approx(0.2 / 4.6).epsilon(1e-12));
  // Without magnetic loading the static TE contrast vanishes.
  CHECK(gap_reflection_Am(Polarization::TE, 0.1, 0.0, stack) == 0.0);

  // Index-matched half-space and fluid reflect nothing at any frequency.
  stack.a = testutil::constant_record("a", 2.2);
  for (double xi : {0.0, 0.5, 5.0})
    CHECK(gap_reflection_Am(Polarization::TM, 0.1, xi, stack) == 0.0);

  // A magnetically loaded fluid turns on the static TE channel.
  auto loaded = load_default_stack();
  CHECK(gap_reflection_Am(Polarization::TE, 0.1, 0.0, loaded) != 0.0);
}

TEST_CASE("coated-wall reflection limits") {
  auto stack = load_default_stack();

  // Optically thick coating: the substrate becomes invisible.
  stack.b1_nm = 1e6;
  const double k = 0.1, xi = 0.5;
  const auto m = make_gap_layer(stack.gap, k, xi);
  const auto b1 = make_layer(stack.coating.model, k, xi);
  CHECK(effective_reflection(Polarization::TM, k, xi, stack) ==
        doctest::Approx(fresnel(Polarization::TM, b1, m)).epsilon(1e-12));

  // Zero-thickness coating: exactly the bare substrate coefficient.  With a
  // dielectric substrate this is the pure two-interface composition identity
  // and holds at every frequency including zero.
  auto diel = stack;
  diel.b1_nm = 0.0;
  diel.substrate = testutil::constant_record("wall", 4.0);
  for (auto mode : {Polarization::TE, Polarization::TM})
    for (double xiq : {0.0, 0.16, 2.0}) {
      const auto mm = make_gap_layer(diel.gap, k, xiq);
      const auto bb = make_layer(diel.substrate.model, k, xiq);
      CHECK(effective_reflection(mode, k, xiq, diel) ==
            doctest::Approx(fresnel(mode, bb, mm)).epsilon(1e-12));
    }

  // With a metal substrate the static-metal reflection convention assumes
  // the metal borders a non-magnetic medium, which every physical stack
  // guarantees (the coating has b1 > 0).  The collapse therefore holds at
  // xi > 0 for both modes and at xi = 0 for TM, where the flagged
  // coefficient is an exact +1.
  stack.b1_nm = 0.0;
  for (auto mode : {Polarization::TE, Polarization::TM})
    for (double xiq : {0.16, 2.0}) {
      const auto mm = make_gap_layer(stack.gap, k, xiq);
      const auto bb = make_layer(stack.substrate.model, k, xiq);
      CHECK(effective_reflection(mode, k, xiq, stack) ==
            doctest::Approx(fresnel(mode, bb, mm)).epsilon(1e-12));
    }
  {
    const auto mm = make_gap_layer(stack.gap, k, 0.0);
    const auto bb = make_layer(stack.substrate.model, k, 0.0);
    CHECK(effective_reflection(Polarization::TM, k, 0.0, stack) ==
          doctest::Approx(fresnel(Polarization::TM, bb, mm)).epsilon(1e-12));
  }
}

TEST_CASE("static TE coated-wall reflection ignores coating and substrate") {
  const auto db = MaterialDatabase::from_json_text(testutil::read_text_file(
      std::string(TEST_DATA_DIR) + "/materials.json"));
  auto stack = load_default_stack();
  stack.b1_nm = 10.0;
  const double k = 0.07;
  const double ref = effective_reflection(Polarization::TE, k, 0.0, stack);
  CHECK(ref != 0.0);

  for (double b1 : {5.0, 10.0, 15.0, 20.0})
    for (const char* metal : {"gold", "silver", "aluminum", "lithium"}) {
      auto v = stack;
      v.b1_nm = b1;
      v.substrate = db.at(metal);
      // Bit-for-bit equality: the substrate term carries a hard zero.
      CHECK(effective_reflection(Polarization::TE, k, 0.0, v) == ref);
    }
}
