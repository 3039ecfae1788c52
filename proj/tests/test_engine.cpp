#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>

#include "ferrocasimir/analysis.hpp"
#include "ferrocasimir/asymptotics.hpp"
#include "ferrocasimir/engine.hpp"
#include "ferrocasimir/errors.hpp"
#include "ferrocasimir/quadrature.hpp"

#include "helpers.hpp"

using namespace ferrocasimir;

namespace {

const MaterialDatabase& db() {
  static const MaterialDatabase d =
      testutil::load_db(std::string(TEST_DATA_DIR) + "/materials.json");
  return d;
}

/// Dielectric triple (a | fluid | coating) over a metallic substrate, with a
/// magnetically inert gap, for comparisons against the thermal TM forms.
FourLayerStack coated_metal_stack(double eps_a, double eps_m, double eps_b1,
                                  double b1_nm) {
  FourLayerStack s;
  s.a = testutil::constant_record("a", eps_a);
  s.gap = testutil::plain_gap(testutil::constant_record("m", eps_m));
  s.coating = testutil::constant_record("b1", eps_b1);
  s.b1_nm = b1_nm;
  s.substrate = testutil::drude_record("wall", 9.0, 0.03);
  return s;
}

}  // namespace

TEST_CASE("Matsubara energies") {
  CHECK(matsubara_energy(0, 300.0) == 0.0);
  CHECK(matsubara_energy(1, 300.0) ==
        doctest::Approx(0.162432905216605).epsilon(1e-13));
  CHECK(matsubara_energy(7, 300.0) ==
        doctest::Approx(7.0 * matsubara_energy(1, 300.0)).epsilon(1e-15));
  CHECK(matsubara_energy(1, 600.0) ==
        doctest::Approx(2.0 * matsubara_energy(1, 300.0)).epsilon(1e-15));
}

TEST_CASE("engine configuration invariants") {
  EngineConfig ok;
  CHECK_NOTHROW(ok.validate());

  auto bad = ok;
  bad.temperature_k = 0.0;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = ok;
  bad.rel_tol = 0.0;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = ok;
  bad.rel_tol = 1e-2;  // looser than the supported ceiling
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = ok;
  bad.y_cut = 20.0;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = ok;
  bad.n_cap = 0;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = ok;
  bad.tail_stop = 0;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
}

TEST_CASE("adaptive quadrature base cases") {
  auto sq = [](double y) { return y * y; };
  const auto r = integrate_adaptive(sq, 0.0, 1.0, 1e-12);
  CHECK(r.value == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(r.evals >= 15);
  CHECK(r.error >= 0.0);

  CHECK(integrate_adaptive(sq, 1.0, 1.0, 1e-9).value == 0.0);

  // A jump keeps a fixed share of the error in the panel that straddles it,
  // so refinement can never terminate and must fail loudly.
  auto step = [](double y) { return y < 3.14159 ? 0.0 : 1.0; };
  CHECK_THROWS_AS(integrate_adaptive(step, 0.0, 10.0, 1e-9), NumericError);
}

TEST_CASE("a contrast-free stack produces exactly zero pressure") {
  const auto stack = testutil::uniform_stack(2.0);
  EngineConfig cfg;

  for (auto mode : {Polarization::TE, Polarization::TM}) {
    CHECK(mode_term(0, mode, 50.0, stack, cfg) == 0.0);
    CHECK(mode_term(3, mode, 50.0, stack, cfg) == 0.0);
  }

  const auto p = casimir_pressure(50.0, stack, cfg);
  CHECK(p.te0 == 0.0);
  CHECK(p.tm0 == 0.0);
  CHECK(p.te_pos == 0.0);
  CHECK(p.tm_pos == 0.0);
  CHECK(p.total == 0.0);
  CHECK(p.normalized == 0.0);
  CHECK(p.n_used == 1);
  CHECK_FALSE(p.truncated);
}

TEST_CASE("thermal TE term reproduces the closed polylog form") {
  // Magnetic loading tuned to land on known static permeabilities; the
  // closed form is exact for any dielectric arrangement.
  EngineConfig cfg;
  for (double mu_target : {1.1, 2.0, 5.0}) {
    FourLayerStack s = coated_metal_stack(2.4, 2.2, 2.1, 10.0);
    s.gap.phi = 0.05;
    s.gap.diameter_nm = 20.0;
    s.gap.ms_a_per_m =
        testutil::ms_for_static_mu(mu_target, 0.05, 20.0, 300.0);
    const double mu = static_permeability(s.gap.phi, s.gap.ms_a_per_m,
                                          s.gap.diameter_nm,
                                          s.gap.temperature_k);
    for (double ell : {10.0, 100.0, 1000.0}) {
      const double engine_te0 = mode_term(0, Polarization::TE, ell, s, cfg);
      CHECK(engine_te0 ==
            doctest::Approx(te_thermal(ell, mu, 300.0)).epsilon(1e-8));
    }
  }
}

TEST_CASE("thermal TM term reproduces its limiting closed forms") {
  EngineConfig cfg;
  const StaticTriple t{2.4, 2.2, 2.1};

  // Coating much thicker than the gap.
  const auto thick = coated_metal_stack(2.4, 2.2, 2.1, 1000.0);
  CHECK(mode_term(0, Polarization::TM, 1.0, thick, cfg) ==
        doctest::Approx(tm_thermal_small_gap(1.0, t, 300.0)).epsilon(1e-3));

  // Coating much thinner than the gap.
  const auto thin = coated_metal_stack(2.4, 2.2, 2.1, 0.01);
  CHECK(mode_term(0, Polarization::TM, 100.0, thin, cfg) ==
        doctest::Approx(tm_thermal_large_gap(100.0, 0.01, t, 300.0))
            .epsilon(1e-3));
}

TEST_CASE("near-ideal reflectors recover the ideal-conductor magnitude") {
  FourLayerStack s;
  s.a = testutil::drude_record("mirror", 1e4, 1e-6);
  s.gap = testutil::plain_gap(testutil::vacuum_record("empty"));
  s.coating = testutil::drude_record("mirror2", 1e4, 1e-6);
  s.b1_nm = 10.0;
  s.substrate = testutil::drude_record("mirror3", 1e4, 1e-6);

  EngineConfig cfg;
  const auto p = casimir_pressure(50.0, s, cfg);
  CHECK(p.normalized > -1.0);
  CHECK(p.normalized < -0.98);
}

TEST_CASE("default stack pressure: trapping window and long-range attraction") {
  const auto stack = testutil::reference_stack(db());
  EngineConfig cfg;
  CHECK(casimir_pressure(20.0, stack, cfg).total < 0.0);
  CHECK(casimir_pressure(100.0, stack, cfg).total > 0.0);
  CHECK(casimir_pressure(1000.0, stack, cfg).total < 0.0);
}

TEST_CASE("breakdown fields are a decomposition and runs are reproducible") {
  const auto stack = testutil::reference_stack(db());
  EngineConfig cfg;
  for (double ell : {20.0, 100.0, 500.0}) {
    const auto p = casimir_pressure(ell, stack, cfg);
    CHECK(p.total ==
          doctest::Approx(p.te0 + p.tm0 + p.te_pos + p.tm_pos)
              .epsilon(1e-12));
    CHECK(p.normalized ==
          doctest::Approx(p.total /
                          std::fabs(perfect_conductor_pressure(ell)))
              .epsilon(1e-12));
    CHECK(p.n_used >= 1);
    CHECK(p.quad_evals > 0);
    CHECK_FALSE(p.truncated);

    const auto q = casimir_pressure(ell, stack, cfg);
    CHECK(p.te0 == q.te0);
    CHECK(p.tm0 == q.tm0);
    CHECK(p.te_pos == q.te_pos);
    CHECK(p.tm_pos == q.tm_pos);
    CHECK(p.total == q.total);
    CHECK(p.normalized == q.normalized);
    CHECK(p.n_used == q.n_used);
    CHECK(p.quad_evals == q.quad_evals);
  }
}

TEST_CASE("static TE pressure ignores the coating and substrate bit-for-bit") {
  auto stack = testutil::reference_stack(db());
  EngineConfig cfg;
  const double ref = mode_term(0, Polarization::TE, 50.0, stack, cfg);
  CHECK(ref < 0.0);
  for (double b1 : {5.0, 20.0})
    for (const char* metal : {"gold", "silver"}) {
      auto v = stack;
      v.b1_nm = b1;
      v.substrate = db().at(metal);
      CHECK(mode_term(0, Polarization::TE, 50.0, v, cfg) == ref);
    }
}

TEST_CASE("static TE pressure scaling laws") {
  auto stack = testutil::reference_stack(db());
  EngineConfig cfg;

  // ell^-3: te0 * ell^3 is constant across two decades.
  const double c10 = mode_term(0, Polarization::TE, 10.0, stack, cfg) * 1e3;
  const double c100 = mode_term(0, Polarization::TE, 100.0, stack, cfg) * 1e6;
  const double c1000 =
      mode_term(0, Polarization::TE, 1000.0, stack, cfg) * 1e9;
  CHECK(c10 < 0.0);
  CHECK(c100 == doctest::Approx(c10).epsilon(1e-9));
  CHECK(c1000 == doctest::Approx(c10).epsilon(1e-9));

  // Dilute loading: susceptibility is linear in phi, so te0 ~ phi^2 ...
  auto lo = stack, hi = stack;
  lo.gap.phi = 1e-4;
  hi.gap.phi = 2e-4;
  const double p_lo = mode_term(0, Polarization::TE, 100.0, lo, cfg);
  const double p_hi = mode_term(0, Polarization::TE, 100.0, hi, cfg);
  CHECK(p_hi / p_lo == doctest::Approx(4.0).epsilon(0.01));

  // ... and ~ D^6 at fixed dilute phi.
  auto d5 = stack, d10 = stack;
  d5.gap.phi = 1e-3;
  d10.gap.phi = 1e-3;
  d5.gap.diameter_nm = 5.0;
  d10.gap.diameter_nm = 10.0;
  const double p_d5 = mode_term(0, Polarization::TE, 100.0, d5, cfg);
  const double p_d10 = mode_term(0, Polarization::TE, 100.0, d10, cfg);
  CHECK(p_d10 / p_d5 == doctest::Approx(64.0).epsilon(0.03));
}

TEST_CASE("Matsubara sum termination") {
  const auto stack = testutil::reference_stack(db());

  // Small gaps need hundreds of terms: a cap of 2 leaves a tail that is far
  // from negligible and must escalate.
  EngineConfig capped;
  capped.n_cap = 2;
  CHECK_THROWS_AS(casimir_pressure(20.0, stack, capped), NumericError);

  // A cap that bites only after the terms have decayed below the escalation
  // threshold reports the truncation without failing.
  EngineConfig soft;
  soft.n_cap = 60;
  soft.tail_stop = 100000;  // never satisfied: every run ends at the cap
  const auto p = casimir_pressure(500.0, stack, soft);
  CHECK(p.truncated);

  EngineConfig deflt;
  const auto full = casimir_pressure(500.0, stack, deflt);
  CHECK_FALSE(full.truncated);
  CHECK(p.total == doctest::Approx(full.total).epsilon(1e-6));
}

TEST_CASE("naive trapezoid oracle corroborates the adaptive engine") {
  const auto stack = testutil::reference_stack(db());
  EngineConfig cfg;
  const auto p = casimir_pressure(100.0, stack, cfg);
  const double brute = brute_force_pressure(100.0, stack, p.n_used, 2000);
  CHECK(brute == doctest::Approx(p.total).epsilon(1e-5));

  CHECK_THROWS_AS(brute_force_pressure(100.0, stack, 5, 1), ConfigError);
  CHECK_THROWS_AS(brute_force_pressure(0.0, stack, 5, 100), ConfigError);
  CHECK(brute_force_pressure(100.0, testutil::uniform_stack(2.0), 5, 64) ==
        0.0);
}
