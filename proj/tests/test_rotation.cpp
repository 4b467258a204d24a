#include "doctest.h"

#include <cmath>

#include "sympcool/numerics.hpp"
#include "sympcool/rotation.hpp"
#include "sympcool/units.hpp"

using namespace sympcool;

namespace {

species::SpeciesPair n2_ca(double qz = 2.2) {
  species::Species mol{"N2+", units::amu_to_me(28), 1, species::Polarity::apolar,
                       units::invcm_to_hartree(1.9224), qz, 0};
  species::Species at{"Ca+", units::amu_to_me(40), 1, species::Polarity::atom,
                      0, 0, 0};
  return species::make_pair(mol, at);
}

species::SpeciesPair mgh_mg() {
  species::Species mol{"MgH+", units::amu_to_me(25), 1, species::Polarity::polar,
                       units::invcm_to_hartree(6.387), 0, 1.42};
  species::Species at{"Mg+", units::amu_to_me(24), 1, species::Polarity::atom,
                      0, 0, 0};
  return species::make_pair(mol, at);
}

species::SpeciesPair hd_be() {
  species::Species mol{"HD+", units::amu_to_me(3), 1, species::Polarity::polar,
                       units::invcm_to_hartree(21.9), 0, 0.42};
  species::Species at{"Be+", units::amu_to_me(9), 1, species::Polarity::atom,
                      0, 0, 0};
  return species::make_pair(mol, at);
}

const double kD53 = units::um_to_bohr(5.3);

} // namespace

TEST_CASE("adiabatic suppression exponent") {
  const auto pr = n2_ca();
  // oracle: direct arithmetic at 1 eV
  CHECK(rotation::adiabatic_exponent(units::ev_to_hartree(1.0), pr.mu,
                                     pr.mol.rot_const) ==
        doctest::Approx(2.4042751436730447).epsilon(1e-13));
  CHECK_THROWS_AS(rotation::adiabatic_exponent(0.0, 1.0, 1.0),
                  std::invalid_argument);
  // slower collisions are more adiabatic
  CHECK(rotation::adiabatic_exponent(0.01, pr.mu, pr.mol.rot_const) >
        rotation::adiabatic_exponent(0.02, pr.mu, pr.mol.rot_const));
}

TEST_CASE("quadrupole-coupled mean excitation per collision") {
  const auto pr = n2_ca();
  const double e = units::ev_to_hartree(1.0);
  // oracle: independent arithmetic through the averaged cubed field
  CHECK(rotation::apolar_mean_excitation(e, pr, kD53) ==
        doctest::Approx(3.3982266384248838e-08).epsilon(1e-12));
  CHECK(rotation::apolar_mean_excitation(e, pr, kD53,
                                         rotation::FieldAverage::approximate) ==
        doctest::Approx(3.3982266384253768e-08).epsilon(1e-12));
}

TEST_CASE("per-collision form averages back to the closed form") {
  const auto pr = n2_ca();
  numerics::RandomStream rs(1311);
  for (int i = 0; i < 5; ++i) {
    const double e = units::ev_to_hartree(0.2 + 2.0 * rs.uniform());
    const double d = units::um_to_bohr(2.0 + 10.0 * rs.uniform());
    const auto quad = numerics::integrate(
        [&](double b) {
          return rotation::apolar_single_collision(e, b, pr) *
                 ensemble::pdf_crystal(b, d);
        },
        0.0, 0.5 * d, {0.0, 1e-12, 60});
    CHECK(rotation::apolar_mean_excitation(e, pr, d) ==
          doctest::Approx(quad.value).epsilon(1e-9));
  }
}

TEST_CASE("polarity contracts are enforced") {
  const auto apol = n2_ca();
  const auto pol = mgh_mg();
  CHECK_THROWS_AS(rotation::apolar_single_collision(0.05, 100.0, pol),
                  std::invalid_argument);
  CHECK_THROWS_AS(rotation::apolar_mean_excitation(0.05, pol, kD53),
                  std::invalid_argument);
  CHECK_THROWS_AS(rotation::apolar_cycle_integral(0.05, 0.01, pol, kD53),
                  std::invalid_argument);
  CHECK_THROWS_AS(rotation::polar_mean_excitation(0.05, apol, kD53),
                  std::invalid_argument);
}

TEST_CASE("cycle excitation sum against the oracle") {
  const auto pr = n2_ca();
  const double e_init = units::ev_to_hartree(1.5);
  const double e_final = units::ev_to_hartree(0.1);
  const auto r = rotation::cycle_excitation(e_init, e_final, pr, kD53);
  // oracle: independent reimplementation of the fixed-width sum
  CHECK(r.phi_mean == doctest::Approx(0.041463795476933261).epsilon(1e-10));
  CHECK(r.intervals.size() == 28);
  CHECK(r.phi_lo <= r.phi_mean);
  CHECK(r.phi_mean <= r.phi_hi);
  CHECK(r.phi_lo >= 0.0);
  CHECK(r.eps_small_ok);
  CHECK(r.low_field_ok);

  // oracle: independent quadrature of excitation per unit energy lost
  CHECK(rotation::apolar_cycle_integral(e_init, e_final, pr, kD53) ==
        doctest::Approx(0.040725182650455126).epsilon(1e-10));
}

TEST_CASE("cycle sum approaches the integral as the width shrinks") {
  const auto pr = n2_ca();
  const double e_init = units::ev_to_hartree(1.5);
  const double e_final = units::ev_to_hartree(0.1);
  const double target = rotation::apolar_cycle_integral(e_init, e_final, pr, kD53);
  double prev_gap = 1e300;
  for (double w_ev : {0.05, 0.025, 0.0125}) {
    const double phi = rotation::cycle_excitation(e_init, e_final, pr, kD53,
                                                  units::ev_to_hartree(w_ev))
                           .phi_mean;
    const double gap = std::abs(phi - target);
    CHECK(gap < prev_gap);
    prev_gap = gap;
  }
  CHECK(prev_gap / target < 5e-3);
}

TEST_CASE("accumulated excitation is monotone in the cycle endpoints") {
  const auto pr = n2_ca();
  const double e_final = units::ev_to_hartree(0.1);
  double prev = -1.0;
  for (double ev : {0.5, 1.0, 1.5, 2.0}) {
    const double phi = rotation::cycle_excitation(units::ev_to_hartree(ev),
                                                  e_final, pr, kD53)
                           .phi_mean;
    CHECK(phi > prev);
    prev = phi;
  }
  const double lo = rotation::cycle_excitation(units::ev_to_hartree(1.5),
                                               units::ev_to_hartree(0.2), pr, kD53)
                        .phi_mean;
  const double hi = rotation::cycle_excitation(units::ev_to_hartree(1.5),
                                               units::ev_to_hartree(0.05), pr, kD53)
                        .phi_mean;
  CHECK(hi > lo);
}

TEST_CASE("cycle excitation carries the quadratic moment scaling exactly") {
  const double e_init = units::ev_to_hartree(1.5);
  const double e_final = units::ev_to_hartree(0.1);
  const double phi1 = rotation::cycle_excitation(e_init, e_final, n2_ca(2.2),
                                                 kD53)
                          .phi_mean;
  const double phi2 = rotation::cycle_excitation(e_init, e_final, n2_ca(4.4),
                                                 kD53)
                          .phi_mean;
  CHECK(phi2 == doctest::Approx(4.0 * phi1).epsilon(1e-12));
}

TEST_CASE("spacing enters only through the logarithm") {
  const auto pr = n2_ca();
  const double e_init = units::ev_to_hartree(1.5);
  const double e_final = units::ev_to_hartree(0.1);
  const double p1 = rotation::cycle_excitation(e_init, e_final, pr, kD53).phi_mean;
  const double p4 = rotation::cycle_excitation(e_init, e_final, pr, 4.0 * kD53).phi_mean;
  CHECK(std::abs(p4 - p1) / p1 < 0.25);
}

TEST_CASE("large per-collision excitation clears the small-excitation flag") {
  // moment inflated until single-interval values pass 0.1
  const auto pr = n2_ca(2000.0);
  const auto r = rotation::cycle_excitation(units::ev_to_hartree(2.0),
                                            units::ev_to_hartree(0.5), pr, kD53);
  CHECK_FALSE(r.eps_small_ok);
  CHECK(r.max_eps > 0.1);
}

TEST_CASE("dipole-coupled mean excitation") {
  const auto pr = hd_be();
  const double e = units::ev_to_hartree(1.0);
  const auto pm = rotation::polar_mean_excitation(e, pr, 0.5 * kD53);
  // oracle: independent quadrature of the adiabatic two-level integrand
  CHECK(pm.value == doctest::Approx(1.1598381252386964e-07).epsilon(1e-10));
  CHECK(pm.high_field_fraction >= 0.0);
  CHECK(pm.high_field_fraction <= 1.0);
  CHECK(pm.low_field_ok);
  CHECK_THROWS_AS(rotation::polar_mean_excitation(-1.0, pr, 100.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(rotation::polar_mean_excitation(1.0, pr, 0.0),
                  std::invalid_argument);
}

TEST_CASE("strong dipole coupling trips the regime flag") {
  const auto pr = mgh_mg();
  const auto low = rotation::polar_mean_excitation(units::ev_to_hartree(1.0), pr,
                                                   0.5 * kD53);
  CHECK(low.low_field_ok);
  const auto high = rotation::polar_mean_excitation(units::ev_to_hartree(3.0), pr,
                                                    0.5 * kD53);
  CHECK_FALSE(high.low_field_ok);
  CHECK(high.high_field_fraction > 0.25);
}

TEST_CASE("converged dipole average scales as the inverse square cutoff") {
  const auto pr = mgh_mg();
  const double e = units::ev_to_hartree(1.0);
  const double b0 = units::um_to_bohr(20.0);
  const double v1 = rotation::polar_mean_excitation(e, pr, b0).value;
  const double v2 = rotation::polar_mean_excitation(e, pr, 2.0 * b0).value;
  CHECK(4.0 * v2 == doctest::Approx(v1).epsilon(0.02));
}

TEST_CASE("cycle flags aggregate the per-edge regime checks") {
  const auto pr = mgh_mg();
  const auto r = rotation::cycle_excitation(units::ev_to_hartree(3.0),
                                            units::ev_to_hartree(0.1), pr, kD53);
  CHECK_FALSE(r.low_field_ok); // edges above ~2.1 eV sit in the high-field regime
  bool any_flagged = false, any_clear = false;
  for (const auto& iv : r.intervals) {
    any_flagged = any_flagged || !iv.low_field_ok;
    any_clear = any_clear || iv.low_field_ok;
  }
  CHECK(any_flagged);
  CHECK(any_clear);
}

TEST_CASE("budget inversion lands on the requested excitation") {
  const auto pr = n2_ca();
  const auto cc = ensemble::CoolingScenario::crystal(kD53);
  const double e_final = units::ev_to_hartree(0.1);
  const auto cross = rotation::excitation_budget_inverse(pr, cc, e_final, 0.05);
  CHECK(cross.e_lab == doctest::Approx((1.0 + pr.xi) * cross.e_cm).epsilon(1e-14));
  const double phi = rotation::cycle_excitation(cross.e_cm, e_final, pr, kD53).phi_mean;
  CHECK(phi == doctest::Approx(0.05).epsilon(1e-3));
  CHECK(cross.reliable);

  // zero budget collapses onto the cycle floor
  const auto zero = rotation::excitation_budget_inverse(pr, cc, e_final, 0.0);
  CHECK(zero.e_cm == doctest::Approx(e_final));
}

TEST_CASE("budget inversion failure modes") {
  const auto pr = n2_ca();
  const auto cc = ensemble::CoolingScenario::crystal(kD53);
  const auto sa = ensemble::CoolingScenario::single_atom(units::trap_omega_au(1.0));
  CHECK_THROWS_AS(rotation::excitation_budget_inverse(pr, sa, 0.001, 0.05),
                  std::invalid_argument);
  CHECK_THROWS_AS(rotation::excitation_budget_inverse(pr, cc, 0.0, 0.05),
                  std::invalid_argument);
  CHECK_THROWS_AS(rotation::excitation_budget_inverse(pr, cc, 0.001, -1.0),
                  std::invalid_argument);
  // a budget no starting energy can reach reports the failed bracket
  CHECK_THROWS_AS(rotation::excitation_budget_inverse(
                      pr, cc, units::ev_to_hartree(0.1), 1e9),
                  numerics::BracketError);
}

TEST_CASE("default cycle width is 0.05 eV") {
  CHECK(rotation::default_delta_e() ==
        doctest::Approx(units::ev_to_hartree(0.05)).epsilon(1e-14));
}

TEST_CASE("cycle input validation") {
  const auto pr = n2_ca();
  CHECK_THROWS_AS(rotation::cycle_excitation(0.01, 0.05, pr, kD53),
                  std::invalid_argument);
  CHECK_THROWS_AS(rotation::cycle_excitation(0.05, 0.0, pr, kD53),
                  std::invalid_argument);
  CHECK_THROWS_AS(rotation::cycle_excitation(0.05, 0.01, pr, kD53, 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(rotation::cycle_excitation(0.05, 0.01, pr, 0.0),
                  std::invalid_argument);
  const auto empty = rotation::cycle_excitation(0.05, 0.05, pr, kD53);
  CHECK(empty.phi_mean == 0.0);
  CHECK(empty.intervals.empty());
}
