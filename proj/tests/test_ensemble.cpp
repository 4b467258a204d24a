#include "doctest.h"

#include <cmath>
#include <numbers>

#include "sympcool/ensemble.hpp"
#include "sympcool/kinematics.hpp"
#include "sympcool/numerics.hpp"
#include "sympcool/species.hpp"
#include "sympcool/units.hpp"

using namespace sympcool;

namespace {

species::SpeciesPair mgh_mg() {
  species::Species mol{"MgH+", units::amu_to_me(25), 1, species::Polarity::polar,
                       units::invcm_to_hartree(6.387), 0, 1.42};
  species::Species at{"Mg+", units::amu_to_me(24), 1, species::Polarity::atom,
                      0, 0, 0};
  return species::make_pair(mol, at);
}

const double kOmega1MHz = units::trap_omega_au(1.0);

} // namespace

TEST_CASE("thermal spread of the cold ion") {
  const auto pr = mgh_mg();
  const double e = units::ev_to_hartree(2.0);
  const double sig = ensemble::sigma(e, pr.mu, kOmega1MHz);
  // oracle: direct arithmetic in atomic units
  CHECK(units::bohr_to_um(sig) ==
        doctest::Approx(631.81231103625578).epsilon(1e-12));
  // defining identity sigma^2 mu omega^2 = E
  CHECK(sig * sig * pr.mu * kOmega1MHz * kOmega1MHz ==
        doctest::Approx(e).epsilon(1e-13));
}

TEST_CASE("impact parameter densities normalize to one") {
  const double d = units::um_to_bohr(5.29);
  const auto cc = numerics::integrate(
      [d](double b) { return ensemble::pdf_crystal(b, d); }, 0.0, 0.5 * d);
  CHECK(cc.value == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(ensemble::pdf_crystal(0.6 * d, d) == 0.0);

  const double sig = units::um_to_bohr(300.0);
  const auto sa = numerics::integrate(
      [sig](double b) { return ensemble::pdf_single_atom(b, sig); }, 0.0,
      14.0 * sig);
  CHECK(sa.value == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("crystal mean loss: closed form equals the distribution average") {
  const auto pr = mgh_mg();
  const double e = units::ev_to_hartree(2.0);
  const double d = units::um_to_bohr(5.29);
  const double closed = ensemble::mean_energy_loss_cc(e, pr, d);
  // oracle: independent quadrature of dE(b) against the areal density
  CHECK(units::hartree_to_ev(closed) ==
        doctest::Approx(6.5933112810606793e-07).epsilon(1e-12));
  const auto quad = numerics::integrate(
      [&](double b) {
        return kinematics::energy_transfer(e, e, b, pr.xi, pr.q_prod) *
               ensemble::pdf_crystal(b, d);
      },
      0.0, 0.5 * d);
  CHECK(closed == doctest::Approx(quad.value).epsilon(1e-9));
  CHECK(ensemble::mean_energy_loss_cc_lab(e, pr, d) ==
        doctest::Approx((1.0 + pr.xi) * closed).epsilon(1e-14));
}

TEST_CASE("crystal mean loss monotonicities") {
  const auto pr = mgh_mg();
  const double d = units::um_to_bohr(5.29);
  double prev_de = 1e300, prev_de_e = 0;
  // start above e/d so the loss itself is already decreasing
  for (double ev = 0.05; ev <= 10.0; ev *= 1.2) {
    const double e = units::ev_to_hartree(ev);
    const double de = ensemble::mean_energy_loss_cc(e, pr, d);
    CHECK(de < prev_de);
    CHECK(de * e > prev_de_e); // log growth of the product
    prev_de = de;
    prev_de_e = de * e;
  }
}

TEST_CASE("crystal mean loss matches a sampled average") {
  const auto pr = mgh_mg();
  const double e = units::ev_to_hartree(1.0);
  const double d = units::um_to_bohr(5.29);
  numerics::RandomStream rs(424242);
  const int n = 1'000'000;
  double sum = 0, sum2 = 0;
  for (int i = 0; i < n; ++i) {
    const double b = rs.impact_crystal(d);
    const double de = kinematics::energy_transfer(e, e, b, pr.xi, pr.q_prod);
    sum += de;
    sum2 += de * de;
  }
  const double mean = sum / n;
  const double se = std::sqrt((sum2 / n - mean * mean) / (n - 1.0));
  const double truth = ensemble::mean_energy_loss_cc(e, pr, d);
  CHECK(std::abs(mean - truth) < 3.0 * se);
}

TEST_CASE("single-atom loss: closed-form bound sits above the quadrature") {
  const auto pr = mgh_mg();
  const double e = units::ev_to_hartree(0.5);
  const double sig = ensemble::sigma(e, pr.mu, kOmega1MHz);
  const double quad = ensemble::mean_energy_loss_sa_quadrature(e, pr, sig);
  const double bound = ensemble::mean_energy_loss_sa_bound(e, pr, sig);
  // oracle: independent quadrature over the thermal density
  CHECK(units::hartree_to_ev(quad) ==
        doctest::Approx(1.283137863571123e-10).epsilon(1e-9));
  CHECK(units::hartree_to_ev(bound) ==
        doctest::Approx(2.5542370804341078e-10).epsilon(1e-12));
  CHECK(quad <= bound);

  // the ordering holds across a grid of energies and spreads
  for (double ev : {0.05, 0.5, 2.0})
    for (double scale : {0.3, 1.0, 3.0}) {
      const double ee = units::ev_to_hartree(ev);
      const double ss = scale * ensemble::sigma(ee, pr.mu, kOmega1MHz);
      CHECK(ensemble::mean_energy_loss_sa_quadrature(ee, pr, ss) <=
            ensemble::mean_energy_loss_sa_bound(ee, pr, ss));
    }
}

TEST_CASE("crystal-averaged cubed peak field") {
  const double e = units::ev_to_hartree(1.0);
  const double d = units::um_to_bohr(5.3);
  const auto f = ensemble::mean_peak_field_cubed_cc(e, d, 1.0, 1.0);
  // oracle: independent quadrature and wide-crystal arithmetic
  CHECK(f.exact == doctest::Approx(2.1818695171937341e-16).epsilon(1e-12));
  CHECK(f.approx == doctest::Approx(1.2 * e * e * e * e / (d * d)).epsilon(1e-14));
  CHECK(f.exact >= 0.0);
  CHECK(f.approx_valid);
  CHECK(f.rel_dev < 1e-9);

  const auto quad = numerics::integrate(
      [&](double b) {
        return ensemble::pdf_crystal(b, d) *
               kinematics::peak_field_cubed(e, b, 1.0, 1.0);
      },
      0.0, 0.5 * d);
  CHECK(f.exact == doctest::Approx(quad.value).epsilon(1e-10));
}

TEST_CASE("wide-crystal field limit and its validity boundary") {
  // dE/Q = 1000: the limit is good to 0.1%
  const double d = 1000.0;
  const auto wide = ensemble::mean_peak_field_cubed_cc(1.0, d, 1.0, 1.0);
  CHECK(wide.rel_dev < 1e-3);
  CHECK(wide.approx_valid);

  // closest-approach scale comparable to the cutoff: the limit is > 10% off
  const double e_small = 1.0 / d; // p = Q/2E = d/2
  const auto narrow = ensemble::mean_peak_field_cubed_cc(e_small, d, 1.0, 1.0);
  CHECK(narrow.rel_dev > 0.10);
  CHECK_FALSE(narrow.approx_valid);
}

TEST_CASE("effective spread for whole-cycle single-atom estimates") {
  const auto pr = mgh_mg();
  const double e_max = units::ev_to_hartree(2.0);
  // the weight collapses onto the upper end: exactly (6/7) sigma(e_max)
  const double lim = ensemble::sigma_tilde(pr.mu, kOmega1MHz, pr.q_prod,
                                           1e-3 * e_max, e_max);
  CHECK(lim == doctest::Approx((6.0 / 7.0) *
                               ensemble::sigma(e_max, pr.mu, kOmega1MHz))
                   .epsilon(1e-12));
  // quadrature branch at e_min = 0.1 e_max; oracle: independent quadrature
  const double mid = ensemble::sigma_tilde(pr.mu, kOmega1MHz, pr.q_prod,
                                           0.1 * e_max, e_max);
  CHECK(units::bohr_to_um(mid) ==
        doctest::Approx(539.05779409879653).epsilon(1e-9));
  // degenerate range pins to sigma(e_max)
  const double deg = ensemble::sigma_tilde(pr.mu, kOmega1MHz, pr.q_prod, e_max,
                                           e_max);
  CHECK(deg == doctest::Approx(ensemble::sigma(e_max, pr.mu, kOmega1MHz))
                   .epsilon(1e-12));
}

TEST_CASE("scenario bookkeeping") {
  const auto pr = mgh_mg();
  const double e = units::ev_to_hartree(1.0);
  const double d = units::um_to_bohr(5.29);

  const auto cc = ensemble::CoolingScenario::crystal(d);
  CHECK_FALSE(cc.is_single_atom());
  CHECK(cc.tau(e, pr.mu) ==
        doctest::Approx(d * std::sqrt(0.5 * pr.mu / e)).epsilon(1e-14));
  CHECK(cc.effective_d(e, pr.mu) == doctest::Approx(d));
  CHECK(cc.mean_loss(e, pr) ==
        doctest::Approx(ensemble::mean_energy_loss_cc(e, pr, d)).epsilon(1e-14));

  const auto sa = ensemble::CoolingScenario::single_atom(kOmega1MHz);
  CHECK(sa.is_single_atom());
  CHECK(sa.tau(e, pr.mu) ==
        doctest::Approx(std::numbers::pi / kOmega1MHz).epsilon(1e-14));
  const double sig = sa.sigma_of(e, pr.mu);
  CHECK(sig == doctest::Approx(ensemble::sigma(e, pr.mu, kOmega1MHz)).epsilon(1e-14));
  CHECK(sa.effective_d(e, pr.mu) == doctest::Approx(2.0 * sig).epsilon(1e-14));
  CHECK(sa.mean_loss(e, pr) ==
        doctest::Approx(ensemble::mean_energy_loss_sa_bound(e, pr, sig))
            .epsilon(1e-14));
}
