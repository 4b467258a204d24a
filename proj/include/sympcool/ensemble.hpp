#pragma once

#include "sympcool/numerics.hpp"
#include "sympcool/species.hpp"

// Impact parameter ensembles for the two cooling environments and the
// distribution averages built on them. Atomic units throughout: energies in
// hartree (CM frame unless a name says lab), lengths in bohr, trap angular
// frequency in inverse atomic time.
//
// Environments:
//   single atom: one laser cooled ion in a harmonic well; its thermal spread
//     sets a Rayleigh distribution of impact parameters, width sigma(E).
//   crystal: the hot ion traverses a Coulomb crystal with ion spacing d; the
//     offset from the nearest lattice ion is areal-uniform up to d/2.
namespace sympcool::ensemble {

// Thermal transverse spread of the cold ion when the collision energy E sets
// the temperature scale: sigma = sqrt(E / (mu omega^2)).
double sigma(double e_cm, double mu, double omega);

// Rayleigh pdf of the single-atom environment, f(b) = (b/sigma^2)
// exp(-b^2 / 2 sigma^2) on [0, inf).
double pdf_single_atom(double b, double sigma);

// Areal pdf of the crystal environment, f(b) = 8 b / d^2 on [0, d/2].
double pdf_crystal(double b, double d);

// Crystal-averaged per-collision energy loss, CM frame, closed form:
// <dE> = 4 xi Q^2 ln((d E / Q)^2 + 1) / ((1 + xi)^2 d^2 E).
double mean_energy_loss_cc(double e_cm, const species::SpeciesPair& pr, double d);

// Same average expressed as a lab frame loss at the matching lab energy
// E_lab = (1 + xi) E; the lost fraction is frame independent.
double mean_energy_loss_cc_lab(double e_cm, const species::SpeciesPair& pr, double d);

// Closed-form upper bound on the single-atom average loss. Equals the
// crystal result with d replaced by 2 sigma. Collision counts and cooling
// times derived from it are therefore lower bounds.
double mean_energy_loss_sa_bound(double e_cm, const species::SpeciesPair& pr,
                                 double sigma);

// Rayleigh-averaged loss by quadrature; the reference the bound is checked
// against (quadrature value <= bound).
double mean_energy_loss_sa_quadrature(double e_cm, const species::SpeciesPair& pr,
                                      double sigma);

// Crystal average of the cubed peak field (q_at / r_min^2)^3 seen by the
// molecule. exact integrates the areal distribution in closed form; approx
// is the wide-crystal limit (6/5) E^4 q_at^3 / (d^2 Q^4), trustworthy once
// d E / Q >= 10.
struct FieldCubedAverage {
  double exact = 0;
  double approx = 0;
  double rel_dev = 0;      // |approx - exact| / exact
  bool approx_valid = false;
};
FieldCubedAverage mean_peak_field_cubed_cc(double e_cm, double d, double q_at,
                                           double q_prod);

// Effective constant spread for integral-mode single-atom cooling times:
// the first moment of sigma(E) under the weight w(E) = E^2 / ln((2 sigma(E)
// E / Q)^2 + 1) over [e_min, e_max]. For e_min / e_max < 0.01 the weight is
// dominated by its upper end and the ratio collapses to (6/7) sigma(e_max).
double sigma_tilde(double mu, double omega, double q_prod, double e_min,
                   double e_max);

// One cooling environment plus the geometry parameter it needs.
struct CoolingScenario {
  enum class Kind { single_atom, crystal };
  Kind kind = Kind::crystal;
  double omega = 0;  // trap angular frequency, single atom only
  double d = 0;      // ion spacing, crystal only

  static CoolingScenario single_atom(double omega);
  static CoolingScenario crystal(double d);

  bool is_single_atom() const { return kind == Kind::single_atom; }

  // Spread of the cold ion at collision energy e_cm (single atom only).
  double sigma_of(double e_cm, double mu) const;

  // Time between successive collisions. Single atom: half a trap period,
  // pi / omega, a lower bound on the true revisit time. Crystal: spacing
  // over relative speed, d sqrt(mu / 2 E).
  double tau(double e_cm, double mu) const;

  // Mean CM energy loss per collision in this environment. The single-atom
  // value is the closed-form upper bound on the loss, so times built from it
  // come out as lower bounds.
  double mean_loss(double e_cm, const species::SpeciesPair& pr) const;

  // Width parameter of the impact parameter distribution at this energy:
  // 2 sigma(E) for the single atom, d for the crystal. Useful where the two
  // environments share a formula.
  double effective_d(double e_cm, double mu) const;
};

} // namespace sympcool::ensemble
