#pragma once

#include <vector>

#include "sympcool/ensemble.hpp"
#include "sympcool/species.hpp"
#include "sympcool/units.hpp"

// Rotational excitation of the molecular ion by the collision-time electric
// field of the coolant ion. Apolar molecules couple through the quadrupole
// moment (perturbative kick, closed forms); polar molecules through the
// dipole (adiabatic two-level model, quadrature). All excitation values are
// squared-amplitude populations, dimensionless; energies hartree, CM frame.
namespace sympcool::rotation {

// Adiabaticity constant of the perturbative field-kick model. Imported as an
// opaque calibration constant; single definition site.
inline constexpr double kAdiabaticity = 1.86;

// Exponent A = 6 kappa B sqrt(mu / E^3) controlling adiabatic suppression.
double adiabatic_exponent(double e_cm, double mu, double b_rot);

// Per-collision excitation of an apolar molecule at impact parameter b:
// kappa^2 Q_Z^2 mu (1 + A) e^{-A} / (20 E^3) * eps0^3(E, b). Throws for a
// polar molecule (the adiabatic model has no per-collision form).
double apolar_single_collision(double e_cm, double b,
                               const species::SpeciesPair& pr);

// Which closed form of the crystal field-cubed average feeds the mean.
enum class FieldAverage {
  exact,       // full closed form, valid at all d E / Q
  approximate  // wide-crystal limit (6/5) E^4 q_at^3 / (d^2 Q^4)
};

// Crystal-averaged single-collision excitation of an apolar molecule. The
// exact field average keeps this identical to the f_CC average of
// apolar_single_collision; the approximate one is the closed-form integrand
// the cycle quadrature uses.
double apolar_mean_excitation(double e_cm, const species::SpeciesPair& pr,
                              double d, FieldAverage avg = FieldAverage::exact);

// Accumulated apolar excitation over a cooling cycle as a quadrature of
// mean excitation per unit energy lost, using the approximate field average.
double apolar_cycle_integral(double e_init, double e_final,
                             const species::SpeciesPair& pr, double d);

// Adiabatic two-level estimate for a polar molecule, averaged over impact
// parameters up to b_max. The estimate is trusted only in the low-field
// regime; high_field_fraction is the share of the b integrand where the
// dipole coupling D q_at / (sqrt(3) B r^2) exceeds the rotational splitting,
// and low_field_ok clears when that share stays below 0.25.
struct PolarMean {
  double value = 0;
  double high_field_fraction = 0;
  bool low_field_ok = true;
};
PolarMean polar_mean_excitation(double e_cm, const species::SpeciesPair& pr,
                                double b_max);

struct ExcitationInterval {
  double e_hi = 0;
  double e_lo = 0;
  double eps_hi = 0;  // mean excitation at the upper edge
  double eps_lo = 0;  // and at the lower edge
  double n = 0;       // collisions spent in the interval
  bool low_field_ok = true;
};

// Cycle excitation by the discrete sum Phi = sum n(E_i) eps(E_i) on a fixed
// width grid. Evaluating eps at the two interval edges gives a band
// (phi_lo, phi_hi); phi_mean uses the edge average. eps_small_ok clears when
// any edge value exceeds 0.1, where neglecting de-excitation stops being
// defensible; low_field_ok aggregates the polar regime flags (always true
// for apolar).
struct ExcitationResult {
  std::vector<ExcitationInterval> intervals;
  double phi_lo = 0;
  double phi_mean = 0;
  double phi_hi = 0;
  double max_eps = 0;
  bool eps_small_ok = true;
  bool low_field_ok = true;
};

// Default interval width of the cycle sum, 0.05 eV.
inline double default_delta_e() { return units::ev_to_hartree(0.05); }

ExcitationResult cycle_excitation(double e_init, double e_final,
                                  const species::SpeciesPair& pr, double d,
                                  double delta_e = default_delta_e());

// Largest initial energy whose full cooling cycle stays within the given
// excitation budget: inverts phi_mean(e_init) = budget. reliable carries the
// validity flags of the crossing-point cycle.
struct BudgetCrossing {
  double e_cm = 0;
  double e_lab = 0;
  bool reliable = true;
};
BudgetCrossing excitation_budget_inverse(const species::SpeciesPair& pr,
                                         const ensemble::CoolingScenario& scenario,
                                         double e_final, double budget,
                                         double delta_e = default_delta_e());

} // namespace sympcool::rotation
