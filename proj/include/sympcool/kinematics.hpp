#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

// Two-body Coulomb scattering relations in atomic units. Energies are
// collision (center of mass) energies in hartree unless a name says lab,
// lengths bohr, charges multiples of e. xi is the projectile to target mass
// ratio M_mol / M_at; q_prod the charge product q_mol * q_at.
namespace sympcool::kinematics {

// Dimensionless impact parameter x = 2 E b / Q that controls the deflection.
inline double reduced_impact(double e_cm, double b, double q_prod) {
  if (e_cm <= 0) throw std::invalid_argument("reduced_impact: energy must be positive");
  if (b < 0) throw std::invalid_argument("reduced_impact: impact parameter must be nonnegative");
  if (q_prod <= 0) throw std::invalid_argument("reduced_impact: repulsive charge product required");
  return 2.0 * e_cm * b / q_prod;
}

// CM deflection angle of a repulsive Coulomb encounter,
// theta = 2 asin(1 / sqrt(1 + x^2)); pi at b = 0, falling to 0 as b grows.
inline double scattering_angle(double e_cm, double b, double q_prod) {
  const double x = reduced_impact(e_cm, b, q_prod);
  return 2.0 * std::asin(1.0 / std::sqrt(1.0 + x * x));
}

// Fraction of the projectile's kinetic energy handed to the target in one
// elastic collision at deflection theta. The fraction is frame independent:
// it applies to the CM energy and to the lab energy alike.
inline double transfer_fraction(double theta, double xi) {
  const double s = 1.0 + xi;
  return 2.0 * xi * (1.0 - std::cos(theta)) / (s * s);
}

// Same fraction straight from the impact parameter:
// 4 xi / ((1 + xi)^2 (1 + x^2)).
inline double transfer_fraction_from_impact(double e_cm, double b, double xi,
                                            double q_prod) {
  const double x = reduced_impact(e_cm, b, q_prod);
  const double s = 1.0 + xi;
  return 4.0 * xi / (s * s * (1.0 + x * x));
}

// Energy lost by the projectile, evaluated in the same frame as the energy
// passed in (the fraction is frame independent; see transfer_fraction).
inline double energy_transfer(double e, double e_cm, double b, double xi,
                              double q_prod) {
  return e * transfer_fraction_from_impact(e_cm, b, xi, q_prod);
}

// Lab frame loss at deflection theta: 2 xi (1 - cos theta) / (1 + xi)^2 * E_lab.
inline double energy_transfer_lab(double e_lab, double theta, double xi) {
  return e_lab * transfer_fraction(theta, xi);
}

// E_lab = (1 + xi) E and back; exact inverses of each other.
inline double cm_to_lab(double e_cm, double xi) { return e_cm * (1.0 + xi); }
inline double lab_to_cm(double e_lab, double xi) { return e_lab / (1.0 + xi); }

// Distance of closest approach of the repulsive hyperbolic orbit:
// r_min = p + sqrt(p^2 + b^2), p = Q / (2 E).
inline double closest_approach(double e_cm, double b, double q_prod) {
  if (e_cm <= 0) throw std::invalid_argument("closest_approach: energy must be positive");
  if (q_prod <= 0) throw std::invalid_argument("closest_approach: repulsive charge product required");
  const double p = 0.5 * q_prod / e_cm;
  return p + std::sqrt(p * p + b * b);
}

// Cube of the peak electric field the atomic ion's charge produces at the
// molecule, (q_at / r_min^2)^3. This is the per-collision quantity whose
// distribution average feeds the rotational excitation model.
inline double peak_field_cubed(double e_cm, double b, double q_at,
                               double q_prod) {
  const double r = closest_approach(e_cm, b, q_prod);
  const double r2 = r * r;
  const double field = q_at / r2;
  return field * field * field;
}

} // namespace sympcool::kinematics
