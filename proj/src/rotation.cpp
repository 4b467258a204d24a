#include "sympcool/rotation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sympcool/kinematics.hpp"
#include "sympcool/numerics.hpp"

namespace sympcool::rotation {

namespace {

void require_apolar(const species::SpeciesPair& pr, const char* who) {
  if (pr.mol.polarity != species::Polarity::apolar)
    throw std::invalid_argument(std::string(who) + ": pair's molecule must be apolar");
}

void require_polar(const species::SpeciesPair& pr, const char* who) {
  if (pr.mol.polarity != species::Polarity::polar)
    throw std::invalid_argument(std::string(who) + ": pair's molecule must be polar");
}

// (1 + A) e^{-A}; A grows without bound as E -> 0 and the product
// underflows cleanly to zero.
double kick_suppression(double a) { return (1.0 + a) * std::exp(-a); }

double apolar_prefactor(double e_cm, const species::SpeciesPair& pr) {
  const double k2 = kAdiabaticity * kAdiabaticity;
  const double qz = pr.mol.quadrupole;
  const double a = adiabatic_exponent(e_cm, pr.mu, pr.mol.rot_const);
  return k2 * qz * qz * pr.mu * kick_suppression(a) / (20.0 * e_cm * e_cm * e_cm);
}

} // namespace

double adiabatic_exponent(double e_cm, double mu, double b_rot) {
  if (e_cm <= 0 || mu <= 0)
    throw std::invalid_argument("adiabatic_exponent: energy and mass must be positive");
  return 6.0 * kAdiabaticity * b_rot * std::sqrt(mu / (e_cm * e_cm * e_cm));
}

double apolar_single_collision(double e_cm, double b,
                               const species::SpeciesPair& pr) {
  require_apolar(pr, "apolar_single_collision");
  const double f3 = kinematics::peak_field_cubed(e_cm, b, pr.at.charge, pr.q_prod);
  return apolar_prefactor(e_cm, pr) * f3;
}

double apolar_mean_excitation(double e_cm, const species::SpeciesPair& pr,
                              double d, FieldAverage avg) {
  require_apolar(pr, "apolar_mean_excitation");
  const auto f3 = ensemble::mean_peak_field_cubed_cc(e_cm, d, pr.at.charge, pr.q_prod);
  const double mean_f3 = avg == FieldAverage::exact ? f3.exact : f3.approx;
  return apolar_prefactor(e_cm, pr) * mean_f3;
}

double apolar_cycle_integral(double e_init, double e_final,
                             const species::SpeciesPair& pr, double d) {
  require_apolar(pr, "apolar_cycle_integral");
  if (e_final <= 0 || e_init < e_final)
    throw std::invalid_argument("apolar_cycle_integral: need e_init >= e_final > 0");
  if (e_init == e_final) return 0;
  auto integrand = [&](double e) {
    return apolar_mean_excitation(e, pr, d, FieldAverage::approximate) /
           ensemble::mean_energy_loss_cc(e, pr, d);
  };
  return numerics::integrate(integrand, e_final, e_init).value;
}

PolarMean polar_mean_excitation(double e_cm, const species::SpeciesPair& pr,
                                double b_max) {
  require_polar(pr, "polar_mean_excitation");
  if (e_cm <= 0 || b_max <= 0)
    throw std::invalid_argument("polar_mean_excitation: energy and b_max must be positive");

  const double b_rot = pr.mol.rot_const;
  const double coupling = pr.mol.dipole * pr.at.charge;  // D q_at
  const double p = 0.5 * pr.q_prod / e_cm;
  const double lam2_coef = coupling * coupling / (3.0 * b_rot * b_rot);
  const double adiab = 2.0 * kAdiabaticity * b_rot *
                       std::sqrt(pr.mu / (e_cm * e_cm * e_cm));
  auto integrand = [&](double b) {
    const double r = p + std::sqrt(p * p + b * b);
    const double r4 = r * r * r * r;
    return b * std::exp(-adiab * std::sqrt(1.0 + lam2_coef / r4)) /
           (r4 + lam2_coef);
  };

  PolarMean out;
  const double total = numerics::integrate(integrand, 0.0, b_max).value;
  const double kpd = kAdiabaticity * std::numbers::pi * coupling;
  out.value = kpd * kpd * pr.mu /
              (6.0 * e_cm * e_cm * e_cm * b_max * b_max) * total;

  // high-field region: dipole coupling above the rotational splitting, i.e.
  // r(b)^2 < D q_at / (sqrt(3) B); nonempty only when that reaches past r(0).
  const double rc2 = coupling / (std::sqrt(3.0) * b_rot);
  const double rc = std::sqrt(rc2);
  if (rc > 2.0 * p && total > 0) {
    const double b1 = std::sqrt(rc2 - 2.0 * p * rc);
    const double b_hf = std::min(b1, b_max);
    out.high_field_fraction =
        numerics::integrate(integrand, 0.0, b_hf).value / total;
  }
  out.low_field_ok = out.high_field_fraction <= 0.25;
  return out;
}

ExcitationResult cycle_excitation(double e_init, double e_final,
                                  const species::SpeciesPair& pr, double d,
                                  double delta_e) {
  if (!pr.mol.is_molecule())
    throw std::invalid_argument("cycle_excitation: pair's projectile must be a molecule");
  if (e_final <= 0 || e_init < e_final)
    throw std::invalid_argument("cycle_excitation: need e_init >= e_final > 0");
  if (delta_e <= 0) throw std::invalid_argument("cycle_excitation: delta_e must be positive");
  if (d <= 0) throw std::invalid_argument("cycle_excitation: spacing must be positive");

  const bool polar = pr.mol.polarity == species::Polarity::polar;
  ExcitationResult out;
  if (e_init == e_final) return out;

  // fixed-width edges descending from e_init; the last interval absorbs the
  // remainder so the grid always ends exactly at e_final
  std::vector<double> edges{e_init};
  for (double e = e_init - delta_e; e > e_final; e -= delta_e) edges.push_back(e);
  edges.push_back(e_final);

  struct EdgeEval {
    double eps = 0;
    bool low_field_ok = true;
  };
  std::vector<EdgeEval> at_edge(edges.size());
  for (size_t k = 0; k < edges.size(); ++k) {
    if (polar) {
      const auto pm = polar_mean_excitation(edges[k], pr, 0.5 * d);
      at_edge[k] = {pm.value, pm.low_field_ok};
    } else {
      at_edge[k] = {apolar_mean_excitation(edges[k], pr, d), true};
    }
    if (at_edge[k].eps > out.max_eps) out.max_eps = at_edge[k].eps;
  }

  out.intervals.reserve(edges.size() - 1);
  for (size_t i = 0; i + 1 < edges.size(); ++i) {
    ExcitationInterval iv;
    iv.e_hi = edges[i];
    iv.e_lo = edges[i + 1];
    iv.eps_hi = at_edge[i].eps;
    iv.eps_lo = at_edge[i + 1].eps;
    iv.n = (iv.e_hi - iv.e_lo) / ensemble::mean_energy_loss_cc(iv.e_hi, pr, d);
    iv.low_field_ok = at_edge[i].low_field_ok && at_edge[i + 1].low_field_ok;
    out.phi_lo += iv.n * std::min(iv.eps_hi, iv.eps_lo);
    out.phi_hi += iv.n * std::max(iv.eps_hi, iv.eps_lo);
    out.phi_mean += iv.n * 0.5 * (iv.eps_hi + iv.eps_lo);
    out.low_field_ok = out.low_field_ok && iv.low_field_ok;
    out.intervals.push_back(iv);
  }
  out.eps_small_ok = out.max_eps <= 0.1;
  return out;
}

BudgetCrossing excitation_budget_inverse(const species::SpeciesPair& pr,
                                         const ensemble::CoolingScenario& scenario,
                                         double e_final, double budget,
                                         double delta_e) {
  if (scenario.is_single_atom())
    throw std::invalid_argument(
        "excitation_budget_inverse: excitation averages are defined for the crystal environment");
  if (e_final <= 0) throw std::invalid_argument("excitation_budget_inverse: e_final must be positive");
  if (budget < 0) throw std::invalid_argument("excitation_budget_inverse: budget must be nonnegative");
  const double d = scenario.d;

  BudgetCrossing out;
  if (budget == 0) {
    out.e_cm = e_final;
    out.e_lab = pr.lab_from_cm(e_final);
    return out;
  }

  auto phi = [&](double e_init) {
    return cycle_excitation(e_init, e_final, pr, d, delta_e).phi_mean;
  };

  // expand the bracket upward until the budget is enclosed
  double lo = e_final, hi = 2.0 * e_final;
  const double e_cap = units::ev_to_hartree(1000.0);
  double phi_hi = phi(hi);
  while (phi_hi < budget) {
    lo = hi;
    hi *= 2.0;
    if (hi > e_cap)
      throw numerics::BracketError(
          "excitation_budget_inverse: budget not reached below the energy cap",
          phi(lo) - budget, phi_hi - budget);
    phi_hi = phi(hi);
  }

  // the cycle sum is monotone in e_init by construction (positive
  // contributions only); verify on a few bracket samples before inverting
  double prev = phi(lo);
  for (int k = 1; k <= 4; ++k) {
    const double cur = phi(lo + (hi - lo) * k / 4.0);
    if (cur < prev * (1.0 - 1e-9))
      throw std::runtime_error("excitation_budget_inverse: cycle excitation not monotone on bracket");
    prev = cur;
  }

  numerics::RootSpec spec;
  spec.lo = lo;
  spec.hi = hi;
  spec.x_tol = 1e-6 * hi;
  out.e_cm = numerics::find_root([&](double e) { return phi(e) - budget; }, spec);
  out.e_lab = pr.lab_from_cm(out.e_cm);
  const auto at_crossing = cycle_excitation(out.e_cm, e_final, pr, d, delta_e);
  out.reliable = at_crossing.eps_small_ok && at_crossing.low_field_ok;
  return out;
}

} // namespace sympcool::rotation
