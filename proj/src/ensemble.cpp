#include "sympcool/ensemble.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sympcool::ensemble {

double sigma(double e_cm, double mu, double omega) {
  if (e_cm <= 0 || mu <= 0 || omega <= 0)
    throw std::invalid_argument("sigma: energy, mass and frequency must be positive");
  return std::sqrt(e_cm / (mu * omega * omega));
}

double pdf_single_atom(double b, double sigma) {
  if (sigma <= 0) throw std::invalid_argument("pdf_single_atom: sigma must be positive");
  if (b < 0) return 0;
  const double s2 = sigma * sigma;
  return b / s2 * std::exp(-0.5 * b * b / s2);
}

double pdf_crystal(double b, double d) {
  if (d <= 0) throw std::invalid_argument("pdf_crystal: spacing must be positive");
  if (b < 0 || b > 0.5 * d) return 0;
  return 8.0 * b / (d * d);
}

double mean_energy_loss_cc(double e_cm, const species::SpeciesPair& pr, double d) {
  if (e_cm <= 0) throw std::invalid_argument("mean_energy_loss_cc: energy must be positive");
  if (d <= 0) throw std::invalid_argument("mean_energy_loss_cc: spacing must be positive");
  const double q = pr.q_prod;
  const double s = 1.0 + pr.xi;
  const double x = d * e_cm / q;
  return 4.0 * pr.xi * q * q * std::log1p(x * x) / (s * s * d * d * e_cm);
}

double mean_energy_loss_cc_lab(double e_cm, const species::SpeciesPair& pr, double d) {
  return (1.0 + pr.xi) * mean_energy_loss_cc(e_cm, pr, d);
}

double mean_energy_loss_sa_bound(double e_cm, const species::SpeciesPair& pr,
                                 double sigma) {
  if (sigma <= 0) throw std::invalid_argument("mean_energy_loss_sa_bound: sigma must be positive");
  return mean_energy_loss_cc(e_cm, pr, 2.0 * sigma);
}

double mean_energy_loss_sa_quadrature(double e_cm, const species::SpeciesPair& pr,
                                      double sigma) {
  if (e_cm <= 0 || sigma <= 0)
    throw std::invalid_argument("mean_energy_loss_sa_quadrature: energy and sigma must be positive");
  // substitute u = b^2 / (2 sigma^2): integral of exp(-u) dE(u) du with
  // dE(u) the transfer at b(u). The exp factor makes [0, 60] exhaustive.
  const double s = 1.0 + pr.xi;
  const double pref = 4.0 * pr.xi * e_cm / (s * s);
  const double c = 8.0 * e_cm * e_cm * sigma * sigma / (pr.q_prod * pr.q_prod);
  auto f = [&](double u) { return std::exp(-u) * pref / (1.0 + c * u); };
  return numerics::integrate(f, 0.0, 60.0).value;
}

FieldCubedAverage mean_peak_field_cubed_cc(double e_cm, double d, double q_at,
                                           double q_prod) {
  if (e_cm <= 0 || d <= 0 || q_at <= 0 || q_prod <= 0)
    throw std::invalid_argument("mean_peak_field_cubed_cc: all arguments must be positive");
  FieldCubedAverage out;
  const double p = 0.5 * q_prod / e_cm;
  const double half_d = 0.5 * d;
  const double s1 = std::sqrt(p * p + half_d * half_d);
  const double t1 = p + s1;
  const double q3 = q_at * q_at * q_at;
  const double p4 = p * p * p * p;
  const double t4 = t1 * t1 * t1 * t1;
  out.exact = 8.0 * q3 / (d * d) *
              (3.0 / (320.0 * p4) + p / (5.0 * t4 * t1) - 1.0 / (4.0 * t4));
  const double ratio = e_cm / q_prod;
  out.approx = 1.2 * q3 * ratio * ratio * ratio * ratio / (d * d);
  out.rel_dev = std::abs(out.approx - out.exact) / out.exact;
  out.approx_valid = d * e_cm / q_prod >= 10.0;
  return out;
}

double sigma_tilde(double mu, double omega, double q_prod, double e_min,
                   double e_max) {
  if (e_min < 0 || e_max <= 0 || e_min > e_max)
    throw std::invalid_argument("sigma_tilde: need 0 <= e_min <= e_max, e_max > 0");
  const double sig_top = sigma(e_max, mu, omega);
  if (e_min == e_max) return sig_top;
  if (e_min / e_max < 0.01) return 6.0 / 7.0 * sig_top;
  auto weight = [&](double e) {
    const double x = 2.0 * sigma(e, mu, omega) * e / q_prod;
    return e * e / std::log1p(x * x);
  };
  const double num =
      numerics::integrate([&](double e) { return sigma(e, mu, omega) * weight(e); },
                          e_min, e_max)
          .value;
  const double den = numerics::integrate(weight, e_min, e_max).value;
  return num / den;
}

CoolingScenario CoolingScenario::single_atom(double omega) {
  if (omega <= 0) throw std::invalid_argument("CoolingScenario: omega must be positive");
  CoolingScenario s;
  s.kind = Kind::single_atom;
  s.omega = omega;
  return s;
}

CoolingScenario CoolingScenario::crystal(double d) {
  if (d <= 0) throw std::invalid_argument("CoolingScenario: spacing must be positive");
  CoolingScenario s;
  s.kind = Kind::crystal;
  s.d = d;
  return s;
}

double CoolingScenario::sigma_of(double e_cm, double mu) const {
  if (!is_single_atom())
    throw std::logic_error("CoolingScenario: sigma is defined for the single-atom environment only");
  return sigma(e_cm, mu, omega);
}

double CoolingScenario::tau(double e_cm, double mu) const {
  if (e_cm <= 0 || mu <= 0)
    throw std::invalid_argument("CoolingScenario::tau: energy and mass must be positive");
  if (is_single_atom()) return std::numbers::pi / omega;
  return d * std::sqrt(0.5 * mu / e_cm);
}

double CoolingScenario::mean_loss(double e_cm, const species::SpeciesPair& pr) const {
  if (is_single_atom())
    return mean_energy_loss_sa_bound(e_cm, pr, sigma_of(e_cm, pr.mu));
  return mean_energy_loss_cc(e_cm, pr, d);
}

double CoolingScenario::effective_d(double e_cm, double mu) const {
  return is_single_atom() ? 2.0 * sigma_of(e_cm, mu) : d;
}

} // namespace sympcool::ensemble
