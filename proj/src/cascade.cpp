#include "sympcool/cascade.hpp"

#include <cmath>
#include <stdexcept>

#include "sympcool/numerics.hpp"

namespace sympcool::cascade {

std::vector<double> build_grid(double e_max, double e_min, int n, GridRule rule) {
  if (!(e_max > e_min) || e_min <= 0)
    throw std::invalid_argument("build_grid: need e_max > e_min > 0");
  if (n < 1) throw std::invalid_argument("build_grid: need at least one interval");
  std::vector<double> edges(static_cast<size_t>(n) + 1);
  if (rule == GridRule::uniform) {
    const double step = (e_max - e_min) / n;
    for (int i = 0; i <= n; ++i) edges[i] = e_max - step * i;
  } else {
    const double ratio = std::pow(e_min / e_max, 1.0 / n);
    double e = e_max;
    for (int i = 0; i <= n; ++i) {
      edges[i] = e;
      e *= ratio;
    }
  }
  edges.front() = e_max;
  edges.back() = e_min;
  return edges;
}

double collisions_per_interval(double e_hi, double e_lo,
                               const species::SpeciesPair& pr,
                               const ensemble::CoolingScenario& scenario) {
  if (!(e_hi > e_lo)) throw std::invalid_argument("collisions_per_interval: need e_hi > e_lo");
  return (e_hi - e_lo) / scenario.mean_loss(e_hi, pr);
}

double intercollision_time(double e_cm, const species::SpeciesPair& pr,
                           const ensemble::CoolingScenario& scenario) {
  return scenario.tau(e_cm, pr.mu);
}

CascadeResult total_cooling_time(double e_max, double e_min,
                                 const species::SpeciesPair& pr,
                                 const ensemble::CoolingScenario& scenario,
                                 GridSpec grid, TimeMode mode) {
  const auto edges = build_grid(e_max, e_min, grid.n, grid.rule);
  CascadeResult out;
  out.mode = mode;
  out.scenario = scenario;
  out.lower_bound = scenario.is_single_atom();
  out.intervals.reserve(edges.size() - 1);

  // integral mode replaces the per-interval closed forms by quadratures of
  // the same densities; the single-atom loss is frozen at sigma_tilde so the
  // integrand has a closed form in E.
  double sig_tilde = 0;
  if (mode == TimeMode::integral && scenario.is_single_atom())
    sig_tilde = ensemble::sigma_tilde(pr.mu, scenario.omega, pr.q_prod, e_min, e_max);
  auto loss = [&](double e) {
    if (mode == TimeMode::integral && scenario.is_single_atom())
      return ensemble::mean_energy_loss_sa_bound(e, pr, sig_tilde);
    return scenario.mean_loss(e, pr);
  };

  for (size_t i = 0; i + 1 < edges.size(); ++i) {
    IntervalRecord rec;
    rec.e_hi = edges[i];
    rec.e_lo = edges[i + 1];
    rec.de_mean = loss(rec.e_hi);
    rec.tau = scenario.tau(rec.e_hi, pr.mu);
    if (mode == TimeMode::grid_sum) {
      rec.n = (rec.e_hi - rec.e_lo) / rec.de_mean;
      rec.t = rec.n * rec.tau;
    } else {
      rec.n = numerics::integrate([&](double e) { return 1.0 / loss(e); },
                                  rec.e_lo, rec.e_hi)
                  .value;
      rec.t = numerics::integrate(
                  [&](double e) { return scenario.tau(e, pr.mu) / loss(e); },
                  rec.e_lo, rec.e_hi)
                  .value;
    }
    out.n_total += rec.n;
    out.time_total += rec.t;
    out.intervals.push_back(rec);
  }
  return out;
}

ScenarioTimeRatio scenario_time_ratio(const species::SpeciesPair& pr,
                                      double e_max, double e_min, double omega,
                                      double d, GridSpec grid) {
  ScenarioTimeRatio out;
  const auto sa = ensemble::CoolingScenario::single_atom(omega);
  const auto cc = ensemble::CoolingScenario::crystal(d);
  out.t_sa = total_cooling_time(e_max, e_min, pr, sa, grid).time_total;
  out.t_cc = total_cooling_time(e_max, e_min, pr, cc, grid).time_total;
  out.full = out.t_sa / out.t_cc;
  const double st = ensemble::sigma_tilde(pr.mu, omega, pr.q_prod, e_min, e_max);
  out.crude = (st / d) * (st / d) * (st / d);
  return out;
}

Table1Row table1_row(double e_quoted, double b_max, const species::SpeciesPair& pr) {
  if (e_quoted <= 0 || b_max <= 0)
    throw std::invalid_argument("table1_row: energy and b_max must be positive");
  Table1Row row;
  const double de_style = ensemble::mean_energy_loss_cc(e_quoted, pr, 2.0 * b_max);
  row.de_lab = (1.0 + pr.xi) * de_style;
  row.n_coll = e_quoted / row.de_lab;
  row.tau = b_max * std::sqrt(0.5 * pr.mol.mass / e_quoted);
  row.t = row.n_coll * row.tau;
  return row;
}

} // namespace sympcool::cascade
