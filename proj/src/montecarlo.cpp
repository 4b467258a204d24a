#include "sympcool/montecarlo.hpp"

#include <cmath>
#include <stdexcept>

#include "sympcool/kinematics.hpp"
#include "sympcool/numerics.hpp"
#include "sympcool/rotation.hpp"

namespace sympcool::montecarlo {

namespace {

void validate(const McConfig& c) {
  if (!(c.e_init >= c.e_final) || c.e_final <= 0)
    throw std::invalid_argument("montecarlo: need e_init >= e_final > 0");
  if (c.n_runs < 1) throw std::invalid_argument("montecarlo: need n_runs >= 1");
  if (c.collision_cap < 1) throw std::invalid_argument("montecarlo: need a positive collision cap");
  if (c.accumulate_excitation &&
      c.pair.mol.polarity != species::Polarity::apolar)
    throw std::invalid_argument(
        "montecarlo: per-collision excitation exists for apolar molecules only");
}

RunResult one_run(const McConfig& c, std::uint64_t run_index,
                  std::vector<TraceStep>* trace) {
  numerics::RandomStream rs(c.seed, run_index);
  const auto& pr = c.pair;
  const bool sa = c.scenario.is_single_atom();
  const bool excite = c.accumulate_excitation;

  RunResult out;
  double e = c.e_init;
  while (e > c.e_final) {
    if (out.n_coll >= c.collision_cap) {
      out.capped = true;
      break;
    }
    const double b = sa ? rs.impact_single_atom(c.scenario.sigma_of(e, pr.mu))
                        : rs.impact_crystal(c.scenario.d);
    out.time += c.scenario.tau(e, pr.mu);
    const double de = kinematics::energy_transfer(e, e, b, pr.xi, pr.q_prod);
    double eps = 0;
    if (excite) {
      eps = rotation::apolar_single_collision(e, b, pr);
      out.phi += eps;
    }
    ++out.n_coll;
    if (trace)
      trace->push_back({out.n_coll, e, b,
                        kinematics::scattering_angle(e, b, pr.q_prod), de, eps,
                        out.time});
    e -= de;
  }
  return out;
}

Moments moments(const std::vector<RunResult>& runs, int n,
                double (*pick)(const RunResult&)) {
  Moments m;
  double sum = 0;
  for (int i = 0; i < n; ++i) sum += pick(runs[i]);
  m.mean = sum / n;
  if (n >= 2) {
    double ss = 0;
    for (int i = 0; i < n; ++i) {
      const double dev = pick(runs[i]) - m.mean;
      ss += dev * dev;
    }
    m.se = std::sqrt(ss / (n - 1.0) / n);
    m.se_defined = true;
  }
  return m;
}

double pick_n(const RunResult& r) { return static_cast<double>(r.n_coll); }
double pick_t(const RunResult& r) { return r.time; }
double pick_phi(const RunResult& r) { return r.phi; }

McSummary summarize(const McConfig& c, std::vector<RunResult> runs,
                    std::vector<TraceStep> trace) {
  McSummary s;
  s.n_runs = c.n_runs;
  s.n_coll = moments(runs, c.n_runs, pick_n);
  s.time = moments(runs, c.n_runs, pick_t);
  s.phi = moments(runs, c.n_runs, pick_phi);
  for (const auto& r : runs) s.any_capped = s.any_capped || r.capped;
  s.runs = std::move(runs);
  s.trace = std::move(trace);
  return s;
}

} // namespace

McSummary run(const McConfig& config) {
  validate(config);
  std::vector<RunResult> runs;
  runs.reserve(config.n_runs);
  std::vector<TraceStep> trace;
  for (int i = 0; i < config.n_runs; ++i)
    runs.push_back(one_run(config, static_cast<std::uint64_t>(i),
                           config.record_trace && i == 0 ? &trace : nullptr));
  return summarize(config, std::move(runs), std::move(trace));
}

std::vector<ConvergenceRow> convergence_report(const McConfig& config,
                                               const std::vector<int>& schedule) {
  validate(config);
  if (schedule.empty())
    throw std::invalid_argument("convergence_report: schedule must not be empty");
  int max_n = 0;
  for (size_t i = 0; i < schedule.size(); ++i) {
    if (schedule[i] < 1)
      throw std::invalid_argument("convergence_report: run counts must be >= 1");
    if (i > 0 && schedule[i] <= schedule[i - 1])
      throw std::invalid_argument("convergence_report: schedule must be strictly ascending");
    max_n = schedule[i];
  }

  McConfig all = config;
  all.n_runs = max_n;
  all.record_trace = false;
  validate(all);
  std::vector<RunResult> runs;
  runs.reserve(max_n);
  for (int i = 0; i < max_n; ++i)
    runs.push_back(one_run(all, static_cast<std::uint64_t>(i), nullptr));

  std::vector<ConvergenceRow> rows;
  rows.reserve(schedule.size());
  for (int n : schedule) {
    ConvergenceRow row;
    row.n_runs = n;
    row.n_coll = moments(runs, n, pick_n);
    row.time = moments(runs, n, pick_t);
    row.phi = moments(runs, n, pick_phi);
    rows.push_back(row);
  }
  return rows;
}

} // namespace sympcool::montecarlo
