#pragma once

#include <cstdint>
#include <vector>

#include "sympcool/ensemble.hpp"
#include "sympcool/species.hpp"

// Stochastic collision cascade: one molecular ion loses energy through a
// sequence of binary collisions with impact parameters drawn from the
// scenario's distribution. Serves as the sampling cross-check of the
// analytic cascade and cycle-excitation results. Strict CM bookkeeping
// throughout; no frame conventions here.
namespace sympcool::montecarlo {

struct McConfig {
  species::SpeciesPair pair;
  ensemble::CoolingScenario scenario;
  double e_init = 0;   // CM, hartree
  double e_final = 0;  // CM, hartree
  std::uint64_t seed = 1;
  int n_runs = 1;
  // Accumulate per-collision rotational excitation (apolar molecules only;
  // the polar model has no per-collision form and is rejected).
  bool accumulate_excitation = false;
  // Keep the step-by-step trace of the first run.
  bool record_trace = false;
  long long collision_cap = 1'000'000'000;
};

struct TraceStep {
  long long k = 0;
  double e_cm = 0;  // pre-collision energy
  double b = 0;
  double theta = 0;
  double de = 0;
  double eps = 0;
  double t = 0;  // elapsed time after this collision
};

struct RunResult {
  long long n_coll = 0;
  double time = 0;  // atomic time
  double phi = 0;
  bool capped = false;
};

struct Moments {
  double mean = 0;
  double se = 0;          // standard error of the mean
  bool se_defined = false;  // false when n_runs < 2
};

struct McSummary {
  Moments n_coll;
  Moments time;
  Moments phi;
  int n_runs = 0;
  bool any_capped = false;
  std::vector<RunResult> runs;
  std::vector<TraceStep> trace;  // first run only, when requested
};

// Runs the configured ensemble. Each run owns the random stream derived from
// (seed, run index), so results are independent of evaluation order and
// bit-identical across repeats. Per collision: draw b, advance time by
// tau(E) at the pre-collision energy, subtract the CM transfer, and (when
// enabled) add the per-collision apolar excitation. A run stops at
// E <= e_final or at the collision cap, which flags the summary.
McSummary run(const McConfig& config);

// Summary statistics versus ensemble size for an ascending schedule of run
// counts. Prefix-aggregates one fixed set of per-run results, so row k
// reuses the same runs row k-1 saw.
struct ConvergenceRow {
  int n_runs = 0;
  Moments n_coll;
  Moments time;
  Moments phi;
};
std::vector<ConvergenceRow> convergence_report(const McConfig& config,
                                               const std::vector<int>& schedule);

} // namespace sympcool::montecarlo
