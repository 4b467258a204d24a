// Acceptance gate: one verdict line per criterion, built from the same
// pinned checks the `validate` command runs. Exits nonzero when any
// criterion fails. argv[1] names the species file.
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "sympcool/species.hpp"
#include "sympcool/validation.hpp"

namespace {

const char* criterion_label(int n) {
  switch (n) {
    case 1: return "thermal spread reproduction";
    case 2: return "published-table rows";
    case 3: return "crystal cooling-time example";
    case 4: return "single-atom to crystal time ratio";
    case 5: return "cycle-averaged spread limits";
    case 6: return "averaged cubed-field closed forms";
    case 7: return "excitation budget crossings";
    case 8: return "sampled vs analytic ensembles";
    case 9: return "per-collision excitation identity";
    case 10: return "module invariants";
    default: return "?";
  }
}

} // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: %s <species-file>\n", argv[0]);
    return 2;
  }
  sympcool::species::Registry reg;
  try {
    reg.load_file(argv[1]);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }

  const auto checks = sympcool::validation::all_checks(reg);
  struct Tally {
    int pass = 0;
    int total = 0;
    std::vector<const sympcool::validation::Check*> failed;
  };
  std::map<int, Tally> by_criterion;
  for (const auto& c : checks) {
    auto& t = by_criterion[c.criterion];
    ++t.total;
    if (c.pass)
      ++t.pass;
    else
      t.failed.push_back(&c);
  }

  int criteria_failed = 0;
  for (int n = 1; n <= 10; ++n) {
    const auto it = by_criterion.find(n);
    if (it == by_criterion.end()) {
      std::printf("CRITERION %2d FAIL  no checks ran (%s)\n", n, criterion_label(n));
      ++criteria_failed;
      continue;
    }
    const auto& t = it->second;
    const bool ok = t.pass == t.total;
    std::printf("CRITERION %2d %s  %d/%d checks (%s)\n", n, ok ? "PASS" : "FAIL",
                t.pass, t.total, criterion_label(n));
    if (!ok) {
      ++criteria_failed;
      for (const auto* c : t.failed)
        std::printf("    %-18s target %-12.6g computed %-12.6g %s\n",
                    c->id.c_str(), c->target, c->computed, c->tolerance.c_str());
    }
  }
  std::printf("%d of 10 criteria failed\n", criteria_failed);
  return criteria_failed == 0 ? 0 : 1;
}
