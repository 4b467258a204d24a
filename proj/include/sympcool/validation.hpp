#pragma once

#include <string>
#include <vector>

#include "sympcool/species.hpp"

// Built-in reference checks: quantitative reproduction of published values
// plus the cross-module identities and invariants the library promises.
// Shared by the `validate` CLI command and the acceptance test binary so
// both judge exactly the same computations with the same pinned tolerances.
namespace sympcool::validation {

struct Check {
  std::string id;        // stable dotted id, e.g. "2.t1r10.de"
  int criterion = 0;     // 1..10 grouping
  std::string name;
  double target = 0;
  double computed = 0;
  std::string tolerance;  // human-readable pass condition
  bool pass = false;
  std::string note;  // convention or context, empty when obvious
};

// Reference-value checks (criteria 1..9). Needs the shipped species set.
std::vector<Check> reference_checks(const species::Registry& reg);

// Fast re-checks of the module invariants (criterion 10).
std::vector<Check> invariant_checks(const species::Registry& reg);

std::vector<Check> all_checks(const species::Registry& reg);

} // namespace sympcool::validation
