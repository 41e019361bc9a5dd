// The thirteen verification suites behind `verify-all` and the acceptance
// gate.  Each suite is exact (no floating point in the verdicts except the
// advisory Gram eigenvalue bound) and deterministic; internal parallelism
// is confined to the enumeration kernels and assembled in a fixed order.
#pragma once

#include <string>
#include <vector>

namespace eisgen::verify {

struct SuiteResult {
  std::string name;
  bool ok = false;
  std::string detail;  // one-line summary: counts checked, witnesses, ...
};

// individual suites (budget 0 = default / EISGEN_BUDGET)
SuiteResult suite_section_counts(long long budget, int jobs);
SuiteResult suite_quasisections(long long budget, int jobs);
SuiteResult suite_hecke();
SuiteResult suite_functional_equations();
SuiteResult suite_sigma_projector();
SuiteResult suite_pairing();
SuiteResult suite_spectral();
SuiteResult suite_scissor();
SuiteResult suite_q_gamma();
SuiteResult suite_tree();
SuiteResult suite_correspondence_algebra();
SuiteResult suite_module_isomorphism();
SuiteResult suite_roundtrip_determinism(long long budget, int jobs);

// all thirteen, in acceptance order
std::vector<SuiteResult> run_all(long long budget = 0, int jobs = 1);

// fixed-format summary table (identical across runs and jobs settings)
std::string render(const std::vector<SuiteResult>& results);

}  // namespace eisgen::verify
