#pragma once

#include <string>

#include "qwb/fixtures.hpp"
#include "qwb/report.hpp"

namespace qwb {

struct SuiteOptions {
  int matrix_size = 2;       // kernel dimension for matrixendo/adjoint
  int congruence_bound = 7;  // carrier-size cap for congruence enumeration
  int enum_bound = 3;        // lattice-size cap for the simple/semisimple scan
  long kernel_pair_budget = 20000;  // above this, pair checks thin out
};

extern const std::vector<std::string> kSuiteNames;  // excludes "all"

// Runs one named property suite ("all" for every suite) over the given
// corpus. Throws Error("UnknownSuite") for a bad name; budget overruns
// surface as Error("BudgetExceeded"/"CarrierTooLarge").
Report run_suite(const std::string& suite, const Fixtures& corpus,
                 const SuiteOptions& opts = {});

}  // namespace qwb
