#pragma once

#include <string>
#include <vector>

#include "mfl/report.hpp"

namespace mfl {

struct SuiteResult {
  std::string name;
  int n_max = 0;
  long long checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
  Json to_json() const;
};

// Unique minimum at the prescribed placement, for n = 2..n_max and every ell.
SuiteResult suite_coherence(int n_max);
// Oracle against Z_n.
SuiteResult suite_zero(int n_max, int jobs = 1);
// Oracle against the inductive T sets, plus the descending-property check.
SuiteResult suite_binomial(int n_max, int jobs = 1);
// Oracle against P_ell, plus the 312-pattern shape of P_ell members up to 7.
SuiteResult suite_monomial_free(int n_max, int jobs = 1);
// Degree-2 initial forms for every monomial-free (n, ell, w), n = 3..n_max.
SuiteResult suite_initial(int n_max, int cap, int jobs = 1);
// Gamma bijection for w in P_ell, two-column standardness for 312-free w,
// and constructive against exhaustive defining chains.
SuiteResult suite_tableaux(int n_max, int jobs = 1);

}  // namespace mfl
