#include "mfl/suites.hpp"

#include <algorithm>
#include <stdexcept>

#include "mfl/degree_two.hpp"
#include "mfl/parallel.hpp"

namespace mfl {

namespace {

constexpr std::size_t kMaxReported = 50;

void fail(SuiteResult& r, std::string what) {
  if (r.failures.size() < kMaxReported) r.failures.push_back(std::move(what));
}

std::string cell(int n, int ell, const Permutation& w) {
  return "n=" + std::to_string(n) + " ell=" + std::to_string(ell) + " w=" + w.to_string();
}

SuiteResult from_cross_validation(const std::string& name, int n_max, int jobs, std::vector<Check> checks) {
  if (n_max < 3 || n_max > 8) throw std::invalid_argument(name + " runs for 3 <= n <= 8");
  SuiteResult r{name, n_max, 0, {}};
  for (int n = 3; n <= n_max; ++n) {
    const auto rep = cross_validate(n, jobs);
    for (const auto& c : rep.counts) r.checked += c.binomial + c.zero + c.nonbinomial;
    for (const auto& m : rep.mismatches)
      if (std::find(checks.begin(), checks.end(), m.check) != checks.end()) fail(r, m.text);
  }
  return r;
}

// Any 312 occurrence uses w_1 and ell, and w restricted to w_1 is then
// (w_1, ell, w_1 - 1, ..., ell + 1, ell - 1, ..., 1).
std::string p_shape_violation(const Permutation& w, int ell) {
  const int n = w.size();
  bool has312 = false;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        if (w(j) < w(k) && w(k) < w(i)) {
          has312 = true;
          if (w(i) != w(1) || w(j) != ell)
            return "312 occurrence at positions " + std::to_string(i) + "," + std::to_string(j) + "," +
                   std::to_string(k) + " avoids w_1 or ell";
        }
  if (!has312) return {};
  std::vector<int> want{w(1), ell};
  for (int v = w(1) - 1; v >= 1; --v)
    if (v != ell) want.push_back(v);
  if (restriction(w, w(1)).entries() != want) return "restriction to w_1 has the wrong shape";
  return {};
}

}  // namespace

Json SuiteResult::to_json() const {
  return Json{{"suite", name}, {"n_max", n_max}, {"checked", checked}, {"mismatches", failures.size()},
              {"failures", failures}};
}

SuiteResult suite_coherence(int n_max) {
  if (n_max < 2 || n_max > 9) throw std::invalid_argument("coherence runs for 2 <= n <= 9");
  SuiteResult r{"coherence", n_max, 0, {}};
  for (int n = 2; n <= n_max; ++n)
    for (int ell = 0; ell < n; ++ell) {
      const auto rep = verify_coherence(BlockDiagonalMF(n, ell));
      r.checked += rep.checked;
      if (!rep.pass) fail(r, "n=" + std::to_string(n) + " ell=" + std::to_string(ell) + ": " + rep.detail);
    }
  return r;
}

SuiteResult suite_zero(int n_max, int jobs) { return from_cross_validation("theoremB", n_max, jobs, {Check::zero}); }

SuiteResult suite_binomial(int n_max, int jobs) {
  return from_cross_validation("theoremC", n_max, jobs, {Check::binomial, Check::descending});
}

SuiteResult suite_monomial_free(int n_max, int jobs) {
  SuiteResult r = from_cross_validation("P", n_max, jobs, {Check::monomial_free});
  for (int n = 3; n <= std::min(n_max, 7); ++n) {
    const auto perms = all_permutations(n);
    for (int ell = 1; ell < n; ++ell)
      for (const auto& w : perms) {
        if (!in_P(w, ell)) continue;
        ++r.checked;
        if (auto v = p_shape_violation(w, ell); !v.empty()) fail(r, cell(n, ell, w) + ": " + v);
      }
  }
  return r;
}

SuiteResult suite_initial(int n_max, int cap, int jobs) {
  if (n_max < 3) throw std::invalid_argument("initial-form suite needs n >= 3");
  if (n_max > cap) throw CapabilityError("n=" + std::to_string(n_max) + " exceeds the linear-algebra cap " +
                                         std::to_string(cap));
  SuiteResult r{"theoremA", n_max, 0, {}};
  for (int n = 3; n <= n_max; ++n) {
    degree2_flag_ideal(n, cap);
    const auto perms = all_permutations(n);
    for (int ell = 0; ell < n; ++ell) {
      const auto res = parallel_map(perms.size(), jobs, [&](std::size_t i) -> int {
        if (classify(n, ell, perms[i]).verdict == Verdict::nonbinomial) return -1;
        return theoremA_check(n, ell, perms[i], cap) ? 1 : 0;
      });
      for (std::size_t i = 0; i < perms.size(); ++i) {
        if (res[i] < 0) continue;
        ++r.checked;
        if (res[i] == 0) fail(r, cell(n, ell, perms[i]) + ": binomial span differs from the degree-2 initial forms");
      }
    }
  }
  return r;
}

SuiteResult suite_tableaux(int n_max, int jobs) {
  if (n_max < 2 || n_max > 6) throw std::invalid_argument("tableaux suite runs for 2 <= n <= 6");
  SuiteResult r{"tableaux", n_max, 0, {}};
  for (int n = 2; n <= n_max; ++n) {
    const auto perms = all_permutations(n);
    for (int ell = 0; ell < n; ++ell) {
      const auto reps = parallel_map(perms.size(), jobs, [&](std::size_t i) {
        return in_P(perms[i], ell) ? verify_bijection(n, ell, perms[i]) : BijectionReport{};
      });
      for (std::size_t i = 0; i < perms.size(); ++i) {
        if (!reps[i].w_in_P) continue;
        ++r.checked;
        for (const auto& f : reps[i].failures) fail(r, cell(n, ell, perms[i]) + ": " + f);
      }
    }

    const auto all = enumerate_ssyt2(n);
    for (const auto& T : all) {
      ++r.checked;
      const auto a = min_defining_chain2(T, n), b = min_defining_chain2_exhaustive(T, n);
      if (a.perms != b.perms)
        fail(r, "n=" + std::to_string(n) + ": constructive and exhaustive chains differ for\n" + T.render());
    }
    const auto standard = parallel_map(perms.size(), jobs, [&](std::size_t i) {
      std::vector<std::string> bad;
      if (!is_312_free(perms[i])) return bad;
      for (const auto& T : all)
        if (is_standard(T, perms[i]) != columns_below(T, perms[i]))
          bad.push_back("w=" + perms[i].to_string() + ": standardness disagrees with column test for\n" + T.render());
      return bad;
    });
    for (std::size_t i = 0; i < perms.size(); ++i) {
      if (!is_312_free(perms[i])) continue;
      r.checked += static_cast<long long>(all.size());
      for (const auto& f : standard[i]) fail(r, f);
    }
  }
  return r;
}

}  // namespace mfl
