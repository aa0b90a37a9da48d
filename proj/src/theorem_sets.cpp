#include "mfl/theorem_sets.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "mfl/parallel.hpp"

namespace mfl {

std::string to_string(CombinatorialClass c) {
  switch (c) {
    case CombinatorialClass::Z: return "Z";
    case CombinatorialClass::T: return "T";
    case CombinatorialClass::N: return "N";
  }
  return "?";
}

std::string to_string(WitnessTag t) {
  switch (t) {
    case WitnessTag::A1: return "A1";
    case WitnessTag::A2: return "A2";
    case WitnessTag::A2prime: return "A2'";
    case WitnessTag::A3: return "A3";
    case WitnessTag::A1tilde: return "~A1";
    case WitnessTag::A2tilde: return "~A2";
    case WitnessTag::exceptional: return "exceptional";
  }
  return "?";
}

Permutation exceptional_permutation(int n, int ell) {
  if (ell < 1 || ell > n - 2) throw std::invalid_argument("exceptional permutation needs 1 <= ell <= n-2");
  std::vector<int> e{n, ell};
  for (int v = n - 1; v >= 1; --v)
    if (v != ell) e.push_back(v);
  return Permutation(std::move(e));
}

namespace {

// Field index on [n-1] that B_m restricts to. Both B_n and B_{n-1} become the
// diagonal field of [n-1], which carries index 0 there.
int restricted_index(int n, int m) { return m >= n - 1 ? 0 : m; }

// {w in S_n : remove_max(w) in source}
std::set<Permutation> lift(const std::vector<Permutation>& source, int n) {
  std::set<Permutation> out;
  for (const auto& u : source)
    for (int t = 0; t <= n - 1; ++t) out.insert(insert_max(u, t));
  return out;
}

std::vector<Permutation> keys(const TaggedSet& s) {
  std::vector<Permutation> out;
  for (const auto& [w, tags] : s) out.push_back(w);
  return out;
}

std::set<Permutation> underline_T(int n, int m) {
  if (n - 1 < 3) return {};
  return lift(keys(build_T(n - 1, restricted_index(n, m))), n);
}

// s = position of n-1, t = position of n
std::pair<int, int> top_positions(const Permutation& w) {
  return {w.position_of(w.size() - 1), w.position_of(w.size())};
}

std::set<Permutation> a2_for(int n, int m) {
  std::set<Permutation> out;
  for (const auto& w : underline_T(n, m)) {
    auto [s, t] = top_positions(w);
    if (has_descending_property(remove_max(w)) && t >= s - 1) out.insert(w);
  }
  return out;
}

Permutation a2_removed(int n) {
  std::vector<int> e{n - 1, n};
  for (int v = n - 2; v >= 1; --v) e.push_back(v);
  return Permutation(std::move(e));
}

}  // namespace

ASets a_sets(int n, int ell) {
  if (n < 3) throw std::invalid_argument("auxiliary sets need n >= 3");
  if (ell < 0 || ell > n - 1) throw std::invalid_argument("ell must lie in 0..n-1");
  const int m = ell == 0 ? n : ell;
  ASets a;

  for (const auto& w : lift(z_family(n - 1), n)) {
    const bool top_pair = (w(n - 2) == n - 1 && w(n - 1) == n) || (w(n - 2) == n && w(n - 1) == n - 1);
    if (w(n) == n - 2 && top_pair) a.A1.insert(w);
  }

  a.A2 = a2_for(n, m);
  a.A2prime = a.A2;
  a.A2prime.erase(a2_removed(n));
  for (const auto& w : underline_T(n, m)) {
    auto [s, t] = top_positions(w);
    if (!has_descending_property(remove_max(w)) && t >= s + 2) a.A3.insert(w);
  }

  const auto below = underline_T(n, n - 2);
  std::set<Permutation> a2p_top = a2_for(n, n - 1);
  a2p_top.erase(a2_removed(n));
  for (const auto& w : a2p_top)
    if (below.count(w)) a.A1tilde.insert(w);
  for (const auto& w : underline_T(n, n - 1)) {
    auto [s, t] = top_positions(w);
    if (!below.count(w) && t >= s + 1) a.A2tilde.insert(w);
  }
  return a;
}

namespace {

std::vector<std::pair<WitnessTag, const std::set<Permutation>*>> case_sets(int n, int ell, const ASets& a,
                                                                          std::set<Permutation>& extra) {
  if (ell == 0) return {{WitnessTag::A1, &a.A1}, {WitnessTag::A2, &a.A2}};
  if (ell == n - 1)
    return {{WitnessTag::A1, &a.A1}, {WitnessTag::A1tilde, &a.A1tilde}, {WitnessTag::A2tilde, &a.A2tilde}};
  extra = {exceptional_permutation(n, ell)};
  return {{WitnessTag::A1, &a.A1}, {WitnessTag::A2prime, &a.A2prime}, {WitnessTag::A3, &a.A3},
          {WitnessTag::exceptional, &extra}};
}

TaggedSet compute_T(int n, int ell) {
  const ASets a = a_sets(n, ell);
  std::set<Permutation> extra;
  const auto sets = case_sets(n, ell, a, extra);
  TaggedSet out;
  if (n == 3) {
    // Base level straight from the ideal oracle; tags record which of the
    // defining sets happen to contain each member.
    for (const auto& w : all_permutations(3)) {
      if (classify_oracle(3, ell, w) != Verdict::binomial) continue;
      auto& tags = out[w];
      for (const auto& [tag, s] : sets)
        if (s->count(w)) tags.push_back(tag);
    }
    return out;
  }
  for (const auto& [tag, s] : sets)
    for (const auto& w : *s) out[w].push_back(tag);
  return out;
}

}  // namespace

const TaggedSet& build_T(int n, int ell) {
  static std::recursive_mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<TaggedSet>> cache;
  static const TaggedSet empty;
  if (n < 3) return empty;
  if (n > kMaxN) throw std::invalid_argument("n out of range");
  if (ell < 0 || ell > n - 1) throw std::invalid_argument("ell must lie in 0..n-1");
  std::lock_guard<std::recursive_mutex> lock(mu);
  auto& slot = cache[{n, ell}];
  if (!slot) slot = std::make_unique<TaggedSet>(compute_T(n, ell));
  return *slot;
}

bool in_T(int n, int ell, const Permutation& w) { return build_T(n, ell).count(w) > 0; }

bool in_P(const Permutation& w, int ell) {
  const int n = w.size();
  if (ell < 0 || ell > n - 1) throw std::invalid_argument("ell must lie in 0..n-1");
  if (ell == 0) return is_312_free(w);
  // The restriction clause only constrains 312-free w; read literally it
  // would also exclude (n, ell, n-1, ..., 1), which is binomial.
  if (!is_312_free(w)) {
    static const ValueSequence p312({3, 1, 2});
    return n >= 2 && w(1) > w(2) && w(2) == ell && avoids(delete_value(w, ell), p312);
  }
  for (int m = 3; m <= n; ++m) {
    std::vector<int> target{m - 1, m};
    for (int v = m - 2; v >= 1; --v) target.push_back(v);
    if (restriction(w, m).entries() != target) continue;
    if (!(w(1) < w(2) && w(2) <= ell)) return false;
    std::vector<int> want{w(1), w(2)};
    for (int v = w(2) - 1; v >= 1; --v)
      if (v != w(1)) want.push_back(v);
    if (restriction(w, w(2)).entries() != want) return false;
  }
  return true;
}

ClassificationRecord classify_combinatorial(int n, int ell, const Permutation& w) {
  if (w.size() != n) throw std::invalid_argument("permutation length differs from n");
  ClassificationRecord r{n, ell, w, CombinatorialClass::N, in_P(w, ell), {}};
  if (in_Z(w)) {
    r.combinatorial_class = CombinatorialClass::Z;
  } else if (auto it = build_T(n, ell).find(w); it != build_T(n, ell).end()) {
    r.combinatorial_class = CombinatorialClass::T;
    r.witness_tags = it->second;
  }
  return r;
}

CrossValidationReport cross_validate(int n, int jobs) {
  if (n < 3 || n > 8) throw std::invalid_argument("cross validation runs for 3 <= n <= 8");
  CrossValidationReport rep{n, {}, {}};
  const auto perms = all_permutations(n);
  for (int ell = 0; ell < n; ++ell) {
    relation_set(n, ell);
    const TaggedSet& T = build_T(n, ell);
    const auto verdicts = parallel_map(perms.size(), jobs, [&](std::size_t i) { return classify_oracle(n, ell, perms[i]); });
    LevelCounts c{n, ell};
    for (std::size_t i = 0; i < perms.size(); ++i) {
      const Permutation& w = perms[i];
      const Verdict v = verdicts[i];
      auto report = [&](Check check, const std::string& what) {
        std::ostringstream s;
        s << "n=" << n << " ell=" << ell << " w=" << w.to_string() << ": oracle " << to_string(v) << ", " << what;
        rep.mismatches.push_back({check, s.str()});
      };
      if ((v == Verdict::zero) != in_Z(w)) report(Check::zero, in_Z(w) ? "in Z" : "not in Z");
      if ((v == Verdict::binomial) != (T.count(w) > 0)) report(Check::binomial, T.count(w) ? "in built T" : "not in built T");
      if ((v != Verdict::nonbinomial) != in_P(w, ell)) report(Check::monomial_free, in_P(w, ell) ? "in P" : "not in P");
      if (v == Verdict::zero) ++c.zero;
      else if (v == Verdict::binomial) ++c.binomial;
      else ++c.nonbinomial;
    }
    for (const auto& [w, tags] : T) {
      if (has_descending_property(w)) continue;
      const bool allowed = ell >= 1 && ell <= n - 2 && w == exceptional_permutation(n, ell);
      if (!allowed) {
        std::ostringstream s;
        s << "n=" << n << " ell=" << ell << " w=" << w.to_string() << ": built T member without descending property";
        rep.mismatches.push_back({Check::descending, s.str()});
      }
    }
    rep.counts.push_back(c);
  }
  return rep;
}

std::vector<LevelCounts> count_table(int n_min, int n_max, CountMode mode, int jobs) {
  if (n_min < 3 || n_max < n_min) throw std::invalid_argument("count table needs 3 <= n_min <= n_max");
  std::vector<LevelCounts> rows;
  for (int n = n_min; n <= n_max; ++n) {
    if (mode == CountMode::oracle) {
      auto rep = cross_validate(n, jobs);
      rows.insert(rows.end(), rep.counts.begin(), rep.counts.end());
      continue;
    }
    long long fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    const auto z = static_cast<long long>(z_count(n));
    for (int ell = 0; ell < n; ++ell) {
      const auto t = static_cast<long long>(build_T(n, ell).size());
      rows.push_back({n, ell, t, z, fact - t - z});
    }
  }
  return rows;
}

}  // namespace mfl
