#pragma once

// Brute-force reference implementations used only by the tests. Nothing here
// calls into the library, so agreement is a genuine cross-check.

#include <algorithm>
#include <climits>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Perm = std::vector<int>;
using Set = std::vector<int>;  // sorted

inline std::vector<Perm> perms(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 1);
  std::vector<Perm> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline Perm parse(const std::string& s) {
  Perm p;
  for (char c : s) p.push_back(c - '0');
  return p;
}

inline std::string str(const Perm& p) {
  std::string s;
  for (int v : p) s += std::to_string(v);
  return s;
}

inline std::vector<Set> subsets(int n) {
  std::vector<Set> out;
  for (int k = 1; k < n; ++k)
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
      if (__builtin_popcount(m) != k) continue;
      Set s;
      for (int v = 1; v <= n; ++v)
        if (m >> (v - 1) & 1u) s.push_back(v);
      out.push_back(s);
    }
  return out;
}

inline int inversions(const Perm& p) {
  int c = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) c += p[i] > p[j];
  return c;
}

// v <= w iff w is reachable from v by transpositions that raise the length.
inline bool bruhat_leq(const Perm& v, const Perm& w) {
  std::set<Perm> seen{v};
  std::queue<Perm> q;
  q.push(v);
  const int target = inversions(w);
  while (!q.empty()) {
    Perm u = q.front();
    q.pop();
    if (u == w) return true;
    const int lu = inversions(u);
    if (lu >= target) continue;
    for (std::size_t i = 0; i < u.size(); ++i)
      for (std::size_t j = i + 1; j < u.size(); ++j) {
        if (u[i] > u[j]) continue;
        Perm x = u;
        std::swap(x[i], x[j]);
        if (seen.insert(x).second) q.push(x);
      }
  }
  return false;
}

inline bool gale_leq(Set a, Set b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline bool vanishes(const Set& J, const Perm& w) {
  return !gale_leq(J, Set(w.begin(), w.begin() + J.size()));
}

inline bool contains312(const Perm& w) {
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      for (std::size_t k = j + 1; k < w.size(); ++k)
        if (w[j] < w[k] && w[k] < w[i]) return true;
  return false;
}

// Products of pairwise non-adjacent simple transpositions.
inline std::set<Perm> z_products(int n) {
  std::set<Perm> out;
  for (std::uint32_t m = 0; m < (1u << (n - 1)); ++m) {
    if (m & (m >> 1)) continue;
    Perm p(n);
    std::iota(p.begin(), p.end(), 1);
    for (int i = 0; i < n - 1; ++i)
      if (m >> i & 1u) std::swap(p[i], p[i + 1]);
    out.insert(p);
  }
  return out;
}

// Row r (1-based) of M_ell read straight off its displayed block form.
inline std::vector<std::vector<int>> weight_matrix(int n, int ell) {
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (int j = 1; j <= n; ++j) {
    m[1][j - 1] = j <= ell ? ell - j + 1 : n - (j - ell - 1);
    for (int r = 3; r <= n; ++r) m[r - 1][j - 1] = (r - 1) * (n - j + 1);
  }
  return m;
}

// Placement minimising the weight; ties return an empty vector.
inline Set min_placement(int n, int ell, Set J) {
  const auto m = weight_matrix(n, ell);
  std::sort(J.begin(), J.end());
  int best = INT_MAX, hits = 0;
  Set arg;
  do {
    int w = 0;
    for (std::size_t r = 0; r < J.size(); ++r) w += m[r][J[r] - 1];
    if (w < best) {
      best = w;
      hits = 1;
      arg = J;
    } else if (w == best) {
      ++hits;
    }
  } while (std::next_permutation(J.begin(), J.end()));
  return hits == 1 ? arg : Set{};
}

inline int min_weight(int n, int ell, Set J) {
  const auto m = weight_matrix(n, ell);
  std::sort(J.begin(), J.end());
  int best = INT_MAX;
  do {
    int w = 0;
    for (std::size_t r = 0; r < J.size(); ++r) w += m[r][J[r] - 1];
    best = std::min(best, w);
  } while (std::next_permutation(J.begin(), J.end()));
  return best;
}

inline int perm_sign(const Set& display) {
  return inversions(display) % 2 ? -1 : 1;
}

// (row, col) -> exponent, taken from the minimum placement of each column.
using Key = std::map<std::pair<int, int>, int>;

inline Key phi_key(int n, int ell, const std::vector<Set>& columns, int* sign = nullptr) {
  Key k;
  int s = 1;
  for (const auto& J : columns) {
    const Set d = min_placement(n, ell, J);
    for (std::size_t r = 0; r < d.size(); ++r) ++k[{static_cast<int>(r) + 1, d[r]}];
    s *= perm_sign(d);
  }
  if (sign) *sign = s;
  return k;
}

// Determinant by cofactor expansion along the first row.
inline long long det(const std::vector<std::vector<long long>>& a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  long long total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<long long>> sub;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<long long> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(a[r][k]);
      sub.push_back(row);
    }
    total += (c % 2 ? -1 : 1) * a[0][c] * det(sub);
  }
  return total;
}

// Top |J| x |J| minor on columns J.
inline long long minor(const std::vector<std::vector<long long>>& x, const Set& J) {
  std::vector<std::vector<long long>> a(J.size(), std::vector<long long>(J.size()));
  for (std::size_t r = 0; r < J.size(); ++r)
    for (std::size_t c = 0; c < J.size(); ++c) a[r][c] = x[r][J[c] - 1];
  return det(a);
}

// Degree-2 monomials grouped by their image under the minimum placements.
using Pair = std::pair<Set, Set>;
struct Fiber {
  std::vector<Pair> members;
};

inline std::vector<Fiber> compute_fibers(int n, int ell) {
  const auto sets = subsets(n);
  std::map<Key, Fiber> by_key;
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i; j < sets.size(); ++j)
      by_key[phi_key(n, ell, {sets[i], sets[j]})].members.emplace_back(sets[i], sets[j]);
  std::vector<Fiber> out;
  for (auto& [k, f] : by_key) out.push_back(std::move(f));
  return out;
}

inline const std::vector<Fiber>& fibers(int n, int ell) {
  static std::map<std::pair<int, int>, std::vector<Fiber>> cache;
  auto it = cache.find({n, ell});
  if (it == cache.end()) it = cache.emplace(std::make_pair(n, ell), compute_fibers(n, ell)).first;
  return it->second;
}

struct Verdict {
  std::string verdict;  // "zero", "binomial" or "nonbinomial"
  int rank;
};

// A fiber with a dead monomial leaves its surviving monomials in the ideal;
// otherwise it contributes the binomial differences.
inline Verdict classify(int n, int ell, const Perm& w) {
  int rank = 0;
  bool monomial = false;
  for (const auto& f : fibers(n, ell)) {
    int alive = 0;
    for (const auto& [a, b] : f.members) alive += !vanishes(a, w) && !vanishes(b, w);
    const int dead = static_cast<int>(f.members.size()) - alive;
    if (alive == 0) continue;
    if (dead > 0) {
      monomial = true;
      rank += alive;
    } else {
      rank += alive - 1;
    }
  }
  return {rank == 0 ? "zero" : monomial ? "nonbinomial" : "binomial", rank};
}

inline Set prefix(const Perm& v, std::size_t k) {
  Set s(v.begin(), v.begin() + k);
  std::sort(s.begin(), s.end());
  return s;
}

// Bruhat-least v over all of S_n with prefix J and v1 <= v.
inline Perm min_chain_top(int n, const Set& I, const Set& J) {
  Perm v1 = I;
  for (int x = 1; x <= n; ++x)
    if (!std::binary_search(I.begin(), I.end(), x)) v1.push_back(x);
  std::vector<Perm> cands;
  for (const auto& v : perms(n))
    if (prefix(v, J.size()) == J && bruhat_leq(v1, v)) cands.push_back(v);
  for (const auto& c : cands) {
    bool least = true;
    for (const auto& d : cands) least = least && bruhat_leq(c, d);
    if (least) return c;
  }
  return {};
}

}  // namespace oracle
