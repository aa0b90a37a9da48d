#include "mfl/quadratic_ideal.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

namespace mfl {

QuadMonomial::QuadMonomial(IndexSet x, IndexSet y) : a(x < y ? x : y), b(x < y ? y : x) {
  if (x.ambient() != y.ambient()) throw std::invalid_argument("ambient size mismatch");
}

std::strong_ordering QuadMonomial::operator<=>(const QuadMonomial& o) const {
  if (auto c = b <=> o.b; c != 0) return c;
  return a <=> o.a;
}

std::string QuadMonomial::to_string() const {
  // Smaller-size variable first, as the relations are usually written.
  return "P_" + a.to_string() + "*P_" + b.to_string();
}

std::string QuadraticRelation::to_string() const {
  return lhs.to_string() + (rel_sign > 0 ? " - " : " + ") + rhs.to_string();
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::zero: return "zero";
    case Verdict::binomial: return "binomial";
    case Verdict::nonbinomial: return "nonbinomial";
  }
  return "?";
}

RelationSet::RelationSet(const BlockDiagonalMF& mf, PairMode mode) : mf_(mf), mode_(mode) {
  const int n = mf.n();
  const auto vars = all_index_sets(n);
  std::vector<std::vector<int>> cells(vars.size());
  std::vector<int> signs(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) {
    auto d = column_display(mf, vars[i]);
    for (std::size_t r = 0; r < d.size(); ++r) cells[i].push_back(static_cast<int>(r) * (n + 1) + d[r]);
    std::sort(cells[i].begin(), cells[i].end());
    signs[i] = sigma(mf, vars[i]).sign;
  }

  std::map<std::vector<int>, std::vector<std::pair<QuadMonomial, int>>> by_image;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    for (std::size_t j = i; j < vars.size(); ++j) {
      std::vector<int> key;
      key.reserve(cells[i].size() + cells[j].size());
      std::merge(cells[i].begin(), cells[i].end(), cells[j].begin(), cells[j].end(), std::back_inserter(key));
      by_image[key].emplace_back(QuadMonomial(vars[i], vars[j]), signs[i] * signs[j]);
      ++monomial_count_;
    }
  }

  for (auto& [key, members] : by_image) {
    if (members.size() < 2) continue;
    std::sort(members.begin(), members.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<QuadMonomial> fiber;
    for (const auto& m : members) fiber.push_back(m.first);
    fibers_.push_back(std::move(fiber));
    const std::size_t f = members.size();
    for (std::size_t i = 0; i < f; ++i) {
      for (std::size_t j = i + 1; j < f; ++j) {
        if (mode == PairMode::spanning && i != 0) break;
        relations_.push_back({members[i].first, members[j].first, members[i].second * members[j].second});
      }
    }
  }
  std::sort(fibers_.begin(), fibers_.end(), [](const auto& x, const auto& y) { return x.front() < y.front(); });
  std::sort(relations_.begin(), relations_.end(), [](const auto& x, const auto& y) {
    return std::tie(x.lhs, x.rhs) < std::tie(y.lhs, y.rhs);
  });
}

std::vector<QuadraticRelation> quadratic_relations(const BlockDiagonalMF& mf, PairMode mode) {
  return RelationSet(mf, mode).relations();
}

std::shared_ptr<const RelationSet> relation_set(int n, int ell, PairMode mode) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, PairMode>, std::shared_ptr<const RelationSet>> cache;
  BlockDiagonalMF mf(n, ell);
  const auto key = std::make_tuple(n, ell, mode);
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto built = std::make_shared<const RelationSet>(mf, mode);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(built)).first->second;
}

namespace {

struct DisjointSets {
  std::vector<int> parent;
  std::vector<char> anchored;  // component holds a monomial generator
  explicit DisjointSets(int size) : parent(size), anchored(size, 0) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return;
    parent[x] = y;
    anchored[y] = anchored[y] || anchored[x];
  }
};

// dead[mask] is set when P_mask vanishes for w.
std::vector<char> vanishing_table(const Permutation& w) {
  const int n = w.size();
  std::vector<char> dead(std::size_t{1} << n, 0);
  std::vector<std::uint32_t> prefix(n + 1, 0);
  for (int k = 1; k <= n; ++k) prefix[k] = w.prefix_mask(k);
  for (std::uint32_t m = 1; m + 1 < (1u << n); ++m)
    dead[m] = !gale_leq_mask(m, prefix[std::popcount(m)]);
  return dead;
}

}  // namespace

ClassificationOutcome restrict_to(const std::vector<QuadraticRelation>& relations, const Permutation& w) {
  ClassificationOutcome out;
  std::set<QuadMonomial> monomials;
  const auto dead = vanishing_table(w);
  auto gone = [&](const QuadMonomial& m) { return dead[m.a.mask()] || dead[m.b.mask()]; };
  for (const auto& r : relations) {
    if (r.lhs.a.ambient() != w.size()) throw std::invalid_argument("permutation length differs from n");
    const bool lv = gone(r.lhs);
    const bool rv = gone(r.rhs);
    if (lv && rv) continue;
    if (!lv && !rv) out.surviving_binomials.push_back(r);
    else monomials.insert(lv ? r.rhs : r.lhs);
  }
  out.surviving_monomials.assign(monomials.begin(), monomials.end());
  if (!out.surviving_monomials.empty()) out.verdict = Verdict::nonbinomial;
  else if (!out.surviving_binomials.empty()) out.verdict = Verdict::binomial;
  else out.verdict = Verdict::zero;

  // Binomials are edges between monomials. A component of size c spans c-1
  // dimensions, or c once a monomial generator lies in it.
  std::map<QuadMonomial, int> ids;
  auto id_of = [&](const QuadMonomial& m) { return ids.emplace(m, static_cast<int>(ids.size())).first->second; };
  for (const auto& r : out.surviving_binomials) {
    id_of(r.lhs);
    id_of(r.rhs);
  }
  for (const auto& m : out.surviving_monomials) id_of(m);
  DisjointSets ds(static_cast<int>(ids.size()));
  for (const auto& m : out.surviving_monomials) ds.anchored[ds.find(ids.at(m))] = 1;
  for (const auto& r : out.surviving_binomials) ds.unite(ids.at(r.lhs), ids.at(r.rhs));
  std::map<int, int> comp_size;
  for (const auto& [m, i] : ids) ++comp_size[ds.find(i)];
  for (const auto& [root, size] : comp_size) out.degree2_rank += ds.anchored[root] ? size : size - 1;
  return out;
}

ClassificationOutcome classify(int n, int ell, const Permutation& w, PairMode mode) {
  if (w.size() != n) throw std::invalid_argument("permutation length differs from n");
  return restrict_to(relation_set(n, ell, mode)->relations(), w);
}

Verdict classify_oracle(int n, int ell, const Permutation& w) {
  if (n < 3) throw std::invalid_argument("classification needs n >= 3");
  return classify(n, ell, w).verdict;
}

int surviving_monomial_count(const Permutation& w) {
  int v = 0;
  for (const auto& J : all_index_sets(w.size()))
    if (!vanishes(J, w)) ++v;
  return v * (v + 1) / 2;
}

}  // namespace mfl
