#include "mfl/degree_two.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>
#include <mutex>
#include <numeric>
#include <tuple>

#include "mfl/matching_field.hpp"

namespace mfl {

int default_la_cap() {
  if (const char* env = std::getenv("MFL_LA_CAP")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 2 && v <= 8) return static_cast<int>(v);
  }
  return 5;
}

namespace {

long long checked(__int128 v) {
  if (v > static_cast<__int128>(INT64_MAX) || v < -static_cast<__int128>(INT64_MAX))
    throw std::overflow_error("integer elimination overflowed 64 bits");
  return static_cast<long long>(v);
}

long long coefficient(const SparseRow& v, int col) {
  auto it = std::lower_bound(v.begin(), v.end(), col, [](const auto& e, int c) { return e.first < c; });
  return (it != v.end() && it->first == col) ? it->second : 0;
}

// a*u - b*v
SparseRow combine(long long a, const SparseRow& u, long long b, const SparseRow& v) {
  SparseRow out;
  out.reserve(u.size() + v.size());
  std::size_t i = 0, j = 0;
  while (i < u.size() || j < v.size()) {
    int c;
    __int128 x = 0;
    if (j == v.size() || (i < u.size() && u[i].first < v[j].first)) {
      c = u[i].first;
      x = static_cast<__int128>(a) * u[i++].second;
    } else if (i == u.size() || v[j].first < u[i].first) {
      c = v[j].first;
      x = -static_cast<__int128>(b) * v[j++].second;
    } else {
      c = u[i].first;
      x = static_cast<__int128>(a) * u[i++].second - static_cast<__int128>(b) * v[j++].second;
    }
    if (x != 0) out.emplace_back(c, checked(x));
  }
  return out;
}

void make_primitive(SparseRow& v, long long lead) {
  long long g = 0;
  for (const auto& [c, x] : v) g = std::gcd(g, x < 0 ? -x : x);
  if (g == 0) return;
  if (lead < 0) g = -g;
  for (auto& [c, x] : v) x /= g;
}

}  // namespace

bool SparseEchelon::before(int c1, int c2) const {
  if (priority_.empty()) return c1 < c2;
  return std::tie(priority_[c1], c1) < std::tie(priority_[c2], c2);
}

int SparseEchelon::pivot_of(const SparseRow& v) const {
  int best = v.front().first;
  for (const auto& [c, x] : v)
    if (before(c, best)) best = c;
  return best;
}

SparseRow SparseEchelon::reduce(SparseRow v) const {
  for (;;) {
    const SparseRow* row = nullptr;
    int col = -1;
    for (const auto& [c, x] : v) {
      if (auto it = rows_.find(c); it != rows_.end()) {
        row = &it->second;
        col = c;
        break;
      }
    }
    if (!row) break;
    v = combine(coefficient(*row, col), v, coefficient(v, col), *row);
  }
  if (!v.empty()) make_primitive(v, coefficient(v, pivot_of(v)));
  return v;
}

SparseRow SparseEchelon::insert(SparseRow v) {
  v = reduce(std::move(v));
  if (v.empty()) return v;
  const int p = pivot_of(v);
  const long long lead = coefficient(v, p);
  for (auto& [q, row] : rows_) {
    if (long long x = coefficient(row, p); x != 0) {
      row = combine(lead, row, x, v);
      make_primitive(row, coefficient(row, q));
    }
  }
  rows_.emplace(p, v);
  return v;
}

std::vector<SparseRow> SparseEchelon::rows() const {
  std::vector<std::pair<int, SparseRow>> tmp(rows_.begin(), rows_.end());
  std::sort(tmp.begin(), tmp.end(), [this](const auto& x, const auto& y) { return before(x.first, y.first); });
  std::vector<SparseRow> out;
  for (auto& [p, r] : tmp) out.push_back(std::move(r));
  return out;
}

MonomialIndex::MonomialIndex(int n) : n_(n), vars_(all_index_sets(n)), var_id_(1u << n, -1) {
  for (std::size_t i = 0; i < vars_.size(); ++i) var_id_[vars_[i].mask()] = static_cast<int>(i);
}

int MonomialIndex::column(const QuadMonomial& m) const {
  return variable_id(m.a) * variable_count() + variable_id(m.b);
}

QuadMonomial MonomialIndex::monomial(int column) const {
  return QuadMonomial(vars_[column / variable_count()], vars_[column % variable_count()]);
}

bool DegreeTwoSpace::add(SparseRow v) {
  std::sort(v.begin(), v.end());
  return !echelon_.insert(std::move(v)).empty();
}

SparseRow relation_row(const MonomialIndex& idx, const QuadraticRelation& r) {
  SparseRow v{{idx.column(r.lhs), 1}, {idx.column(r.rhs), -r.rel_sign}};
  std::sort(v.begin(), v.end());
  return v;
}

void DegreeTwoSpace::add(const QuadraticRelation& r) { add(relation_row(index_, r)); }

void DegreeTwoSpace::add(const QuadMonomial& m) { add(SparseRow{{index_.column(m), 1}}); }

bool DegreeTwoSpace::contains(const SparseRow& v) const {
  SparseRow s = v;
  std::sort(s.begin(), s.end());
  return echelon_.reduce(std::move(s)).empty();
}

bool DegreeTwoSpace::contains(const DegreeTwoSpace& other) const {
  if (other.n() != n()) return false;
  for (const auto& r : other.basis())
    if (!contains(r)) return false;
  return true;
}

bool DegreeTwoSpace::operator==(const DegreeTwoSpace& o) const {
  return rank() == o.rank() && contains(o);
}

std::string DegreeTwoSpace::polynomial(const SparseRow& v) const {
  // Terms in monomial order, largest key first reads like the usual relations.
  std::vector<std::pair<QuadMonomial, long long>> terms;
  for (const auto& [c, x] : v) terms.emplace_back(index_.monomial(c), x);
  std::sort(terms.begin(), terms.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
  std::string s;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    long long x = terms[i].second;
    if (i == 0) s += x < 0 ? "-" : "";
    else s += x < 0 ? " - " : " + ";
    long long ax = x < 0 ? -x : x;
    if (ax != 1) s += std::to_string(ax) + "*";
    s += terms[i].first.to_string();
  }
  return s.empty() ? "0" : s;
}

std::vector<std::string> DegreeTwoSpace::to_strings() const {
  std::vector<std::string> out;
  for (const auto& r : basis()) out.push_back(polynomial(r));
  return out;
}

namespace {

using CellList = std::vector<int>;

// Signed diagonal terms of the top |J| x |J| minor on columns J.
std::vector<std::pair<CellList, int>> minor_terms(const IndexSet& J) {
  const int n = J.ambient();
  std::vector<int> cols = J.members();
  std::vector<int> perm(cols.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::pair<CellList, int>> out;
  do {
    int inv = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j) inv += perm[i] > perm[j];
    CellList cells;
    for (std::size_t r = 0; r < perm.size(); ++r) cells.push_back(static_cast<int>(r + 1) * (n + 1) + cols[perm[r]]);
    std::sort(cells.begin(), cells.end());
    out.emplace_back(std::move(cells), inv % 2 ? -1 : 1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::shared_ptr<const DegreeTwoSpace> compute_flag_ideal(int n) {
  auto space = std::make_shared<DegreeTwoSpace>(n);
  const MonomialIndex& idx = space->index();
  const auto& vars = idx.variables();
  std::vector<std::vector<std::pair<CellList, int>>> terms;
  for (const auto& J : vars) terms.push_back(minor_terms(J));

  // Products of minors are homogeneous in (row sizes, column multiset), so
  // the left kernel splits into independent blocks.
  std::map<std::tuple<int, int, std::uint32_t, std::uint32_t>, std::vector<std::pair<int, int>>> blocks;
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = i; j < vars.size(); ++j)
      blocks[{vars[i].size(), vars[j].size(), vars[i].mask() & vars[j].mask(), vars[i].mask() | vars[j].mask()}]
          .emplace_back(static_cast<int>(i), static_cast<int>(j));

  for (const auto& [key, members] : blocks) {
    if (members.size() < 2) continue;
    std::map<CellList, int> xcols;
    std::vector<std::map<int, long long>> rows(members.size());
    for (std::size_t m = 0; m < members.size(); ++m) {
      const auto& [i, j] = members[m];
      for (const auto& [ca, sa] : terms[i]) {
        for (const auto& [cb, sb] : terms[j]) {
          CellList prod;
          std::merge(ca.begin(), ca.end(), cb.begin(), cb.end(), std::back_inserter(prod));
          int col = xcols.emplace(std::move(prod), static_cast<int>(xcols.size())).first->second;
          rows[m][col] += sa * sb;
        }
      }
    }
    // Eliminate [A | I]; rows whose A part dies carry kernel vectors.
    const int width = static_cast<int>(xcols.size());
    SparseEchelon ech;
    for (std::size_t m = 0; m < members.size(); ++m) {
      SparseRow v;
      for (const auto& [c, x] : rows[m])
        if (x != 0) v.emplace_back(c, x);
      v.emplace_back(width + static_cast<int>(m), 1);
      ech.insert(std::move(v));
    }
    for (const auto& r : ech.rows()) {
      if (r.front().first < width) continue;
      SparseRow k;
      for (const auto& [c, x] : r) {
        const auto& [i, j] = members[c - width];
        k.emplace_back(i * idx.variable_count() + j, x);
      }
      space->add(std::move(k));
    }
  }
  return space;
}

const DegreeTwoSpace& flag_ideal_cached(int n) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const DegreeTwoSpace>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = compute_flag_ideal(n);
  return *slot;
}

void check_cap(int n, int cap) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  if (n > cap)
    throw CapabilityError("degree-2 linear algebra is capped at n <= " + std::to_string(cap) +
                          " (raise with --la-cap or MFL_LA_CAP)");
}

}  // namespace

DegreeTwoSpace degree2_flag_ideal(int n, int cap) {
  check_cap(n, cap);
  return flag_ideal_cached(n);
}

DegreeTwoSpace initial_degree2(int n, int ell, const Permutation& w, int cap) {
  check_cap(n, cap);
  if (w.size() != n) throw std::invalid_argument("permutation length differs from n");
  const BlockDiagonalMF mf(n, ell);
  const DegreeTwoSpace& flag = flag_ideal_cached(n);
  const MonomialIndex& idx = flag.index();
  const int V = idx.variable_count();

  std::vector<char> alive(V);
  std::vector<long long> wt(V);
  for (int i = 0; i < V; ++i) {
    alive[i] = !vanishes(idx.variables()[i], w);
    wt[i] = plucker_weight(mf, idx.variables()[i]);
  }
  std::vector<long long> priority(V * V);
  for (int i = 0; i < V; ++i)
    for (int j = 0; j < V; ++j) priority[i * V + j] = wt[i] + wt[j];

  // Setting the vanishing variables to zero deletes their columns.
  SparseEchelon graded(priority);
  for (const auto& r : flag.basis()) {
    SparseRow v;
    for (const auto& [c, x] : r)
      if (alive[c / V] && alive[c % V]) v.emplace_back(c, x);
    if (!v.empty()) graded.insert(std::move(v));
  }
  // Each echelon row starts at its lowest weight, and distinct pivots keep the
  // lowest strata independent, so the initial forms of the rows span them all.
  DegreeTwoSpace out(n);
  for (const auto& r : graded.rows()) {
    long long low = priority[r.front().first];
    for (const auto& [c, x] : r) low = std::min(low, priority[c]);
    SparseRow lead;
    for (const auto& [c, x] : r)
      if (priority[c] == low) lead.emplace_back(c, x);
    out.add(std::move(lead));
  }
  return out;
}

DegreeTwoSpace outcome_span(int n, const ClassificationOutcome& out) {
  DegreeTwoSpace s(n);
  for (const auto& r : out.surviving_binomials) s.add(r);
  for (const auto& m : out.surviving_monomials) s.add(m);
  return s;
}

bool theoremA_check(int n, int ell, const Permutation& w, int cap) {
  check_cap(n, cap);
  const auto out = classify(n, ell, w);
  if (out.verdict == Verdict::nonbinomial)
    throw std::invalid_argument("restricted ideal of " + w.to_string() + " contains monomials");
  return outcome_span(n, out) == initial_degree2(n, ell, w, cap);
}

}  // namespace mfl
