#include "mfl/permutation.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace mfl {

namespace {

std::uint32_t low_bits(int k) { return k >= 32 ? ~0u : ((1u << k) - 1u); }

std::vector<int> parse_ints(std::string_view text, bool allow_digits) {
  std::vector<int> out;
  if (text.find(',') != std::string_view::npos || !allow_digits) {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view tok = text.substr(start, end - start);
      int v = 0;
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (tok.empty() || ec != std::errc() || p != tok.data() + tok.size())
        throw std::invalid_argument("malformed entry '" + std::string(tok) + "'");
      out.push_back(v);
      start = end + 1;
    }
    return out;
  }
  for (char c : text) {
    if (c < '1' || c > '9')
      throw std::invalid_argument("malformed entry '" + std::string(1, c) + "'");
    out.push_back(c - '0');
  }
  return out;
}

std::string join_ints(const std::vector<int>& v, bool compact) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!compact && i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

ValueSequence::ValueSequence(std::vector<int> values) : values_(std::move(values)) {
  std::vector<int> sorted = values_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("value sequence has repeated entries");
}

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  const int n = size();
  if (n < 1 || n > kMaxN)
    throw std::invalid_argument("permutation length must be in 1.." + std::to_string(kMaxN));
  std::vector<bool> seen(n + 1, false);
  for (int v : entries_) {
    if (v < 1 || v > n || seen[v])
      throw std::invalid_argument("not a permutation of [" + std::to_string(n) + "]");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> e(n);
  std::iota(e.begin(), e.end(), 1);
  return Permutation(std::move(e));
}

Permutation Permutation::longest(int n) {
  std::vector<int> e(n);
  std::iota(e.rbegin(), e.rend(), 1);
  return Permutation(std::move(e));
}

Permutation Permutation::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty permutation");
  return Permutation(parse_ints(text, true));
}

int Permutation::position_of(int value) const {
  auto it = std::find(entries_.begin(), entries_.end(), value);
  if (it == entries_.end()) throw std::invalid_argument("value not in permutation");
  return static_cast<int>(it - entries_.begin()) + 1;
}

std::uint32_t Permutation::prefix_mask(int k) const {
  std::uint32_t m = 0;
  for (int i = 0; i < k; ++i) m |= 1u << (entries_[i] - 1);
  return m;
}

std::string Permutation::to_string() const { return join_ints(entries_, size() <= 9); }

IndexSet::IndexSet(int n, std::uint32_t mask) : n_(n), mask_(mask) {
  if (n < 2 || n > kMaxN) throw std::invalid_argument("index set ambient size out of range");
  if (mask == 0 || (mask & ~low_bits(n)) != 0 || mask == low_bits(n))
    throw std::invalid_argument("index set must be a non-empty proper subset of [n]");
}

IndexSet IndexSet::from_members(int n, std::span<const int> members) {
  std::uint32_t m = 0;
  for (int v : members) {
    if (v < 1 || v > n) throw std::invalid_argument("index out of range");
    if (m & (1u << (v - 1))) throw std::invalid_argument("repeated index");
    m |= 1u << (v - 1);
  }
  return IndexSet(n, m);
}

IndexSet IndexSet::parse(int n, std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty index set");
  auto v = parse_ints(text, true);
  return from_members(n, v);
}

int IndexSet::size() const { return std::popcount(mask_); }

std::vector<int> IndexSet::members() const {
  std::vector<int> out;
  for (int v = 1; v <= n_; ++v)
    if (contains(v)) out.push_back(v);
  return out;
}

std::string IndexSet::to_string() const { return join_ints(members(), n_ <= 9); }

std::strong_ordering IndexSet::operator<=>(const IndexSet& o) const {
  if (auto c = n_ <=> o.n_; c != 0) return c;
  if (auto c = size() <=> o.size(); c != 0) return c;
  // Lexicographic on sorted members: the first differing element decides,
  // and the set holding the smaller one comes first.
  std::uint32_t diff = mask_ ^ o.mask_;
  if (diff == 0) return std::strong_ordering::equal;
  std::uint32_t lowest = diff & (~diff + 1);
  return (mask_ & lowest) ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::vector<IndexSet> all_index_sets(int n) {
  std::vector<IndexSet> out;
  for (std::uint32_t m = 1; m < low_bits(n); ++m) out.emplace_back(n, m);
  std::sort(out.begin(), out.end());
  return out;
}

bool gale_leq_mask(std::uint32_t a, std::uint32_t b) {
  // a <= b iff every initial segment [1..t] holds at least as many elements of a.
  for (int t = 1; t <= 32; ++t) {
    std::uint32_t seg = low_bits(t);
    if (std::popcount(a & seg) < std::popcount(b & seg)) return false;
    if (((a | b) & ~seg) == 0) break;
  }
  return true;
}

bool gale_leq(const IndexSet& a, const IndexSet& b) {
  if (a.size() != b.size() || a.ambient() != b.ambient())
    throw std::invalid_argument("gale order compares sets of equal size");
  return gale_leq_mask(a.mask(), b.mask());
}

bool vanishes(const IndexSet& J, const Permutation& w) {
  if (J.ambient() != w.size()) throw std::invalid_argument("ambient size mismatch");
  return !gale_leq_mask(J.mask(), w.prefix_mask(J.size()));
}

std::vector<IndexSet> vanishing_set(const Permutation& w) {
  std::vector<IndexSet> out;
  if (w.size() < 2) return out;
  for (const auto& J : all_index_sets(w.size()))
    if (vanishes(J, w)) out.push_back(J);
  return out;
}

Permutation restriction(const Permutation& w, int m) {
  if (m < 1 || m > w.size()) throw std::invalid_argument("restriction bound out of range");
  std::vector<int> e;
  for (int v : w.entries())
    if (v <= m) e.push_back(v);
  return Permutation(std::move(e));
}

ValueSequence delete_value(const Permutation& w, int v) {
  std::vector<int> e;
  for (int x : w.entries())
    if (x != v) e.push_back(x);
  return ValueSequence(std::move(e));
}

Permutation insert_max(const Permutation& w, int t) {
  if (t < 0 || t > w.size()) throw std::invalid_argument("insertion position out of range");
  std::vector<int> e = w.entries();
  e.insert(e.begin() + t, w.size() + 1);
  return Permutation(std::move(e));
}

Permutation remove_max(const Permutation& w) {
  if (w.size() < 2) throw std::invalid_argument("remove_max needs n >= 2");
  std::vector<int> e;
  for (int x : w.entries())
    if (x != w.size()) e.push_back(x);
  return Permutation(std::move(e));
}

bool avoids(const ValueSequence& w, const ValueSequence& pattern) {
  const int n = w.size(), k = pattern.size();
  if (k == 0) return false;
  if (k > n) return true;
  std::vector<int> pick(k);
  // Depth-first over increasing index tuples, pruning as soon as a pairwise
  // comparison disagrees with the pattern.
  auto rec = [&](auto&& self, int depth, int from) -> bool {
    if (depth == k) return true;
    for (int i = from; i <= n - (k - depth); ++i) {
      bool ok = true;
      for (int d = 0; d < depth && ok; ++d)
        ok = (w[pick[d]] < w[i]) == (pattern[d] < pattern[depth]);
      if (!ok) continue;
      pick[depth] = i;
      if (self(self, depth + 1, i + 1)) return true;
    }
    return false;
  };
  return !rec(rec, 0, 0);
}

bool is_312_free(const Permutation& w) {
  static const ValueSequence p312({3, 1, 2});
  return avoids(w.as_sequence(), p312);
}

bool has_descending_property(const Permutation& w) {
  for (int i = w.position_of(w.size()); i < w.size(); ++i)
    if (w(i) <= w(i + 1)) return false;
  return true;
}

bool in_Z(const Permutation& w) {
  for (int i = 1; i <= w.size(); ++i) {
    if (w(w(i)) != i) return false;
    if (std::abs(w(i) - i) > 1) return false;
  }
  return true;
}

namespace {
bool z_prefix(const std::vector<int>& e, int len) {
  if (len <= 1) return len == 0 || e[0] == 1;
  if (e[len - 1] == len) return z_prefix(e, len - 1);
  if (e[len - 1] == len - 1 && e[len - 2] == len) return z_prefix(e, len - 2);
  return false;
}
}  // namespace

bool in_Z_inductive(const Permutation& w) { return z_prefix(w.entries(), w.size()); }

std::vector<Permutation> z_family(int n) {
  if (n < 1 || n > kMaxN) throw std::invalid_argument("n out of range");
  // Z_n = (Z_{n-1} followed by n) and (Z_{n-2} followed by n, n-1).
  std::vector<std::vector<std::vector<int>>> z(n + 1);
  z[0] = {{}};
  z[1] = {{1}};
  for (int m = 2; m <= n; ++m) {
    for (auto e : z[m - 1]) {
      e.push_back(m);
      z[m].push_back(std::move(e));
    }
    for (auto e : z[m - 2]) {
      e.push_back(m);
      e.push_back(m - 1);
      z[m].push_back(std::move(e));
    }
  }
  std::vector<Permutation> out;
  for (auto& e : z[n]) out.emplace_back(std::move(e));
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t z_count(int n) {
  if (n < 1) throw std::invalid_argument("n out of range");
  std::uint64_t a = 1, b = 2;  // |Z_1|, |Z_2|
  if (n == 1) return a;
  for (int m = 3; m <= n; ++m) {
    std::uint64_t c = a + b;
    a = b;
    b = c;
  }
  return b;
}

bool bruhat_leq(const Permutation& v, const Permutation& w) {
  if (v.size() != w.size()) throw std::invalid_argument("bruhat order compares equal sizes");
  std::uint32_t pv = 0, pw = 0;
  for (int k = 1; k < v.size(); ++k) {
    pv |= 1u << (v(k) - 1);
    pw |= 1u << (w(k) - 1);
    if (!gale_leq_mask(pv, pw)) return false;
  }
  return true;
}

std::vector<Permutation> all_permutations(int n) {
  if (n < 1 || n > 10) throw std::invalid_argument("exhaustive enumeration limited to n <= 10");
  std::vector<int> e(n);
  std::iota(e.begin(), e.end(), 1);
  std::vector<Permutation> out;
  do out.emplace_back(e);
  while (std::next_permutation(e.begin(), e.end()));
  return out;
}

}  // namespace mfl
