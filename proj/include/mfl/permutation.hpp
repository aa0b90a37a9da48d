#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mfl {

inline constexpr int kMaxN = 16;

// Distinct integers, not necessarily an interval. Pattern tests only look at
// relative order, so no relabelling is ever needed.
class ValueSequence {
 public:
  ValueSequence() = default;
  explicit ValueSequence(std::vector<int> values);

  const std::vector<int>& values() const { return values_; }
  int size() const { return static_cast<int>(values_.size()); }
  int operator[](int i) const { return values_[i]; }
  bool operator==(const ValueSequence&) const = default;

 private:
  std::vector<int> values_;
};

// One-line notation. w(i) is 1-based to match the usual w_i.
class Permutation {
 public:
  explicit Permutation(std::vector<int> entries);
  static Permutation identity(int n);
  static Permutation longest(int n);
  // "3214" for n <= 9, "10,3,..." otherwise (commas are accepted for any n).
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(entries_.size()); }
  int operator()(int i) const { return entries_[i - 1]; }
  const std::vector<int>& entries() const { return entries_; }
  int position_of(int value) const;
  // Bitmask of {w_1, ..., w_k}; bit v-1 stands for value v.
  std::uint32_t prefix_mask(int k) const;
  ValueSequence as_sequence() const { return ValueSequence(entries_); }
  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> entries_;
};

// Non-empty proper subset of [n], stored as a bitmask.
// Ordering is by size, then lexicographic on sorted members: 1 < 2 < 12 < 13.
class IndexSet {
 public:
  IndexSet(int n, std::uint32_t mask);
  static IndexSet from_members(int n, std::span<const int> members);
  static IndexSet parse(int n, std::string_view text);

  int ambient() const { return n_; }
  std::uint32_t mask() const { return mask_; }
  int size() const;
  bool contains(int v) const { return (mask_ >> (v - 1)) & 1u; }
  std::vector<int> members() const;
  std::string to_string() const;

  bool operator==(const IndexSet& o) const { return n_ == o.n_ && mask_ == o.mask_; }
  std::strong_ordering operator<=>(const IndexSet& o) const;

 private:
  int n_;
  std::uint32_t mask_;
};

// All non-empty proper subsets of [n] in IndexSet order.
std::vector<IndexSet> all_index_sets(int n);

// Gale order on equal-size subsets given as bitmasks.
bool gale_leq_mask(std::uint32_t a, std::uint32_t b);
bool gale_leq(const IndexSet& a, const IndexSet& b);

// J lies in S_w, i.e. J is not below {w_1, ..., w_|J|}.
bool vanishes(const IndexSet& J, const Permutation& w);
std::vector<IndexSet> vanishing_set(const Permutation& w);

Permutation restriction(const Permutation& w, int m);
ValueSequence delete_value(const Permutation& w, int v);
Permutation insert_max(const Permutation& w, int t);
Permutation remove_max(const Permutation& w);

bool avoids(const ValueSequence& w, const ValueSequence& pattern);
bool is_312_free(const Permutation& w);
bool has_descending_property(const Permutation& w);

bool in_Z(const Permutation& w);
// Recursive description: w_n = n over Z_{n-1}, or w ends (n, n-1) over Z_{n-2}.
bool in_Z_inductive(const Permutation& w);
std::vector<Permutation> z_family(int n);
std::uint64_t z_count(int n);

bool bruhat_leq(const Permutation& v, const Permutation& w);

std::vector<Permutation> all_permutations(int n);

}  // namespace mfl
