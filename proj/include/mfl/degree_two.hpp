#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mfl/errors.hpp"
#include "mfl/permutation.hpp"
#include "mfl/quadratic_ideal.hpp"

namespace mfl {

// Linear-algebra cap: MFL_LA_CAP if set, else 5.
int default_la_cap();

using SparseRow = std::vector<std::pair<int, long long>>;  // sorted by column

// Integer row echelon form kept fully reduced: rows are primitive, pivots
// positive, and each pivot column appears in its own row only. A row's pivot
// is its column of least priority; ties break by column id.
class SparseEchelon {
 public:
  SparseEchelon() = default;
  explicit SparseEchelon(std::vector<long long> priority) : priority_(std::move(priority)) {}

  // Returns the reduced remainder; empty if v was already in the span.
  SparseRow insert(SparseRow v);
  SparseRow reduce(SparseRow v) const;
  int rank() const { return static_cast<int>(rows_.size()); }
  // Rows ordered by pivot priority.
  std::vector<SparseRow> rows() const;
  bool before(int c1, int c2) const;

 private:
  int pivot_of(const SparseRow& v) const;
  std::vector<long long> priority_;
  std::map<int, SparseRow> rows_;  // keyed by pivot column
};

// Index of the degree-2 monomial P_I * P_J among all pairs of variables of [n].
class MonomialIndex {
 public:
  explicit MonomialIndex(int n);
  int n() const { return n_; }
  int variable_count() const { return static_cast<int>(vars_.size()); }
  const std::vector<IndexSet>& variables() const { return vars_; }
  int variable_id(const IndexSet& J) const { return var_id_[J.mask()]; }
  int column(const QuadMonomial& m) const;
  QuadMonomial monomial(int column) const;

 private:
  int n_;
  std::vector<IndexSet> vars_;
  std::vector<int> var_id_;
};

// A subspace of the degree-2 part of K[P_J].
class DegreeTwoSpace {
 public:
  explicit DegreeTwoSpace(int n) : index_(n) {}

  int n() const { return index_.n(); }
  int rank() const { return echelon_.rank(); }
  const MonomialIndex& index() const { return index_; }

  bool add(SparseRow v);
  void add(const QuadraticRelation& r);
  void add(const QuadMonomial& m);
  bool contains(const SparseRow& v) const;
  bool contains(const DegreeTwoSpace& other) const;
  bool operator==(const DegreeTwoSpace& o) const;
  std::vector<SparseRow> basis() const { return echelon_.rows(); }
  std::string polynomial(const SparseRow& v) const;
  std::vector<std::string> to_strings() const;

 private:
  MonomialIndex index_;
  SparseEchelon echelon_;
};

SparseRow relation_row(const MonomialIndex& idx, const QuadraticRelation& r);

// Degree-2 part of the flag ideal: quadrics vanishing when each P_J becomes
// the top |J| x |J| minor on columns J of a generic matrix.
DegreeTwoSpace degree2_flag_ideal(int n, int cap = default_la_cap());

// Degree-2 part of the initial ideal of the Schubert ideal of w for weight w_ell.
DegreeTwoSpace initial_degree2(int n, int ell, const Permutation& w, int cap = default_la_cap());

// Span of the surviving binomials (and monomials) of an outcome.
DegreeTwoSpace outcome_span(int n, const ClassificationOutcome& out);

// Surviving binomials span exactly the degree-2 initial forms.
// Throws std::invalid_argument if the restricted ideal has monomials.
bool theoremA_check(int n, int ell, const Permutation& w, int cap = default_la_cap());

}  // namespace mfl
