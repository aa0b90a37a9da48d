#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mfl/permutation.hpp"

namespace mfl {

// B_ell = (1..ell | ell+1..n). ell = 0 is the diagonal field.
class BlockDiagonalMF {
 public:
  BlockDiagonalMF(int n, int ell);
  int n() const { return n_; }
  int ell() const { return ell_; }
  bool is_diagonal() const { return ell_ == 0; }
  // |J ∩ [ell]|
  int low_count(const IndexSet& J) const;

 private:
  int n_;
  int ell_;
};

enum class ColumnOrder { identity, swap12 };

struct ColumnSigma {
  ColumnOrder order;
  int sign;
};

// Swap the two smallest entries iff |J| >= 2 and J meets [ell] in exactly one element.
ColumnSigma sigma(const BlockDiagonalMF& mf, const IndexSet& J);
// Entries of J top to bottom.
std::vector<int> column_display(const BlockDiagonalMF& mf, const IndexSet& J);
std::string display_string(const BlockDiagonalMF& mf, const IndexSet& J);

class WeightMatrix {
 public:
  explicit WeightMatrix(int n) : n_(n), entries_(n * n, 0) {}
  int n() const { return n_; }
  int at(int row, int col) const { return entries_[(row - 1) * n_ + (col - 1)]; }
  int& at(int row, int col) { return entries_[(row - 1) * n_ + (col - 1)]; }
  std::string to_csv() const;

 private:
  int n_;
  std::vector<int> entries_;
};

WeightMatrix weight_matrix(const BlockDiagonalMF& mf);

// Closed-form weight of P_J.
int plucker_weight(const BlockDiagonalMF& mf, const IndexSet& J);
// Minimum of the matrix weight over all |J|! placements of J in rows 1..|J|.
int plucker_weight_min(const BlockDiagonalMF& mf, const IndexSet& J);

using SigmaRule = std::function<ColumnOrder(const BlockDiagonalMF&, const IndexSet&)>;
ColumnOrder corrected_rule(const BlockDiagonalMF& mf, const IndexSet& J);
// Literal variant: identity iff |J| = 1 or |J ∩ [ell]| >= 2.
ColumnOrder printed_rule(const BlockDiagonalMF& mf, const IndexSet& J);

struct CoherenceReport {
  bool pass = true;
  int checked = 0;
  std::optional<IndexSet> counterexample;
  std::string detail;
};

// Every J: the minimum placement weight is attained once, at the placement
// the rule prescribes.
CoherenceReport verify_coherence(const BlockDiagonalMF& mf, const SigmaRule& rule = corrected_rule);

struct GridCell {
  int row;
  int col;
  auto operator<=>(const GridCell&) const = default;
};

class GridMonomial {
 public:
  void multiply(GridCell cell, int exponent = 1);
  void negate() { sign_ = -sign_; }
  GridMonomial operator*(const GridMonomial& o) const;

  const std::map<GridCell, int>& exponents() const { return exponents_; }
  int sign() const { return sign_; }
  int degree() const;
  // Sorted "x[i][j]^e" factors.
  std::vector<std::string> factors() const;
  std::string to_string() const;

  bool operator==(const GridMonomial&) const = default;

 private:
  std::map<GridCell, int> exponents_;
  int sign_ = 1;
};

GridMonomial phi(const BlockDiagonalMF& mf, const IndexSet& J);
GridMonomial phi(const BlockDiagonalMF& mf, std::span<const IndexSet> monomial);

}  // namespace mfl
