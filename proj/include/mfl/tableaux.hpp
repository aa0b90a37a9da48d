#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mfl/errors.hpp"
#include "mfl/matching_field.hpp"
#include "mfl/permutation.hpp"

namespace mfl {

enum class TableauKind { ssyt, matching_field };

// Columns left to right with weakly decreasing sizes. An ssyt displays each
// column increasing; a matching-field tableau displays it in B_ell order.
class Tableau {
 public:
  Tableau(std::vector<IndexSet> columns, TableauKind kind, int ell = 0);

  const std::vector<IndexSet>& columns() const { return columns_; }
  TableauKind kind() const { return kind_; }
  int ell() const { return ell_; }
  int n() const { return columns_.front().ambient(); }
  std::vector<int> shape() const;
  std::vector<std::vector<int>> displays() const;
  // Sorted entries of each row.
  std::vector<std::vector<int>> rows() const;
  bool is_semistandard() const;
  std::vector<std::vector<std::string>> to_json_columns() const;
  std::string render() const;

  bool operator==(const Tableau&) const = default;

 private:
  std::vector<IndexSet> columns_;
  TableauKind kind_;
  int ell_;
};

// Two-column SSYT over proper subsets of [n]; with w, only columns below w.
// Ordered by (left column, right column) in IndexSet order.
std::vector<Tableau> enumerate_ssyt2(int n, const std::optional<Permutation>& w = std::nullopt);
std::vector<Tableau> enumerate_ssyt1(int n, const std::optional<Permutation>& w = std::nullopt);

bool columns_below(const Tableau& T, const Permutation& w);

Tableau gamma(const Tableau& T, int ell);

// Same per-row entry multisets of the displays; false on shape mismatch.
bool row_equal(const Tableau& a, const Tableau& b);

// Distinct phi images among degree-2 monomials in the variables surviving w.
long long standard_monomial_count_deg2(int n, int ell, const Permutation& w);

struct DefiningChain {
  std::vector<Permutation> perms;
  std::vector<int> tilde_I;
};

// Minimum chain for a one- or two-column SSYT.
DefiningChain min_defining_chain2(const Tableau& T, int n);
// Same, always by search over v_2 = (J, I~, rest) with I~ a subset of I.
DefiningChain min_defining_chain2_exhaustive(const Tableau& T, int n);

bool is_standard(const Tableau& T, const Permutation& w);

struct BijectionReport {
  bool pass = true;
  bool w_in_P = false;
  long long ssyt_count = 0;       // two-column SSYT with columns below w
  long long row_class_count = 0;  // distinct phi images of surviving monomials
  long long standard_count = 0;   // two-column SSYT whose minimum chain ends below w
  std::vector<std::string> failures;
};

BijectionReport verify_bijection(int n, int ell, const Permutation& w);

}  // namespace mfl
