#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>
#include "mfl/matching_field.hpp"
#include "mfl/quadratic_ideal.hpp"
#include "mfl/tableaux.hpp"
#include "mfl/theorem_sets.hpp"

namespace mfl {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "mfl/1";

Json index_pair_json(const QuadMonomial& m);  // ["3","12"]
Json relation_json(const QuadraticRelation& r);
Json grid_monomial_json(const GridMonomial& g);
Json tableau_json(const Tableau& t);
Json outcome_json(int n, int ell, const Permutation& w, const ClassificationOutcome& out);

// The relation under P_J -> sgn(J) P_J, which turns the signed map into the
// unsigned one: always "lhs - rhs".
std::string sign_free_string(const QuadraticRelation& r);

std::string counts_csv(const std::vector<LevelCounts>& rows);
Json counts_json(const std::vector<LevelCounts>& rows);
// Binomial counts as an n by ell grid with a total column.
std::string counts_grid(const std::vector<LevelCounts>& rows);

struct GoldenDiff {
  std::vector<std::string> diffs;  // disagreements with the reference data
  std::vector<std::string> notes;  // self-inconsistent reference entries, reported but not failing
  bool ok() const { return diffs.empty(); }
  Json to_json() const;
};

// Reference data for n = 3 and 4.
struct Table1Cell {
  int ell;
  std::string w;
  std::vector<std::string> generators;  // sign-free form, canonical orientation
};
const std::vector<Table1Cell>& table1_ideals();
const std::map<int, std::vector<std::string>>& table1_toric();
// Rows n = 3..6, indexed by ell, plus the stated row totals.
const std::map<int, std::vector<long long>>& table2_counts();
const std::map<int, long long>& table2_totals();
const std::map<int, std::vector<std::string>>& z_listings();

// Computed generator strings of one n = 3 cell, in the sign-free form.
std::vector<std::string> table1_cell(int ell, const Permutation& w);
GoldenDiff diff_table1();
GoldenDiff diff_table2(const std::vector<LevelCounts>& rows);
GoldenDiff diff_zn(int n_max);

Json table1_json();

}  // namespace mfl
