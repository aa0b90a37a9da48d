#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "mfl/permutation.hpp"
#include "mfl/quadratic_ideal.hpp"

namespace mfl {

enum class CombinatorialClass { Z, T, N };
std::string to_string(CombinatorialClass c);

enum class WitnessTag { A1, A2, A2prime, A3, A1tilde, A2tilde, exceptional };
std::string to_string(WitnessTag t);

using TaggedSet = std::map<Permutation, std::vector<WitnessTag>>;

// The auxiliary sets built from Z_{n-1} and T_{n-1,*} by inserting n.
// A2/A2'/A3 are taken for the given ell; the tilde sets always use ell = n-1.
struct ASets {
  std::set<Permutation> A1, A2, A2prime, A3, A1tilde, A2tilde;
};
ASets a_sets(int n, int ell);

// (n, ell, n-1, ..., ell+1, ell-1, ..., 1); requires 1 <= ell <= n-2.
Permutation exceptional_permutation(int n, int ell);

// Binomial permutations built inductively from n-1. The n = 3 level is
// computed by the oracle. Memoized; thread-safe.
const TaggedSet& build_T(int n, int ell);
bool in_T(int n, int ell, const Permutation& w);

// Pattern-avoidance description of the monomial-free permutations; ell = 0
// is the 312-free test.
bool in_P(const Permutation& w, int ell);

struct ClassificationRecord {
  int n;
  int ell;
  Permutation w;
  CombinatorialClass combinatorial_class;
  bool in_P;
  std::vector<WitnessTag> witness_tags;
};
ClassificationRecord classify_combinatorial(int n, int ell, const Permutation& w);

struct LevelCounts {
  int n;
  int ell;
  long long binomial = 0;
  long long zero = 0;
  long long nonbinomial = 0;
};

enum class Check { zero, binomial, monomial_free, descending };

struct Mismatch {
  Check check;
  std::string text;
};

struct CrossValidationReport {
  int n;
  std::vector<Mismatch> mismatches;
  std::vector<LevelCounts> counts;  // oracle counts, one per ell
  bool ok() const { return mismatches.empty(); }
};

// Oracle against Z_n, build_T and P_ell for every ell and w in S_n.
CrossValidationReport cross_validate(int n, int jobs = 1);

enum class CountMode { oracle, combinatorial };
std::vector<LevelCounts> count_table(int n_min, int n_max, CountMode mode, int jobs = 1);

}  // namespace mfl
