#pragma once

#include <memory>
#include <string>
#include <vector>

#include "mfl/matching_field.hpp"
#include "mfl/permutation.hpp"

namespace mfl {

// P_a * P_b with a <= b. Monomials compare by (larger variable, smaller
// variable) in IndexSet order; that makes P_3*P_12 precede P_1*P_23.
struct QuadMonomial {
  IndexSet a;
  IndexSet b;

  QuadMonomial(IndexSet x, IndexSet y);
  std::string to_string() const;  // "P_3*P_12"
  bool operator==(const QuadMonomial& o) const { return a == o.a && b == o.b; }
  std::strong_ordering operator<=>(const QuadMonomial& o) const;
};

// lhs - rel_sign * rhs lies in the kernel of phi; lhs < rhs.
struct QuadraticRelation {
  QuadMonomial lhs;
  QuadMonomial rhs;
  int rel_sign;

  std::string to_string() const;  // "P_3*P_12 - P_1*P_23"
  bool operator==(const QuadraticRelation&) const = default;
};

enum class PairMode { spanning, all_pairs };

enum class Verdict { zero, binomial, nonbinomial };
std::string to_string(Verdict v);

struct ClassificationOutcome {
  Verdict verdict = Verdict::zero;
  std::vector<QuadraticRelation> surviving_binomials;
  std::vector<QuadMonomial> surviving_monomials;
  // Rank of the degree-2 span of binomials and monomials together.
  int degree2_rank = 0;
};

// Degree-2 monomials grouped by phi image; only groups of two or more are
// kept as fibers. Fibers are sorted, and so is the list (by first member).
class RelationSet {
 public:
  RelationSet(const BlockDiagonalMF& mf, PairMode mode);

  const BlockDiagonalMF& field() const { return mf_; }
  PairMode mode() const { return mode_; }
  const std::vector<QuadraticRelation>& relations() const { return relations_; }
  const std::vector<std::vector<QuadMonomial>>& fibers() const { return fibers_; }
  int monomial_count() const { return monomial_count_; }

 private:
  BlockDiagonalMF mf_;
  PairMode mode_;
  std::vector<QuadraticRelation> relations_;
  std::vector<std::vector<QuadMonomial>> fibers_;
  int monomial_count_ = 0;
};

std::vector<QuadraticRelation> quadratic_relations(const BlockDiagonalMF& mf,
                                                   PairMode mode = PairMode::spanning);

// Memoized per (n, ell, mode); safe to call from several threads.
std::shared_ptr<const RelationSet> relation_set(int n, int ell, PairMode mode = PairMode::spanning);

ClassificationOutcome restrict_to(const std::vector<QuadraticRelation>& relations, const Permutation& w);

ClassificationOutcome classify(int n, int ell, const Permutation& w, PairMode mode = PairMode::spanning);
Verdict classify_oracle(int n, int ell, const Permutation& w);

// Number of degree-2 monomials in the variables that survive w.
int surviving_monomial_count(const Permutation& w);

}  // namespace mfl
