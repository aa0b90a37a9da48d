#include <gtest/gtest.h>

#include "mfl/matching_field.hpp"
#include "oracles.hpp"

using namespace mfl;

namespace {

IndexSet S(int n, const std::string& s) { return IndexSet::parse(n, s); }

}  // namespace

TEST(Sigma, Examples) {
  const BlockDiagonalMF b2(4, 2);
  EXPECT_EQ(sigma(b2, S(4, "13")).order, ColumnOrder::swap12);
  EXPECT_EQ(sigma(b2, S(4, "13")).sign, -1);
  EXPECT_EQ(sigma(b2, S(4, "34")).order, ColumnOrder::identity);
  EXPECT_EQ(sigma(b2, S(4, "34")).sign, 1);
  EXPECT_EQ(column_display(b2, S(4, "134")), (std::vector<int>{3, 1, 4}));
  EXPECT_EQ(column_display(b2, S(4, "124")), (std::vector<int>{1, 2, 4}));
  EXPECT_EQ(display_string(b2, S(4, "13")), "31");
  for (const auto& J : all_index_sets(6)) EXPECT_EQ(sigma(BlockDiagonalMF(6, 0), J).sign, 1);
  EXPECT_THROW(BlockDiagonalMF(4, 4), std::invalid_argument);
  EXPECT_THROW(BlockDiagonalMF(1, 0), std::invalid_argument);
}

TEST(WeightMatrix, Rows) {
  const auto m = weight_matrix(BlockDiagonalMF(4, 2));
  std::vector<std::vector<int>> rows(4);
  for (int r = 1; r <= 4; ++r)
    for (int c = 1; c <= 4; ++c) rows[r - 1].push_back(m.at(r, c));
  EXPECT_EQ(rows, (std::vector<std::vector<int>>{{0, 0, 0, 0}, {2, 1, 4, 3}, {8, 6, 4, 2}, {12, 9, 6, 3}}));
  const auto d = weight_matrix(BlockDiagonalMF(4, 0));
  EXPECT_EQ(d.at(2, 1), 4);
  EXPECT_EQ(d.at(2, 4), 1);
  EXPECT_EQ(m.to_csv(), "row,c1,c2,c3,c4\n1,0,0,0,0\n2,2,1,4,3\n3,8,6,4,2\n4,12,9,6,3\n");
}

TEST(WeightMatrix, MatchesDisplayedBlockForm) {
  for (int n = 2; n <= 8; ++n)
    for (int ell = 0; ell < n; ++ell) {
      const auto m = weight_matrix(BlockDiagonalMF(n, ell));
      const auto o = oracle::weight_matrix(n, ell);
      for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n; ++c) EXPECT_EQ(m.at(r, c), o[r - 1][c - 1]);
    }
}

TEST(Weights, ClosedFormEqualsMinimumPlacement) {
  EXPECT_EQ(plucker_weight(BlockDiagonalMF(4, 2), S(4, "34")), 3);
  EXPECT_EQ(plucker_weight(BlockDiagonalMF(4, 2), S(4, "12")), 1);
  EXPECT_EQ(plucker_weight(BlockDiagonalMF(4, 2), S(4, "3")), 0);
  for (int n = 2; n <= 7; ++n)
    for (int ell = 0; ell < n; ++ell) {
      const BlockDiagonalMF mf(n, ell);
      for (const auto& J : all_index_sets(n)) {
        EXPECT_EQ(plucker_weight(mf, J), oracle::min_weight(n, ell, J.members()));
        EXPECT_EQ(plucker_weight_min(mf, J), oracle::min_weight(n, ell, J.members()));
      }
    }
}

TEST(Coherence, DisplayIsTheUniqueMinimum) {
  for (int n = 2; n <= 6; ++n)
    for (int ell = 0; ell < n; ++ell) {
      const BlockDiagonalMF mf(n, ell);
      for (const auto& J : all_index_sets(n)) EXPECT_EQ(column_display(mf, J), oracle::min_placement(n, ell, J.members()));
    }
}

TEST(Coherence, CorrectedRulePassesUpToSeven) {
  for (int n = 2; n <= 7; ++n)
    for (int ell = 0; ell < n; ++ell) {
      const auto rep = verify_coherence(BlockDiagonalMF(n, ell));
      EXPECT_TRUE(rep.pass) << n << " " << ell << " " << rep.detail;
      EXPECT_EQ(rep.checked, (1 << n) - 2);
    }
}

TEST(Coherence, PrintedRuleFailsAtThreeFour) {
  const BlockDiagonalMF mf(4, 1);
  const IndexSet J = S(4, "34");
  EXPECT_EQ(printed_rule(mf, J), ColumnOrder::swap12);
  EXPECT_EQ(corrected_rule(mf, J), ColumnOrder::identity);
  // Row 2 of M_1 is (1,4,3,2): the identity placement costs 2, the swap 3.
  EXPECT_EQ(oracle::min_placement(4, 1, {3, 4}), (std::vector<int>{3, 4}));
  // Disagreeing with the corrected rule only at {3,4} is enough to fail.
  auto only_34 = [&](const BlockDiagonalMF& m, const IndexSet& K) {
    return K == J ? printed_rule(m, K) : corrected_rule(m, K);
  };
  const auto rep = verify_coherence(mf, only_34);
  EXPECT_FALSE(rep.pass);
  ASSERT_TRUE(rep.counterexample.has_value());
  EXPECT_EQ(*rep.counterexample, J);
  EXPECT_FALSE(verify_coherence(mf, printed_rule).pass);
}

TEST(Phi, Examples) {
  const std::vector<IndexSet> diag{S(4, "124"), S(4, "23")};
  const auto g = phi(BlockDiagonalMF(4, 0), diag);
  EXPECT_EQ(g.sign(), 1);
  EXPECT_EQ(g.factors(),
            (std::vector<std::string>{"x[1][1]^1", "x[1][2]^1", "x[2][2]^1", "x[2][3]^1", "x[3][4]^1"}));

  // The two-column matching-field tableau (3,1,4 | 1,2) is a B_2 tableau:
  // under B_1 the column {1,2} would be displayed (2,1).
  const std::vector<IndexSet> t2{S(4, "134"), S(4, "12")};
  const auto h = phi(BlockDiagonalMF(4, 2), t2);
  EXPECT_EQ(h.sign(), -1);
  EXPECT_EQ(h.factors(),
            (std::vector<std::string>{"x[1][1]^1", "x[1][3]^1", "x[2][1]^1", "x[2][2]^1", "x[3][4]^1"}));
  EXPECT_EQ(column_display(BlockDiagonalMF(4, 1), S(4, "12")), (std::vector<int>{2, 1}));

  const std::vector<IndexSet> none;
  const auto e = phi(BlockDiagonalMF(4, 1), none);
  EXPECT_TRUE(e.exponents().empty());
  EXPECT_EQ(e.sign(), 1);
  EXPECT_EQ(e.to_string(), "1");
}

TEST(Phi, MultiplicativeAndSignedByDisplay) {
  for (int n = 3; n <= 5; ++n)
    for (int ell = 0; ell < n; ++ell) {
      const BlockDiagonalMF mf(n, ell);
      const auto sets = all_index_sets(n);
      for (const auto& A : sets)
        for (const auto& B : sets) {
          const std::vector<IndexSet> both{A, B};
          const auto g = phi(mf, both);
          EXPECT_EQ(g, phi(mf, A) * phi(mf, B));
          EXPECT_EQ(g.degree(), A.size() + B.size());
          int s = 0;
          const auto key = oracle::phi_key(n, ell, {A.members(), B.members()}, &s);
          EXPECT_EQ(g.sign(), s);
          std::map<std::pair<int, int>, int> got;
          for (const auto& [c, e] : g.exponents()) got[{c.row, c.col}] = e;
          EXPECT_EQ(got, key);
        }
    }
}
