#include <gtest/gtest.h>

#include "mfl/theorem_sets.hpp"
#include "oracles.hpp"

using namespace mfl;

namespace {

Permutation P(const std::string& s) { return Permutation::parse(s); }

std::vector<std::string> names(const TaggedSet& t) {
  std::vector<std::string> v;
  for (const auto& [w, tags] : t) v.push_back(w.to_string());
  return v;
}

std::vector<long long> binomial_row(const std::vector<LevelCounts>& rows, int n) {
  std::vector<long long> v;
  for (const auto& r : rows)
    if (r.n == n) v.push_back(r.binomial);
  return v;
}

}  // namespace

TEST(Exceptional, Shape) {
  EXPECT_EQ(exceptional_permutation(5, 1).to_string(), "51432");
  EXPECT_EQ(exceptional_permutation(4, 2).to_string(), "4231");
  EXPECT_EQ(exceptional_permutation(6, 3).to_string(), "635421");
  EXPECT_THROW(exceptional_permutation(4, 0), std::invalid_argument);
  EXPECT_THROW(exceptional_permutation(4, 3), std::invalid_argument);
}

TEST(BuildT, SmallListings) {
  EXPECT_EQ(names(build_T(4, 0)),
            (std::vector<std::string>{"1342", "1432", "2314", "2341", "2431", "3214", "3241", "3421", "4321"}));
  EXPECT_EQ(names(build_T(4, 2)), (std::vector<std::string>{"1342", "1432", "3214", "3241", "4231", "4321"}));
  EXPECT_EQ(build_T(6, 2).size(), 85u);
  EXPECT_TRUE(in_T(4, 2, P("4231")));
  EXPECT_FALSE(in_T(4, 2, P("2431")));
}

TEST(BuildT, MatchesFiberOracle) {
  for (int n = 3; n <= 5; ++n)
    for (int ell = 0; ell < n; ++ell) {
      std::vector<std::string> want;
      for (const auto& w : oracle::perms(n))
        if (oracle::classify(n, ell, w).verdict == "binomial") want.push_back(oracle::str(w));
      EXPECT_EQ(names(build_T(n, ell)), want) << n << " " << ell;
    }
}

TEST(MonomialFree, Examples) {
  EXPECT_TRUE(in_P(P("4231"), 2));
  EXPECT_FALSE(in_P(P("2431"), 2));
  EXPECT_TRUE(in_P(P("51432"), 1));
  for (int ell = 0; ell < 5; ++ell) EXPECT_TRUE(in_P(Permutation::identity(5), ell));
  EXPECT_FALSE(in_P(P("312"), 0));
  EXPECT_TRUE(in_P(P("312"), 1));
}

TEST(MonomialFree, MatchesFiberOracle) {
  for (int n = 3; n <= 5; ++n)
    for (int ell = 0; ell < n; ++ell)
      for (const auto& w : all_permutations(n))
        EXPECT_EQ(in_P(w, ell), oracle::classify(n, ell, w.entries()).verdict != "nonbinomial")
            << n << " " << ell << " " << w.to_string();
}

TEST(SetIdentities, PartitionOfMonomialFreeUpToSeven) {
  for (int n = 3; n <= 7; ++n)
    for (int ell = 0; ell < n; ++ell) {
      const auto& T = build_T(n, ell);
      for (const auto& w : all_permutations(n)) {
        const bool t = T.count(w) > 0;
        EXPECT_FALSE(t && in_Z(w)) << w.to_string();
        EXPECT_EQ(t || in_Z(w), in_P(w, ell)) << n << " " << ell << " " << w.to_string();
        if (ell == 0) EXPECT_EQ(t, is_312_free(w) && !in_Z(w));
      }
    }
}

TEST(SetIdentities, DescendingExceptOneUpToSeven) {
  for (int n = 3; n <= 7; ++n)
    for (int ell = 0; ell < n; ++ell)
      for (const auto& [w, tags] : build_T(n, ell)) {
        if (has_descending_property(w)) continue;
        ASSERT_TRUE(ell >= 1 && ell <= n - 2) << w.to_string();
        EXPECT_EQ(w, exceptional_permutation(n, ell));
        EXPECT_NE(std::find(tags.begin(), tags.end(), WitnessTag::exceptional), tags.end());
      }
}

TEST(ASets, FirstSetIsPrincipal) {
  EXPECT_EQ(a_sets(4, 0).A1, (std::set<Permutation>{P("1342"), P("1432")}));
  for (int n = 4; n <= 6; ++n)
    for (int ell = 0; ell < n; ++ell)
      for (const auto& w : a_sets(n, ell).A1) {
        EXPECT_TRUE(in_T(n, ell, w));
        const auto out = classify(n, ell, w);
        EXPECT_EQ(out.verdict, Verdict::binomial);
        EXPECT_EQ(out.degree2_rank, 1) << n << " " << ell << " " << w.to_string();
      }
}

TEST(Classification, Records) {
  const auto r = classify_combinatorial(4, 2, P("3214"));
  EXPECT_EQ(r.combinatorial_class, CombinatorialClass::T);
  EXPECT_TRUE(r.in_P);
  EXPECT_FALSE(r.witness_tags.empty());
  EXPECT_EQ(classify_combinatorial(4, 1, P("2143")).combinatorial_class, CombinatorialClass::Z);
  EXPECT_EQ(classify_combinatorial(3, 1, P("231")).combinatorial_class, CombinatorialClass::N);
  EXPECT_FALSE(classify_combinatorial(3, 1, P("231")).in_P);
  EXPECT_EQ(to_string(CombinatorialClass::N), "N");
  EXPECT_EQ(to_string(WitnessTag::A2prime), "A2'");
}

TEST(Counts, FrozenRows) {
  const auto rows = count_table(3, 7, CountMode::combinatorial, 2);
  // The n = 3 row follows from the nine listed n = 3 ideals.
  EXPECT_EQ(binomial_row(rows, 3), (std::vector<long long>{2, 2, 1}));
  EXPECT_EQ(binomial_row(rows, 4), (std::vector<long long>{9, 8, 6, 7}));
  EXPECT_EQ(binomial_row(rows, 5), (std::vector<long long>{34, 29, 24, 26, 31}));
  EXPECT_EQ(binomial_row(rows, 6), (std::vector<long long>{119, 99, 85, 90, 104, 115}));
  EXPECT_EQ(binomial_row(rows, 7), (std::vector<long long>{408, 333, 291, 305, 347, 384, 403}));
  for (const auto& r : rows) {
    EXPECT_EQ(r.zero, static_cast<long long>(z_count(r.n)));
    long long fact = 1;
    for (int k = 2; k <= r.n; ++k) fact *= k;
    EXPECT_EQ(r.binomial + r.zero + r.nonbinomial, fact);
  }
}

TEST(Counts, OracleAgreesWithCombinatorial) {
  const auto a = count_table(3, 5, CountMode::oracle);
  const auto b = count_table(3, 5, CountMode::combinatorial);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].binomial, b[i].binomial);
    EXPECT_EQ(a[i].zero, b[i].zero);
    EXPECT_EQ(a[i].nonbinomial, b[i].nonbinomial);
  }
}

TEST(CrossValidate, NoMismatchesUpToSix) {
  for (int n = 3; n <= 6; ++n) {
    const auto rep = cross_validate(n, 4);
    EXPECT_TRUE(rep.ok()) << n << ": " << (rep.mismatches.empty() ? "" : rep.mismatches.front().text);
    EXPECT_EQ(rep.counts.size(), static_cast<std::size_t>(n));
  }
}
