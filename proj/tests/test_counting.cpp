#include <gtest/gtest.h>

#include "cayley/counting.hpp"
#include "cayley/enumeration.hpp"
#include "oracles.hpp"

using namespace cayley;
using namespace cayley::counting;

namespace {

ExactCount C(std::uint64_t v) { return ExactCount(v); }

std::vector<std::vector<int>> all_degree_sequences(int n) {
  // positive entries summing to 2n-2
  std::vector<std::vector<int>> out;
  std::vector<int> d(n, 1);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n - 1) {
      d[i] = 1 + left;
      out.push_back(d);
      return;
    }
    for (int extra = 0; extra <= left; ++extra) {
      d[i] = 1 + extra;
      rec(i + 1, left - extra);
    }
  };
  if (n == 1) return out;
  rec(0, n - 2);
  return out;
}

}  // namespace

TEST(TreesWithDegrees, Examples) {
  EXPECT_EQ(count_trees_with_degrees(DegreeSequence({1, 1})), C(1));
  EXPECT_EQ(count_trees_with_degrees(DegreeSequence({1, 1, 1, 3})), C(1));
  EXPECT_EQ(count_trees_with_degrees(DegreeSequence({2, 2, 1, 1})), C(2));
}

TEST(TreesWithDegrees, MatchesBruteForceUpToSix) {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& d : all_degree_sequences(n)) {
      EXPECT_EQ(count_trees_with_degrees(DegreeSequence(d)), C(oracle::degree_vector_count(d)));
    }
  }
}

TEST(TreesWithDegrees, SumOverSequencesIsTotal) {
  for (int n = 2; n <= 9; ++n) {
    ExactCount sum(0);
    for (const auto& d : all_degree_sequences(n)) sum += count_trees_with_degrees(DegreeSequence(d));
    EXPECT_EQ(sum, count_total_trees(n));
  }
}

TEST(TreesWithDegrees, RejectsInvalid) {
  const std::vector<int> bad = {2, 2, 2};
  EXPECT_THROW((void)count_trees_with_degrees(std::span<const int>(bad)), Error);
}

TEST(TotalTrees, Examples) {
  EXPECT_EQ(count_total_trees(1), C(1));
  EXPECT_EQ(count_total_trees(2), C(1));
  EXPECT_EQ(count_total_trees(4), C(16));
  EXPECT_EQ(count_total_trees(9), C(4782969));
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(count_total_trees(n), C(oracle::all_trees(n).size()));
  EXPECT_THROW((void)count_total_trees(0), Error);
}

TEST(DegV1, Examples) {
  EXPECT_EQ(count_trees_deg_v1(4, 1), C(9));
  EXPECT_EQ(count_trees_deg_v1(4, 3), C(1));
  EXPECT_EQ(count_trees_deg_v1(2, 1), C(1));
  EXPECT_EQ(count_trees_deg_v1_rational(4, 2), ExactRational(ExactCount(6)));
  EXPECT_EQ(count_trees_deg_v1_rational(4, 1), ExactRational(ExactCount(9)));
  EXPECT_EQ(count_trees_deg_v1_rational(2, 1), ExactRational(ExactCount(1)));
}

TEST(DegV1, FrozenBruteForceTable) {
  // n = 5, k = 1..4 by filtering all 125 trees
  const std::uint64_t frozen[] = {64, 48, 12, 1};
  for (int k = 1; k <= 4; ++k) {
    EXPECT_EQ(oracle::root_degree_count(5, k), frozen[k - 1]);
    EXPECT_EQ(count_trees_deg_v1(5, k), C(frozen[k - 1]));
  }
}

TEST(DegV1, AllFormsAgreeWithBruteForce) {
  for (int n = 2; n <= 6; ++n) {
    ExactCount sum(0);
    for (int k = 1; k <= n - 1; ++k) {
      const ExactCount brute(oracle::root_degree_count(n, k));
      EXPECT_EQ(count_trees_deg_v1(n, k), brute) << n << "," << k;
      EXPECT_EQ(count_trees_deg_v1_rational(n, k).to_count(), brute);
      EXPECT_EQ(lemma1_lhs(n, k), brute);
      sum += count_trees_deg_v1(n, k);
    }
    EXPECT_EQ(sum, count_total_trees(n));
  }
}

TEST(RootDegreeSplit, Examples) {
  EXPECT_EQ(lemma1_lhs(4, 2), C(6));
  EXPECT_EQ(lemma1_lhs(4, 1), C(9));
  EXPECT_EQ(lemma1_lhs(2, 1), C(1));
  EXPECT_EQ(count_fixed_composition_trees(4, Composition::positive({1, 2}, 3)), C(6));
  EXPECT_EQ(count_fixed_composition_trees(4, Composition::positive({3}, 3)), C(9));
  EXPECT_EQ(count_fixed_composition_trees(2, Composition::positive({1}, 1)), C(1));
}

TEST(RootDegreeSplit, FixedCompositionSumsAreSymmetric) {
  for (int n = 2; n <= 8; ++n) {
    for (int k = 1; k <= n - 1; ++k) {
      ExactCount sum(0);
      for (const auto& parts : oracle::compositions(n - 1, k)) {
        auto reversed = parts;
        std::reverse(reversed.begin(), reversed.end());
        const auto a = Composition::positive(parts, n - 1);
        EXPECT_EQ(count_fixed_composition_trees(n, a),
                  count_fixed_composition_trees(n, Composition::positive(reversed, n - 1)));
        sum += count_fixed_composition_trees(n, a);
      }
      EXPECT_EQ(sum.exact_div(factorial(k)), count_trees_deg_v1(n, k));
    }
  }
}

TEST(Recursion, Examples) {
  EXPECT_EQ(recursion_T(2), C(1));
  EXPECT_EQ(recursion_T(3), C(3));
  EXPECT_EQ(recursion_T(4), C(16));
}

TEST(Recursion, MatchesCayleyUpToThirty) {
  const auto table = recursion_table(30);
  ASSERT_EQ(table.size(), 30u);
  for (int n = 1; n <= 30; ++n) {
    EXPECT_EQ(table[n - 1], count_total_trees(n)) << n;
    EXPECT_EQ(recursion_T(n), count_total_trees(n));
  }
  for (int n = 1; n <= 12; ++n) EXPECT_EQ(recursion_T_by_compositions(n), count_total_trees(n)) << n;
}

TEST(BinomialCollapse, Examples) {
  EXPECT_EQ(binomial_collapse(4), C(16));
  EXPECT_EQ(binomial_collapse(2), C(1));
  EXPECT_EQ(binomial_collapse(3), C(3));
  for (int n = 2; n <= 30; ++n) EXPECT_EQ(binomial_collapse(n), count_total_trees(n));
}

TEST(ExpandL3, Examples) {
  EXPECT_EQ(expand_L3(Composition::positive({1, 2}, 3), 3), C(2));
  EXPECT_EQ(expand_L3(Composition::positive({1, 1, 2}, 4), 4), C(8));
  EXPECT_EQ(expand_L3(Composition::positive({3}, 3), 3), C(1));
}

TEST(ExpandL3, MatchesClosedFormOnGrid) {
  for (int m = 2; m <= 10; ++m) {
    for (int k = 1; k <= std::min(5, m); ++k) {
      for (const auto& parts : oracle::compositions(m, k)) {
        const auto a = Composition::positive(parts, m);
        EXPECT_EQ(ExactRational(expand_L3(a, m)), L3_closed_form(a, m));
      }
    }
  }
}

TEST(Supervertex, Examples) {
  const std::vector<int> d11 = {1, 1}, d121 = {1, 2, 1};
  EXPECT_EQ(count_supervertex_trees(d11, Composition::positive({1, 2}, 3)), C(2));
  EXPECT_EQ(count_supervertex_trees(d11, Composition::positive({1, 1}, 2)), C(1));
  EXPECT_EQ(count_supervertex_trees(d121, Composition::positive({1, 1, 1}, 3)), C(1));
}

TEST(Supervertex, UnitSizesReduceToDegreeFormula) {
  for (int k = 2; k <= 7; ++k) {
    const auto ones = Composition::positive(std::vector<int>(k, 1), k);
    for (const auto& d : all_degree_sequences(k)) {
      EXPECT_EQ(count_supervertex_trees(d, ones), count_trees_with_degrees(DegreeSequence(d)));
    }
  }
}

TEST(DoubleCount, PairCountLaw) {
  for (int m = 2; m <= 9; ++m) {
    for (int k = 1; k <= m; ++k) {
      EXPECT_EQ(double_count_assembly(m, k), count_total_trees(m) * binomial(m - 1, k - 1)) << m << "," << k;
    }
  }
}

TEST(DoubleCount, AssemblyTermFactors) {
  const auto t = assembly_term(Composition::positive({1, 2}, 3));
  EXPECT_EQ(t.partitions, C(3));
  EXPECT_EQ(t.inner_trees, C(1));
  EXPECT_EQ(t.connections, C(2));
  EXPECT_EQ(t.product(), C(6));
}
