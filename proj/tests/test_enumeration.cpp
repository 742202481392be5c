#include <set>

#include <gtest/gtest.h>

#include "cayley/counting.hpp"
#include "cayley/enumeration.hpp"
#include "oracles.hpp"

using namespace cayley;
using namespace cayley::enumeration;

namespace {

LabeledTree T(int n, std::vector<std::pair<int, int>> e) { return LabeledTree::canonicalize(n, e); }

oracle::EdgeList plain(const LabeledTree& t) {
  oracle::EdgeList out;
  for (const Edge& e : t.edges()) out.emplace_back(e.u, e.v);
  return out;
}

std::vector<std::vector<Vertex>> vertex_sets(const Forest& f) {
  std::vector<std::vector<Vertex>> out;
  for (const auto& c : f.components) out.push_back(c.vertices);
  return out;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::NotATree;
}

const LabeledTree kPath = LabeledTree::canonicalize(3, std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});
const LabeledTree kStar = LabeledTree::canonicalize(4, std::vector<std::pair<int, int>>{{1, 4}, {2, 4}, {3, 4}});

}  // namespace

TEST(PruferCodec, Examples) {
  EXPECT_EQ(prufer_encode(kPath).symbols(), std::vector<int>({2}));
  EXPECT_EQ(prufer_encode(kStar).symbols(), std::vector<int>({4, 4}));
  EXPECT_TRUE(prufer_encode(T(2, {{1, 2}})).symbols().empty());
  EXPECT_EQ(prufer_decode(PruferSequence(3, {2})), kPath);
  EXPECT_EQ(prufer_decode(PruferSequence(4, {4, 4})), kStar);
  EXPECT_EQ(prufer_decode(PruferSequence(2, {})), T(2, {{1, 2}}));
  EXPECT_EQ(kind_of([] { (void)prufer_encode(T(1, {})); }), ErrorKind::OutOfRange);
}

TEST(PruferCodec, RoundTripsEveryTreeAndSequence) {
  for (int n = 2; n <= 7; ++n) {
    PruferTreeStream stream(n);
    std::uint64_t count = 0;
    while (auto t = stream.next()) {
      const auto seq = stream.current_sequence();
      const auto enc = prufer_encode(*t);
      ASSERT_EQ(enc.symbols(), seq);
      ASSERT_EQ(prufer_decode(enc), *t);
      ++count;
    }
    EXPECT_EQ(count, oracle::power(n, n - 2));
  }
}

TEST(PruferCodec, MultiplicityIsDegreeMinusOne) {
  for (int n = 2; n <= 7; ++n) {
    PruferTreeStream stream(n);
    while (auto t = stream.next()) {
      std::vector<int> occ(n + 1, 0);
      for (int s : stream.current_sequence()) ++occ[s];
      for (int v = 1; v <= n; ++v) ASSERT_EQ(occ[v], t->degree_of(v) - 1);
    }
  }
}

TEST(AllTrees, Examples) {
  EXPECT_EQ(enumerate_all_trees(2).size(), 1u);
  EXPECT_EQ(enumerate_all_trees(3).size(), 3u);
  const auto four = enumerate_all_trees(4);
  EXPECT_EQ(four.size(), 16u);
  EXPECT_EQ(std::set<LabeledTree>(four.begin(), four.end()).size(), 16u);
  EXPECT_EQ(enumerate_all_trees_by_edges(1).size(), 1u);
  EXPECT_EQ(enumerate_all_trees_by_edges(3).size(), 3u);
  EXPECT_EQ(enumerate_all_trees_by_edges(4).size(), 16u);
}

TEST(AllTrees, BothRoutesMatchOracleSet) {
  for (int n = 1; n <= 6; ++n) {
    auto a = enumerate_all_trees(n);
    auto b = enumerate_all_trees_by_edges(n);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    EXPECT_EQ(a, b) << n;
    std::vector<oracle::EdgeList> as;
    for (const auto& t : a) as.push_back(plain(t));
    EXPECT_EQ(as, oracle::all_trees(n)) << n;
  }
}

TEST(AllTrees, CapsAreEnforced) {
  EXPECT_EQ(kind_of([] { PruferTreeStream s(10); }), ErrorKind::CapExceeded);
  EXPECT_EQ(kind_of([] { EdgeSubsetTreeStream s(7); }), ErrorKind::CapExceeded);
  EXPECT_EQ(kind_of([] { EdgeSubsetPairStream s(7, 2); }), ErrorKind::CapExceeded);
  EXPECT_NO_THROW(PruferTreeStream(10, Caps{.prufer = 10}));
}

TEST(TreesWithDegrees, Examples) {
  const auto star = enumerate_trees_with_degrees(DegreeSequence({1, 1, 1, 3}));
  ASSERT_EQ(star.size(), 1u);
  EXPECT_EQ(star[0], kStar);
  EXPECT_EQ(enumerate_trees_with_degrees(DegreeSequence({2, 2, 1, 1})).size(), 2u);
  const auto edge = enumerate_trees_with_degrees(DegreeSequence({1, 1}));
  ASSERT_EQ(edge.size(), 1u);
  EXPECT_EQ(edge[0], T(2, {{1, 2}}));
}

TEST(TreesWithDegrees, EveryTreeHasTheDegreesAndCountMatches) {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& edges : oracle::all_trees(n)) {
      const auto d = oracle::degrees(n, edges);
      const auto trees = enumerate_trees_with_degrees(DegreeSequence(d));
      EXPECT_EQ(trees.size(), oracle::degree_vector_count(d));
      for (const auto& t : trees) EXPECT_EQ(t.degrees(), d);
    }
  }
}

TEST(Compositions, Examples) {
  auto parts = [](const std::vector<Composition>& cs) {
    std::vector<std::vector<int>> out;
    for (const auto& c : cs) out.push_back(c.parts());
    return out;
  };
  EXPECT_EQ(parts(enumerate_compositions(3, 2, false)), (std::vector<std::vector<int>>{{1, 2}, {2, 1}}));
  // lexicographic order; the same three tuples as listed by hand
  EXPECT_EQ(parts(enumerate_compositions(1, 3, true)),
            (std::vector<std::vector<int>>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}));
  EXPECT_EQ(parts(enumerate_compositions(0, 1, true)), (std::vector<std::vector<int>>{{0}}));
  EXPECT_TRUE(enumerate_compositions(2, 3, false).empty());
}

TEST(Compositions, CountsAndOrder) {
  for (int total = 0; total <= 9; ++total) {
    for (int k = 1; k <= 5; ++k) {
      const auto pos = enumerate_compositions(total, k, false);
      EXPECT_EQ(pos.size(), total >= 1 ? oracle::binomial(total - 1, k - 1) : 0u);
      EXPECT_EQ(enumerate_compositions(total, k, true).size(), oracle::binomial(total + k - 1, k - 1));
      for (std::size_t i = 1; i < pos.size(); ++i) EXPECT_LT(pos[i - 1].parts(), pos[i].parts());
      if (total >= 1) {
        std::vector<std::vector<int>> got;
        for (const auto& c : pos) got.push_back(c.parts());
        EXPECT_EQ(got, oracle::compositions(total, k));
      }
    }
  }
}

TEST(RootRemoval, Examples) {
  const auto f = split_by_root_removal(kStar, 4);
  EXPECT_EQ(vertex_sets(f), (std::vector<std::vector<Vertex>>{{1}, {2}, {3}}));
  EXPECT_EQ(vertex_sets(split_by_root_removal(kPath, 2)), (std::vector<std::vector<Vertex>>{{1}, {3}}));
  EXPECT_EQ(vertex_sets(split_by_root_removal(kPath, 1)), (std::vector<std::vector<Vertex>>{{2, 3}}));
  EXPECT_EQ(kind_of([] { (void)split_by_root_removal(kPath, 4); }), ErrorKind::BadVertex);
}

TEST(RootRemoval, ComponentsMatchDegreeAndPartition) {
  for (int n = 2; n <= 7; ++n) {
    PruferTreeStream stream(n);
    while (auto t = stream.next()) {
      const auto f = split_by_root_removal(*t, 1);
      ASSERT_EQ(static_cast<int>(f.components.size()), t->degree_of(1));
      int total = 0;
      for (const auto& c : f.components) {
        total += static_cast<int>(c.vertices.size());
        ASSERT_EQ(c.edges.size() + 1, c.vertices.size());
      }
      ASSERT_EQ(total, n - 1);
    }
  }
}

TEST(EdgeRemoval, Examples) {
  const auto f = split_by_edge_removal(kPath, {Edge(1, 2)});
  EXPECT_EQ(vertex_sets(f), (std::vector<std::vector<Vertex>>{{1}, {2, 3}}));
  const auto g = split_by_edge_removal(kStar, {Edge(1, 4), Edge(2, 4)});
  EXPECT_EQ(vertex_sets(g), (std::vector<std::vector<Vertex>>{{1}, {2}, {3, 4}}));
  EXPECT_EQ(split_by_edge_removal(kStar, {}).components.size(), 1u);
  EXPECT_EQ(kind_of([] { (void)split_by_edge_removal(kPath, {Edge(1, 3)}); }), ErrorKind::EdgeNotInTree);
}

TEST(EdgeRemoval, ReassembleInvertsSplit) {
  for (int m = 2; m <= 6; ++m) {
    for (int k = 1; k <= m; ++k) {
      EdgeSubsetPairStream pairs(m, k);
      while (auto p = pairs.next()) {
        const auto f = split_by_edge_removal(p->tree, p->marked);
        ASSERT_EQ(static_cast<int>(f.components.size()), k);
        ASSERT_EQ(reassemble(f), p->tree);
      }
    }
  }
}

TEST(EdgeSubsetPairs, Examples) {
  EXPECT_EQ(count_edge_subset_pairs(3, 2), 6u);
  EXPECT_EQ(count_edge_subset_pairs(3, 1), 3u);
  EXPECT_EQ(count_edge_subset_pairs(2, 1), 1u);
}

TEST(EdgeSubsetPairs, CountLaw) {
  for (int m = 2; m <= 6; ++m) {
    for (int k = 1; k <= m; ++k) {
      EXPECT_EQ(count_edge_subset_pairs(m, k), oracle::power(m, m - 2) * oracle::binomial(m - 1, k - 1));
    }
  }
}

TEST(CapsFromEnv, ReadsAndValidates) {
  ::setenv("CAYLEY_N_CAP", "5", 1);
  ::setenv("CAYLEY_N_CAP_EDGES", "4", 1);
  auto caps = Caps::from_env();
  EXPECT_EQ(caps.prufer, 5);
  EXPECT_EQ(caps.edges, 4);
  EXPECT_EQ(caps.pairs, 6);
  ::setenv("CAYLEY_N_CAP", "zero", 1);
  EXPECT_EQ(kind_of([] { (void)Caps::from_env(); }), ErrorKind::OutOfRange);
  ::unsetenv("CAYLEY_N_CAP");
  ::unsetenv("CAYLEY_N_CAP_EDGES");
  EXPECT_EQ(Caps::from_env().prufer, 9);
}
