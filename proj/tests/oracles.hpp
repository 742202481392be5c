#pragma once

// Test-only brute-force oracles. Nothing here calls into the library, so the
// values they produce are independent of the code under test.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace oracle {

using EdgeList = std::vector<std::pair<int, int>>;

inline std::uint64_t factorial(int n) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

inline std::uint64_t power(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

/// True when the edges connect all of 1..n and number n - 1.
inline bool spans_as_tree(int n, const EdgeList& edges) {
  if (static_cast<int>(edges.size()) != n - 1) return false;
  std::vector<std::vector<int>> adj(n + 1);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<char> seen(n + 1, 0);
  std::vector<int> stack{1};
  seen[1] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int y : adj[x]) {
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == n;
}

/// Every labeled tree on 1..n, by testing each subset of K_n's edges with a
/// bitmask. Edges come out as (min, max) in lexicographic order. n <= 6.
inline std::vector<EdgeList> all_trees(int n) {
  EdgeList complete;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) complete.emplace_back(u, v);
  }
  std::vector<EdgeList> trees;
  if (n == 1) {
    trees.emplace_back();
    return trees;
  }
  const auto m = static_cast<std::uint32_t>(complete.size());
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (std::popcount(mask) != n - 1) continue;
    EdgeList edges;
    for (std::uint32_t i = 0; i < m; ++i) {
      if (mask >> i & 1u) edges.push_back(complete[i]);
    }
    if (spans_as_tree(n, edges)) trees.push_back(std::move(edges));
  }
  std::sort(trees.begin(), trees.end());
  return trees;
}

inline std::vector<int> degrees(int n, const EdgeList& edges) {
  std::vector<int> d(n, 0);
  for (auto [u, v] : edges) {
    ++d[u - 1];
    ++d[v - 1];
  }
  return d;
}

/// Trees on n vertices whose vertex 1 has degree k.
inline std::uint64_t root_degree_count(int n, int k) {
  std::uint64_t c = 0;
  for (const auto& t : all_trees(n)) c += degrees(n, t)[0] == k;
  return c;
}

inline std::uint64_t degree_vector_count(const std::vector<int>& d) {
  const int n = static_cast<int>(d.size());
  std::uint64_t c = 0;
  for (const auto& t : all_trees(n)) c += degrees(n, t) == d;
  return c;
}

/// Ordered compositions of total into k positive parts, by recursion.
inline void compositions(int total, int k, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (k == 0) {
    if (total == 0) out.push_back(prefix);
    return;
  }
  for (int a = 1; a <= total; ++a) {
    prefix.push_back(a);
    compositions(total - a, k - 1, prefix, out);
    prefix.pop_back();
  }
}

inline std::vector<std::vector<int>> compositions(int total, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  compositions(total, k, prefix, out);
  return out;
}

}  // namespace oracle
