#include "cayley/kernels.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include <omp.h>

namespace cayley::kernels {

namespace {

constexpr int kBuf = kMaxSweepN + 2;

void check_sweep(int n, const Caps& caps) {
  if (n < 1) throw Error(ErrorKind::OutOfRange, "n must be at least 1, got " + std::to_string(n));
  const int cap = std::min(caps.prufer, kMaxSweepN);
  if (n > cap) {
    throw Error(ErrorKind::CapExceeded, "Pruefer sweep limited to n <= " + std::to_string(cap) + ", got " + std::to_string(n));
  }
}

// Position of edge (u, v), u < v, in the lexicographic list of K_n's edges.
int edge_index(int n, const Edge& e) { return (e.u - 1) * (2 * n - e.u) / 2 + (e.v - e.u - 1); }

// Per-sequence work shared by both sweep drivers.
struct Visitor {
  explicit Visitor(int n) : n(n) {
    summary.n = n;
    summary.root_degree.assign(std::max(n, 1), 0);
    summary.root_occurrence.assign(std::max(n, 1), 0);
  }

  void visit(std::uint64_t index) {
    ++summary.trees;
    if (n == 1) {
      keys.push_back(0);
      return;
    }
    unrank_sequence(n, index, seq.data());
    enumeration::prufer_decode_into(n, seq.data(), edges.data(), scratch.data());
    std::sort(edges.begin(), edges.begin() + (n - 1));

    if (!is_tree()) ++summary.invalid_trees;

    std::uint64_t key = 0;
    int root_deg = 0;
    for (int i = 0; i < n - 1; ++i) {
      key = (key << 6) | static_cast<std::uint64_t>(edge_index(n, edges[i]));
      root_deg += edges[i].u == 1;
    }
    keys.push_back(key);
    ++summary.root_degree[root_deg];
    ++summary.root_occurrence[1 + std::count(seq.begin(), seq.begin() + (n - 2), 1)];

    encode_edges_naive(n, edges.data(), back.data(), scratch.data());
    if (!std::equal(seq.begin(), seq.begin() + (n - 2), back.begin())) ++summary.roundtrip_failures;
  }

  bool is_tree() {
    std::iota(parent.begin(), parent.begin() + n + 1, 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (int i = 0; i < n - 1; ++i) {
      const int a = find(edges[i].u);
      const int b = find(edges[i].v);
      if (a == b || edges[i].u < 1 || edges[i].v > n) return false;
      parent[a] = b;
    }
    return true;
  }

  int n;
  SweepSummary summary;
  std::vector<std::uint64_t> keys;
  std::array<int, kBuf> seq{};
  std::array<int, kBuf> back{};
  std::array<int, kBuf> scratch{};
  std::array<int, kBuf> parent{};
  std::array<Edge, kBuf> edges{};
};

std::uint64_t count_distinct(std::vector<std::uint64_t>& keys) {
  std::sort(keys.begin(), keys.end());
  return static_cast<std::uint64_t>(std::unique(keys.begin(), keys.end()) - keys.begin());
}

void merge_into(SweepSummary& into, const SweepSummary& part) {
  into.trees += part.trees;
  into.roundtrip_failures += part.roundtrip_failures;
  into.invalid_trees += part.invalid_trees;
  for (std::size_t k = 0; k < into.root_degree.size(); ++k) {
    into.root_degree[k] += part.root_degree[k];
    into.root_occurrence[k] += part.root_occurrence[k];
  }
}

std::vector<int> degree_vector(int n, const Edge* edges) {
  std::vector<int> d(n, 0);
  for (int i = 0; i < n - 1; ++i) {
    ++d[edges[i].u - 1];
    ++d[edges[i].v - 1];
  }
  return d;
}

}  // namespace

std::uint64_t sequence_count(int n) {
  std::uint64_t total = 1;
  for (int i = 0; i < n - 2; ++i) total *= static_cast<std::uint64_t>(n);
  return total;
}

void unrank_sequence(int n, std::uint64_t index, int* symbols) {
  for (int i = n - 3; i >= 0; --i) {
    symbols[i] = static_cast<int>(index % static_cast<std::uint64_t>(n)) + 1;
    index /= static_cast<std::uint64_t>(n);
  }
}

void encode_edges_naive(int n, const Edge* edges, int* symbols, int* scratch) {
  // scratch[v] = current degree; an edge is dropped by zeroing its leaf's degree.
  int* degree = scratch;
  std::fill(degree, degree + n + 1, 0);
  for (int i = 0; i < n - 1; ++i) {
    ++degree[edges[i].u];
    ++degree[edges[i].v];
  }
  std::array<bool, kBuf> gone{};
  for (int step = 0; step < n - 2; ++step) {
    int leaf = 1;
    while (degree[leaf] != 1) ++leaf;
    for (int i = 0; i < n - 1; ++i) {
      if (gone[i] || (edges[i].u != leaf && edges[i].v != leaf)) continue;
      const int other = edges[i].u == leaf ? edges[i].v : edges[i].u;
      symbols[step] = other;
      gone[i] = true;
      degree[leaf] = 0;
      --degree[other];
      break;
    }
  }
}

namespace serial {

SweepSummary sweep(int n, const Caps& caps) {
  check_sweep(n, caps);
  Visitor visitor(n);
  const std::uint64_t total = sequence_count(n);
  visitor.keys.reserve(total);
  for (std::uint64_t i = 0; i < total; ++i) visitor.visit(i);
  visitor.summary.distinct = count_distinct(visitor.keys);
  return visitor.summary;
}

DegreeHistogram degree_histogram(int n, const Caps& caps) {
  check_sweep(n, caps);
  DegreeHistogram hist;
  if (n == 1) {
    hist[{0}] = 1;
    return hist;
  }
  std::array<int, kBuf> seq{};
  std::array<int, kBuf> scratch{};
  std::array<Edge, kBuf> edges{};
  const std::uint64_t total = sequence_count(n);
  for (std::uint64_t i = 0; i < total; ++i) {
    unrank_sequence(n, i, seq.data());
    enumeration::prufer_decode_into(n, seq.data(), edges.data(), scratch.data());
    ++hist[degree_vector(n, edges.data())];
  }
  return hist;
}

}  // namespace serial

namespace parallel {

int max_threads() { return omp_get_max_threads(); }

SweepSummary sweep(int n, const Caps& caps) {
  check_sweep(n, caps);
  const std::uint64_t total = sequence_count(n);
  const auto signed_total = static_cast<std::int64_t>(total);

  SweepSummary summary;
  summary.n = n;
  summary.root_degree.assign(std::max(n, 1), 0);
  summary.root_occurrence.assign(std::max(n, 1), 0);
  std::vector<std::vector<std::uint64_t>> thread_keys(omp_get_max_threads());

#pragma omp parallel
  {
    Visitor visitor(n);
    visitor.keys.reserve(total / omp_get_num_threads() + 1);
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < signed_total; ++i) visitor.visit(static_cast<std::uint64_t>(i));
#pragma omp critical(cayley_sweep_merge)
    merge_into(summary, visitor.summary);
    thread_keys[omp_get_thread_num()] = std::move(visitor.keys);
  }

  std::vector<std::uint64_t> keys;
  keys.reserve(total);
  for (auto& part : thread_keys) keys.insert(keys.end(), part.begin(), part.end());
  summary.distinct = count_distinct(keys);
  return summary;
}

DegreeHistogram degree_histogram(int n, const Caps& caps) {
  check_sweep(n, caps);
  if (n == 1) return serial::degree_histogram(n, caps);
  const auto signed_total = static_cast<std::int64_t>(sequence_count(n));
  DegreeHistogram hist;

#pragma omp parallel
  {
    DegreeHistogram local;
    std::array<int, kBuf> seq{};
    std::array<int, kBuf> scratch{};
    std::array<Edge, kBuf> edges{};
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < signed_total; ++i) {
      unrank_sequence(n, static_cast<std::uint64_t>(i), seq.data());
      enumeration::prufer_decode_into(n, seq.data(), edges.data(), scratch.data());
      ++local[degree_vector(n, edges.data())];
    }
#pragma omp critical(cayley_degree_merge)
    for (const auto& [d, c] : local) hist[d] += c;
  }
  return hist;
}

}  // namespace parallel

}  // namespace cayley::kernels
