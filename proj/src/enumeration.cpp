#include "cayley/enumeration.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

namespace cayley {

namespace {

int env_int(const char* name, int fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (*end != '\0' || v < 1 || v > 64) {
    throw Error(ErrorKind::OutOfRange, std::string(name) + " must be an integer in 1..64, got '" + raw + "'");
  }
  return static_cast<int>(v);
}

void check_cap(int n, int cap, const char* what) {
  if (n > cap) {
    throw Error(ErrorKind::CapExceeded,
                std::string(what) + " limited to n <= " + std::to_string(cap) + ", got " + std::to_string(n));
  }
}

struct DisjointSets {
  explicit DisjointSets(int n) : parent(n + 1) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<int> parent;
};

// Advances a k-combination of {0..size-1} in lexicographic order.
bool next_combination(std::vector<int>& pick, int size) {
  const int k = static_cast<int>(pick.size());
  int i = k - 1;
  while (i >= 0 && pick[i] == size - k + i) --i;
  if (i < 0) return false;
  ++pick[i];
  for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  return true;
}

std::vector<int> first_combination(int k) {
  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  return pick;
}

}  // namespace

Caps Caps::from_env() {
  Caps caps;
  caps.prufer = env_int("CAYLEY_N_CAP", caps.prufer);
  caps.edges = env_int("CAYLEY_N_CAP_EDGES", caps.edges);
  caps.pairs = env_int("CAYLEY_N_CAP_PAIRS", caps.pairs);
  return caps;
}

std::vector<int> Forest::sizes() const {
  std::vector<int> s;
  s.reserve(components.size());
  for (const auto& c : components) s.push_back(static_cast<int>(c.vertices.size()));
  return s;
}

}  // namespace cayley

namespace cayley::enumeration {

// ---------------------------------------------------------------------------
// Codec

void prufer_decode_into(int n, const int* symbols, Edge* out, int* scratch) {
  if (n < 2) return;
  int* degree = scratch;
  std::fill(degree, degree + n + 1, 1);
  for (int i = 0; i < n - 2; ++i) ++degree[symbols[i]];
  int ptr = 1;
  while (degree[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int i = 0; i < n - 2; ++i) {
    const int v = symbols[i];
    out[i] = Edge(leaf, v);
    if (--degree[v] == 1 && v < ptr) {
      leaf = v;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  out[n - 2] = Edge(leaf, n);
}

LabeledTree prufer_decode(const PruferSequence& seq) {
  const int n = seq.n();
  if (n == 1) return LabeledTree::canonicalize(1, std::vector<Edge>{});
  std::vector<Edge> edges(n - 1);
  std::vector<int> scratch(n + 1);
  prufer_decode_into(n, seq.symbols().data(), edges.data(), scratch.data());
  return TrustedTreeBuilder::build(n, std::move(edges));
}

PruferSequence prufer_encode(const LabeledTree& tree) {
  const int n = tree.n();
  if (n < 2) throw Error(ErrorKind::OutOfRange, "Pruefer encoding needs n >= 2");
  std::vector<std::vector<int>> adj(n + 1);
  for (const Edge& e : tree.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  // Root at n: the last vertex is never removed as a leaf.
  std::vector<int> parent(n + 1, 0);
  std::vector<int> stack{n};
  parent[n] = -1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int y : adj[x]) {
      if (y != parent[x]) {
        parent[y] = x;
        stack.push_back(y);
      }
    }
  }
  std::vector<int> degree(n + 1);
  for (int v = 1; v <= n; ++v) degree[v] = static_cast<int>(adj[v].size());

  std::vector<int> code;
  code.reserve(n - 2);
  int ptr = 1;
  while (degree[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int i = 0; i < n - 2; ++i) {
    const int next = parent[leaf];
    code.push_back(next);
    if (--degree[next] == 1 && next < ptr) {
      leaf = next;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  return PruferSequence(n, std::move(code));
}

// ---------------------------------------------------------------------------
// Streams

PruferTreeStream::PruferTreeStream(int n, const Caps& caps) : n_(n) {
  if (n < 1) throw Error(ErrorKind::OutOfRange, "n must be at least 1, got " + std::to_string(n));
  check_cap(n, caps.prufer, "Pruefer sweep");
  seq_.assign(n >= 2 ? n - 2 : 0, 1);
}

std::optional<LabeledTree> PruferTreeStream::next() {
  if (done_) return std::nullopt;
  if (started_) {
    int i = static_cast<int>(seq_.size()) - 1;
    while (i >= 0 && seq_[i] == n_) seq_[i--] = 1;
    if (i < 0) {
      done_ = true;
      return std::nullopt;
    }
    ++seq_[i];
  }
  started_ = true;
  return prufer_decode(PruferSequence(n_, seq_));
}

EdgeSubsetTreeStream::EdgeSubsetTreeStream(int n, const Caps& caps) : n_(n) {
  if (n < 1) throw Error(ErrorKind::OutOfRange, "n must be at least 1, got " + std::to_string(n));
  check_cap(n, caps.edges, "edge-subset enumeration");
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) all_edges_.emplace_back(u, v);
  }
  pick_ = first_combination(n - 1);
}

std::optional<LabeledTree> EdgeSubsetTreeStream::next() {
  const int size = static_cast<int>(all_edges_.size());
  while (!done_) {
    DisjointSets sets(n_);
    bool acyclic = true;
    for (int idx : pick_) {
      if (!sets.unite(all_edges_[idx].u, all_edges_[idx].v)) {
        acyclic = false;
        break;
      }
    }
    std::vector<Edge> chosen;
    if (acyclic) {
      chosen.reserve(pick_.size());
      for (int idx : pick_) chosen.push_back(all_edges_[idx]);
    }
    if (!next_combination(pick_, size)) done_ = true;
    // n-1 acyclic edges on n vertices always span.
    if (acyclic) return TrustedTreeBuilder::build(n_, std::move(chosen));
  }
  return std::nullopt;
}

DegreeTreeStream::DegreeTreeStream(const DegreeSequence& d, const Caps& caps) : n_(d.n()) {
  check_cap(n_, caps.prufer, "degree-constrained enumeration");
  for (int v = 1; v <= n_; ++v) seq_.insert(seq_.end(), d[v - 1] - 1, v);
}

std::optional<LabeledTree> DegreeTreeStream::next() {
  if (done_) return std::nullopt;
  if (started_ && !std::next_permutation(seq_.begin(), seq_.end())) {
    done_ = true;
    return std::nullopt;
  }
  started_ = true;
  return prufer_decode(PruferSequence(n_, seq_));
}

CompositionStream::CompositionStream(int total, int k, bool allow_zero)
    : total_(total), k_(k), allow_zero_(allow_zero) {
  if (total < 0 || k < 1) {
    throw Error(ErrorKind::OutOfRange,
                "compositions need total >= 0 and k >= 1, got total=" + std::to_string(total) + " k=" + std::to_string(k));
  }
  const int lo = allow_zero ? 0 : 1;
  if (total < lo * k) {
    done_ = true;
    return;
  }
  parts_.assign(k, lo);
  parts_.back() = total - lo * (k - 1);
}

bool CompositionStream::advance() {
  const int lo = allow_zero_ ? 0 : 1;
  // Rightmost position before the last whose suffix has slack to give up one unit.
  int suffix = parts_.back();
  for (int i = k_ - 2; i >= 0; --i) {
    if (suffix > lo * (k_ - 1 - i)) {
      ++parts_[i];
      int used = 0;
      for (int j = 0; j <= i; ++j) used += parts_[j];
      for (int j = i + 1; j < k_ - 1; ++j) {
        parts_[j] = lo;
        used += lo;
      }
      parts_.back() = total_ - used;
      return true;
    }
    suffix += parts_[i];
  }
  return false;
}

std::optional<Composition> CompositionStream::next() {
  if (done_) return std::nullopt;
  if (started_ && !advance()) {
    done_ = true;
    return std::nullopt;
  }
  started_ = true;
  return allow_zero_ ? Composition::nonnegative(parts_, total_) : Composition::positive(parts_, total_);
}

EdgeSubsetPairStream::EdgeSubsetPairStream(int m, int k, const Caps& caps)
    : m_(m), choose_(k - 1) {
  if (m < 2 || k < 1 || k > m) {
    throw Error(ErrorKind::OutOfRange, "need m >= 2 and 1 <= k <= m, got m=" + std::to_string(m) +
                                           " k=" + std::to_string(k));
  }
  check_cap(m, caps.pairs, "tree/edge-subset pair enumeration");
  trees_.emplace(m, Caps{.prufer = m, .edges = caps.edges, .pairs = caps.pairs});
}

std::optional<EdgeSubsetPairStream::Pair> EdgeSubsetPairStream::next() {
  while (!done_) {
    if (!tree_) {
      tree_ = trees_->next();
      if (!tree_) {
        done_ = true;
        break;
      }
      pick_ = first_combination(choose_);
      Pair p{*tree_, {}};
      for (int idx : pick_) p.marked.push_back(tree_->edges()[idx]);
      return p;
    }
    if (!next_combination(pick_, m_ - 1)) {
      tree_.reset();
      continue;
    }
    Pair p{*tree_, {}};
    for (int idx : pick_) p.marked.push_back(tree_->edges()[idx]);
    return p;
  }
  return std::nullopt;
}

namespace {

template <class Stream>
auto drain(Stream stream) {
  std::vector<std::decay_t<decltype(*stream.next())>> out;
  while (auto x = stream.next()) out.push_back(std::move(*x));
  return out;
}

}  // namespace

std::vector<LabeledTree> enumerate_all_trees(int n, const Caps& caps) { return drain(PruferTreeStream(n, caps)); }

std::vector<LabeledTree> enumerate_all_trees_by_edges(int n, const Caps& caps) {
  return drain(EdgeSubsetTreeStream(n, caps));
}

std::vector<LabeledTree> enumerate_trees_with_degrees(const DegreeSequence& d, const Caps& caps) {
  return drain(DegreeTreeStream(d, caps));
}

std::vector<Composition> enumerate_compositions(int total, int k, bool allow_zero) {
  return drain(CompositionStream(total, k, allow_zero));
}

std::uint64_t count_edge_subset_pairs(int m, int k, const Caps& caps) {
  EdgeSubsetPairStream stream(m, k, caps);
  std::uint64_t count = 0;
  while (stream.next()) ++count;
  return count;
}

// ---------------------------------------------------------------------------
// Splitting

namespace {

Forest group_components(int n, const std::vector<Edge>& kept, std::optional<Vertex> removed) {
  DisjointSets sets(n);
  for (const Edge& e : kept) sets.unite(e.u, e.v);
  std::vector<int> slot(n + 1, -1);
  Forest forest;
  forest.n = n;
  forest.removed_vertex = removed;
  for (int v = 1; v <= n; ++v) {
    if (removed && *removed == v) continue;
    const int root = sets.find(v);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(forest.components.size());
      forest.components.emplace_back();
    }
    forest.components[slot[root]].vertices.push_back(v);
  }
  for (const Edge& e : kept) forest.components[slot[sets.find(e.u)]].edges.push_back(e);
  for (auto& c : forest.components) std::sort(c.edges.begin(), c.edges.end());
  return forest;
}

}  // namespace

Forest split_by_root_removal(const LabeledTree& tree, Vertex v) {
  if (v < 1 || v > tree.n()) {
    throw Error(ErrorKind::BadVertex, "vertex " + std::to_string(v) + " outside 1.." + std::to_string(tree.n()));
  }
  std::vector<Edge> kept;
  std::vector<Edge> removed;
  for (const Edge& e : tree.edges()) (e.u == v || e.v == v ? removed : kept).push_back(e);
  Forest forest = group_components(tree.n(), kept, v);
  forest.removed_edges = std::move(removed);
  return forest;
}

Forest split_by_edge_removal(const LabeledTree& tree, const std::vector<Edge>& cut) {
  std::vector<Edge> sorted_cut = cut;
  std::sort(sorted_cut.begin(), sorted_cut.end());
  if (auto dup = std::adjacent_find(sorted_cut.begin(), sorted_cut.end()); dup != sorted_cut.end()) {
    throw Error(ErrorKind::DuplicateEdge, "edge " + std::to_string(dup->u) + "-" + std::to_string(dup->v) + " cut twice");
  }
  for (const Edge& e : sorted_cut) {
    if (!tree.has_edge(e)) {
      throw Error(ErrorKind::EdgeNotInTree, "edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    }
  }
  std::vector<Edge> kept;
  std::set_difference(tree.edges().begin(), tree.edges().end(), sorted_cut.begin(), sorted_cut.end(),
                      std::back_inserter(kept));
  Forest forest = group_components(tree.n(), kept, std::nullopt);
  forest.removed_edges = std::move(sorted_cut);
  return forest;
}

LabeledTree reassemble(const Forest& forest) {
  std::vector<Edge> edges = forest.removed_edges;
  for (const auto& c : forest.components) edges.insert(edges.end(), c.edges.begin(), c.edges.end());
  return LabeledTree::canonicalize(forest.n, std::move(edges));
}

}  // namespace cayley::enumeration
