#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cayley/core.hpp"

namespace cayley {

/// Enumeration limits. Defaults keep every exhaustive sweep at desk scale.
struct Caps {
  int prufer = 9;  ///< Pruefer sweep: n^(n-2) trees
  int edges = 6;   ///< edge-subset oracle: C(n(n-1)/2, n-1) subsets
  int pairs = 6;   ///< (tree, marked edge subset) pairs

  /// Defaults overridden by CAYLEY_N_CAP, CAYLEY_N_CAP_EDGES, CAYLEY_N_CAP_PAIRS.
  static Caps from_env();
};

/// Components left after deleting a vertex or some edges. Vertex labels are kept
/// as in the original tree.
struct Forest {
  struct Component {
    std::vector<Vertex> vertices;  ///< sorted
    std::vector<Edge> edges;       ///< sorted, induced tree on `vertices`
  };

  int n = 0;
  std::optional<Vertex> removed_vertex;
  std::vector<Component> components;  ///< ordered by smallest vertex
  std::vector<Edge> removed_edges;    ///< sorted

  /// Component sizes in component order.
  std::vector<int> sizes() const;
};

}  // namespace cayley

namespace cayley::enumeration {

// ---------------------------------------------------------------------------
// Pruefer codec

/// Smallest-leaf-first encoding. Throws OutOfRange for n < 2.
PruferSequence prufer_encode(const LabeledTree& tree);
LabeledTree prufer_decode(const PruferSequence& seq);

/// Allocation-free decode used by the sweep kernels. `symbols` has n-2 entries in
/// 1..n; `out` receives n-1 edges (unsorted). `scratch` needs n+1 ints.
void prufer_decode_into(int n, const int* symbols, Edge* out, int* scratch);

// ---------------------------------------------------------------------------
// Lazy streams. Each yields std::nullopt once exhausted.

/// Every tree on n vertices, in lexicographic order of its Pruefer sequence.
class PruferTreeStream {
 public:
  explicit PruferTreeStream(int n, const Caps& caps = {});
  std::optional<LabeledTree> next();
  /// Sequence of the tree most recently returned by next().
  const std::vector<int>& current_sequence() const { return seq_; }

 private:
  int n_;
  std::vector<int> seq_;
  bool started_ = false;
  bool done_ = false;
};

/// Every tree on n vertices found by testing all (n-1)-subsets of the complete
/// graph's edges. Independent of the Pruefer codec.
class EdgeSubsetTreeStream {
 public:
  explicit EdgeSubsetTreeStream(int n, const Caps& caps = {});
  std::optional<LabeledTree> next();

 private:
  int n_;
  std::vector<Edge> all_edges_;
  std::vector<int> pick_;
  bool done_ = false;
};

/// Trees with a prescribed degree vector, from the distinct permutations of the
/// Pruefer multiset (vertex i appears d_i - 1 times), in lexicographic order.
class DegreeTreeStream {
 public:
  explicit DegreeTreeStream(const DegreeSequence& d, const Caps& caps = {});
  std::optional<LabeledTree> next();

 private:
  int n_;
  std::vector<int> seq_;
  bool started_ = false;
  bool done_ = false;
};

/// Ordered compositions of `total` into k parts, lexicographic.
class CompositionStream {
 public:
  /// Throws OutOfRange for total < 0 or k < 1.
  CompositionStream(int total, int k, bool allow_zero);
  std::optional<Composition> next();

 private:
  bool advance();

  int total_;
  int k_;
  bool allow_zero_;
  std::vector<int> parts_;
  bool started_ = false;
  bool done_ = false;
};

/// Every (tree on m vertices, (k-1)-subset of its edges) pair. Trees follow
/// Pruefer order; subsets follow lexicographic order of edge positions.
class EdgeSubsetPairStream {
 public:
  EdgeSubsetPairStream(int m, int k, const Caps& caps = {});
  struct Pair {
    LabeledTree tree;
    std::vector<Edge> marked;
  };
  std::optional<Pair> next();

 private:
  int m_;
  int choose_;
  std::optional<PruferTreeStream> trees_;
  std::optional<LabeledTree> tree_;
  std::vector<int> pick_;
  bool done_ = false;
};

// Convenience wrappers over the streams.
std::vector<LabeledTree> enumerate_all_trees(int n, const Caps& caps = {});
std::vector<LabeledTree> enumerate_all_trees_by_edges(int n, const Caps& caps = {});
std::vector<LabeledTree> enumerate_trees_with_degrees(const DegreeSequence& d, const Caps& caps = {});
std::vector<Composition> enumerate_compositions(int total, int k, bool allow_zero);

/// Streams the pairs and returns how many there were.
std::uint64_t count_edge_subset_pairs(int m, int k, const Caps& caps = {});

// ---------------------------------------------------------------------------
// Splitting

/// Deletes v and its incident edges; one component per neighbour of v.
Forest split_by_root_removal(const LabeledTree& tree, Vertex v);
/// Deletes `cut` (each edge must be in the tree). Yields |cut| + 1 components.
Forest split_by_edge_removal(const LabeledTree& tree, const std::vector<Edge>& cut);
/// Reinserts the removed edges of a forest obtained by edge removal.
LabeledTree reassemble(const Forest& forest);

}  // namespace cayley::enumeration
