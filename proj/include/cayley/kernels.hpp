#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "cayley/enumeration.hpp"

/// Exhaustive sweeps over all n^(n-2) Pruefer sequences. Every kernel has a
/// serial reference in `serial::` and an OpenMP version in `parallel::` that
/// must return identical results.
namespace cayley::kernels {

/// Largest n whose canonical tree key fits in 64 bits.
inline constexpr int kMaxSweepN = 11;

struct SweepSummary {
  int n = 0;
  std::uint64_t trees = 0;               ///< sequences visited
  std::uint64_t distinct = 0;            ///< distinct canonical trees decoded
  std::uint64_t roundtrip_failures = 0;  ///< sequences with encode(decode(s)) != s
  std::uint64_t invalid_trees = 0;       ///< decoded edge sets that are not trees
  std::vector<std::uint64_t> root_degree;  ///< root_degree[k] = #trees with deg(1) = k, read off the edges
  std::vector<std::uint64_t> root_occurrence;  ///< same, from 1 + #occurrences of 1 in the sequence

  bool operator==(const SweepSummary&) const = default;
};

/// Degree vector -> number of trees having it.
using DegreeHistogram = std::map<std::vector<int>, std::uint64_t>;

/// n^(n-2) (1 for n = 1) as a machine integer.
std::uint64_t sequence_count(int n);
/// Writes the index-th sequence in lexicographic order into `symbols`.
void unrank_sequence(int n, std::uint64_t index, int* symbols);
/// Smallest-leaf encoding straight from an edge list by repeated leaf search.
/// Quadratic, allocation-free, and independent of the library encoder.
void encode_edges_naive(int n, const Edge* edges, int* symbols, int* scratch);

namespace serial {
SweepSummary sweep(int n, const Caps& caps = {});
DegreeHistogram degree_histogram(int n, const Caps& caps = {});
}  // namespace serial

namespace parallel {
SweepSummary sweep(int n, const Caps& caps = {});
DegreeHistogram degree_histogram(int n, const Caps& caps = {});
/// Threads OpenMP will use.
int max_threads();
}  // namespace parallel

}  // namespace cayley::kernels
