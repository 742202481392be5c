#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "cayley/core.hpp"

namespace cayley::sampling {

struct SamplerConfig {
  std::uint64_t seed = 0;
  std::uint64_t count = 1;
};

/// std::mt19937_64 (its output sequence is fixed by the C++ standard) with
/// bounded draws done here rather than through std::uniform_int_distribution,
/// whose algorithm differs between standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform on [lo, hi].
  int between(int lo, int hi);

  template <class T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

/// Uniform over all n^(n-2) trees: n-2 independent uniform symbols, decoded.
class UniformTreeSampler {
 public:
  /// Throws OutOfRange for n < 1.
  UniformTreeSampler(int n, const SamplerConfig& cfg);
  std::optional<LabeledTree> next();

 private:
  int n_;
  std::uint64_t remaining_;
  Rng rng_;
};

/// Uniform over trees with degree vector d: a uniform shuffle of the Pruefer
/// multiset (i repeated d_i - 1 times), decoded.
class DegreeTreeSampler {
 public:
  DegreeTreeSampler(const DegreeSequence& d, const SamplerConfig& cfg);
  std::optional<LabeledTree> next();

 private:
  int n_;
  std::vector<int> symbols_;
  std::uint64_t remaining_;
  Rng rng_;
};

std::vector<LabeledTree> sample_uniform_tree(int n, const SamplerConfig& cfg);
std::vector<LabeledTree> sample_tree_with_degrees(const DegreeSequence& d, const SamplerConfig& cfg);

}  // namespace cayley::sampling
