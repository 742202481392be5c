#include "cayley/sampling.hpp"

#include <string>

#include "cayley/enumeration.hpp"

namespace cayley::sampling {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorKind::OutOfRange, "empty sampling range");
  // Reject the low (2^64 mod bound) outputs so the remainder is exactly uniform.
  const std::uint64_t threshold = (0 - bound) % bound;
  std::uint64_t x = engine_();
  while (x < threshold) x = engine_();
  return x % bound;
}

int Rng::between(int lo, int hi) {
  return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

UniformTreeSampler::UniformTreeSampler(int n, const SamplerConfig& cfg)
    : n_(n), remaining_(cfg.count), rng_(cfg.seed) {
  if (n < 1) throw Error(ErrorKind::OutOfRange, "n must be at least 1, got " + std::to_string(n));
}

std::optional<LabeledTree> UniformTreeSampler::next() {
  if (remaining_ == 0) return std::nullopt;
  --remaining_;
  std::vector<int> symbols(n_ >= 2 ? n_ - 2 : 0);
  for (int& s : symbols) s = rng_.between(1, n_);
  return enumeration::prufer_decode(PruferSequence(n_, std::move(symbols)));
}

DegreeTreeSampler::DegreeTreeSampler(const DegreeSequence& d, const SamplerConfig& cfg)
    : n_(d.n()), remaining_(cfg.count), rng_(cfg.seed) {
  for (int v = 1; v <= n_; ++v) symbols_.insert(symbols_.end(), d[v - 1] - 1, v);
}

std::optional<LabeledTree> DegreeTreeSampler::next() {
  if (remaining_ == 0) return std::nullopt;
  --remaining_;
  rng_.shuffle(symbols_);
  return enumeration::prufer_decode(PruferSequence(n_, symbols_));
}

std::vector<LabeledTree> sample_uniform_tree(int n, const SamplerConfig& cfg) {
  UniformTreeSampler sampler(n, cfg);
  std::vector<LabeledTree> out;
  while (auto t = sampler.next()) out.push_back(std::move(*t));
  return out;
}

std::vector<LabeledTree> sample_tree_with_degrees(const DegreeSequence& d, const SamplerConfig& cfg) {
  DegreeTreeSampler sampler(d, cfg);
  std::vector<LabeledTree> out;
  while (auto t = sampler.next()) out.push_back(std::move(*t));
  return out;
}

}  // namespace cayley::sampling
