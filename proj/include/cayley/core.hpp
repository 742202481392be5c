#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cayley {

/// Failure categories raised by every module. The CLI maps these onto exit codes.
enum class ErrorKind {
  NotATree,
  BadVertex,
  DuplicateEdge,
  OutOfRange,
  InvalidDegreeSequence,
  CompositionSumMismatch,
  NonIntegralResult,
  CapExceeded,
  EdgeNotInTree,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

using Vertex = int;

/// Unordered edge, always stored as (min, max).
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const Edge&) const = default;
  bool operator==(const Edge&) const = default;
};

std::ostream& operator<<(std::ostream& os, const Edge& e);

// ---------------------------------------------------------------------------
// Exact arithmetic
// ---------------------------------------------------------------------------

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Arbitrary-precision nonnegative integer.
class ExactCount {
 public:
  ExactCount() = default;
  ExactCount(std::uint64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  explicit ExactCount(BigInt v);

  static ExactCount parse(const std::string& decimal);

  const BigInt& value() const noexcept { return value_; }
  std::string str() const;
  bool is_zero() const { return value_.is_zero(); }

  ExactCount& operator+=(const ExactCount& o) {
    value_ += o.value_;
    return *this;
  }
  ExactCount& operator*=(const ExactCount& o) {
    value_ *= o.value_;
    return *this;
  }
  friend ExactCount operator+(ExactCount a, const ExactCount& b) { return a += b; }
  friend ExactCount operator*(ExactCount a, const ExactCount& b) { return a *= b; }

  /// Throws NonIntegralResult unless `divisor` divides this value.
  ExactCount exact_div(const ExactCount& divisor) const;

  friend bool operator==(const ExactCount& a, const ExactCount& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const ExactCount& a, const ExactCount& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  BigInt value_{0};
};

std::ostream& operator<<(std::ostream& os, const ExactCount& c);

/// Reduced fraction with a positive denominator.
class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(const ExactCount& c) : value_(BigRational(c.value())) {}  // NOLINT
  ExactRational(BigInt num, BigInt den);

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }
  bool is_integer() const { return denominator() == 1; }

  /// Throws NonIntegralResult (or OutOfRange for negatives) unless the value is a nonnegative integer.
  ExactCount to_count() const;
  std::string str() const;

  ExactRational& operator*=(const ExactRational& o) {
    value_ *= o.value_;
    return *this;
  }
  ExactRational& operator/=(const ExactRational& o);
  friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
  friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }
  friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.value_ == b.value_; }

 private:
  explicit ExactRational(BigRational v) : value_(std::move(v)) {}
  BigRational value_{0};
};

ExactCount factorial(int n);
ExactCount binomial(int n, int k);
/// (sum parts)! / prod(parts_i!); parts may be zero.
ExactCount multinomial(std::span<const int> parts);
ExactCount ipow(const ExactCount& base, int exponent);
/// base^exponent for any integer exponent; base must be positive when exponent < 0.
ExactRational rpow(const ExactCount& base, int exponent);

// ---------------------------------------------------------------------------
// Domain types
// ---------------------------------------------------------------------------

/// Tree on vertices 1..n, kept as a sorted set of (min, max) edges.
class LabeledTree {
 public:
  /// Validates and canonicalizes. Throws BadVertex, DuplicateEdge or NotATree.
  static LabeledTree canonicalize(int n, std::span<const std::pair<int, int>> raw_edges);
  static LabeledTree canonicalize(int n, std::vector<Edge> edges);

  int n() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Throws BadVertex outside 1..n.
  int degree_of(Vertex v) const;
  /// Degree of every vertex; index 0 is vertex 1.
  std::vector<int> degrees() const;
  bool has_edge(Edge e) const;

  bool operator==(const LabeledTree&) const = default;
  auto operator<=>(const LabeledTree& o) const {
    if (auto c = n_ <=> o.n_; c != 0) return c;
    return edges_ <=> o.edges_;
  }

 private:
  LabeledTree(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {}
  friend class TrustedTreeBuilder;

  int n_ = 1;
  std::vector<Edge> edges_;
};

/// Builds a LabeledTree from edges already known to form a tree (decoder output);
/// only sorts. Internal to the library.
class TrustedTreeBuilder {
 public:
  static LabeledTree build(int n, std::vector<Edge> edges);
};

int degree_of(const LabeledTree& tree, Vertex v);

/// Positive degrees d_1..d_n (n >= 2) summing to 2n - 2.
class DegreeSequence {
 public:
  /// Throws InvalidDegreeSequence.
  explicit DegreeSequence(std::vector<int> degrees);
  DegreeSequence(std::initializer_list<int> degrees) : DegreeSequence(std::vector<int>(degrees)) {}

  static bool is_valid(std::span<const int> degrees);

  int n() const noexcept { return static_cast<int>(degrees_.size()); }
  int operator[](std::size_t i) const { return degrees_[i]; }
  const std::vector<int>& values() const noexcept { return degrees_; }

  bool operator==(const DegreeSequence&) const = default;

 private:
  std::vector<int> degrees_;
};

/// Ordered tuple with a fixed sum; positive parts unless built as nonnegative.
class Composition {
 public:
  /// Throws CompositionSumMismatch when a part is out of range or the sum differs.
  static Composition positive(std::vector<int> parts, int target_sum);
  static Composition positive(std::vector<int> parts);
  static Composition nonnegative(std::vector<int> parts, int target_sum);

  int size() const noexcept { return static_cast<int>(parts_.size()); }
  int target_sum() const noexcept { return sum_; }
  bool allows_zero() const noexcept { return allow_zero_; }
  int operator[](std::size_t i) const { return parts_[i]; }
  const std::vector<int>& parts() const noexcept { return parts_; }

  bool operator==(const Composition&) const = default;

 private:
  Composition(std::vector<int> parts, int sum, bool allow_zero)
      : parts_(std::move(parts)), sum_(sum), allow_zero_(allow_zero) {}

  std::vector<int> parts_;
  int sum_ = 0;
  bool allow_zero_ = false;
};

/// Word of length n - 2 over 1..n (empty for n <= 2).
class PruferSequence {
 public:
  /// Throws OutOfRange on a bad length or symbol.
  PruferSequence(int n, std::vector<int> symbols);

  int n() const noexcept { return n_; }
  const std::vector<int>& symbols() const noexcept { return symbols_; }

  bool operator==(const PruferSequence&) const = default;
  auto operator<=>(const PruferSequence&) const = default;

 private:
  int n_;
  std::vector<int> symbols_;
};

}  // namespace cayley
