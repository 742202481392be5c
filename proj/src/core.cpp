#include "cayley/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cayley {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotATree: return "NotATree";
    case ErrorKind::BadVertex: return "BadVertex";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::InvalidDegreeSequence: return "InvalidDegreeSequence";
    case ErrorKind::CompositionSumMismatch: return "CompositionSumMismatch";
    case ErrorKind::NonIntegralResult: return "NonIntegralResult";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::EdgeNotInTree: return "EdgeNotInTree";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

std::ostream& operator<<(std::ostream& os, const Edge& e) { return os << '(' << e.u << ',' << e.v << ')'; }

// ---------------------------------------------------------------------------
// ExactCount / ExactRational

ExactCount::ExactCount(BigInt v) : value_(std::move(v)) {
  if (value_ < 0) throw Error(ErrorKind::OutOfRange, "negative count");
}

ExactCount ExactCount::parse(const std::string& decimal) {
  if (decimal.empty() || !std::all_of(decimal.begin(), decimal.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw Error(ErrorKind::OutOfRange, "not a nonnegative decimal integer: '" + decimal + "'");
  }
  return ExactCount(BigInt(decimal));
}

std::string ExactCount::str() const { return value_.str(); }

ExactCount ExactCount::exact_div(const ExactCount& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorKind::NonIntegralResult, "division by zero");
  BigInt q;
  BigInt r;
  boost::multiprecision::divide_qr(value_, divisor.value_, q, r);
  if (!r.is_zero()) {
    throw Error(ErrorKind::NonIntegralResult, value_.str() + " is not divisible by " + divisor.value_.str());
  }
  return ExactCount(std::move(q));
}

std::ostream& operator<<(std::ostream& os, const ExactCount& c) { return os << c.value(); }

ExactRational::ExactRational(BigInt num, BigInt den) {
  if (den.is_zero()) throw Error(ErrorKind::OutOfRange, "zero denominator");
  value_ = BigRational(num, den);
}

ExactRational& ExactRational::operator/=(const ExactRational& o) {
  if (o.value_.is_zero()) throw Error(ErrorKind::OutOfRange, "division by zero");
  value_ /= o.value_;
  return *this;
}

ExactCount ExactRational::to_count() const {
  if (!is_integer()) throw Error(ErrorKind::NonIntegralResult, str() + " is not an integer");
  return ExactCount(numerator());
}

std::string ExactRational::str() const { return numerator().str() + "/" + denominator().str(); }

ExactCount factorial(int n) {
  if (n < 0) throw Error(ErrorKind::OutOfRange, "factorial of negative " + std::to_string(n));
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return ExactCount(std::move(r));
}

ExactCount binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) {
    throw Error(ErrorKind::OutOfRange, "binomial(" + std::to_string(n) + "," + std::to_string(k) + ")");
  }
  k = std::min(k, n - k);
  BigInt r = 1;
  // r stays integral: after step i it equals C(n - k + i, i).
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return ExactCount(std::move(r));
}

ExactCount multinomial(std::span<const int> parts) {
  for (int p : parts) {
    if (p < 0) throw Error(ErrorKind::OutOfRange, "negative multinomial part");
  }
  // Product of binomials C(running, p) avoids big intermediate factorials.
  ExactCount r = 1;
  int running = 0;
  for (int p : parts) {
    running += p;
    r *= binomial(running, p);
  }
  return r;
}

ExactCount ipow(const ExactCount& base, int exponent) {
  if (exponent < 0) throw Error(ErrorKind::OutOfRange, "negative exponent in integer power");
  return ExactCount(boost::multiprecision::pow(base.value(), static_cast<unsigned>(exponent)));
}

ExactRational rpow(const ExactCount& base, int exponent) {
  if (exponent >= 0) return ExactRational(ipow(base, exponent));
  if (base.is_zero()) throw Error(ErrorKind::OutOfRange, "zero to a negative power");
  return ExactRational(BigInt(1), ipow(base, -exponent).value());
}

// ---------------------------------------------------------------------------
// LabeledTree

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

LabeledTree LabeledTree::canonicalize(int n, std::span<const std::pair<int, int>> raw_edges) {
  std::vector<Edge> edges;
  edges.reserve(raw_edges.size());
  for (auto [a, b] : raw_edges) {
    if (n < 1 || a < 1 || a > n || b < 1 || b > n) {
      throw Error(ErrorKind::BadVertex, "edge (" + std::to_string(a) + "," + std::to_string(b) +
                                            ") outside 1.." + std::to_string(n));
    }
    if (a == b) throw Error(ErrorKind::NotATree, "self-loop at vertex " + std::to_string(a));
    edges.emplace_back(a, b);
  }
  return canonicalize(n, std::move(edges));
}

LabeledTree LabeledTree::canonicalize(int n, std::vector<Edge> edges) {
  if (n < 1) throw Error(ErrorKind::BadVertex, "vertex count must be at least 1");
  for (const Edge& e : edges) {
    if (e.u < 1 || e.v > n) {
      throw Error(ErrorKind::BadVertex, "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                            " outside 1.." + std::to_string(n));
    }
    if (e.u == e.v) throw Error(ErrorKind::NotATree, "self-loop at vertex " + std::to_string(e.u));
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw Error(ErrorKind::DuplicateEdge, "edge " + std::to_string(dup->u) + "-" + std::to_string(dup->v));
  }
  if (static_cast<int>(edges.size()) != n - 1) {
    throw Error(ErrorKind::NotATree,
                std::to_string(edges.size()) + " edges on " + std::to_string(n) + " vertices");
  }
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  for (const Edge& e : edges) {
    int ru = find_root(parent, e.u);
    int rv = find_root(parent, e.v);
    if (ru == rv) throw Error(ErrorKind::NotATree, "cycle through edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    parent[ru] = rv;
  }
  // n - 1 edges and no cycle implies connected.
  return LabeledTree(n, std::move(edges));
}

int LabeledTree::degree_of(Vertex v) const {
  if (v < 1 || v > n_) throw Error(ErrorKind::BadVertex, "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_));
  int d = 0;
  for (const Edge& e : edges_) d += (e.u == v) + (e.v == v);
  return d;
}

std::vector<int> LabeledTree::degrees() const {
  std::vector<int> d(n_, 0);
  for (const Edge& e : edges_) {
    ++d[e.u - 1];
    ++d[e.v - 1];
  }
  return d;
}

bool LabeledTree::has_edge(Edge e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

LabeledTree TrustedTreeBuilder::build(int n, std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  return LabeledTree(n, std::move(edges));
}

int degree_of(const LabeledTree& tree, Vertex v) { return tree.degree_of(v); }

// ---------------------------------------------------------------------------
// DegreeSequence / Composition / PruferSequence

bool DegreeSequence::is_valid(std::span<const int> degrees) {
  const auto n = static_cast<long>(degrees.size());
  if (n < 2) return false;
  long sum = 0;
  for (int d : degrees) {
    if (d < 1) return false;
    sum += d;
  }
  return sum == 2 * n - 2;
}

DegreeSequence::DegreeSequence(std::vector<int> degrees) : degrees_(std::move(degrees)) {
  if (!is_valid(degrees_)) {
    std::ostringstream os;
    os << "degrees (";
    for (std::size_t i = 0; i < degrees_.size(); ++i) os << (i ? "," : "") << degrees_[i];
    os << ") must be >= 1, at least two of them, summing to 2n-2";
    throw Error(ErrorKind::InvalidDegreeSequence, os.str());
  }
}

Composition Composition::positive(std::vector<int> parts, int target_sum) {
  long sum = 0;
  for (int p : parts) {
    if (p < 1) throw Error(ErrorKind::CompositionSumMismatch, "composition part " + std::to_string(p) + " < 1");
    sum += p;
  }
  if (sum != target_sum) {
    throw Error(ErrorKind::CompositionSumMismatch,
                "parts sum to " + std::to_string(sum) + ", expected " + std::to_string(target_sum));
  }
  return Composition(std::move(parts), target_sum, false);
}

Composition Composition::positive(std::vector<int> parts) {
  long sum = 0;
  for (int p : parts) sum += p;
  return positive(std::move(parts), static_cast<int>(sum));
}

Composition Composition::nonnegative(std::vector<int> parts, int target_sum) {
  long sum = 0;
  for (int p : parts) {
    if (p < 0) throw Error(ErrorKind::CompositionSumMismatch, "composition part " + std::to_string(p) + " < 0");
    sum += p;
  }
  if (sum != target_sum) {
    throw Error(ErrorKind::CompositionSumMismatch,
                "parts sum to " + std::to_string(sum) + ", expected " + std::to_string(target_sum));
  }
  return Composition(std::move(parts), target_sum, true);
}

PruferSequence::PruferSequence(int n, std::vector<int> symbols) : n_(n), symbols_(std::move(symbols)) {
  if (n < 1) throw Error(ErrorKind::OutOfRange, "vertex count must be at least 1");
  const std::size_t want = n >= 2 ? static_cast<std::size_t>(n - 2) : 0;
  if (symbols_.size() != want) {
    throw Error(ErrorKind::OutOfRange, "Pruefer sequence for n=" + std::to_string(n) + " needs " +
                                           std::to_string(want) + " symbols, got " + std::to_string(symbols_.size()));
  }
  for (int s : symbols_) {
    if (s < 1 || s > n) throw Error(ErrorKind::OutOfRange, "symbol " + std::to_string(s) + " outside 1.." + std::to_string(n));
  }
}

}  // namespace cayley
