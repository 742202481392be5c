#include "cayley/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <sstream>

#include "cayley/counting.hpp"
#include "cayley/kernels.hpp"

namespace cayley::verifier {

namespace {

using Clock = std::chrono::steady_clock;

ExactCount cayley_number(int n) {
  return n <= 2 ? ExactCount(1) : ipow(ExactCount(static_cast<std::uint64_t>(n)), n - 2);
}

std::string join(std::span<const int> xs) {
  std::string s = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + ")";
}

std::string range(const char* var, int lo, int hi) {
  return std::string(var) + "=" + std::to_string(lo) + ".." + std::to_string(hi);
}

/// Collects comparisons for one report.
class Recorder {
 public:
  explicit Recorder(IdentityId id, std::string grid) : start_(Clock::now()) {
    report_.id = id;
    report_.grid = std::move(grid);
  }

  void instance() { ++report_.checked; }

  template <class A, class B>
  void expect_eq(const std::string& params, const A& expected, const B& got) {
    if (!(expected == got)) report_.failures.push_back({params, to_text(expected), to_text(got)});
  }

  void fail(const std::string& params, const std::string& expected, const std::string& got) {
    report_.failures.push_back({params, expected, got});
  }

  IdentityReport finish() {
    report_.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
    return std::move(report_);
  }

 private:
  static std::string to_text(const ExactCount& c) { return c.str(); }
  static std::string to_text(std::uint64_t v) { return std::to_string(v); }
  static std::string to_text(const std::string& s) { return s; }

  IdentityReport report_;
  Clock::time_point start_;
};

void require(bool ok, ErrorKind kind, const std::string& what) {
  if (!ok) throw Error(kind, what);
}

int sweep_cap(const Caps& caps) { return std::min(caps.prufer, kernels::kMaxSweepN); }

// Histogram of component degree vectors over all ways to join components of the
// given sizes (vertices laid out consecutively) with k-1 cross edges forming a tree.
std::map<std::vector<int>, std::uint64_t> supervertex_join_histogram(std::span<const int> sizes) {
  const int k = static_cast<int>(sizes.size());
  std::vector<int> owner;
  for (int c = 0; c < k; ++c) owner.insert(owner.end(), sizes[c], c);
  const int m = static_cast<int>(owner.size());
  std::vector<std::pair<int, int>> cross;  // component pairs, one entry per vertex pair
  for (int x = 0; x < m; ++x) {
    for (int y = x + 1; y < m; ++y) {
      if (owner[x] != owner[y]) cross.emplace_back(owner[x], owner[y]);
    }
  }
  std::map<std::vector<int>, std::uint64_t> hist;
  const int pick_count = k - 1;
  const int size = static_cast<int>(cross.size());
  if (pick_count > size) return hist;
  std::vector<int> pick(pick_count);
  std::iota(pick.begin(), pick.end(), 0);
  std::vector<int> parent(k);
  std::vector<int> degree(k);
  while (true) {
    std::iota(parent.begin(), parent.end(), 0);
    std::fill(degree.begin(), degree.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool tree = true;
    for (int idx : pick) {
      auto [a, b] = cross[idx];
      ++degree[a];
      ++degree[b];
      const int ra = find(a);
      const int rb = find(b);
      if (ra == rb) {
        tree = false;
        break;
      }
      parent[ra] = rb;
    }
    if (tree) ++hist[degree];
    int i = pick_count - 1;
    while (i >= 0 && pick[i] == size - pick_count + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < pick_count; ++j) pick[j] = pick[j - 1] + 1;
  }
  return hist;
}

}  // namespace

const char* to_string(IdentityId id) {
  switch (id) {
    case IdentityId::THEOREM_1: return "THEOREM_1";
    case IdentityId::DEG_V1_TOTALITY: return "DEG_V1_TOTALITY";
    case IdentityId::LEMMA_1: return "LEMMA_1";
    case IdentityId::EQ_20_RECURSION: return "EQ_20_RECURSION";
    case IdentityId::DOUBLE_COUNT_PAIRS: return "DOUBLE_COUNT_PAIRS";
    case IdentityId::L3_EXPANSION: return "L3_EXPANSION";
    case IdentityId::SUPERVERTEX_MARGINAL: return "SUPERVERTEX_MARGINAL";
    case IdentityId::BINOMIAL_COLLAPSE: return "BINOMIAL_COLLAPSE";
    case IdentityId::PRUFER_ROUNDTRIP: return "PRUFER_ROUNDTRIP";
  }
  return "UNKNOWN";
}

const char* formula_of(IdentityId id) {
  switch (id) {
    case IdentityId::THEOREM_1: return "#trees with degrees d = (n-2)!/prod(d_i-1)!";
    case IdentityId::DEG_V1_TOTALITY: return "sum_k #trees with deg(1)=k = n^(n-2)";
    case IdentityId::LEMMA_1:
      return "sum_a (prod a_i T_{a_i}) (n-1)!/prod a_i! / k! = T_{n-1}/(n-1)^(k-2) C(n-2,k-1)";
    case IdentityId::EQ_20_RECURSION: return "T_n = sum_k sum_a (prod a_i T_{a_i}) (n-1)!/prod a_i! / k! = n^(n-2)";
    case IdentityId::DOUBLE_COUNT_PAIRS: return "#(tree, k-1 marked edges) = T_m C(m-1,k-1) = sum_a L1 L2 L3 / k!";
    case IdentityId::L3_EXPANSION: return "m^(k-2) prod a_i = sum_c (k-2)!/prod c_i! prod a_i^(c_i+1)";
    case IdentityId::SUPERVERTEX_MARGINAL: return "sum_d (k-2)!/prod(d_i-1)! prod a_i^d_i = m^(k-2) prod a_i";
    case IdentityId::BINOMIAL_COLLAPSE: return "sum_j C(n-2,j) (n-1)^(n-2-j) = n^(n-2)";
    case IdentityId::PRUFER_ROUNDTRIP: return "decode(encode(t)) = t, encode(decode(s)) = s, |trees| = n^(n-2)";
  }
  return "";
}

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Error: return "ERROR";
  }
  return "ERROR";
}

Status IdentityReport::status() const {
  if (error) return Status::Error;
  if (!failures.empty()) return Status::Fail;
  return checked > 0 ? Status::Pass : Status::Error;
}

Formulas Formulas::reference() {
  Formulas f;
  f.trees_with_degrees = [](const DegreeSequence& d) { return counting::count_trees_with_degrees(d); };
  f.total_trees = counting::count_total_trees;
  f.deg_v1 = counting::count_trees_deg_v1;
  f.deg_v1_rational = counting::count_trees_deg_v1_rational;
  f.lemma1_lhs = counting::lemma1_lhs;
  f.recursion_T = counting::recursion_T;
  f.binomial_collapse = counting::binomial_collapse;
  f.expand_L3 = counting::expand_L3;
  f.supervertex_trees = counting::count_supervertex_trees;
  f.double_count_assembly = counting::double_count_assembly;
  return f;
}

VerifyLimits VerifyLimits::uniform(int n) {
  VerifyLimits l;
  l.theorem1_n_max = l.deg_v1_n_max = l.lemma1_n_max = n;
  l.recursion_n_max = l.collapse_n_max = n;
  l.double_count_m_max = l.prufer_n_max = n;
  l.l3_k_max = std::min(5, n);
  l.l3_m_max = n;
  return l;
}

Verifier::Verifier(Formulas formulas, Caps caps, bool parallel)
    : formulas_(std::move(formulas)), caps_(caps), parallel_(parallel) {}

IdentityReport Verifier::verify_theorem1(int n_max) const {
  require(n_max >= 2, ErrorKind::OutOfRange, "degree-sequence check needs n_max >= 2");
  require(n_max <= sweep_cap(caps_), ErrorKind::CapExceeded,
          "degree check enumerates all trees; n_max must be <= " + std::to_string(sweep_cap(caps_)));
  Recorder rec(IdentityId::THEOREM_1, range("n", 2, n_max));
  for (int n = 2; n <= n_max; ++n) {
    const auto hist = parallel_ ? kernels::parallel::degree_histogram(n, caps_) : kernels::serial::degree_histogram(n, caps_);
    enumeration::CompositionStream sequences(2 * n - 2, n, false);
    while (auto comp = sequences.next()) {
      rec.instance();
      const DegreeSequence d(comp->parts());
      const std::string params = "d=" + join(d.values());
      const ExactCount formula = formulas_.trees_with_degrees(d);

      const auto it = hist.find(d.values());
      const std::uint64_t filtered = it == hist.end() ? 0 : it->second;
      rec.expect_eq(params + " filtered", ExactCount(filtered), formula);

      std::uint64_t streamed = 0;
      enumeration::DegreeTreeStream stream(d, caps_);
      while (auto t = stream.next()) {
        ++streamed;
        if (t->degrees() != d.values()) rec.fail(params + " streamed degrees", join(d.values()), join(t->degrees()));
      }
      rec.expect_eq(params + " streamed", ExactCount(streamed), formula);
    }
  }
  return rec.finish();
}

IdentityReport Verifier::verify_deg_v1_totality(int n_max) const {
  require(n_max >= 2, ErrorKind::OutOfRange, "root-degree check needs n_max >= 2");
  Recorder rec(IdentityId::DEG_V1_TOTALITY, range("n", 2, n_max));
  for (int n = 2; n <= n_max; ++n) {
    rec.instance();
    const std::string params = "n=" + std::to_string(n);
    std::optional<kernels::SweepSummary> sweep;
    if (n <= sweep_cap(caps_)) sweep = parallel_ ? kernels::parallel::sweep(n, caps_) : kernels::serial::sweep(n, caps_);
    ExactCount sum = 0;
    for (int k = 1; k <= n - 1; ++k) {
      const ExactCount count = formulas_.deg_v1(n, k);
      sum += count;
      if (sweep) rec.expect_eq(params + " k=" + std::to_string(k) + " brute", ExactCount(sweep->root_degree[k]), count);
    }
    rec.expect_eq(params + " sum_k", cayley_number(n), sum);
    rec.expect_eq(params + " total_trees", cayley_number(n), formulas_.total_trees(n));
  }
  return rec.finish();
}

IdentityReport Verifier::verify_lemma1(int n_max) const {
  require(n_max >= 2, ErrorKind::OutOfRange, "root-degree check needs n_max >= 2");
  const int brute_max = std::min(n_max, sweep_cap(caps_));
  Recorder rec(IdentityId::LEMMA_1, range("n", 2, n_max) + ", k=1..n-1, brute force n<=" + std::to_string(brute_max));
  for (int n = 2; n <= n_max; ++n) {
    std::optional<kernels::SweepSummary> sweep;
    if (n <= brute_max) sweep = parallel_ ? kernels::parallel::sweep(n, caps_) : kernels::serial::sweep(n, caps_);
    for (int k = 1; k <= n - 1; ++k) {
      rec.instance();
      const std::string params = "n=" + std::to_string(n) + " k=" + std::to_string(k);
      const ExactCount integer_form = formulas_.deg_v1(n, k);
      const ExactCount expected = sweep ? ExactCount(sweep->root_degree[k]) : integer_form;
      if (sweep) {
        rec.expect_eq(params + " sequence occurrences", expected, ExactCount(sweep->root_occurrence[k]));
        rec.expect_eq(params + " integer form", expected, integer_form);
      }
      rec.expect_eq(params + " lhs", expected, formulas_.lemma1_lhs(n, k));
      const ExactRational rational = formulas_.deg_v1_rational(n, k);
      if (!rational.is_integer()) {
        rec.fail(params + " rational form", expected.str() + "/1", rational.str());
      } else {
        rec.expect_eq(params + " rational form", expected, rational.to_count());
      }
    }
  }
  return rec.finish();
}

IdentityReport Verifier::verify_recursion_and_collapse(int n_max) const {
  require(n_max >= 2, ErrorKind::OutOfRange, "recursion check needs n_max >= 2");
  constexpr int kLiteralMax = 12;
  Recorder rec(IdentityId::EQ_20_RECURSION,
               range("n", 2, n_max) + ", composition-by-composition n<=" + std::to_string(std::min(n_max, kLiteralMax)));
  for (int n = 2; n <= n_max; ++n) {
    rec.instance();
    const std::string params = "n=" + std::to_string(n);
    const ExactCount target = cayley_number(n);
    const ExactCount recursion = formulas_.recursion_T(n);
    rec.expect_eq(params + " recursion", target, recursion);
    rec.expect_eq(params + " collapse", target, formulas_.binomial_collapse(n));
    if (n <= kLiteralMax) rec.expect_eq(params + " literal recursion", recursion, counting::recursion_T_by_compositions(n));
  }
  return rec.finish();
}

IdentityReport Verifier::verify_binomial_collapse(int n_max) const {
  require(n_max >= 2, ErrorKind::OutOfRange, "collapse check needs n_max >= 2");
  Recorder rec(IdentityId::BINOMIAL_COLLAPSE, range("n", 2, n_max) + ", j=0..n-2");
  for (int n = 2; n <= n_max; ++n) {
    rec.instance();
    const std::string params = "n=" + std::to_string(n);
    for (int j = 0; j <= n - 2; ++j) {
      const ExactCount term = binomial(n - 2, j) * ipow(ExactCount(static_cast<std::uint64_t>(n - 1)), n - 2 - j);
      rec.expect_eq(params + " j=" + std::to_string(j), term, formulas_.deg_v1(n, j + 1));
    }
    rec.expect_eq(params + " sum", cayley_number(n), formulas_.binomial_collapse(n));
  }
  return rec.finish();
}

IdentityReport Verifier::verify_double_count(int m_max) const {
  require(m_max >= 2, ErrorKind::OutOfRange, "double count needs m_max >= 2");
  require(m_max <= caps_.pairs, ErrorKind::CapExceeded,
          "pair enumeration limited to m <= " + std::to_string(caps_.pairs) + ", got " + std::to_string(m_max));
  Recorder rec(IdentityId::DOUBLE_COUNT_PAIRS, range("m", 2, m_max) + ", k=1..m");
  for (int m = 2; m <= m_max; ++m) {
    for (int k = 1; k <= m; ++k) {
      rec.instance();
      const std::string params = "m=" + std::to_string(m) + " k=" + std::to_string(k);

      // Pairs grouped by the sorted sizes of the forest they leave behind.
      std::map<std::vector<int>, std::uint64_t> by_sizes;
      std::uint64_t pairs = 0;
      enumeration::EdgeSubsetPairStream stream(m, k, caps_);
      while (auto pair = stream.next()) {
        ++pairs;
        const Forest forest = enumeration::split_by_edge_removal(pair->tree, pair->marked);
        if (static_cast<int>(forest.components.size()) != k) {
          rec.fail(params + " components", std::to_string(k), std::to_string(forest.components.size()));
        }
        if (!(enumeration::reassemble(forest) == pair->tree)) rec.fail(params + " reassembly", "original tree", "different tree");
        auto sizes = forest.sizes();
        std::sort(sizes.begin(), sizes.end());
        ++by_sizes[sizes];
      }

      const ExactCount rhs = formulas_.total_trees(m) * binomial(m - 1, k - 1);
      rec.expect_eq(params + " pairs vs T_m C(m-1,k-1)", rhs, ExactCount(pairs));
      rec.expect_eq(params + " assembly / k!", rhs, formulas_.double_count_assembly(m, k));

      // Each pair with component-size multiset S is built once for every labeling of
      // its components; labelings that read off the ordered sizes a number
      // prod (multiplicity of each size)!.
      enumeration::CompositionStream comps(m, k, false);
      while (auto a = comps.next()) {
        rec.instance();
        auto sorted = a->parts();
        std::sort(sorted.begin(), sorted.end());
        ExactCount labelings = 1;
        for (std::size_t i = 0; i < sorted.size();) {
          std::size_t j = i;
          while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
          labelings *= factorial(static_cast<int>(j - i));
          i = j;
        }
        const auto it = by_sizes.find(sorted);
        const ExactCount brute = ExactCount(it == by_sizes.end() ? 0 : it->second) * labelings;

        ExactCount inner = 1;
        for (int ai : a->parts()) inner *= formulas_.total_trees(ai);
        const ExactCount assembled = multinomial(a->parts()) * inner * formulas_.expand_L3(*a, m);
        rec.expect_eq(params + " a=" + join(a->parts()) + " L1*L2*L3", brute, assembled);
      }
    }
  }
  return rec.finish();
}

IdentityReport Verifier::verify_l3_expansion(int k_max, int m_max) const {
  require(k_max >= 2 && m_max >= 2, ErrorKind::OutOfRange, "expansion check needs k_max >= 2 and m_max >= 2");
  Recorder rec(IdentityId::L3_EXPANSION, range("k", 2, k_max) + ", " + range("m", 2, m_max));
  for (int k = 2; k <= k_max; ++k) {
    for (int m = k; m <= m_max; ++m) {
      enumeration::CompositionStream comps(m, k, false);
      while (auto a = comps.next()) {
        rec.instance();
        const std::string params = "m=" + std::to_string(m) + " a=" + join(a->parts());
        rec.expect_eq(params, counting::L3_closed_form(*a, m).to_count(), formulas_.expand_L3(*a, m));
      }
    }
  }
  return rec.finish();
}

IdentityReport Verifier::verify_supervertex_marginal(int k_max, int m_max) const {
  require(k_max >= 2 && m_max >= 2, ErrorKind::OutOfRange, "super-vertex check needs k_max >= 2 and m_max >= 2");
  const int brute_max = std::min(m_max, caps_.pairs);
  Recorder rec(IdentityId::SUPERVERTEX_MARGINAL,
               range("k", 2, k_max) + ", " + range("m", 2, m_max) + ", brute force m<=" + std::to_string(brute_max));
  for (int k = 2; k <= k_max; ++k) {
    for (int m = k; m <= m_max; ++m) {
      enumeration::CompositionStream comps(m, k, false);
      while (auto a = comps.next()) {
        rec.instance();
        const std::string params = "m=" + std::to_string(m) + " a=" + join(a->parts());
        std::optional<std::map<std::vector<int>, std::uint64_t>> brute;
        if (m <= brute_max) brute = supervertex_join_histogram(a->parts());

        ExactCount marginal = 0;
        enumeration::CompositionStream degrees(2 * k - 2, k, false);
        while (auto d = degrees.next()) {
          const ExactCount joins = formulas_.supervertex_trees(d->parts(), *a);
          marginal += joins;
          if (brute) {
            const auto it = brute->find(d->parts());
            rec.expect_eq(params + " d=" + join(d->parts()), ExactCount(it == brute->end() ? 0 : it->second), joins);
          }
        }
        rec.expect_eq(params + " sum_d", formulas_.expand_L3(*a, m), marginal);
      }
    }
  }
  return rec.finish();
}

IdentityReport Verifier::verify_prufer_roundtrip(int n_max) const {
  require(n_max >= 2, ErrorKind::OutOfRange, "codec check needs n_max >= 2");
  require(n_max <= sweep_cap(caps_), ErrorKind::CapExceeded,
          "codec check enumerates all sequences; n_max must be <= " + std::to_string(sweep_cap(caps_)));
  Recorder rec(IdentityId::PRUFER_ROUNDTRIP,
               range("n", 2, n_max) + ", trees from edge subsets n<=" + std::to_string(std::min(n_max, caps_.edges)));
  for (int n = 2; n <= n_max; ++n) {
    rec.instance();
    const std::string params = "n=" + std::to_string(n);
    const ExactCount target = cayley_number(n);

    const auto sweep = parallel_ ? kernels::parallel::sweep(n, caps_) : kernels::serial::sweep(n, caps_);
    rec.expect_eq(params + " sequences", target, ExactCount(sweep.trees));
    rec.expect_eq(params + " distinct decoded trees", target, ExactCount(sweep.distinct));
    rec.expect_eq(params + " invalid decodes", std::uint64_t{0}, sweep.invalid_trees);
    rec.expect_eq(params + " encode(decode(s)) mismatches", std::uint64_t{0}, sweep.roundtrip_failures);

    // Library encoder against every sequence.
    std::uint64_t seq_mismatch = 0;
    enumeration::PruferTreeStream seqs(n, caps_);
    while (auto t = seqs.next()) {
      if (enumeration::prufer_encode(*t).symbols() != seqs.current_sequence()) ++seq_mismatch;
    }
    rec.expect_eq(params + " library encode(decode(s)) mismatches", std::uint64_t{0}, seq_mismatch);

    // decode(encode(t)) over trees found without the codec where affordable.
    std::uint64_t trees = 0;
    std::uint64_t tree_mismatch = 0;
    auto check_tree = [&](const LabeledTree& t) {
      ++trees;
      if (!(enumeration::prufer_decode(enumeration::prufer_encode(t)) == t)) ++tree_mismatch;
    };
    if (n <= caps_.edges) {
      enumeration::EdgeSubsetTreeStream stream(n, caps_);
      while (auto t = stream.next()) check_tree(*t);
    } else {
      enumeration::PruferTreeStream stream(n, caps_);
      while (auto t = stream.next()) check_tree(*t);
    }
    rec.expect_eq(params + " trees", target, ExactCount(trees));
    rec.expect_eq(params + " decode(encode(t)) mismatches", std::uint64_t{0}, tree_mismatch);
  }
  return rec.finish();
}

IdentityReport Verifier::run(IdentityId id, const VerifyLimits& limits) const {
  try {
    switch (id) {
      case IdentityId::THEOREM_1: return verify_theorem1(limits.theorem1_n_max);
      case IdentityId::DEG_V1_TOTALITY: return verify_deg_v1_totality(limits.deg_v1_n_max);
      case IdentityId::LEMMA_1: return verify_lemma1(limits.lemma1_n_max);
      case IdentityId::EQ_20_RECURSION: return verify_recursion_and_collapse(limits.recursion_n_max);
      case IdentityId::DOUBLE_COUNT_PAIRS: return verify_double_count(limits.double_count_m_max);
      case IdentityId::L3_EXPANSION: return verify_l3_expansion(limits.l3_k_max, limits.l3_m_max);
      case IdentityId::SUPERVERTEX_MARGINAL: return verify_supervertex_marginal(limits.l3_k_max, limits.l3_m_max);
      case IdentityId::BINOMIAL_COLLAPSE: return verify_binomial_collapse(limits.collapse_n_max);
      case IdentityId::PRUFER_ROUNDTRIP: return verify_prufer_roundtrip(limits.prufer_n_max);
    }
    throw Error(ErrorKind::OutOfRange, "unknown identity");
  } catch (const Error& e) {
    IdentityReport r;
    r.id = id;
    r.error = e.what();
    r.error_kind = e.kind();
    return r;
  } catch (const std::exception& e) {
    IdentityReport r;
    r.id = id;
    r.error = e.what();
    return r;
  }
}

std::vector<IdentityReport> Verifier::verify_all(const VerifyLimits& limits) const {
  std::vector<IdentityReport> reports;
  for (IdentityId id : kAllIdentities) reports.push_back(run(id, limits));
  return reports;
}

std::uint64_t count_supervertex_joins_brute(std::span<const int> degrees, std::span<const int> sizes) {
  if (degrees.size() != sizes.size()) throw Error(ErrorKind::CompositionSumMismatch, "need one degree per component");
  const auto hist = supervertex_join_histogram(sizes);
  const auto it = hist.find(std::vector<int>(degrees.begin(), degrees.end()));
  return it == hist.end() ? 0 : it->second;
}

nlohmann::json to_json(const IdentityReport& report, bool include_timing) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : report.failures) failures.push_back({{"params", f.params}, {"expected", f.expected}, {"got", f.got}});
  nlohmann::json j = {
      {"identity_id", to_string(report.id)},
      {"status", to_string(report.status())},
      {"formula", formula_of(report.id)},
      {"grid", report.grid},
      {"checked", report.checked},
      {"failures", std::move(failures)},
      {"error", report.error ? nlohmann::json(*report.error) : nlohmann::json(nullptr)},
  };
  j["elapsed_ms"] = include_timing ? report.elapsed_ms : 0.0;
  return j;
}

nlohmann::json to_json(const std::vector<IdentityReport>& reports, bool include_timing) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& r : reports) records.push_back(to_json(r, include_timing));
  return {{"status", all_pass(reports) ? "PASS" : "FAIL"}, {"reports", std::move(records)}};
}

bool all_pass(const std::vector<IdentityReport>& reports) {
  return !reports.empty() &&
         std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.status() == Status::Pass; });
}

}  // namespace cayley::verifier
