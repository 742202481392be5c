// cayley: count, enumerate, sample and verify labeled trees.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or validation error,
// 3 enumeration cap exceeded.

#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cayley/core.hpp"
#include "cayley/counting.hpp"
#include "cayley/enumeration.hpp"
#include "cayley/io.hpp"
#include "cayley/sampling.hpp"
#include "cayley/verifier.hpp"

namespace {

using namespace cayley;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

/// Validation failure detected by the CLI itself.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_list_flag(const std::string& flag, const std::string& text) {
  try {
    return io::parse_int_list(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

/// Writes trees in one of the text formats.
class TreeWriter {
 public:
  TreeWriter(std::ostream& os, std::string format) : os_(os), format_(std::move(format)) {
    if (format_ == "csv") os_ << "tree,u,v\n";
  }

  void write(const LabeledTree& tree) {
    ++index_;
    if (format_ == "edges") {
      io::write_edge_list(os_, tree);
    } else if (format_ == "prufer") {
      os_ << (tree.n() >= 2 ? io::format_prufer(enumeration::prufer_encode(tree).symbols()) : "") << '\n';
    } else if (format_ == "json") {
      json j = io::tree_to_json(tree);
      if (tree.n() >= 2) j["prufer"] = enumeration::prufer_encode(tree).symbols();
      os_ << j.dump() << '\n';
    } else {
      for (const Edge& e : tree.edges()) os_ << index_ << ',' << e.u << ',' << e.v << '\n';
    }
  }

  void write_count(std::uint64_t count) {
    if (format_ == "json") {
      os_ << json{{"count", count}}.dump() << '\n';
    } else {
      os_ << "count " << count << '\n';
    }
  }

 private:
  std::ostream& os_;
  std::string format_;
  std::uint64_t index_ = 0;
};

const std::vector<std::string> kTreeFormats = {"edges", "prufer", "json", "csv"};

// ---------------------------------------------------------------------------

struct CountArgs {
  int n = 0;
  int k = 0;
  std::string degrees;
  std::string format = "text";
};

void emit_count(const std::string& subject, const json& params, const ExactCount& count, const std::string& format) {
  if (format == "json") {
    std::cout << json{{"subject", subject}, {"params", params}, {"count", count.str()}}.dump() << '\n';
  } else {
    std::cout << count << '\n';
  }
}

int run_count_total(const CountArgs& a) {
  emit_count("total", {{"n", a.n}}, counting::count_total_trees(a.n), a.format);
  return kExitOk;
}

int run_count_degrees(const CountArgs& a) {
  const auto d = parse_list_flag("--degrees", a.degrees);
  emit_count("degrees", {{"degrees", d}}, counting::count_trees_with_degrees(d), a.format);
  return kExitOk;
}

int run_count_degv1(const CountArgs& a) {
  emit_count("degv1", {{"n", a.n}, {"k", a.k}}, counting::count_trees_deg_v1(a.n, a.k), a.format);
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct EnumerateArgs {
  std::optional<int> n;
  std::string degrees;
  std::optional<int> degv1;
  std::string format = "edges";
  std::string method = "prufer";
  std::optional<std::uint64_t> limit;
  bool count = false;
};

int run_enumerate(const EnumerateArgs& a) {
  const Caps caps = Caps::from_env();
  std::optional<DegreeSequence> degrees;
  if (!a.degrees.empty()) {
    degrees.emplace(parse_list_flag("--degrees", a.degrees));
    if (a.n && *a.n != degrees->n()) throw UsageError("-n disagrees with the length of --degrees");
  }
  const int n = degrees ? degrees->n() : a.n.value_or(0);
  if (!degrees && !a.n) throw UsageError("enumerate needs -n or --degrees");
  if (n < 1) throw UsageError("-n must be at least 1");
  if (a.degv1 && (n < 2 || *a.degv1 < 1 || *a.degv1 > n - 1)) throw UsageError("--degv1 must lie in 1..n-1");
  if (degrees && a.method != "prufer") throw UsageError("--degrees requires --method prufer");

  std::function<std::optional<LabeledTree>()> next;
  if (degrees) {
    auto stream = std::make_shared<enumeration::DegreeTreeStream>(*degrees, caps);
    next = [stream] { return stream->next(); };
  } else if (a.method == "edges") {
    auto stream = std::make_shared<enumeration::EdgeSubsetTreeStream>(n, caps);
    next = [stream] { return stream->next(); };
  } else {
    auto stream = std::make_shared<enumeration::PruferTreeStream>(n, caps);
    next = [stream] { return stream->next(); };
  }

  TreeWriter writer(std::cout, a.format);
  std::uint64_t written = 0;
  while (!a.limit || written < *a.limit) {
    auto tree = next();
    if (!tree) break;
    if (a.degv1 && tree->degree_of(1) != *a.degv1) continue;
    writer.write(*tree);
    ++written;
  }
  if (a.count) writer.write_count(written);
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct PruferArgs {
  std::optional<int> n;
  std::string format;
};

int run_encode(const PruferArgs& a) {
  io::EdgeListReader reader(std::cin);
  while (auto tree = reader.next()) {
    if (tree->n() < 2) throw UsageError("cannot encode a single-vertex tree");
    const auto seq = enumeration::prufer_encode(*tree);
    if (a.format == "json") {
      std::cout << json{{"n", tree->n()}, {"prufer", seq.symbols()}}.dump() << '\n';
    } else {
      std::cout << io::format_prufer(seq.symbols()) << '\n';
    }
  }
  return kExitOk;
}

int run_decode(const PruferArgs& a) {
  TreeWriter writer(std::cout, a.format.empty() ? "edges" : a.format);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(std::cin, line)) {
    ++line_no;
    std::vector<int> symbols;
    try {
      symbols = io::parse_prufer(line);
    } catch (const std::invalid_argument& e) {
      throw io::ParseError(line_no, e.what());
    }
    const int n = a.n.value_or(static_cast<int>(symbols.size()) + 2);
    try {
      writer.write(enumeration::prufer_decode(PruferSequence(n, std::move(symbols))));
    } catch (const Error& e) {
      throw io::ParseError(line_no, e.what());
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct SampleArgs {
  std::optional<int> n;
  std::string degrees;
  std::uint64_t count = 1;
  std::uint64_t seed = 0;
  std::string format = "edges";
};

int run_sample(const SampleArgs& a) {
  const sampling::SamplerConfig cfg{a.seed, a.count};
  TreeWriter writer(std::cout, a.format);
  if (!a.degrees.empty()) {
    const DegreeSequence d(parse_list_flag("--degrees", a.degrees));
    if (a.n && *a.n != d.n()) throw UsageError("-n disagrees with the length of --degrees");
    sampling::DegreeTreeSampler sampler(d, cfg);
    while (auto t = sampler.next()) writer.write(*t);
  } else {
    if (!a.n) throw UsageError("sample needs -n or --degrees");
    sampling::UniformTreeSampler sampler(*a.n, cfg);
    while (auto t = sampler.next()) writer.write(*t);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string identity = "all";
  std::optional<int> max_n;
  bool json_output = false;
  bool no_timing = false;
  bool serial = false;
};

verifier::Formulas formulas_for_build() {
  auto f = verifier::Formulas::reference();
#ifdef CAYLEY_FAULT_INJECTION
  f.trees_with_degrees = [](const DegreeSequence& d) {
    ExactCount c = counting::count_trees_with_degrees(d);
    return d.n() == 4 ? c + ExactCount(1) : c;
  };
#endif
  return f;
}

void print_table(const std::vector<verifier::IdentityReport>& reports, bool timing) {
  std::cout << std::left << std::setw(22) << "IDENTITY" << std::setw(7) << "STATUS" << std::right << std::setw(9)
            << "CHECKED" << std::setw(12) << "ELAPSED_MS" << "  GRID\n";
  for (const auto& r : reports) {
    std::ostringstream ms;
    if (timing) {
      ms << std::fixed << std::setprecision(1) << r.elapsed_ms;
    } else {
      ms << '-';
    }
    std::cout << std::left << std::setw(22) << verifier::to_string(r.id) << std::setw(7) << verifier::to_string(r.status())
              << std::right << std::setw(9) << r.checked << std::setw(12) << ms.str() << "  " << r.grid << '\n';
    if (r.error) std::cout << "    error: " << *r.error << '\n';
    for (const auto& f : r.failures) {
      std::cout << "    " << f.params << ": expected " << f.expected << ", got " << f.got << '\n';
    }
  }
}

int run_verify(const VerifyArgs& a) {
  static const std::map<std::string, verifier::IdentityId> kNames = {
      {"theorem1", verifier::IdentityId::THEOREM_1},
      {"degv1", verifier::IdentityId::DEG_V1_TOTALITY},
      {"lemma1", verifier::IdentityId::LEMMA_1},
      {"recursion", verifier::IdentityId::EQ_20_RECURSION},
      {"double-count", verifier::IdentityId::DOUBLE_COUNT_PAIRS},
      {"l3", verifier::IdentityId::L3_EXPANSION},
      {"supervertex", verifier::IdentityId::SUPERVERTEX_MARGINAL},
      {"collapse", verifier::IdentityId::BINOMIAL_COLLAPSE},
      {"prufer", verifier::IdentityId::PRUFER_ROUNDTRIP},
  };
  if (a.max_n && *a.max_n < 2) throw UsageError("--max-n must be at least 2");
  if (a.identity != "all" && !kNames.contains(a.identity)) throw UsageError("unknown identity '" + a.identity + "'");
  const verifier::VerifyLimits limits = a.max_n ? verifier::VerifyLimits::uniform(*a.max_n) : verifier::VerifyLimits{};
  const verifier::Verifier v(formulas_for_build(), Caps::from_env(), !a.serial);

  std::vector<verifier::IdentityReport> reports;
  if (a.identity == "all") {
    reports = v.verify_all(limits);
  } else {
    reports.push_back(v.run(kNames.at(a.identity), limits));
  }
  for (const auto& r : reports) {
    if (r.error) std::cerr << "cayley: " << verifier::to_string(r.id) << ": " << *r.error << '\n';
  }

  if (a.json_output) {
    std::cout << verifier::to_json(reports, !a.no_timing).dump(2) << '\n';
  } else {
    print_table(reports, !a.no_timing);
  }

  bool failed = false;
  bool capped = false;
  bool errored = false;
  for (const auto& r : reports) {
    if (r.status() == verifier::Status::Fail) failed = true;
    if (r.status() == verifier::Status::Error) {
      (r.error_kind == ErrorKind::CapExceeded ? capped : errored) = true;
    }
  }
  if (failed) return kExitVerifyFailed;
  if (capped) return kExitCap;
  if (errored) return kExitUsage;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Count, enumerate, sample and verify labeled trees"};
  app.require_subcommand(1);
  int exit_code = kExitOk;
  std::function<int()> action;

  // count
  CountArgs count_args;
  auto* count = app.add_subcommand("count", "Exact tree counts");
  count->require_subcommand(1);
  auto* count_total = count->add_subcommand("total", "n^(n-2)");
  count_total->add_option("-n", count_args.n, "Vertex count")->required();
  auto* count_degrees = count->add_subcommand("degrees", "Trees with a given degree vector");
  count_degrees->add_option("-d,--degrees", count_args.degrees, "Degrees of vertices 1..n, comma-separated")->required();
  auto* count_degv1 = count->add_subcommand("degv1", "Trees with deg(1) = k");
  count_degv1->add_option("-n", count_args.n, "Vertex count")->required();
  count_degv1->add_option("-k", count_args.k, "Degree of vertex 1")->required();
  for (auto* sub : {count_total, count_degrees, count_degv1}) {
    sub->add_option("--format", count_args.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  }
  count_total->callback([&] { action = [&] { return run_count_total(count_args); }; });
  count_degrees->callback([&] { action = [&] { return run_count_degrees(count_args); }; });
  count_degv1->callback([&] { action = [&] { return run_count_degv1(count_args); }; });

  // enumerate
  EnumerateArgs enum_args;
  auto* enumerate = app.add_subcommand("enumerate", "Stream every tree in a deterministic order");
  enumerate->add_option("-n", enum_args.n, "Vertex count");
  enumerate->add_option("--degrees", enum_args.degrees, "Only trees with this degree vector");
  enumerate->add_option("--degv1", enum_args.degv1, "Only trees with deg(1) = K");
  enumerate->add_option("--format", enum_args.format, "edges, prufer, json or csv")->check(CLI::IsMember(kTreeFormats));
  enumerate->add_option("--method", enum_args.method, "prufer (sequence sweep) or edges (edge subsets)")
      ->check(CLI::IsMember({"prufer", "edges"}));
  enumerate->add_option("--limit", enum_args.limit, "Stop after this many trees");
  enumerate->add_flag("--count", enum_args.count, "Finish with a count line");
  enumerate->callback([&] { action = [&] { return run_enumerate(enum_args); }; });

  // prufer
  PruferArgs prufer_args;
  auto* prufer = app.add_subcommand("prufer", "Pruefer codec over standard input");
  prufer->require_subcommand(1);
  auto* encode = prufer->add_subcommand("encode", "Edge-list trees in, one sequence per line out");
  encode->add_option("--format", prufer_args.format, "prufer or json")->check(CLI::IsMember({"prufer", "json"}));
  auto* decode = prufer->add_subcommand("decode", "One sequence per line in, trees out");
  decode->add_option("-n", prufer_args.n, "Vertex count (default: sequence length + 2)");
  decode->add_option("--format", prufer_args.format, "edges, json or csv")->check(CLI::IsMember({"edges", "json", "csv"}));
  encode->callback([&] { action = [&] { return run_encode(prufer_args); }; });
  decode->callback([&] { action = [&] { return run_decode(prufer_args); }; });

  // sample
  SampleArgs sample_args;
  auto* sample = app.add_subcommand("sample", "Uniform random trees (mt19937_64, seeded)");
  sample->add_option("-n", sample_args.n, "Vertex count");
  sample->add_option("--degrees", sample_args.degrees, "Sample among trees with this degree vector");
  sample->add_option("--count", sample_args.count, "Number of trees")->check(CLI::NonNegativeNumber);
  sample->add_option("--seed", sample_args.seed, "Generator seed");
  sample->add_option("--format", sample_args.format, "edges, prufer, json or csv")->check(CLI::IsMember(kTreeFormats));
  sample->callback([&] { action = [&] { return run_sample(sample_args); }; });

  // verify
  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Check every identity against brute-force oracles");
  verify->add_option("identity", verify_args.identity,
                     "all, theorem1, degv1, lemma1, recursion, double-count, l3, supervertex, collapse or prufer");
  verify->add_option("--max-n", verify_args.max_n, "Use this bound for every parameter grid");
  verify->add_flag("--json", verify_args.json_output, "JSON report");
  verify->add_flag("--no-timing", verify_args.no_timing, "Omit elapsed times (stable output)");
  verify->add_flag("--serial", verify_args.serial, "Use the serial sweep kernels");
  verify->callback([&] { action = [&] { return run_verify(verify_args); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    exit_code = action();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const io::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::CapExceeded ? kExitCap : kExitUsage;
  }
  std::cout.flush();
  return exit_code;
}
