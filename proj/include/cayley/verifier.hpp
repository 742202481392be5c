#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "cayley/core.hpp"
#include "cayley/enumeration.hpp"

namespace cayley::verifier {

enum class IdentityId {
  THEOREM_1,
  DEG_V1_TOTALITY,
  LEMMA_1,
  EQ_20_RECURSION,
  DOUBLE_COUNT_PAIRS,
  L3_EXPANSION,
  SUPERVERTEX_MARGINAL,
  BINOMIAL_COLLAPSE,
  PRUFER_ROUNDTRIP,
};

inline constexpr IdentityId kAllIdentities[] = {
    IdentityId::THEOREM_1,          IdentityId::DEG_V1_TOTALITY, IdentityId::LEMMA_1,
    IdentityId::EQ_20_RECURSION,    IdentityId::DOUBLE_COUNT_PAIRS, IdentityId::L3_EXPANSION,
    IdentityId::SUPERVERTEX_MARGINAL, IdentityId::BINOMIAL_COLLAPSE, IdentityId::PRUFER_ROUNDTRIP,
};

const char* to_string(IdentityId id);
/// The identity each check establishes, as a one-line formula.
const char* formula_of(IdentityId id);

enum class Status { Pass, Fail, Error };
const char* to_string(Status s);

struct Failure {
  std::string params;
  std::string expected;
  std::string got;
};

struct IdentityReport {
  IdentityId id{};
  std::string grid;
  std::uint64_t checked = 0;
  std::vector<Failure> failures;
  /// Set when the check could not run (for example CapExceeded).
  std::optional<std::string> error;
  std::optional<ErrorKind> error_kind;
  double elapsed_ms = 0.0;

  /// Pass iff it ran, checked something and found no failures.
  Status status() const;
};

/// The closed forms under test. Tests swap single entries for corrupted
/// versions to confirm the verifier reports them.
struct Formulas {
  std::function<ExactCount(const DegreeSequence&)> trees_with_degrees;
  std::function<ExactCount(int)> total_trees;
  std::function<ExactCount(int, int)> deg_v1;
  std::function<ExactRational(int, int)> deg_v1_rational;
  std::function<ExactCount(int, int)> lemma1_lhs;
  std::function<ExactCount(int)> recursion_T;
  std::function<ExactCount(int)> binomial_collapse;
  std::function<ExactCount(const Composition&, int)> expand_L3;
  std::function<ExactCount(std::span<const int>, const Composition&)> supervertex_trees;
  std::function<ExactCount(int, int)> double_count_assembly;

  static Formulas reference();
};

struct VerifyLimits {
  int theorem1_n_max = 7;
  int deg_v1_n_max = 8;
  int lemma1_n_max = 8;
  int recursion_n_max = 30;
  int collapse_n_max = 30;
  int double_count_m_max = 6;
  int l3_k_max = 5;
  int l3_m_max = 10;
  int prufer_n_max = 7;

  /// Every limit set to n (the L3 part count stays at most 5).
  static VerifyLimits uniform(int n);
};

class Verifier {
 public:
  explicit Verifier(Formulas formulas = Formulas::reference(), Caps caps = {}, bool parallel = true);

  /// Formula vs two oracles (degree-filtered sweep and multiset enumeration)
  /// for every degree sequence with n <= n_max.
  IdentityReport verify_theorem1(int n_max) const;
  /// sum_k deg_v1(n, k) = n^(n-2), and every deg_v1(n, k) against a sweep.
  IdentityReport verify_deg_v1_totality(int n_max) const;
  /// lemma1_lhs = rational form = integer form = brute force (brute force only
  /// while n fits the Pruefer cap).
  IdentityReport verify_lemma1(int n_max) const;
  /// recursion_T(n) = binomial_collapse(n) = n^(n-2).
  IdentityReport verify_recursion_and_collapse(int n_max) const;
  /// Term j of the binomial sum equals deg_v1(n, j+1), and the sum is n^(n-2).
  IdentityReport verify_binomial_collapse(int n_max) const;
  /// Pair count = T_m C(m-1, k-1) = assembly / k!, plus per-composition
  /// agreement of each assembly term with reconstructions from the pairs.
  IdentityReport verify_double_count(int m_max) const;
  /// expand_L3 = m^(k-2) prod a_i over every positive composition.
  IdentityReport verify_l3_expansion(int k_max, int m_max) const;
  /// sum_d supervertex(d, a) = expand_L3(a, m), and each supervertex(d, a)
  /// against brute-force joining of contracted components while m <= pairs cap.
  IdentityReport verify_supervertex_marginal(int k_max, int m_max) const;
  /// Both codec compositions are identities; decoding is a bijection.
  IdentityReport verify_prufer_roundtrip(int n_max) const;

  /// Runs every check in IdentityId order. CapExceeded and other library
  /// errors are recorded per report and never abort the rest.
  std::vector<IdentityReport> verify_all(const VerifyLimits& limits = {}) const;
  /// One check with the same error capture as verify_all.
  IdentityReport run(IdentityId id, const VerifyLimits& limits = {}) const;

 private:
  Formulas formulas_;
  Caps caps_;
  bool parallel_;
};

/// Brute-force count of ways to join components of the given sizes by k-1
/// edges into a tree where component i meets exactly d_i of those edges.
std::uint64_t count_supervertex_joins_brute(std::span<const int> degrees, std::span<const int> sizes);

/// Schema: {identity_id, status, formula, grid, checked, failures[{params,
/// expected, got}], error, elapsed_ms}.
nlohmann::json to_json(const IdentityReport& report, bool include_timing = true);
nlohmann::json to_json(const std::vector<IdentityReport>& reports, bool include_timing = true);

bool all_pass(const std::vector<IdentityReport>& reports);

}  // namespace cayley::verifier
