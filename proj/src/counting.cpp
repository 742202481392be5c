#include "cayley/counting.hpp"

#include <string>

#include "cayley/enumeration.hpp"

namespace cayley::counting {

using enumeration::CompositionStream;

namespace {

void require_root_degree(int n, int k) {
  if (n < 2 || k < 1 || k > n - 1) {
    throw Error(ErrorKind::OutOfRange, "need n >= 2 and 1 <= k <= n-1, got n=" + std::to_string(n) +
                                           " k=" + std::to_string(k));
  }
}

}  // namespace

ExactCount count_trees_with_degrees(const DegreeSequence& d) {
  const int n = d.n();
  ExactCount denom = 1;
  for (int di : d.values()) denom *= factorial(di - 1);
  return factorial(n - 2).exact_div(denom);
}

ExactCount count_trees_with_degrees(std::span<const int> degrees) {
  return count_trees_with_degrees(DegreeSequence(std::vector<int>(degrees.begin(), degrees.end())));
}

ExactCount count_total_trees(int n) {
  if (n < 1) throw Error(ErrorKind::OutOfRange, "n must be at least 1, got " + std::to_string(n));
  if (n == 1) return 1;
  return ipow(ExactCount(static_cast<std::uint64_t>(n)), n - 2);
}

ExactCount count_trees_deg_v1(int n, int k) {
  require_root_degree(n, k);
  return ipow(ExactCount(static_cast<std::uint64_t>(n - 1)), n - 1 - k) * binomial(n - 2, k - 1);
}

ExactRational count_trees_deg_v1_rational(int n, int k) {
  require_root_degree(n, k);
  const ExactRational t_prev = count_total_trees(n - 1);
  const ExactRational scale = rpow(ExactCount(static_cast<std::uint64_t>(n - 1)), k - 2);
  return t_prev / scale * ExactRational(binomial(n - 2, k - 1));
}

ExactCount count_fixed_composition_trees(int n, const Composition& a) {
  if (a.allows_zero() || a.target_sum() != n - 1) {
    throw Error(ErrorKind::CompositionSumMismatch,
                "component sizes must be a positive composition of " + std::to_string(n - 1));
  }
  ExactCount rooted = 1;
  for (int ai : a.parts()) rooted *= ExactCount(static_cast<std::uint64_t>(ai)) * count_total_trees(ai);
  return rooted * multinomial(a.parts());
}

ExactCount lemma1_lhs(int n, int k) {
  require_root_degree(n, k);
  ExactCount ordered = 0;
  CompositionStream comps(n - 1, k, false);
  while (auto a = comps.next()) ordered += count_fixed_composition_trees(n, *a);
  return ordered.exact_div(factorial(k));
}

std::vector<ExactCount> recursion_table(int n_max) {
  if (n_max < 1) throw Error(ErrorKind::OutOfRange, "n must be at least 1, got " + std::to_string(n_max));
  std::vector<ExactCount> t(n_max + 1);  // t[i] = T_i; t[0] unused
  t[1] = 1;
  for (int n = 2; n <= n_max; ++n) {
    const int m = n - 1;
    // weight[j][s]: over ordered compositions of s into j parts, the sum of
    // multinomial(s; a) * prod a_i T_{a_i}. Peeling the last part a gives
    // weight[j][s] = sum_a C(s, a) a T_a weight[j-1][s-a].
    std::vector<std::vector<ExactCount>> weight(m + 1, std::vector<ExactCount>(m + 1));
    weight[0][0] = 1;
    for (int j = 1; j <= m; ++j) {
      for (int s = j; s <= m; ++s) {
        ExactCount acc = 0;
        for (int a = 1; a <= s - (j - 1); ++a) {
          if (weight[j - 1][s - a].is_zero()) continue;
          acc += binomial(s, a) * ExactCount(static_cast<std::uint64_t>(a)) * t[a] * weight[j - 1][s - a];
        }
        weight[j][s] = acc;
      }
    }
    ExactCount total = 0;
    for (int k = 1; k <= m; ++k) total += weight[k][m].exact_div(factorial(k));
    t[n] = total;
  }
  return {t.begin() + 1, t.end()};
}

ExactCount recursion_T(int n) { return recursion_table(n).back(); }

ExactCount recursion_T_by_compositions(int n) {
  if (n < 1) throw Error(ErrorKind::OutOfRange, "n must be at least 1, got " + std::to_string(n));
  std::vector<ExactCount> t(n + 1);
  t[1] = 1;
  for (int size = 2; size <= n; ++size) {
    const int m = size - 1;
    ExactCount total = 0;
    for (int k = 1; k <= m; ++k) {
      ExactCount ordered = 0;
      CompositionStream comps(m, k, false);
      while (auto a = comps.next()) {
        ExactCount term = multinomial(a->parts());
        for (int ai : a->parts()) term *= ExactCount(static_cast<std::uint64_t>(ai)) * t[ai];
        ordered += term;
      }
      total += ordered.exact_div(factorial(k));
    }
    t[size] = total;
  }
  return t[n];
}

ExactCount expand_L3(const Composition& a, int m) {
  if (a.allows_zero() || a.target_sum() != m || a.size() < 1) {
    throw Error(ErrorKind::CompositionSumMismatch, "sizes must be a positive composition of " + std::to_string(m));
  }
  const int k = a.size();
  if (k == 1) return 1;
  ExactCount sum = 0;
  CompositionStream exps(k - 2, k, true);
  while (auto c = exps.next()) {
    ExactCount term = multinomial(c->parts());
    for (int i = 0; i < k; ++i) term *= ipow(ExactCount(static_cast<std::uint64_t>(a[i])), (*c)[i] + 1);
    sum += term;
  }
  return sum;
}

ExactRational L3_closed_form(const Composition& a, int m) {
  if (a.allows_zero() || a.target_sum() != m || a.size() < 1) {
    throw Error(ErrorKind::CompositionSumMismatch, "sizes must be a positive composition of " + std::to_string(m));
  }
  ExactCount prod = 1;
  for (int ai : a.parts()) prod *= ExactCount(static_cast<std::uint64_t>(ai));
  return rpow(ExactCount(static_cast<std::uint64_t>(m)), a.size() - 2) * ExactRational(prod);
}

ExactCount count_supervertex_trees(std::span<const int> degrees_on_components, const Composition& sizes) {
  if (sizes.allows_zero()) throw Error(ErrorKind::CompositionSumMismatch, "component sizes must be positive");
  if (static_cast<int>(degrees_on_components.size()) != sizes.size()) {
    throw Error(ErrorKind::CompositionSumMismatch, "need one degree per component");
  }
  const DegreeSequence d(std::vector<int>(degrees_on_components.begin(), degrees_on_components.end()));
  ExactCount result = count_trees_with_degrees(d);
  for (int i = 0; i < sizes.size(); ++i) {
    result *= ipow(ExactCount(static_cast<std::uint64_t>(sizes[i])), d[i]);
  }
  return result;
}

ExactCount binomial_collapse(int n) {
  if (n < 2) throw Error(ErrorKind::OutOfRange, "n must be at least 2, got " + std::to_string(n));
  ExactCount sum = 0;
  const ExactCount base = static_cast<std::uint64_t>(n - 1);
  for (int j = 0; j <= n - 2; ++j) sum += binomial(n - 2, j) * ipow(base, n - 2 - j);
  return sum;
}

AssemblyTerm assembly_term(const Composition& a) {
  if (a.allows_zero()) throw Error(ErrorKind::CompositionSumMismatch, "component sizes must be positive");
  AssemblyTerm term{multinomial(a.parts()), 1, expand_L3(a, a.target_sum())};
  for (int ai : a.parts()) term.inner_trees *= count_total_trees(ai);
  return term;
}

ExactCount double_count_assembly(int m, int k) {
  if (m < 1 || k < 1 || k > m) {
    throw Error(ErrorKind::OutOfRange, "need 1 <= k <= m, got m=" + std::to_string(m) + " k=" + std::to_string(k));
  }
  ExactCount ordered = 0;
  CompositionStream comps(m, k, false);
  while (auto a = comps.next()) ordered += assembly_term(*a).product();
  return ordered.exact_div(factorial(k));
}

}  // namespace cayley::counting
