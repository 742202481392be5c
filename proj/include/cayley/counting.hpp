#pragma once

#include <span>
#include <vector>

#include "cayley/core.hpp"

/// Exact closed-form and recursive tree counters.
///
/// Conventions: T_1 = 1 (one tree on a single vertex), vertex 1 is the root whose
/// degree splits the count, and every sum over compositions runs over ORDERED
/// compositions with a single 1/k! correction at the end.
namespace cayley::counting {

/// Number of trees on 1..n with degree vector d: (n-2)! / prod (d_i - 1)!.
ExactCount count_trees_with_degrees(const DegreeSequence& d);
/// Overload that validates raw degrees (InvalidDegreeSequence).
ExactCount count_trees_with_degrees(std::span<const int> degrees);

/// n^(n-2), with T_1 = 1. Throws OutOfRange for n < 1.
ExactCount count_total_trees(int n);

/// Trees on n vertices with deg(1) = k: (n-1)^(n-1-k) * C(n-2, k-1).
ExactCount count_trees_deg_v1(int n, int k);

/// Same count in the unsimplified form T_{n-1} / (n-1)^(k-2) * C(n-2, k-1),
/// which is a fraction with (n-1) in the numerator when k = 1.
ExactRational count_trees_deg_v1_rational(int n, int k);

/// Root-degree decomposition evaluated literally:
///   sum over ordered compositions a of n-1 into k parts of
///   (prod a_i T_{a_i}) (n-1)! / prod a_i!, divided by k!.
/// T_{a_i} comes from count_total_trees. Throws NonIntegralResult if the k!
/// division is inexact, which would indicate a bug.
ExactCount lemma1_lhs(int n, int k);

/// (prod a_i T_{a_i}) (n-1)! / prod a_i! for one ordered composition of n-1.
ExactCount count_fixed_composition_trees(int n, const Composition& a);

/// T_n from the root-degree recursion alone, bottom-up. Lower values are the
/// recursion's own outputs; the closed form is never consulted.
ExactCount recursion_T(int n);
/// T_1..T_n_max from the same recursion; element i holds T_{i+1}.
std::vector<ExactCount> recursion_table(int n_max);
/// recursion_T evaluated by enumerating every composition explicitly.
/// Exponential in n; kept for cross-checking the grouped evaluation.
ExactCount recursion_T_by_compositions(int n);

/// Multinomial expansion of m^(k-2) prod a_i:
///   sum over nonnegative c with sum c = k-2 of (k-2)!/prod c_i! prod a_i^(c_i+1).
/// Defined as 1 when k = 1 (then a_1 = m and m^-1 a_1 = 1).
ExactCount expand_L3(const Composition& a, int m);
/// m^(k-2) prod a_i computed directly (fractional only for k = 1, where it is 1).
ExactRational L3_closed_form(const Composition& a, int m);

/// Ways to join k components into one tree where component i carries d_i of
/// the joining edges and each edge end may sit on any of its a_i vertices:
///   (k-2)! / prod (d_i - 1)! * prod a_i^d_i.
ExactCount count_supervertex_trees(std::span<const int> degrees_on_components, const Composition& sizes);

/// Sum_{j=0}^{n-2} C(n-2, j) (n-1)^(n-2-j), evaluated term by term.
ExactCount binomial_collapse(int n);

/// The three factors of one ordered-composition term of the double count.
struct AssemblyTerm {
  ExactCount partitions;    ///< m! / prod a_i!
  ExactCount inner_trees;   ///< prod T_{a_i}
  ExactCount connections;   ///< m^(k-2) prod a_i via expand_L3
  ExactCount product() const { return partitions * inner_trees * connections; }
};

AssemblyTerm assembly_term(const Composition& a);

/// sum over ordered compositions of m into k parts of the assembly term, divided
/// by k!. Counts trees on m vertices with k-1 marked edges.
ExactCount double_count_assembly(int m, int k);

}  // namespace cayley::counting
