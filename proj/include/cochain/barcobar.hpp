#pragma once

#include "cochain/koszul.hpp"

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace cochain {

struct BasisElement {
  std::string name;
  int topdeg = 0;
  int weight = 1;
};

/// Sparse vector over a basis.
using SparseVec = std::map<int, Integer>;

/// Connected weight-graded algebra truncated at max_weight. Only the
/// reduced part (weight >= 1) is stored; the unit is implicit.
struct AlgebraData {
  int max_weight = 0;
  std::vector<BasisElement> basis;
  std::map<std::pair<int, int>, SparseVec> mult;  // products of reduced elements
  std::vector<SparseVec> diff;

  SparseVec product(int a, int b) const;
  /// Associativity, d^2 = 0 and the Leibniz rule on the basis; throws.
  void validate() const;

  static AlgebraData trivial(int max_weight = 0);
  /// Λ(e), e in bidegree (0,1), e^2 = 0.
  static AlgebraData exterior(int max_weight);
  /// Word basis of a free dga up to max_weight.
  static AlgebraData from_free_dga(const FreeDga& A, int max_weight);
};

/// Nonzero homology of the algebra (unit included), keyed (topdeg, weight).
BigradedTable homology_table(const AlgebraData& A);

/// Connected coalgebra: reduced basis with reduced coproduct and differential.
struct CoalgebraData {
  std::vector<BasisElement> basis;
  std::vector<std::map<std::pair<int, int>, Integer>> coproduct;
  std::vector<SparseVec> diff;

  /// Coassociativity, d^2 = 0 and the coderivation rule; throws.
  void validate() const;

  /// Same bidegrees, coproducts and differentials; names ignored.
  friend bool operator==(const CoalgebraData& a, const CoalgebraData& b);
};

/// x_1..x_n with x_k in (k,k), zero differential, Δ̃x_k = sum x_i ⊗ x_j.
CoalgebraData skeleton_coalgebra(int n);

/// Reduced bar construction up to weight `max_weight` (at most A.max_weight).
/// Elements are tensors [a_1|...|a_k] in bidegree (sum (|a_i|+1), sum w_i),
/// ordered by weight, then topdeg, then lexicographically.
CoalgebraData bar(const AlgebraData& A, int max_weight);
CoalgebraData bar(const AlgebraData& A);

/// Free algebra on the desuspended reduced basis,
/// d(s^-1 c) = -s^-1(dc) + sum (-1)^{|s^-1 c'|} s^-1 c' s^-1 c''.
FreeDga cobar(const CoalgebraData& C);

BigradedTable bar_homology_table(const CoalgebraData& C, int max_weight);

struct BarCobarReport {
  int max_weight = 0;
  BigradedTable algebra, cobar_bar;
  std::vector<std::pair<int, int>> mismatches;
  bool ok() const { return mismatches.empty(); }
};

BarCobarReport bar_cobar_homology_check(const AlgebraData& A, int max_weight);

}  // namespace cochain
