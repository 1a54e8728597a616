#pragma once

#include "cochain/exactlin.hpp"

#include <map>
#include <vector>

namespace cochain {

/// Bounded cochain complex of free Z-modules, d of degree +1. Degrees
/// outside [lo, hi] have rank 0.
class Complex {
 public:
  Complex() = default;
  /// `diffs[k]` is d(lo + k) : rank(lo+k) -> rank(lo+k+1); there are
  /// ranks.size() - 1 of them. Shapes are checked, d^2 is not (see validate).
  Complex(int lo, std::vector<Index> ranks, std::vector<IntMatrix> diffs);

  static Complex concentrated(int degree, Index rank);

  bool empty() const { return ranks_.empty(); }
  int lo() const { return lo_; }
  int hi() const { return lo_ + int(ranks_.size()) - 1; }
  Index rank(int n) const;
  /// Differential out of degree n; a zero matrix of the right shape when
  /// either end lies outside the support.
  IntMatrix d(int n) const;

  /// Throws NotAComplexError naming the first degree with d(n+1)d(n) != 0.
  void validate() const;
  bool is_valid() const;

  /// Same complex with zero-rank ends trimmed.
  Complex normalized() const;

  friend bool operator==(const Complex& a, const Complex& b);

 private:
  int lo_ = 0;
  std::vector<Index> ranks_;
  std::vector<IntMatrix> diffs_;
};

struct ComplexMap {
  Complex source, target;
  std::map<int, IntMatrix> components;

  ComplexMap() = default;
  ComplexMap(Complex s, Complex t, std::map<int, IntMatrix> f = {});

  static ComplexMap identity(const Complex& C);
  static ComplexMap zero(const Complex& s, const Complex& t);

  /// Component in degree n, zero when not stored.
  IntMatrix f(int n) const;
  /// Shapes and f d = d f; throws NotAComplexError with the degree.
  void validate() const;
  bool is_valid() const;
};

ComplexMap compose(const ComplexMap& g, const ComplexMap& f);

using GradedGroup = std::map<int, FgAbGroup>;

/// Entry of a graded group, trivial when absent.
FgAbGroup at(const GradedGroup& G, int n);
/// Drop trivial entries so graded groups compare structurally.
GradedGroup trimmed(const GradedGroup& G);

Complex shift(const Complex& C, int k);
ComplexMap shift(const ComplexMap& f, int k);
Complex direct_sum(const Complex& A, const Complex& B);

/// cone^n = source^{n+1} + target^n, d(c, x) = (-dc, f(c) + dx).
Complex cone(const ComplexMap& f);
Complex fiber(const ComplexMap& f);

GradedGroup homology(const Complex& C);
Quotient homology_presentation(const Complex& C, int n);
/// Induced maps on the presentations of homology_presentation.
std::map<int, GroupHom> induced_map(const ComplexMap& f);

/// (C⊗D)^n = sum_{s+t=n} C^s⊗D^t, blocks by s ascending, Kronecker order.
Complex tensor(const Complex& C, const Complex& D);
/// Offset of the block C^s⊗D^{n-s} inside (C⊗D)^n.
Index tensor_block_offset(const Complex& C, const Complex& D, int n, int s);

enum class Truncation { AtMost, AtLeast };
Complex truncate_brutal(const Complex& C, Truncation mode, int n);

/// Commuting a-cube of complexes, vertices by bitmask.
struct Cube {
  int dimension = 0;
  std::vector<Complex> vertices;               // size 2^a
  std::map<std::pair<unsigned, int>, ComplexMap> edges;  // (v, i): v -> v | (1 << i), bit i of v clear

  /// Edge map, zero when not stored.
  ComplexMap edge(unsigned v, int i) const;
  /// Edge maps are chain maps and every square face commutes.
  void validate() const;
};

Complex total_cofiber(const Cube& K);

/// maps[k] : C(a-k) -> C(a-k-1), consecutive composites zero.
Cube spine_cube(const std::vector<ComplexMap>& maps);
Complex iterated_cofiber(const std::vector<ComplexMap>& maps);

}  // namespace cochain
