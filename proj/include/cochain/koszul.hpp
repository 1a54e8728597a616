#pragma once

#include "cochain/exactlin.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace cochain {

/// Homological bidegree (topdeg, weight); differentials lower topdeg by one.
struct Generator {
  std::string name;
  int topdeg = 0;
  int weight = 1;
};

using Word = std::vector<int>;

/// Z-linear combination of words in generator indices, sorted by word.
struct NcPoly {
  std::map<Word, Integer> terms;

  NcPoly() = default;
  static NcPoly word(Word w, Integer c = 1);
  static NcPoly one() { return word({}); }

  bool is_zero() const { return terms.empty(); }
  void add(const Word& w, const Integer& c);
  NcPoly& operator+=(const NcPoly& o);
  NcPoly& operator-=(const NcPoly& o);
  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
  friend NcPoly operator*(const Integer& c, const NcPoly& a);
  /// Concatenation product.
  friend NcPoly operator*(const NcPoly& a, const NcPoly& b);
  friend bool operator==(const NcPoly& a, const NcPoly& b) { return a.terms == b.terms; }
};

class FreeDga {
 public:
  FreeDga() = default;
  /// Checks weights >= 1, homogeneity of each d(g) in bidegree
  /// (topdeg(g) - 1, weight(g)), and d^2 = 0 on generators.
  FreeDga(std::vector<Generator> gens, std::vector<NcPoly> diff);

  const std::vector<Generator>& generators() const { return gens_; }
  const NcPoly& d_generator(int i) const { return diff_[std::size_t(i)]; }

  int topdeg(const Word& w) const;
  int weight(const Word& w) const;
  /// Bidegree of a homogeneous element; GradingError otherwise. Zero has none.
  std::pair<int, int> bidegree(const NcPoly& x) const;

  /// Leibniz extension d(xy) = dx y + (-1)^{|x|} x dy.
  NcPoly differential(const NcPoly& x) const;

  /// All words of weight w, grouped by topdeg, lexicographic within a group.
  std::map<int, std::vector<Word>> words(int w) const;
  /// Matrix of d from the (t, w) strand to the (t-1, w) strand.
  IntMatrix differential_matrix(int t, int w) const;

  std::string to_string(const NcPoly& x) const;

  /// Generator bidegrees and differentials agree; names are ignored.
  friend bool operator==(const FreeDga& a, const FreeDga& b);

 private:
  std::vector<Generator> gens_;
  std::vector<NcPoly> diff_;
};

/// Z<e_1..e_n>, e_k in bidegree (k-1, k), d e_k = sum_{i+j=k} (-1)^{i-1} e_i e_j.
FreeDga lambda_n(int n);

struct StrandHomology {
  FgAbGroup group;
  std::vector<Word> basis;          // word basis of the (t, w) strand
  Quotient presentation;            // inside Z^{basis}
  std::vector<NcPoly> representatives;

  /// Class of a cycle written in this strand.
  IntVector class_of(const NcPoly& cycle) const;
};

StrandHomology bigraded_homology(const FreeDga& A, int t, int w);

/// Nonzero homology groups keyed (topdeg, weight), weights 0..max_weight.
using BigradedTable = std::map<std::pair<int, int>, FgAbGroup>;
BigradedTable homology_table(const FreeDga& A, int max_weight);

/// r_n = sum_{i+j=n} (-1)^{i-1} e_i e_j in Λ^(n-1), with its homology verdicts.
struct MasseyReport {
  int n = 0;
  NcPoly r;
  bool is_cycle = false;
  FgAbGroup group;           // H_{(n-2,n)}(Λ^(n-1))
  IntVector class_coordinates;
  bool generates = false;    // group is Z and the class is ±1
  bool equals_d_en = false;  // d e_n = r_n in Λ^(n)
  bool vanishes_after = false;  // class of r_n in H(Λ^(n)) is zero
  bool ok() const { return is_cycle && generates && equals_d_en && vanishes_after; }
};

NcPoly massey_power_element(int n);
MasseyReport massey_power(int n);

}  // namespace cochain
