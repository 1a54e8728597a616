#pragma once

#include "cochain/complex.hpp"

#include <map>
#include <vector>

namespace cochain {

/// Complex with a decreasing filtration by subcomplexes
/// F^{p_min} = everything ⊇ ... ⊇ F^{p_max} ⊇ F^{p_max+1} = 0.
class FilteredComplex {
 public:
  FilteredComplex() = default;
  /// levels[p - p_min][n - ambient.lo()]; checked by validate().
  FilteredComplex(Complex ambient, int p_min, std::vector<std::vector<Subgroup>> levels);

  /// One jump at `p`: F^p = C, F^{p+1} = 0.
  static FilteredComplex constant(const Complex& C, int p = 0);

  const Complex& ambient() const { return ambient_; }
  int p_min() const { return p_min_; }
  int p_max() const { return p_min_ + int(levels_.size()) - 1; }
  /// F^p in degree n, with the boundary conventions outside [p_min, p_max].
  Subgroup level(int p, int n) const;

  /// Exhaustive, decreasing and d-stable; throws ValidationError.
  void validate() const;

  friend bool operator==(const FilteredComplex& a, const FilteredComplex& b);

 private:
  Complex ambient_;
  int p_min_ = 0;
  std::vector<std::vector<Subgroup>> levels_;
};

/// F^p/F^q presented on a free basis, together with the maps needed to move
/// between its chains and ambient elements.
struct Subquotient {
  Complex complex;
  int p = 0, q = 0;
  /// True when presented as the cone of F^q -> F^p (some F^p/F^q has torsion).
  bool cone_model = false;
  /// Per degree: ambient rank x complex rank; sends a chain to an ambient
  /// element of F^p (for cycles, a relative cycle representing it).
  std::map<int, IntMatrix> lift;
  /// Per degree: complex rank x rank F^p(n); applied to F^p-coordinates.
  std::map<int, IntMatrix> project;
  std::map<int, Subgroup> numerator;

  IntMatrix lift_at(int n) const;
  /// Chain coordinates of ambient elements of F^p(n).
  IntMatrix project_at(int n, const IntMatrix& ambient_columns) const;
};

Subquotient subquotient(const FilteredComplex& F, int p, int q);
Complex intermediate_subquotient(const FilteredComplex& F, int p, int q);
Complex graded_piece(const FilteredComplex& F, int p);
/// F^p as a complex on its HNF bases.
Complex level_complex(const FilteredComplex& F, int p);
/// Every graded piece is degreewise free.
bool is_split(const FilteredComplex& F);

/// Strict double complex: columns with horizontal chain maps h^i : col(i) -> col(i+1).
struct DoubleComplex {
  std::map<int, Complex> columns;
  std::map<int, ComplexMap> horizontal;

  int i_min() const;
  int i_max() const;
  Complex column(int i) const;
  ComplexMap h(int i) const;
  /// Each h^i a chain map, h^{i+1} h^i = 0.
  void validate() const;

  /// Row of groups: degree n of `row` becomes column n in internal degree 0.
  static DoubleComplex degenerate(const Complex& row);
};

/// Tot^n = sum_i col(i)^{n-i}, i ascending, d = (-1)^i d_v + h.
Complex total_complex(const DoubleComplex& D);
/// Offset of column i inside Tot^n.
Index total_block_offset(const DoubleComplex& D, int n, int i);
/// Tot with the column filtration F^p = columns >= p.
FilteredComplex piling(const DoubleComplex& D);
GradedGroup total_homology(const DoubleComplex& D);

/// Filtered object given by a tower of chain maps G^{p+1} -> G^p.
struct GenFilteredComplex {
  int p_min = 0;
  std::vector<Complex> levels;    // G^{p_min}, ..., G^{p_max}
  std::vector<ComplexMap> maps;   // maps[k] : levels[k+1] -> levels[k]
  /// Above p_max the tower is constant at G^{p_max} (true) or zero (false).
  bool constant_top = false;

  int p_max() const { return p_min + int(levels.size()) - 1; }
  Complex level(int p) const;
  /// G^{p+1} -> G^p with the boundary conventions.
  ComplexMap map_down(int p) const;
  /// Composite G^q -> G^p for q >= p.
  ComplexMap composite(int q, int p) const;
  void validate() const;
};

Complex graded_piece(const GenFilteredComplex& G, int p);
/// Replace each level by cone(G^{top} -> G^p), where G^{top} is the limit of
/// the tower (zero unless constant_top).
GenFilteredComplex completion(const GenFilteredComplex& G);

/// Unit for Day convolution: Z in degree 0, filtration jump at 0.
FilteredComplex day_unit();
/// Level p = sum_{s+t=p} F^s ⊗ G^t inside the tensor of the ambients.
/// Requires both inputs split (ModelError otherwise).
FilteredComplex day_convolution(const FilteredComplex& F, const FilteredComplex& G);

/// The complex i -> H^{i-n}(gr^i F) with connecting maps.
struct BeilinsonComplex {
  int n = 0;
  std::map<int, FgAbGroup> entries;
  std::map<int, GroupHom> differentials;  // i -> i+1
  /// Ambient representatives (in degree i - n, inside F^i) of each generator.
  std::map<int, IntMatrix> representatives;
};

BeilinsonComplex beilinson_pi(const FilteredComplex& F, int n);

}  // namespace cochain
