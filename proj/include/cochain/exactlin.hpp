#pragma once

#include "cochain/integer.hpp"
#include "cochain/smith.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cochain {

using IntSmithForm = SmithForm<Integer>;

inline IntSmithForm smith_normal_form(const IntMatrix& M, bool track = true) {
  return smith_normal_form<Integer>(M, track);
}

Index rank(const IntMatrix& M);

/// Columns generating the integer kernel, in column HNF.
IntMatrix kernel_basis(const IntMatrix& M);

/// Subgroup of Z^n. The basis is always kept in column HNF, so two
/// subgroups are equal exactly when their members compare equal.
class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(Index ambient_rank, const IntMatrix& generators);

  static Subgroup zero(Index n);
  static Subgroup full(Index n);

  Index ambient_rank() const { return n_; }
  const IntMatrix& basis() const { return basis_; }
  Index rank() const { return basis_.cols(); }
  bool is_zero() const { return basis_.cols() == 0; }
  bool is_full() const;

  /// Coefficients of v in the HNF basis, or nothing if v is not a member.
  std::optional<IntVector> coordinates(const IntVector& v) const;
  /// Coordinates of every column of M; throws ContainmentError otherwise.
  IntMatrix coordinates_of(const IntMatrix& M) const;
  bool contains(const IntVector& v) const { return coordinates(v).has_value(); }
  bool contains(const Subgroup& other) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.n_ == b.n_ && same_matrix(a.basis_, b.basis_);
  }

 private:
  Index n_ = 0;
  IntMatrix basis_ = int_zeros(0, 0);
  std::vector<Index> pivots_;
};

Subgroup sum(const Subgroup& a, const Subgroup& b);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
/// {x : M x in S}.
Subgroup preimage(const IntMatrix& M, const Subgroup& S);
Subgroup image(const IntMatrix& M);
Subgroup image(const IntMatrix& M, const Subgroup& S);
Subgroup kernel(const IntMatrix& M);
/// Smallest direct summand of the ambient lattice containing S.
Subgroup saturation(const Subgroup& S);

/// Z^free_rank plus cyclic factors Z/d_1 + ... with d_1 | d_2 | ..., d_i >= 2.
struct FgAbGroup {
  Index free_rank = 0;
  std::vector<Integer> torsion;

  static FgAbGroup free(Index r) { return {r, {}}; }
  /// Canonical form of Z^free + sum Z/d for arbitrary d >= 0.
  static FgAbGroup from_cyclic(Index free, const std::vector<Integer>& orders);

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  bool is_free() const { return torsion.empty(); }
  /// Number of presentation generators: torsion first, then free.
  Index generators() const { return Index(torsion.size()) + free_rank; }
  /// Relation lattice of the presentation, diag(d_i) on the torsion slots.
  Subgroup relations() const;
  /// Reduce torsion slots of a coordinate vector into [0, d).
  IntVector normalize(const IntVector& v) const;
  IntMatrix normalize(const IntMatrix& M) const;

  std::string to_string() const;

  friend bool operator==(const FgAbGroup& a, const FgAbGroup& b) {
    return a.free_rank == b.free_rank && a.torsion == b.torsion;
  }
};

FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b);

/// A/B with coordinates. `reduce` maps A-coordinates (relative to the HNF
/// basis of A) to normal-form quotient coordinates; `lift` maps quotient
/// generators back to A-coordinates.
struct Quotient {
  Subgroup A, B;
  FgAbGroup group;
  IntMatrix reduce_matrix;  // generators() x rank(A)
  IntMatrix lift_matrix;    // rank(A) x generators()

  /// Quotient coordinates of an ambient element of A.
  IntVector reduce(const IntVector& ambient) const;
  IntMatrix reduce(const IntMatrix& ambient_columns) const;
  /// Ambient representatives of the quotient generators, one per column.
  IntMatrix representatives() const;
};

Quotient quotient(const Subgroup& A, const Subgroup& B);

/// Homomorphism between presented groups; `matrix` acts on presentation
/// coordinates and is determined modulo target relations.
struct GroupHom {
  FgAbGroup source, target;
  IntMatrix matrix;

  bool is_well_defined() const;
  FgAbGroup kernel() const;
  FgAbGroup image() const;
  FgAbGroup cokernel() const;
  bool is_zero() const;
  bool is_isomorphism() const;
  /// Equal as homomorphisms (entrywise modulo target torsion).
  bool equals(const GroupHom& other) const;
};

GroupHom compose(const GroupHom& g, const GroupHom& f);

/// ker(out)/im(in) for composable homomorphisms in -> out.
FgAbGroup homology_of(const GroupHom& in, const GroupHom& out);

/// ker(d_out)/im(d_in) for integer matrices.
FgAbGroup homology_at(const IntMatrix& d_in, const IntMatrix& d_out);

/// Same, with cycle representatives and a reduction map.
Quotient homology_presentation(const IntMatrix& d_in, const IntMatrix& d_out);

}  // namespace cochain
