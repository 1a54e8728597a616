#include "cochain/exactlin.hpp"

#include "cochain/errors.hpp"

#include <algorithm>
#include <sstream>

namespace cochain {

Index rank(const IntMatrix& M) { return column_hnf<Integer>(M).cols(); }

IntMatrix kernel_basis(const IntMatrix& M) {
  const Index n = M.cols();
  if (M.rows() == 0) return int_identity(n);
  auto s = smith_normal_form(M, true);
  return column_hnf<Integer>(s.V.rightCols(n - s.rank));
}

// ---------------------------------------------------------------- Subgroup

Subgroup::Subgroup(Index ambient_rank, const IntMatrix& generators) : n_(ambient_rank) {
  if (generators.cols() > 0 && generators.rows() != ambient_rank)
    throw DimensionError("subgroup generators have " + std::to_string(generators.rows()) +
                         " rows, ambient rank is " + std::to_string(ambient_rank));
  basis_ = generators.cols() ? column_hnf<Integer>(generators) : int_zeros(n_, 0);
  pivots_ = hnf_pivot_rows<Integer>(basis_);
}

Subgroup Subgroup::zero(Index n) { return Subgroup(n, int_zeros(n, 0)); }
Subgroup Subgroup::full(Index n) { return Subgroup(n, int_identity(n)); }

bool Subgroup::is_full() const {
  if (basis_.cols() != n_) return false;
  for (Index j = 0; j < n_; ++j)
    if (basis_(j, j) != 1) return false;
  return true;
}

std::optional<IntVector> Subgroup::coordinates(const IntVector& v) const {
  if (v.size() != n_) throw DimensionError("vector length does not match ambient rank");
  IntVector w = v;
  IntVector c = int_zero_vector(basis_.cols());
  Index row = 0;
  for (Index j = 0; j < basis_.cols(); ++j) {
    const Index r = pivots_[j];
    for (; row < r; ++row)
      if (w(row) != 0) return std::nullopt;
    if (w(r) != 0) {
      if (w(r) % basis_(r, j) != 0) return std::nullopt;
      c(j) = w(r) / basis_(r, j);
      for (Index i = r; i < n_; ++i)
        if (basis_(i, j) != 0) w(i) -= c(j) * basis_(i, j);
    }
    row = r + 1;
  }
  for (; row < n_; ++row)
    if (w(row) != 0) return std::nullopt;
  return c;
}

IntMatrix Subgroup::coordinates_of(const IntMatrix& M) const {
  IntMatrix out = int_zeros(basis_.cols(), M.cols());
  for (Index j = 0; j < M.cols(); ++j) {
    auto c = coordinates(M.col(j));
    if (!c) throw ContainmentError("element is not in the subgroup");
    out.col(j) = *c;
  }
  return out;
}

bool Subgroup::contains(const Subgroup& other) const {
  if (other.n_ != n_) throw DimensionError("ambient ranks differ");
  for (Index j = 0; j < other.basis_.cols(); ++j)
    if (!contains(IntVector(other.basis_.col(j)))) return false;
  return true;
}

static void check_same_ambient(const Subgroup& a, const Subgroup& b) {
  if (a.ambient_rank() != b.ambient_rank())
    throw DimensionError("ambient ranks differ: " + std::to_string(a.ambient_rank()) +
                         " vs " + std::to_string(b.ambient_rank()));
}

Subgroup sum(const Subgroup& a, const Subgroup& b) {
  check_same_ambient(a, b);
  return Subgroup(a.ambient_rank(), hcat(a.basis(), b.basis()));
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  check_same_ambient(a, b);
  const Index n = a.ambient_rank();
  if (a.is_zero() || b.is_zero()) return Subgroup::zero(n);
  IntMatrix K = kernel_basis(hcat(a.basis(), IntMatrix(-b.basis())));
  return Subgroup(n, product(a.basis(), K.topRows(a.rank())));
}

Subgroup preimage(const IntMatrix& M, const Subgroup& S) {
  if (M.rows() != S.ambient_rank())
    throw DimensionError("preimage: matrix has " + std::to_string(M.rows()) +
                         " rows, subgroup lives in rank " + std::to_string(S.ambient_rank()));
  const Index n = M.cols();
  if (M.rows() == 0) return Subgroup::full(n);
  IntMatrix K = kernel_basis(hcat(M, IntMatrix(-S.basis())));
  return Subgroup(n, K.topRows(n));
}

Subgroup image(const IntMatrix& M) { return Subgroup(M.rows(), M); }

Subgroup image(const IntMatrix& M, const Subgroup& S) {
  if (M.cols() != S.ambient_rank()) throw DimensionError("image: shape mismatch");
  return Subgroup(M.rows(), product(M, S.basis()));
}

Subgroup kernel(const IntMatrix& M) { return Subgroup(M.cols(), kernel_basis(M)); }

Subgroup saturation(const Subgroup& S) {
  const Index n = S.ambient_rank();
  IntMatrix perp = kernel_basis(S.basis().transpose());
  return Subgroup(n, kernel_basis(perp.transpose()));
}

// ---------------------------------------------------------------- FgAbGroup

FgAbGroup FgAbGroup::from_cyclic(Index free, const std::vector<Integer>& orders) {
  IntMatrix D = int_zeros(Index(orders.size()), Index(orders.size()));
  for (std::size_t i = 0; i < orders.size(); ++i) D(Index(i), Index(i)) = orders[i];
  FgAbGroup g;
  g.free_rank = free;
  auto s = smith_normal_form(D, false);
  g.free_rank += Index(orders.size()) - s.rank;
  for (const auto& d : s.diagonal())
    if (d > 1) g.torsion.push_back(d);
  return g;
}

Subgroup FgAbGroup::relations() const {
  const Index m = generators();
  IntMatrix R = int_zeros(m, Index(torsion.size()));
  for (std::size_t i = 0; i < torsion.size(); ++i) R(Index(i), Index(i)) = torsion[i];
  return Subgroup(m, R);
}

IntVector FgAbGroup::normalize(const IntVector& v) const {
  IntVector out = v;
  for (std::size_t i = 0; i < torsion.size(); ++i) out(Index(i)) = mod_floor(v(Index(i)), torsion[i]);
  return out;
}

IntMatrix FgAbGroup::normalize(const IntMatrix& M) const {
  IntMatrix out = M;
  for (Index j = 0; j < M.cols(); ++j) out.col(j) = normalize(IntVector(M.col(j)));
  return out;
}

std::string FgAbGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank) {
    os << "Z";
    if (free_rank > 1) os << "^" << free_rank;
    first = false;
  }
  for (const auto& d : torsion) {
    os << (first ? "" : " + ") << "Z/" << d.str();
    first = false;
  }
  return os.str();
}

FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b) {
  std::vector<Integer> orders = a.torsion;
  orders.insert(orders.end(), b.torsion.begin(), b.torsion.end());
  return FgAbGroup::from_cyclic(a.free_rank + b.free_rank, orders);
}

// ---------------------------------------------------------------- Quotient

Quotient quotient(const Subgroup& A, const Subgroup& B) {
  check_same_ambient(A, B);
  if (!A.contains(B)) throw ContainmentError("quotient: B is not contained in A");
  Quotient q{A, B, {}, {}, {}};
  const Index k = A.rank();
  IntMatrix Bc = A.coordinates_of(B.basis());
  IntMatrix H = column_hnf<Integer>(Bc);
  auto piv = hnf_pivot_rows<Integer>(H);
  bool unit = true;
  for (Index j = 0; j < H.cols(); ++j)
    if (H(piv[j], j) != 1) unit = false;

  if (unit) {
    // Free quotient: coordinates are the non-pivot entries after clearing pivots.
    std::vector<bool> is_pivot(k, false);
    for (auto r : piv) is_pivot[r] = true;
    std::vector<Index> free_rows;
    for (Index i = 0; i < k; ++i)
      if (!is_pivot[i]) free_rows.push_back(i);
    const Index m = Index(free_rows.size());
    q.group = FgAbGroup::free(m);
    q.reduce_matrix = int_zeros(m, k);
    q.lift_matrix = int_zeros(k, m);
    for (Index c = 0; c < k; ++c) {
      IntVector w = int_zero_vector(k);
      w(c) = 1;
      for (Index j = 0; j < H.cols(); ++j) {
        const Integer a = w(piv[j]);
        if (a != 0)
          for (Index i = piv[j]; i < k; ++i)
            if (H(i, j) != 0) w(i) -= a * H(i, j);
      }
      for (Index t = 0; t < m; ++t) q.reduce_matrix(t, c) = w(free_rows[t]);
    }
    for (Index t = 0; t < m; ++t) q.lift_matrix(free_rows[t], t) = 1;
    return q;
  }

  auto s = smith_normal_form(Bc, true);
  std::vector<Index> keep;
  std::vector<Integer> tors;
  for (Index i = 0; i < s.rank; ++i)
    if (s.D(i, i) != 1) {
      keep.push_back(i);
      tors.push_back(s.D(i, i));
    }
  for (Index i = s.rank; i < k; ++i) keep.push_back(i);
  const Index m = Index(keep.size());
  q.group.torsion = tors;
  q.group.free_rank = k - s.rank;
  q.reduce_matrix = int_zeros(m, k);
  q.lift_matrix = int_zeros(k, m);
  for (Index t = 0; t < m; ++t) {
    q.reduce_matrix.row(t) = s.U.row(keep[t]);
    q.lift_matrix.col(t) = s.U_inv.col(keep[t]);
  }
  return q;
}

IntVector Quotient::reduce(const IntVector& ambient) const {
  auto c = A.coordinates(ambient);
  if (!c) throw ContainmentError("reduce: element is not in the numerator subgroup");
  return group.normalize(IntVector(product(reduce_matrix, IntMatrix(*c))));
}

IntMatrix Quotient::reduce(const IntMatrix& ambient_columns) const {
  IntMatrix out = int_zeros(group.generators(), ambient_columns.cols());
  for (Index j = 0; j < ambient_columns.cols(); ++j)
    out.col(j) = reduce(IntVector(ambient_columns.col(j)));
  return out;
}

IntMatrix Quotient::representatives() const { return product(A.basis(), lift_matrix); }

// ---------------------------------------------------------------- GroupHom

static void check_shape(const GroupHom& h) {
  if (h.matrix.rows() != h.target.generators() || h.matrix.cols() != h.source.generators())
    throw DimensionError("homomorphism matrix shape does not match its groups");
}

bool GroupHom::is_well_defined() const {
  check_shape(*this);
  return target.relations().contains(cochain::image(matrix, source.relations()));
}

FgAbGroup GroupHom::kernel() const {
  check_shape(*this);
  Subgroup K = preimage(matrix, target.relations());
  return quotient(K, source.relations()).group;
}

FgAbGroup GroupHom::image() const {
  check_shape(*this);
  Subgroup Rt = target.relations();
  return quotient(sum(cochain::image(matrix), Rt), Rt).group;
}

FgAbGroup GroupHom::cokernel() const {
  check_shape(*this);
  const Index m = target.generators();
  return quotient(Subgroup::full(m), sum(cochain::image(matrix), target.relations())).group;
}

bool GroupHom::is_zero() const {
  check_shape(*this);
  return target.relations().contains(cochain::image(matrix));
}

bool GroupHom::is_isomorphism() const { return kernel().is_trivial() && cokernel().is_trivial(); }

bool GroupHom::equals(const GroupHom& other) const {
  if (!(source == other.source) || !(target == other.target)) return false;
  return same_matrix(target.normalize(matrix), target.normalize(other.matrix));
}

GroupHom compose(const GroupHom& g, const GroupHom& f) {
  if (!(f.target == g.source)) throw DimensionError("compose: groups do not match");
  return {f.source, g.target, g.target.normalize(product(g.matrix, f.matrix))};
}

FgAbGroup homology_of(const GroupHom& in, const GroupHom& out) {
  check_shape(in);
  check_shape(out);
  if (!(in.target == out.source)) throw DimensionError("homology_of: middle groups differ");
  if (!compose(out, in).is_zero()) throw NotAComplexError("homology_of: composite is nonzero", 0);
  Subgroup Z = preimage(out.matrix, out.target.relations());
  Subgroup B = sum(image(in.matrix), in.target.relations());
  return quotient(Z, B).group;
}

static void check_composable(const IntMatrix& d_in, const IntMatrix& d_out) {
  if (d_in.rows() != d_out.cols())
    throw DimensionError("homology_at: d_in has " + std::to_string(d_in.rows()) +
                         " rows but d_out has " + std::to_string(d_out.cols()) + " columns");
  if (!is_zero(product(d_out, d_in))) throw NotAComplexError("d_out * d_in is nonzero", 0);
}

FgAbGroup homology_at(const IntMatrix& d_in, const IntMatrix& d_out) {
  check_composable(d_in, d_out);
  const Index n = d_in.rows();
  auto inv = invariant_factors<Integer>(d_in);
  FgAbGroup g;
  g.free_rank = n - rank(d_out) - Index(inv.size());
  for (const auto& d : inv)
    if (d > 1) g.torsion.push_back(d);
  return g;
}

Quotient homology_presentation(const IntMatrix& d_in, const IntMatrix& d_out) {
  check_composable(d_in, d_out);
  return quotient(kernel(d_out), image(d_in));
}

}  // namespace cochain
