#pragma once

// Smith and Hermite normal forms over a Euclidean scalar. The kernels only
// need +, -, *, truncating / and %, comparison with 0, and abs.

#include "cochain/integer.hpp"

#include <utility>
#include <vector>

namespace cochain {

template <class Scalar>
struct SmithForm {
  Matrix<Scalar> U;      // left transform, U·M·V = D
  Matrix<Scalar> D;
  Matrix<Scalar> V;      // right transform
  Matrix<Scalar> U_inv;  // inverse of U, kept in step with it
  Index rank = 0;

  std::vector<Scalar> diagonal() const {
    std::vector<Scalar> out;
    for (Index i = 0; i < rank; ++i) out.push_back(D(i, i));
    return out;
  }
};

namespace detail {

template <class Scalar>
struct SmithWork {
  Matrix<Scalar> D, U, V, Ui;
  bool track;

  void swap_rows(Index a, Index b) {
    if (a == b) return;
    D.row(a).swap(D.row(b));
    if (track) {
      U.row(a).swap(U.row(b));
      Ui.col(a).swap(Ui.col(b));
    }
  }
  void swap_cols(Index a, Index b) {
    if (a == b) return;
    D.col(a).swap(D.col(b));
    if (track) V.col(a).swap(V.col(b));
  }
  // row dst += q * row src
  void add_row(Index dst, Index src, const Scalar& q, Index from_col) {
    if (q == 0) return;
    for (Index j = from_col; j < D.cols(); ++j)
      if (D(src, j) != 0) D(dst, j) += q * D(src, j);
    if (track) {
      for (Index j = 0; j < U.cols(); ++j)
        if (U(src, j) != 0) U(dst, j) += q * U(src, j);
      for (Index i = 0; i < Ui.rows(); ++i)
        if (Ui(i, dst) != 0) Ui(i, src) -= q * Ui(i, dst);
    }
  }
  // col dst += q * col src
  void add_col(Index dst, Index src, const Scalar& q, Index from_row) {
    if (q == 0) return;
    for (Index i = from_row; i < D.rows(); ++i)
      if (D(i, src) != 0) D(i, dst) += q * D(i, src);
    if (track)
      for (Index i = 0; i < V.rows(); ++i)
        if (V(i, src) != 0) V(i, dst) += q * V(i, src);
  }
  void negate_row(Index r) {
    D.row(r) = -D.row(r);
    if (track) {
      U.row(r) = -U.row(r);
      Ui.col(r) = -Ui.col(r);
    }
  }
};

}  // namespace detail

/// Smith normal form with minimal-|pivot| selection. With `track` false only
/// D and rank are filled.
template <class Scalar>
SmithForm<Scalar> smith_normal_form(const Matrix<Scalar>& M, bool track = true) {
  const Index m = M.rows(), n = M.cols();
  detail::SmithWork<Scalar> w{M, {}, {}, {}, track};
  if (track) {
    w.U = identity<Scalar>(m);
    w.Ui = identity<Scalar>(m);
    w.V = identity<Scalar>(n);
  }
  Matrix<Scalar>& D = w.D;
  Index t = 0;
  for (; t < std::min(m, n); ++t) {
    for (;;) {
      // minimal nonzero entry of the trailing block
      Index pi = -1, pj = -1;
      Scalar best = 0;
      for (Index j = t; j < n; ++j)
        for (Index i = t; i < m; ++i)
          if (D(i, j) != 0) {
            Scalar a = abs_value(D(i, j));
            if (pi < 0 || a < best) {
              best = a;
              pi = i;
              pj = j;
              if (best == 1) goto found;
            }
          }
    found:
      if (pi < 0) goto done;
      w.swap_rows(t, pi);
      w.swap_cols(t, pj);
      bool clean = true;
      const Scalar p = D(t, t);
      for (Index i = t + 1; i < m; ++i)
        if (D(i, t) != 0) {
          Scalar q = D(i, t) / p;
          w.add_row(i, t, -q, t);
          if (D(i, t) != 0) clean = false;
        }
      for (Index j = t + 1; j < n; ++j)
        if (D(t, j) != 0) {
          Scalar q = D(t, j) / p;
          w.add_col(j, t, -q, t);
          if (D(t, j) != 0) clean = false;
        }
      if (!clean) continue;
      // divisibility: fold an offending row into the pivot row
      Index bad = -1;
      for (Index j = t + 1; j < n && bad < 0; ++j)
        for (Index i = t + 1; i < m; ++i)
          if (D(i, j) % p != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      w.add_row(t, bad, Scalar(1), t);
    }
    if (D(t, t) < 0) w.negate_row(t);
  }
done:
  SmithForm<Scalar> out;
  out.rank = t;
  out.D = std::move(w.D);
  out.U = std::move(w.U);
  out.V = std::move(w.V);
  out.U_inv = std::move(w.Ui);
  return out;
}

/// Invariant factors (the nonzero diagonal of the Smith form).
template <class Scalar>
std::vector<Scalar> invariant_factors(const Matrix<Scalar>& M) {
  return smith_normal_form(M, false).diagonal();
}

/// Column Hermite normal form: lower echelon, positive pivots, entries left
/// of each pivot reduced into [0, pivot), zero columns dropped. Canonical for
/// the column span.
template <class Scalar>
Matrix<Scalar> column_hnf(const Matrix<Scalar>& M) {
  Matrix<Scalar> A = M;
  const Index m = A.rows(), n = A.cols();
  Index c = 0;
  auto add_col = [&](Index dst, Index src, const Scalar& q, Index from_row) {
    if (q == 0) return;
    for (Index i = from_row; i < m; ++i)
      if (A(i, src) != 0) A(i, dst) += q * A(i, src);
  };
  for (Index r = 0; r < m && c < n; ++r) {
    for (;;) {
      Index pj = -1;
      Scalar best = 0;
      for (Index j = c; j < n; ++j)
        if (A(r, j) != 0 && (pj < 0 || abs_value(A(r, j)) < best)) {
          best = abs_value(A(r, j));
          pj = j;
        }
      if (pj < 0) break;
      if (pj != c) A.col(pj).swap(A.col(c));
      bool clean = true;
      for (Index j = c + 1; j < n; ++j)
        if (A(r, j) != 0) {
          add_col(j, c, -(A(r, j) / A(r, c)), r);
          if (A(r, j) != 0) clean = false;
        }
      if (clean) break;
    }
    if (c >= n || A(r, c) == 0) continue;
    if (A(r, c) < 0) A.col(c) = -A.col(c);
    const Scalar p = A(r, c);
    for (Index j = 0; j < c; ++j)
      if (A(r, j) != 0) add_col(j, c, -floor_div(A(r, j), p), r);
    ++c;
  }
  return A.leftCols(c);
}

/// Pivot row of each column of a column-HNF matrix.
template <class Scalar>
std::vector<Index> hnf_pivot_rows(const Matrix<Scalar>& H) {
  std::vector<Index> rows;
  Index r = 0;
  for (Index j = 0; j < H.cols(); ++j) {
    while (H(r, j) == 0) ++r;
    rows.push_back(r);
  }
  return rows;
}

}  // namespace cochain
