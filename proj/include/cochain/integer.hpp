#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <vector>

namespace cochain {

/// Arbitrary-precision integer. Expression templates are disabled so values
/// behave like plain arithmetic types inside Eigen kernels and `auto`.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

using Index = Eigen::Index;

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using IntVector = Vector<Integer>;

template <class Scalar>
Matrix<Scalar> zeros(Index rows, Index cols) {
  return Matrix<Scalar>::Constant(rows, cols, Scalar(0));
}

template <class Scalar>
Matrix<Scalar> identity(Index n) {
  Matrix<Scalar> m = zeros<Scalar>(n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

inline IntMatrix int_zeros(Index rows, Index cols) { return zeros<Integer>(rows, cols); }
inline IntMatrix int_identity(Index n) { return identity<Integer>(n); }
inline IntVector int_zero_vector(Index n) { return IntVector::Constant(n, Integer(0)); }

template <class Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != 0) return false;
  return true;
}

/// Shape and entrywise equality; Eigen's operator== asserts on shape mismatch.
template <class A, class B>
bool same_matrix(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

/// Matrix product that stays well-defined for empty operands.
template <class A, class B>
Matrix<typename A::Scalar> product(const Eigen::MatrixBase<A>& a,
                                   const Eigen::MatrixBase<B>& b) {
  using Scalar = typename A::Scalar;
  Matrix<Scalar> out = zeros<Scalar>(a.rows(), b.cols());
  for (Index j = 0; j < b.cols(); ++j)
    for (Index k = 0; k < a.cols(); ++k) {
      if (b(k, j) == 0) continue;
      const Scalar& s = b(k, j);
      for (Index i = 0; i < a.rows(); ++i)
        if (a(i, k) != 0) out(i, j) += a(i, k) * s;
    }
  return out;
}

template <class A, class B>
Matrix<typename A::Scalar> kronecker(const Eigen::MatrixBase<A>& a,
                                     const Eigen::MatrixBase<B>& b) {
  using Scalar = typename A::Scalar;
  Matrix<Scalar> out = zeros<Scalar>(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0)
        out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

/// Horizontal concatenation [a | b].
IntMatrix hcat(const IntMatrix& a, const IntMatrix& b);
/// Vertical concatenation.
IntMatrix vcat(const IntMatrix& a, const IntMatrix& b);
/// Block-diagonal sum.
IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b);

/// Floor division and the matching non-negative remainder for positive divisors.
template <class Scalar>
Scalar floor_div(const Scalar& a, const Scalar& b) {
  Scalar q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

template <class Scalar>
Scalar mod_floor(const Scalar& a, const Scalar& m) {
  Scalar r = a % m;
  if (r < 0) r += (m < 0 ? -m : m);
  return r;
}

template <class Scalar>
Scalar abs_value(const Scalar& a) { return a < 0 ? Scalar(-a) : a; }

Integer gcd(const Integer& a, const Integer& b);

std::string to_string(const Integer& v);
Integer parse_integer(const std::string& text);

std::string to_string(const IntMatrix& m);

}  // namespace cochain
