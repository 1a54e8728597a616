#include "cochain/integer.hpp"

#include "cochain/errors.hpp"

#include <sstream>

namespace cochain {

IntMatrix hcat(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() && a.cols() && b.cols())
    throw DimensionError("hcat: row counts differ");
  const Index rows = a.cols() ? a.rows() : b.rows();
  IntMatrix out = int_zeros(rows, a.cols() + b.cols());
  if (a.cols()) out.leftCols(a.cols()) = a;
  if (b.cols()) out.rightCols(b.cols()) = b;
  return out;
}

IntMatrix vcat(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols() && a.rows() && b.rows())
    throw DimensionError("vcat: column counts differ");
  const Index cols = a.rows() ? a.cols() : b.cols();
  IntMatrix out = int_zeros(a.rows() + b.rows(), cols);
  if (a.rows()) out.topRows(a.rows()) = a;
  if (b.rows()) out.bottomRows(b.rows()) = b;
  return out;
}

IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out = int_zeros(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

std::string to_string(const Integer& v) { return v.str(); }

Integer parse_integer(const std::string& text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw std::invalid_argument("not an integer: '" + text + "'");
  for (std::size_t k = i; k < text.size(); ++k)
    if (text[k] < '0' || text[k] > '9')
      throw std::invalid_argument("not an integer: '" + text + "'");
  return Integer(text[0] == '+' ? text.substr(1) : text);
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (Index i = 0; i < m.rows(); ++i) {
    if (i) os << ", ";
    os << '[';
    for (Index j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j).str();
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace cochain
