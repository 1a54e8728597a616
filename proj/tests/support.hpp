#pragma once

#include "cochain/integer.hpp"

#include <initializer_list>

namespace support {

inline cochain::IntMatrix mat(std::initializer_list<std::initializer_list<int>> rows) {
  const auto r = cochain::Index(rows.size());
  const auto c = r ? cochain::Index(rows.begin()->size()) : 0;
  cochain::IntMatrix m = cochain::int_zeros(r, c);
  cochain::Index i = 0;
  for (const auto& row : rows) {
    cochain::Index j = 0;
    for (int v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

inline cochain::IntVector vec(std::initializer_list<int> xs) {
  cochain::IntVector v = cochain::int_zero_vector(cochain::Index(xs.size()));
  cochain::Index i = 0;
  for (int x : xs) v(i++) = x;
  return v;
}

}  // namespace support
