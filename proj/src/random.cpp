#include "cochain/random.hpp"

#include <map>

namespace cochain {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

IntMatrix random_matrix(Rng& rng, Index rows, Index cols, int lo, int hi) {
  IntMatrix m = int_zeros(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = uniform(rng, lo, hi);
  return m;
}

std::pair<IntMatrix, IntMatrix> random_unimodular(Rng& rng, Index n, int steps) {
  IntMatrix U = int_identity(n), Ui = int_identity(n);
  if (n == 0) return {U, Ui};
  for (int s = 0; s < steps; ++s) {
    const Index i = uniform(rng, 0, int(n) - 1);
    if (n == 1 || uniform(rng, 0, 3) == 0) {
      U.row(i) *= Integer(-1);
      Ui.col(i) *= Integer(-1);
      continue;
    }
    Index j = uniform(rng, 0, int(n) - 2);
    if (j >= i) ++j;
    const Integer c = uniform(rng, 0, 1) ? 1 : -1;
    // U <- (I + c e_ij) U, Ui <- Ui (I - c e_ij)
    U.row(i) += c * U.row(j);
    Ui.col(j) -= c * Ui.col(i);
  }
  return {U, Ui};
}

namespace {

bool bounded(const IntMatrix& m, int bound) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (abs_value(m(i, j)) > bound) return false;
  return true;
}

// Random d with d * prev = 0 and entries within bound; zero if no luck.
IntMatrix annihilating(Rng& rng, Index rows, const IntMatrix& prev, int bound) {
  const Index cols = prev.rows();
  if (rows == 0 || cols == 0) return int_zeros(rows, cols);
  IntMatrix K = kernel_basis(IntMatrix(prev.transpose()));  // cols x k
  if (K.cols() == 0) return int_zeros(rows, cols);
  for (int attempt = 0; attempt < 20; ++attempt) {
    IntMatrix d = product(random_matrix(rng, rows, K.cols(), -2, 2), IntMatrix(K.transpose()));
    if (bounded(d, bound)) return d;
  }
  return int_zeros(rows, cols);
}

Complex complex_from_ranks(Rng& rng, int lo, const std::vector<Index>& ranks, int bound) {
  std::vector<IntMatrix> diffs;
  IntMatrix prev = int_zeros(ranks.empty() ? 0 : ranks[0], 0);
  for (std::size_t k = 0; k + 1 < ranks.size(); ++k) {
    IntMatrix d = annihilating(rng, ranks[k + 1], prev, bound);
    diffs.push_back(d);
    prev = d;
  }
  return Complex(lo, ranks, diffs);
}

}  // namespace

Complex random_complex(Rng& rng, const ComplexShape& shape) {
  const int len = uniform(rng, 1, shape.max_support);
  const int lo = uniform(rng, -2, 2);
  std::vector<Index> ranks;
  for (int k = 0; k < len; ++k) ranks.push_back(uniform(rng, 0, shape.max_rank));
  return complex_from_ranks(rng, lo, ranks, shape.max_entry);
}

// ---------------------------------------------------------------- double complexes

namespace {

using Pos = std::pair<int, int>;  // (column, degree)

struct Builder {
  std::map<Pos, Index> rank;
  // (source pos, source index) -> list of (target pos, target index, coefficient)
  struct Entry {
    Pos from;
    Index i;
    Pos to;
    Index j;
    Integer c;
  };
  std::vector<Entry> entries;

  Index add(Pos p) { return rank[p]++; }
  void arrow(Pos a, Index i, Pos b, Index j, Integer c) {
    if (c != 0) entries.push_back({a, i, b, j, c});
  }
};

int nonzero_small(Rng& rng) {
  int v = uniform(rng, 1, 3);
  return uniform(rng, 0, 1) ? v : -v;
}

}  // namespace

DoubleComplex random_double_complex(Rng& rng, const DoubleShape& shape) {
  return random_double_complex(rng, uniform(rng, 1, shape.max_columns), shape);
}

DoubleComplex random_double_complex(Rng& rng, int columns, const DoubleShape& shape) {
  const int i0 = uniform(rng, -1, 1), n0 = uniform(rng, -1, 1);
  const int support = uniform(rng, 1, shape.max_support);
  const int i1 = i0 + columns - 1, n1 = n0 + support - 1;
  Builder B;
  for (int i = i0; i <= i1; ++i)
    for (int n = n0; n <= n1; ++n) B.rank[{i, n}] = 0;

  const int pieces = uniform(rng, 1, shape.max_pieces);
  for (int k = 0; k < pieces; ++k) {
    int kind = uniform(rng, 0, 3);
    if ((kind == 1 || kind == 3) && columns < 2) kind = 0;
    if ((kind == 2 || kind == 3) && support < 2) kind = kind == 3 && columns >= 2 ? 1 : 0;
    const int i = uniform(rng, i0, (kind == 1 || kind == 3) ? i1 - 1 : i1);
    const int n = uniform(rng, n0, (kind == 2 || kind == 3) ? n1 - 1 : n1);
    switch (kind) {
      case 0:
        B.add({i, n});
        break;
      case 1: {
        Index a = B.add({i, n}), b = B.add({i + 1, n});
        B.arrow({i, n}, a, {i + 1, n}, b, nonzero_small(rng));
        break;
      }
      case 2: {
        Index a = B.add({i, n}), b = B.add({i, n + 1});
        B.arrow({i, n}, a, {i, n + 1}, b, nonzero_small(rng));
        break;
      }
      default: {
        // a = su, b = sv, c = vw, d = uw, so c a = d b
        const Integer s = nonzero_small(rng), u = uniform(rng, -2, 2), v = uniform(rng, -2, 2),
                      w = nonzero_small(rng);
        Index x = B.add({i, n}), y = B.add({i + 1, n}), z = B.add({i, n + 1}), t = B.add({i + 1, n + 1});
        B.arrow({i, n}, x, {i + 1, n}, y, s * u);
        B.arrow({i, n}, x, {i, n + 1}, z, s * v);
        B.arrow({i + 1, n}, y, {i + 1, n + 1}, t, v * w);
        B.arrow({i, n + 1}, z, {i + 1, n + 1}, t, u * w);
        break;
      }
    }
  }

  std::map<Pos, std::pair<IntMatrix, IntMatrix>> change;
  for (const auto& [p, r] : B.rank) change[p] = random_unimodular(rng, r, 2);
  auto block = [&](Pos a, Pos b) {
    IntMatrix m = int_zeros(B.rank[b], B.rank[a]);
    for (const auto& e : B.entries)
      if (e.from == a && e.to == b) m(e.j, e.i) += e.c;
    return product(product(change[b].first, m), change[a].second);
  };

  DoubleComplex D;
  for (int i = i0; i <= i1; ++i) {
    std::vector<Index> ranks;
    std::vector<IntMatrix> diffs;
    for (int n = n0; n <= n1; ++n) {
      ranks.push_back(B.rank[{i, n}]);
      if (n < n1) diffs.push_back(block({i, n}, {i, n + 1}));
    }
    D.columns[i] = Complex(n0, ranks, diffs);
  }
  for (int i = i0; i < i1; ++i) {
    std::map<int, IntMatrix> comps;
    for (int n = n0; n <= n1; ++n) comps[n] = block({i, n}, {i + 1, n});
    D.horizontal[i] = ComplexMap(D.columns[i], D.columns[i + 1], comps);
  }
  D.validate();
  return D;
}

// ---------------------------------------------------------------- filtrations

namespace {

// Smallest subcomplex containing S (degreewise), inside `inside`.
std::vector<Subgroup> d_closure(const Complex& C, std::vector<Subgroup> S) {
  for (std::size_t k = 0; k + 1 < S.size(); ++k) {
    const int n = C.lo() + int(k);
    S[k + 1] = sum(S[k + 1], image(C.d(n), S[k]));
  }
  return S;
}

FilteredComplex random_filtration(Rng& rng, const FiltrationShape& shape, bool split) {
  ComplexShape cs{shape.max_support, shape.max_rank, shape.max_entry};
  const Complex C = random_complex(rng, cs);
  const int length = uniform(rng, 1, shape.max_length);
  const int p_min = uniform(rng, -1, 1);
  std::vector<std::vector<Subgroup>> levels;
  std::vector<Subgroup> prev;
  for (int n = C.lo(); n <= C.hi(); ++n) prev.push_back(Subgroup::full(C.rank(n)));
  levels.push_back(prev);
  for (int p = 1; p < length; ++p) {
    std::vector<Subgroup> next;
    for (const Subgroup& S : prev) {
      const Index k = S.rank();
      const int count = k == 0 ? 0 : uniform(rng, 0, int(k));
      IntMatrix g = product(S.basis(), random_matrix(rng, k, count, -1, 1));
      for (Index c = 0; c < g.cols(); ++c)
        if (uniform(rng, 0, 2) == 0) g.col(c) *= Integer(2);
      next.push_back(Subgroup(S.ambient_rank(), g));
    }
    next = d_closure(C, next);
    if (split)
      for (std::size_t k = 0; k < next.size(); ++k) next[k] = intersect(saturation(next[k]), prev[k]);
    levels.push_back(next);
    prev = next;
  }
  FilteredComplex F(C, p_min, levels);
  F.validate();
  return F;
}

}  // namespace

FilteredComplex random_mono_filtration(Rng& rng, const FiltrationShape& shape) {
  return random_filtration(rng, shape, false);
}

FilteredComplex random_split_filtration(Rng& rng, const FiltrationShape& shape) {
  return random_filtration(rng, shape, true);
}

std::vector<ComplexMap> random_spine(Rng& rng, int a) {
  DoubleShape shape{a + 1, 3, 6};
  DoubleComplex D = random_double_complex(rng, a + 1, shape);
  std::vector<ComplexMap> maps;
  for (int k = 0; k < a; ++k) maps.push_back(D.h(D.i_min() + k));
  return maps;
}

}  // namespace cochain
