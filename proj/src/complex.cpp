#include "cochain/complex.hpp"

#include "cochain/errors.hpp"

#include <algorithm>
#include <bit>

namespace cochain {

namespace {

int sign(int k) { return (k % 2 == 0) ? 1 : -1; }

std::string deg_str(int n) { return "degree " + std::to_string(n); }

}  // namespace

// ---------------------------------------------------------------- Complex

Complex::Complex(int lo, std::vector<Index> ranks, std::vector<IntMatrix> diffs)
    : lo_(lo), ranks_(std::move(ranks)), diffs_(std::move(diffs)) {
  if (ranks_.empty()) {
    lo_ = 0;
    if (!diffs_.empty()) throw DimensionError("empty complex with differentials");
    return;
  }
  if (diffs_.size() + 1 != ranks_.size())
    throw DimensionError("complex needs one differential between each pair of degrees");
  for (std::size_t k = 0; k < diffs_.size(); ++k) {
    const auto& m = diffs_[k];
    if (m.rows() != ranks_[k + 1] || m.cols() != ranks_[k])
      throw DimensionError("d(" + std::to_string(lo_ + int(k)) + ") has shape " +
                           std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                           ", expected " + std::to_string(ranks_[k + 1]) + "x" +
                           std::to_string(ranks_[k]));
  }
}

Complex Complex::concentrated(int degree, Index rank) { return Complex(degree, {rank}, {}); }

Index Complex::rank(int n) const {
  if (empty() || n < lo_ || n > hi()) return 0;
  return ranks_[std::size_t(n - lo_)];
}

IntMatrix Complex::d(int n) const {
  if (empty() || n < lo_ || n >= hi()) return int_zeros(rank(n + 1), rank(n));
  return diffs_[std::size_t(n - lo_)];
}

void Complex::validate() const {
  for (int n = lo_; n + 1 < hi(); ++n)
    if (!is_zero(product(d(n + 1), d(n))))
      throw NotAComplexError("d(" + std::to_string(n + 1) + ") d(" + std::to_string(n) +
                                 ") is nonzero at " + deg_str(n),
                             n);
}

bool Complex::is_valid() const {
  try {
    validate();
    return true;
  } catch (const NotAComplexError&) {
    return false;
  }
}

Complex Complex::normalized() const {
  if (empty()) return {};
  int a = lo_, b = hi();
  while (a <= b && rank(a) == 0) ++a;
  while (b >= a && rank(b) == 0) --b;
  if (a > b) return {};
  std::vector<Index> r;
  std::vector<IntMatrix> ds;
  for (int n = a; n <= b; ++n) {
    r.push_back(rank(n));
    if (n < b) ds.push_back(d(n));
  }
  return Complex(a, r, ds);
}

bool operator==(const Complex& x, const Complex& y) {
  Complex a = x.normalized(), b = y.normalized();
  if (a.empty() || b.empty()) return a.empty() && b.empty();
  if (a.lo() != b.lo() || a.hi() != b.hi()) return false;
  for (int n = a.lo(); n <= a.hi(); ++n) {
    if (a.rank(n) != b.rank(n)) return false;
    if (!same_matrix(a.d(n), b.d(n))) return false;
  }
  return true;
}

// ---------------------------------------------------------------- ComplexMap

ComplexMap::ComplexMap(Complex s, Complex t, std::map<int, IntMatrix> f)
    : source(std::move(s)), target(std::move(t)), components(std::move(f)) {
  for (const auto& [n, m] : components)
    if (m.rows() != target.rank(n) || m.cols() != source.rank(n))
      throw DimensionError("map component in " + deg_str(n) + " has shape " +
                           std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                           ", expected " + std::to_string(target.rank(n)) + "x" +
                           std::to_string(source.rank(n)));
}

ComplexMap ComplexMap::identity(const Complex& C) {
  std::map<int, IntMatrix> f;
  for (int n = C.lo(); n <= C.hi(); ++n) f[n] = int_identity(C.rank(n));
  return ComplexMap(C, C, f);
}

ComplexMap ComplexMap::zero(const Complex& s, const Complex& t) { return ComplexMap(s, t); }

IntMatrix ComplexMap::f(int n) const {
  auto it = components.find(n);
  if (it != components.end()) return it->second;
  return int_zeros(target.rank(n), source.rank(n));
}

void ComplexMap::validate() const {
  for (const auto& [n, m] : components)
    if (m.rows() != target.rank(n) || m.cols() != source.rank(n))
      throw DimensionError("map component shape mismatch in " + deg_str(n));
  if (source.empty() && target.empty()) return;
  const int a = std::min(source.empty() ? target.lo() : source.lo(),
                         target.empty() ? source.lo() : target.lo());
  const int b = std::max(source.hi(), target.hi());
  for (int n = a - 1; n <= b; ++n)
    if (!same_matrix(product(f(n + 1), source.d(n)), product(target.d(n), f(n))))
      throw NotAComplexError("map does not commute with differentials at " + deg_str(n), n);
}

bool ComplexMap::is_valid() const {
  try {
    validate();
    return true;
  } catch (const Error&) {
    return false;
  }
}

ComplexMap compose(const ComplexMap& g, const ComplexMap& f) {
  if (!(f.target == g.source)) throw DimensionError("compose: complexes do not match");
  std::map<int, IntMatrix> h;
  for (int n = f.source.lo(); n <= f.source.hi(); ++n) {
    if (f.source.rank(n) == 0 || g.target.rank(n) == 0) continue;
    h[n] = product(g.f(n), f.f(n));
  }
  return ComplexMap(f.source, g.target, h);
}

FgAbGroup at(const GradedGroup& G, int n) {
  auto it = G.find(n);
  return it == G.end() ? FgAbGroup{} : it->second;
}

GradedGroup trimmed(const GradedGroup& G) {
  GradedGroup out;
  for (const auto& [n, g] : G)
    if (!g.is_trivial()) out[n] = g;
  return out;
}

// ---------------------------------------------------------------- constructions

Complex shift(const Complex& C, int k) {
  if (C.empty()) return {};
  std::vector<Index> r;
  std::vector<IntMatrix> ds;
  for (int n = C.lo(); n <= C.hi(); ++n) {
    r.push_back(C.rank(n));
    if (n < C.hi()) ds.push_back(IntMatrix(Integer(sign(k)) * C.d(n)));
  }
  return Complex(C.lo() - k, r, ds);
}

ComplexMap shift(const ComplexMap& f, int k) {
  std::map<int, IntMatrix> g;
  for (const auto& [n, m] : f.components) g[n - k] = m;
  return ComplexMap(shift(f.source, k), shift(f.target, k), g);
}

namespace {

// Degree range [lo, hi] covering all given complexes; lo > hi when all empty.
std::pair<int, int> hull(std::initializer_list<std::pair<int, int>> ranges) {
  int lo = 0, hi = -1;
  bool any = false;
  for (auto [a, b] : ranges) {
    if (a > b) continue;
    if (!any) {
      lo = a;
      hi = b;
      any = true;
    } else {
      lo = std::min(lo, a);
      hi = std::max(hi, b);
    }
  }
  return {lo, hi};
}

std::pair<int, int> range_of(const Complex& C, int offset = 0) {
  if (C.empty()) return {0, -1};
  return {C.lo() + offset, C.hi() + offset};
}

}  // namespace

Complex direct_sum(const Complex& A, const Complex& B) {
  auto [lo, hi] = hull({range_of(A), range_of(B)});
  if (lo > hi) return {};
  std::vector<Index> r;
  std::vector<IntMatrix> ds;
  for (int n = lo; n <= hi; ++n) {
    r.push_back(A.rank(n) + B.rank(n));
    if (n < hi) ds.push_back(block_diagonal(A.d(n), B.d(n)));
  }
  return Complex(lo, r, ds);
}

Complex cone(const ComplexMap& f) {
  const Complex& S = f.source;
  const Complex& T = f.target;
  auto [lo, hi] = hull({range_of(S, -1), range_of(T)});
  if (lo > hi) return {};
  std::vector<Index> r;
  std::vector<IntMatrix> ds;
  for (int n = lo; n <= hi; ++n) {
    r.push_back(S.rank(n + 1) + T.rank(n));
    if (n == hi) break;
    const Index s0 = S.rank(n + 1), t0 = T.rank(n), s1 = S.rank(n + 2), t1 = T.rank(n + 1);
    IntMatrix m = int_zeros(s1 + t1, s0 + t0);
    m.topLeftCorner(s1, s0) = -S.d(n + 1);
    m.bottomLeftCorner(t1, s0) = f.f(n + 1);
    m.bottomRightCorner(t1, t0) = T.d(n);
    ds.push_back(m);
  }
  return Complex(lo, r, ds);
}

Complex fiber(const ComplexMap& f) { return shift(cone(f), -1); }

GradedGroup homology(const Complex& C) {
  GradedGroup H;
  for (int n = C.lo(); n <= C.hi(); ++n) {
    FgAbGroup g = homology_at(C.d(n - 1), C.d(n));
    if (!g.is_trivial()) H[n] = g;
  }
  return H;
}

Quotient homology_presentation(const Complex& C, int n) {
  return cochain::homology_presentation(C.d(n - 1), C.d(n));
}

std::map<int, GroupHom> induced_map(const ComplexMap& f) {
  std::map<int, GroupHom> out;
  auto [lo, hi] = hull({range_of(f.source), range_of(f.target)});
  for (int n = lo; n <= hi; ++n) {
    Quotient hs = homology_presentation(f.source, n);
    Quotient ht = homology_presentation(f.target, n);
    IntMatrix m = ht.reduce(product(f.f(n), hs.representatives()));
    out[n] = GroupHom{hs.group, ht.group, m};
  }
  return out;
}

Index tensor_block_offset(const Complex& C, const Complex& D, int n, int s) {
  Index off = 0;
  for (int a = C.lo(); a < s && a <= C.hi(); ++a) off += C.rank(a) * D.rank(n - a);
  return off;
}

Complex tensor(const Complex& C, const Complex& D) {
  if (C.empty() || D.empty()) return {};
  const int lo = C.lo() + D.lo(), hi = C.hi() + D.hi();
  auto total = [&](int n) {
    Index r = 0;
    for (int s = C.lo(); s <= C.hi(); ++s) r += C.rank(s) * D.rank(n - s);
    return r;
  };
  std::vector<Index> r;
  std::vector<IntMatrix> ds;
  for (int n = lo; n <= hi; ++n) {
    r.push_back(total(n));
    if (n == hi) break;
    IntMatrix m = int_zeros(total(n + 1), total(n));
    for (int s = C.lo(); s <= C.hi(); ++s) {
      const int t = n - s;
      const Index rc = C.rank(s), rd = D.rank(t);
      if (rc * rd == 0) continue;
      const Index col = tensor_block_offset(C, D, n, s);
      if (C.rank(s + 1) > 0) {
        IntMatrix blk = kronecker(C.d(s), int_identity(rd));
        m.block(tensor_block_offset(C, D, n + 1, s + 1), col, blk.rows(), blk.cols()) = blk;
      }
      if (D.rank(t + 1) > 0) {
        IntMatrix blk = kronecker(int_identity(rc), D.d(t));
        if (sign(s) < 0) blk = -blk;
        m.block(tensor_block_offset(C, D, n + 1, s), col, blk.rows(), blk.cols()) = blk;
      }
    }
    ds.push_back(m);
  }
  return Complex(lo, r, ds);
}

Complex truncate_brutal(const Complex& C, Truncation mode, int n) {
  if (C.empty()) return {};
  const int lo = mode == Truncation::AtLeast ? std::max(C.lo(), n) : C.lo();
  const int hi = mode == Truncation::AtMost ? std::min(C.hi(), n) : C.hi();
  if (lo > hi) return {};
  std::vector<Index> r;
  std::vector<IntMatrix> ds;
  for (int k = lo; k <= hi; ++k) {
    r.push_back(C.rank(k));
    if (k < hi) ds.push_back(C.d(k));
  }
  return Complex(lo, r, ds);
}

// ---------------------------------------------------------------- cubes

ComplexMap Cube::edge(unsigned v, int i) const {
  auto it = edges.find({v, i});
  if (it != edges.end()) return it->second;
  return ComplexMap::zero(vertices[v], vertices[v | (1u << i)]);
}

void Cube::validate() const {
  const unsigned N = 1u << dimension;
  if (vertices.size() != N) throw DimensionError("cube needs 2^a vertices");
  for (const auto& [key, f] : edges) {
    auto [v, i] = key;
    if (v >= N || i < 0 || i >= dimension || (v >> i) & 1u)
      throw ValidationError("cube edge", "edge index out of range");
    if (!(f.source == vertices[v]) || !(f.target == vertices[v | (1u << i)]))
      throw ValidationError("cube edge", "edge endpoints do not match vertices");
    f.validate();
  }
  for (unsigned v = 0; v < N; ++v)
    for (int i = 0; i < dimension; ++i)
      for (int j = i + 1; j < dimension; ++j) {
        if (((v >> i) & 1u) || ((v >> j) & 1u)) continue;
        ComplexMap p = compose(edge(v | (1u << i), j), edge(v, i));
        ComplexMap q = compose(edge(v | (1u << j), i), edge(v, j));
        const Complex& s = vertices[v];
        for (int n = s.lo(); n <= s.hi(); ++n)
          if (!same_matrix(p.f(n), q.f(n)))
            throw ValidationError("cube face commutes",
                                  "face at vertex " + std::to_string(v) + " in directions " +
                                      std::to_string(i) + "," + std::to_string(j) +
                                      " does not commute in " + deg_str(n));
      }
}

Complex total_cofiber(const Cube& K) {
  K.validate();
  const int a = K.dimension;
  const unsigned N = 1u << a;
  auto shift_of = [&](unsigned v) { return a - std::popcount(v); };
  int lo = 0, hi = -1;
  bool any = false;
  for (unsigned v = 0; v < N; ++v) {
    const Complex& X = K.vertices[v];
    if (X.empty()) continue;
    int l = X.lo() - shift_of(v), h = X.hi() - shift_of(v);
    lo = any ? std::min(lo, l) : l;
    hi = any ? std::max(hi, h) : h;
    any = true;
  }
  if (!any) return {};
  auto offsets = [&](int n) {
    std::vector<Index> off(N + 1, 0);
    for (unsigned v = 0; v < N; ++v) off[v + 1] = off[v] + K.vertices[v].rank(n + shift_of(v));
    return off;
  };
  std::vector<Index> r;
  std::vector<IntMatrix> ds;
  for (int n = lo; n <= hi; ++n) {
    auto o0 = offsets(n);
    r.push_back(o0[N]);
    if (n == hi) break;
    auto o1 = offsets(n + 1);
    IntMatrix m = int_zeros(o1[N], o0[N]);
    for (unsigned v = 0; v < N; ++v) {
      const Complex& X = K.vertices[v];
      const int m_v = n + shift_of(v);
      if (X.rank(m_v) == 0) continue;
      IntMatrix dv = X.d(m_v);
      if (sign(shift_of(v)) < 0) dv = -dv;
      m.block(o1[v], o0[v], dv.rows(), dv.cols()) = dv;
      for (int i = 0; i < a; ++i) {
        if ((v >> i) & 1u) continue;
        const unsigned w = v | (1u << i);
        int zeros_below = 0;
        for (int b = 0; b < i; ++b)
          if (!((v >> b) & 1u)) ++zeros_below;
        IntMatrix e = K.edge(v, i).f(m_v);
        if (sign(zeros_below) < 0) e = -e;
        m.block(o1[w], o0[v], e.rows(), e.cols()) = e;
      }
    }
    ds.push_back(m);
  }
  return Complex(lo, r, ds);
}

Cube spine_cube(const std::vector<ComplexMap>& maps) {
  if (maps.empty()) throw DomainError("spine cube needs at least one map");
  Cube K;
  K.dimension = int(maps.size());
  K.vertices.assign(std::size_t(1) << maps.size(), Complex{});
  K.vertices[0] = maps[0].source;
  for (std::size_t b = 0; b < maps.size(); ++b) {
    if (b > 0 && !(maps[b].source == maps[b - 1].target))
      throw DimensionError("spine maps are not composable");
    const unsigned v = (1u << b) - 1;
    K.vertices[(1u << (b + 1)) - 1] = maps[b].target;
    K.edges[{v, int(b)}] = maps[b];
  }
  return K;
}

Complex iterated_cofiber(const std::vector<ComplexMap>& maps) {
  if (maps.empty()) throw DomainError("iterated cofiber needs at least one map");
  Complex X = cone(maps[0]);
  Complex last = maps[0].target;
  for (std::size_t k = 1; k < maps.size(); ++k) {
    if (!(maps[k].source == last)) throw DimensionError("cofiber maps are not composable");
    const Complex& T = maps[k].target;
    std::map<int, IntMatrix> g;
    for (int n = X.lo(); n <= X.hi(); ++n) {
      if (X.rank(n) == 0 || T.rank(n) == 0) continue;
      IntMatrix m = int_zeros(T.rank(n), X.rank(n));
      const Index l = last.rank(n);
      if (l) m.rightCols(l) = maps[k].f(n);
      g[n] = m;
    }
    ComplexMap f(X, T, g);
    f.validate();
    X = cone(f);
    last = T;
  }
  return X;
}

}  // namespace cochain
