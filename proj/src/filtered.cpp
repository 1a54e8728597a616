#include "cochain/filtered.hpp"

#include "cochain/errors.hpp"

#include <algorithm>

namespace cochain {

namespace {

std::string at_pn(int p, int n) {
  return "p=" + std::to_string(p) + ", degree " + std::to_string(n);
}

}  // namespace

// ---------------------------------------------------------------- FilteredComplex

FilteredComplex::FilteredComplex(Complex ambient, int p_min,
                                 std::vector<std::vector<Subgroup>> levels)
    : ambient_(std::move(ambient)), p_min_(p_min), levels_(std::move(levels)) {
  if (levels_.empty()) throw ValidationError("filtration length", "at least one level is required");
  const std::size_t width = ambient_.empty() ? 0 : std::size_t(ambient_.hi() - ambient_.lo() + 1);
  for (std::size_t k = 0; k < levels_.size(); ++k) {
    if (levels_[k].size() != width)
      throw DimensionError("filtration level " + std::to_string(p_min_ + int(k)) +
                           " does not cover the ambient support");
    for (std::size_t j = 0; j < width; ++j)
      if (levels_[k][j].ambient_rank() != ambient_.rank(ambient_.lo() + int(j)))
        throw DimensionError("filtration subgroup rank mismatch at " +
                             at_pn(p_min_ + int(k), ambient_.lo() + int(j)));
  }
}

FilteredComplex FilteredComplex::constant(const Complex& C, int p) {
  std::vector<Subgroup> lv;
  if (!C.empty())
    for (int n = C.lo(); n <= C.hi(); ++n) lv.push_back(Subgroup::full(C.rank(n)));
  return FilteredComplex(C, p, {lv});
}

Subgroup FilteredComplex::level(int p, int n) const {
  const Index r = ambient_.rank(n);
  if (r == 0) return Subgroup::zero(0);
  if (p <= p_min_) return levels_.front()[std::size_t(n - ambient_.lo())];
  if (p > p_max()) return Subgroup::zero(r);
  return levels_[std::size_t(p - p_min_)][std::size_t(n - ambient_.lo())];
}

void FilteredComplex::validate() const {
  ambient_.validate();
  if (ambient_.empty()) return;
  for (int n = ambient_.lo(); n <= ambient_.hi(); ++n) {
    if (!level(p_min_, n).is_full())
      throw ValidationError("exhaustive", "F^p_min is not everything in degree " + std::to_string(n));
    for (int p = p_min_; p <= p_max(); ++p) {
      if (!level(p, n).contains(level(p + 1, n)))
        throw ValidationError("decreasing", "F^{p+1} not inside F^p at " + at_pn(p, n));
      if (!level(p, n + 1).contains(image(ambient_.d(n), level(p, n))))
        throw ValidationError("d-stable", "d F^p not inside F^p at " + at_pn(p, n));
    }
  }
}

bool operator==(const FilteredComplex& a, const FilteredComplex& b) {
  if (!(a.ambient() == b.ambient())) return false;
  const Complex A = a.ambient().normalized();
  if (A.empty()) return true;
  const int p0 = std::min(a.p_min(), b.p_min()), p1 = std::max(a.p_max(), b.p_max());
  for (int p = p0; p <= p1 + 1; ++p)
    for (int n = A.lo(); n <= A.hi(); ++n)
      if (!(a.level(p, n) == b.level(p, n))) return false;
  return true;
}

// ---------------------------------------------------------------- subquotients

IntMatrix Subquotient::lift_at(int n) const {
  auto it = lift.find(n);
  return it == lift.end() ? int_zeros(0, 0) : it->second;
}

IntMatrix Subquotient::project_at(int n, const IntMatrix& ambient_columns) const {
  auto it = project.find(n);
  if (it == project.end()) return int_zeros(0, ambient_columns.cols());
  return product(it->second, numerator.at(n).coordinates_of(ambient_columns));
}

Complex level_complex(const FilteredComplex& F, int p) {
  const Complex& C = F.ambient();
  if (C.empty()) return {};
  std::vector<Index> r;
  std::vector<IntMatrix> ds;
  for (int n = C.lo(); n <= C.hi(); ++n) {
    Subgroup A = F.level(p, n);
    r.push_back(A.rank());
    if (n < C.hi()) ds.push_back(F.level(p, n + 1).coordinates_of(product(C.d(n), A.basis())));
  }
  return Complex(C.lo(), r, ds);
}

Subquotient subquotient(const FilteredComplex& F, int p, int q) {
  if (p > q)
    throw OrderError("subquotient F^p/F^q needs p <= q, got p=" + std::to_string(p) +
                     ", q=" + std::to_string(q));
  Subquotient S;
  S.p = p;
  S.q = q;
  const Complex& C = F.ambient();
  if (C.empty() || p == q) return S;
  const int lo = C.lo(), hi = C.hi();

  std::map<int, Quotient> Q;
  bool free = true;
  for (int n = lo; n <= hi; ++n) {
    Q.emplace(n, quotient(F.level(p, n), F.level(q, n)));
    if (!Q.at(n).group.is_free()) free = false;
    S.numerator[n] = F.level(p, n);
  }

  if (free) {
    std::vector<Index> r;
    std::vector<IntMatrix> ds;
    for (int n = lo; n <= hi; ++n) {
      const Quotient& qn = Q.at(n);
      S.lift[n] = qn.representatives();
      S.project[n] = qn.reduce_matrix;
      r.push_back(qn.group.generators());
      if (n < hi) {
        const Quotient& q1 = Q.at(n + 1);
        IntMatrix image_cols = product(C.d(n), S.lift[n]);
        ds.push_back(product(q1.reduce_matrix, q1.A.coordinates_of(image_cols)));
      }
    }
    S.complex = Complex(lo, r, ds);
    return S;
  }

  S.cone_model = true;
  Complex Cp = level_complex(F, p), Cq = level_complex(F, q);
  std::map<int, IntMatrix> incl;
  for (int n = lo; n <= hi; ++n)
    incl[n] = F.level(p, n).coordinates_of(F.level(q, n).basis());
  S.complex = cone(ComplexMap(Cq, Cp, incl));
  for (int n = lo - 1; n <= hi; ++n) {
    const Index rq = Cq.rank(n + 1), rp = Cp.rank(n);
    IntMatrix L = int_zeros(C.rank(n), rq + rp);
    if (rp) L.rightCols(rp) = F.level(p, n).basis();
    S.lift[n] = L;
    if (n >= lo) {
      IntMatrix P = int_zeros(rq + rp, rp);
      P.bottomRows(rp) = int_identity(rp);
      S.project[n] = P;
    }
  }
  return S;
}

Complex intermediate_subquotient(const FilteredComplex& F, int p, int q) {
  return subquotient(F, p, q).complex;
}

Complex graded_piece(const FilteredComplex& F, int p) { return subquotient(F, p, p + 1).complex; }

bool is_split(const FilteredComplex& F) {
  const Complex& C = F.ambient();
  if (C.empty()) return true;
  for (int p = F.p_min(); p <= F.p_max(); ++p)
    for (int n = C.lo(); n <= C.hi(); ++n)
      if (!quotient(F.level(p, n), F.level(p + 1, n)).group.is_free()) return false;
  return true;
}

// ---------------------------------------------------------------- double complexes

int DoubleComplex::i_min() const { return columns.empty() ? 0 : columns.begin()->first; }
int DoubleComplex::i_max() const { return columns.empty() ? -1 : columns.rbegin()->first; }

Complex DoubleComplex::column(int i) const {
  auto it = columns.find(i);
  return it == columns.end() ? Complex{} : it->second;
}

ComplexMap DoubleComplex::h(int i) const {
  auto it = horizontal.find(i);
  if (it != horizontal.end()) return it->second;
  return ComplexMap::zero(column(i), column(i + 1));
}

void DoubleComplex::validate() const {
  for (const auto& [i, C] : columns) C.validate();
  for (const auto& [i, f] : horizontal) {
    if (!(f.source == column(i)) || !(f.target == column(i + 1)))
      throw ValidationError("horizontal endpoints",
                            "h^" + std::to_string(i) + " does not go from column " +
                                std::to_string(i) + " to column " + std::to_string(i + 1));
    f.validate();
  }
  for (int i = i_min(); i + 2 <= i_max(); ++i) {
    ComplexMap g = compose(h(i + 1), h(i));
    for (const auto& [n, m] : g.components)
      if (!is_zero(m))
        throw ValidationError("h^2 = 0", "h^" + std::to_string(i + 1) + " h^" + std::to_string(i) +
                                             " is nonzero in internal degree " + std::to_string(n));
  }
}

DoubleComplex DoubleComplex::degenerate(const Complex& row) {
  DoubleComplex D;
  if (row.empty()) return D;
  for (int n = row.lo(); n <= row.hi(); ++n) D.columns[n] = Complex::concentrated(0, row.rank(n));
  for (int n = row.lo(); n < row.hi(); ++n)
    D.horizontal[n] = ComplexMap(D.columns[n], D.columns[n + 1], {{0, row.d(n)}});
  return D;
}

Index total_block_offset(const DoubleComplex& D, int n, int i) {
  Index off = 0;
  for (const auto& [j, C] : D.columns) {
    if (j >= i) break;
    off += C.rank(n - j);
  }
  return off;
}

Complex total_complex(const DoubleComplex& D) {
  int lo = 0, hi = -1;
  bool any = false;
  for (const auto& [i, C] : D.columns) {
    if (C.empty()) continue;
    lo = any ? std::min(lo, C.lo() + i) : C.lo() + i;
    hi = any ? std::max(hi, C.hi() + i) : C.hi() + i;
    any = true;
  }
  if (!any) return {};
  auto total = [&](int n) { return total_block_offset(D, n, D.i_max() + 1); };
  std::vector<Index> r;
  std::vector<IntMatrix> ds;
  for (int n = lo; n <= hi; ++n) {
    r.push_back(total(n));
    if (n == hi) break;
    IntMatrix m = int_zeros(total(n + 1), total(n));
    for (const auto& [i, C] : D.columns) {
      const int k = n - i;
      if (C.rank(k) == 0) continue;
      const Index col = total_block_offset(D, n, i);
      IntMatrix dv = C.d(k);
      if (i % 2 != 0) dv = -dv;
      m.block(total_block_offset(D, n + 1, i), col, dv.rows(), dv.cols()) = dv;
      if (i < D.i_max()) {
        IntMatrix hm = D.h(i).f(k);
        m.block(total_block_offset(D, n + 1, i + 1), col, hm.rows(), hm.cols()) = hm;
      }
    }
    ds.push_back(m);
  }
  return Complex(lo, r, ds);
}

FilteredComplex piling(const DoubleComplex& D) {
  D.validate();
  Complex T = total_complex(D);
  T.validate();
  std::vector<std::vector<Subgroup>> levels;
  const int p0 = D.columns.empty() ? 0 : D.i_min();
  const int p1 = D.columns.empty() ? 0 : D.i_max();
  for (int p = p0; p <= p1; ++p) {
    std::vector<Subgroup> lv;
    if (!T.empty())
      for (int n = T.lo(); n <= T.hi(); ++n) {
        const Index r = T.rank(n), off = total_block_offset(D, n, p);
        lv.push_back(Subgroup(r, int_identity(r).rightCols(r - off)));
      }
    levels.push_back(lv);
  }
  FilteredComplex F(T, p0, levels);
  F.validate();
  return F;
}

GradedGroup total_homology(const DoubleComplex& D) {
  D.validate();
  return homology(total_complex(D));
}

// ---------------------------------------------------------------- general filtrations

Complex GenFilteredComplex::level(int p) const {
  if (levels.empty()) return {};
  if (p <= p_min) return levels.front();
  if (p > p_max()) return constant_top ? levels.back() : Complex{};
  return levels[std::size_t(p - p_min)];
}

ComplexMap GenFilteredComplex::map_down(int p) const {
  if (levels.empty()) return {};
  if (p < p_min) return ComplexMap::identity(levels.front());
  if (p >= p_max())
    return constant_top ? ComplexMap::identity(levels.back()) : ComplexMap::zero(Complex{}, level(p));
  return maps[std::size_t(p - p_min)];
}

ComplexMap GenFilteredComplex::composite(int q, int p) const {
  if (q < p) throw OrderError("composite G^q -> G^p needs q >= p");
  ComplexMap f = ComplexMap::identity(level(q));
  for (int k = q - 1; k >= p; --k) f = compose(map_down(k), f);
  return f;
}

void GenFilteredComplex::validate() const {
  if (levels.empty()) throw ValidationError("filtration length", "at least one level is required");
  if (maps.size() + 1 != levels.size())
    throw ValidationError("tower maps", "need one map between consecutive levels");
  for (const auto& C : levels) C.validate();
  for (std::size_t k = 0; k < maps.size(); ++k) {
    if (!(maps[k].source == levels[k + 1]) || !(maps[k].target == levels[k]))
      throw ValidationError("tower maps", "map " + std::to_string(k) + " has wrong endpoints");
    maps[k].validate();
  }
}

Complex graded_piece(const GenFilteredComplex& G, int p) { return cone(G.map_down(p)); }

GenFilteredComplex completion(const GenFilteredComplex& G) {
  G.validate();
  if (!G.constant_top) return G;
  const Complex& top = G.levels.back();
  GenFilteredComplex out;
  out.p_min = G.p_min;
  for (int p = G.p_min; p <= G.p_max(); ++p) out.levels.push_back(cone(G.composite(G.p_max(), p)));
  for (int p = G.p_min; p < G.p_max(); ++p) {
    const Complex& s = out.levels[std::size_t(p + 1 - G.p_min)];
    const Complex& t = out.levels[std::size_t(p - G.p_min)];
    const ComplexMap g = G.map_down(p);
    std::map<int, IntMatrix> comps;
    if (!s.empty())
      for (int n = s.lo(); n <= s.hi(); ++n)
        comps[n] = block_diagonal(int_identity(top.rank(n + 1)), g.f(n));
    out.maps.push_back(ComplexMap(s, t, comps));
  }
  out.constant_top = false;
  out.validate();
  return out;
}

// ---------------------------------------------------------------- Day convolution

FilteredComplex day_unit() { return FilteredComplex::constant(Complex::concentrated(0, 1), 0); }

FilteredComplex day_convolution(const FilteredComplex& F, const FilteredComplex& G) {
  if (!is_split(F) || !is_split(G))
    throw ModelError("Day convolution needs filtrations with degreewise free graded pieces");
  const Complex& CF = F.ambient();
  const Complex& CG = G.ambient();
  Complex T = tensor(CF, CG);
  const int p0 = F.p_min() + G.p_min(), p1 = F.p_max() + G.p_max();
  std::vector<std::vector<Subgroup>> levels;
  for (int p = p0; p <= p1; ++p) {
    std::vector<Subgroup> lv;
    if (!T.empty())
      for (int n = T.lo(); n <= T.hi(); ++n) {
        IntMatrix gens = int_zeros(T.rank(n), 0);
        for (int s = F.p_min(); s <= F.p_max(); ++s) {
          const int t = std::max(p - s, G.p_min());
          if (t > G.p_max()) continue;
          for (int a = CF.lo(); a <= CF.hi(); ++a) {
            const int b = n - a;
            if (CF.rank(a) == 0 || CG.rank(b) == 0) continue;
            IntMatrix K = kronecker(F.level(s, a).basis(), G.level(t, b).basis());
            IntMatrix placed = int_zeros(T.rank(n), K.cols());
            placed.block(tensor_block_offset(CF, CG, n, a), 0, K.rows(), K.cols()) = K;
            gens = hcat(gens, placed);
          }
        }
        lv.push_back(Subgroup(T.rank(n), gens));
      }
    levels.push_back(lv);
  }
  FilteredComplex out(T, p0, levels);
  out.validate();
  return out;
}

// ---------------------------------------------------------------- Beilinson homotopy

BeilinsonComplex beilinson_pi(const FilteredComplex& F, int n) {
  BeilinsonComplex B;
  B.n = n;
  const Complex& C = F.ambient();
  std::map<int, Subquotient> gr;
  std::map<int, Quotient> H;
  for (int i = F.p_min(); i <= F.p_max() + 1; ++i) {
    gr.emplace(i, subquotient(F, i, i + 1));
    H.emplace(i, homology_presentation(gr.at(i).complex, i - n));
  }
  for (int i = F.p_min(); i <= F.p_max(); ++i) {
    const int m = i - n;
    B.entries[i] = H.at(i).group;
    IntMatrix lifted = product(gr.at(i).lift_at(m), H.at(i).representatives());
    if (lifted.rows() == 0) lifted = int_zeros(C.rank(m), lifted.cols());
    B.representatives[i] = lifted;
  }
  for (int i = F.p_min(); i <= F.p_max(); ++i) {
    const int m = i - n;
    IntMatrix y = product(C.d(m), B.representatives[i]);
    IntMatrix z = gr.at(i + 1).project_at(m + 1, y);
    const Quotient& Ht = H.at(i + 1);
    IntMatrix mat = z.rows() ? Ht.reduce(z) : int_zeros(Ht.group.generators(), y.cols());
    B.differentials[i] = GroupHom{B.entries[i], Ht.group, mat};
  }
  return B;
}

}  // namespace cochain
