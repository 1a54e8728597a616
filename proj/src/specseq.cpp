#include "cochain/specseq.hpp"

#include "cochain/errors.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cochain {

namespace {

std::string pos(int p, int q) { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

}  // namespace

// ---------------------------------------------------------------- Page

FgAbGroup Page::group(int p, int q) const {
  auto it = entries.find({p, q});
  return it == entries.end() ? FgAbGroup{} : it->second.group;
}

const Quotient* Page::entry(int p, int q) const {
  auto it = entries.find({p, q});
  return it == entries.end() ? nullptr : &it->second;
}

GroupHom Page::d(int p, int q) const {
  auto it = differentials.find({p, q});
  if (it != differentials.end()) return it->second;
  auto [tp, tq] = target(p, q);
  FgAbGroup s = group(p, q), t = group(tp, tq);
  return {s, t, int_zeros(t.generators(), s.generators())};
}

bool Page::has_nonzero_differential() const {
  for (const auto& [k, h] : differentials)
    if (!h.is_zero()) return true;
  return false;
}

// ---------------------------------------------------------------- SpectralSequence

SpectralSequence::SpectralSequence(FilteredComplex F) : F_(std::move(F)) { F_.validate(); }

Subgroup SpectralSequence::Z(int r, int p, int q) const {
  const Complex& C = F_.ambient();
  const int n = p + q;
  if (C.rank(n) == 0) return Subgroup::zero(0);
  return intersect(F_.level(p, n), preimage(C.d(n), F_.level(p + r, n + 1)));
}

Subgroup SpectralSequence::B(int r, int p, int q) const {
  const Complex& C = F_.ambient();
  const int n = p + q;
  Subgroup lower = Z(r - 1, p + 1, q - 1);
  Subgroup bnd = image(C.d(n - 1), Z(r - 1, p - r + 1, q + r - 2));
  return sum(lower, bnd);
}

int SpectralSequence::infinity_page() const { return F_.p_max() - F_.p_min() + 1; }

const Page& SpectralSequence::page(int r) {
  if (r < 1) throw DomainError("pages start at r = 1");
  auto found = pages_.find(r);
  if (found != pages_.end()) return found->second;
  Page E;
  E.r = r;
  const Complex& C = F_.ambient();
  std::map<Bidegree, Subgroup> denominators;
  if (!C.empty())
    for (int p = F_.p_min(); p <= F_.p_max(); ++p)
      for (int n = C.lo(); n <= C.hi(); ++n) {
        const int q = n - p;
        Subgroup den = B(r, p, q);
        Quotient Q = quotient(Z(r, p, q), den);
        if (!Q.group.is_trivial()) {
          E.entries.emplace(Bidegree{p, q}, std::move(Q));
          denominators.emplace(Bidegree{p, q}, den);
        }
      }
  for (const auto& [pq, src] : E.entries) {
    auto [p, q] = pq;
    auto tgt = E.entries.find(E.target(p, q));
    if (tgt == E.entries.end()) continue;
    const IntMatrix& d = C.d(p + q);
    IntMatrix m = tgt->second.reduce(product(d, src.representatives()));
    // well-definedness: the denominator must map to zero
    IntMatrix killed = tgt->second.reduce(product(d, denominators.at(pq).basis()));
    if (!is_zero(killed))
      throw std::logic_error("d_" + std::to_string(r) + " is not well defined at " + pos(p, q));
    E.differentials.emplace(pq, GroupHom{src.group, tgt->second.group, m});
  }
  for (const auto& [pq, h] : E.differentials) {
    auto next = E.target(pq.first, pq.second);
    if (!compose(E.d(next.first, next.second), h).is_zero())
      throw std::logic_error("d_r d_r is nonzero at " + pos(pq.first, pq.second));
  }
  return pages_.emplace(r, std::move(E)).first->second;
}

std::vector<Page> pages(const FilteredComplex& F, int r_max) {
  SpectralSequence S(F);
  std::vector<Page> out;
  for (int r = 1; r <= r_max; ++r) out.push_back(S.page(r));
  return out;
}

std::vector<std::string> page_consistency(SpectralSequence& S, int r) {
  std::vector<std::string> bad;
  const Page& E = S.page(r);
  const Page& next = S.page(r + 1);
  const FilteredComplex& F = S.filtration();
  const Complex& C = F.ambient();
  if (C.empty()) return bad;
  for (int p = F.p_min(); p <= F.p_max(); ++p)
    for (int n = C.lo(); n <= C.hi(); ++n) {
      const int q = n - p;
      FgAbGroup h = homology_of(E.d(p - r, q + r - 1), E.d(p, q));
      if (!(h == next.group(p, q)))
        bad.push_back("E_" + std::to_string(r + 1) + pos(p, q) + " = " + next.group(p, q).to_string() +
                      " but H(E_" + std::to_string(r) + ") = " + h.to_string());
    }
  return bad;
}

// ---------------------------------------------------------------- convergence

bool ConvergenceReport::converges() const {
  return std::all_of(rows.begin(), rows.end(), [](const ConvergenceRow& r) { return r.match; });
}

ConvergenceReport e_infinity_and_convergence(const FilteredComplex& F) {
  SpectralSequence S(F);
  ConvergenceReport R;
  R.infinity_page = S.infinity_page();
  for (int r = 1; r < R.infinity_page; ++r)
    if (S.page(r).has_nonzero_differential()) R.stabilization = r + 1;
  R.e_infinity = S.page(R.infinity_page);
  const Complex& C = F.ambient();
  if (C.empty()) return R;
  for (int n = C.lo(); n <= C.hi(); ++n) {
    Subgroup Zc = kernel(C.d(n));
    Subgroup Bc = image(C.d(n - 1));
    for (int p = F.p_min(); p <= F.p_max(); ++p) {
      Subgroup top = sum(intersect(F.level(p, n), Zc), Bc);
      Subgroup bottom = sum(intersect(F.level(p + 1, n), Zc), Bc);
      ConvergenceRow row;
      row.n = n;
      row.p = p;
      row.graded_homology = quotient(top, bottom).group;
      row.e_infinity = R.e_infinity.group(p, n - p);
      row.match = row.graded_homology == row.e_infinity;
      R.rows.push_back(row);
    }
  }
  return R;
}

// ---------------------------------------------------------------- décalage

FilteredComplex decalage(const FilteredComplex& F) {
  const Complex& C = F.ambient();
  if (C.empty()) return F;
  const int lo = C.lo(), hi = C.hi();
  const int p0 = F.p_min() - hi - 1, p1 = F.p_max() - lo;
  std::vector<std::vector<Subgroup>> levels;
  for (int p = p0; p <= p1; ++p) {
    std::vector<Subgroup> lv;
    for (int n = lo; n <= hi; ++n)
      lv.push_back(intersect(F.level(p + n, n), preimage(C.d(n), F.level(p + n + 1, n + 1))));
    levels.push_back(lv);
  }
  FilteredComplex out(C, p0, levels);
  out.validate();
  return out;
}

bool pages_match(const Page& A, const Page& B, const Reindex& phi) {
  std::set<Bidegree> hit;
  for (const auto& [pq, Q] : A.entries) {
    Bidegree t = phi(pq.first, pq.second);
    if (!(Q.group == B.group(t.first, t.second))) return false;
    hit.insert(t);
  }
  for (const auto& [pq, Q] : B.entries)
    if (!hit.count(pq)) return false;
  return true;
}

bool e1_row_matches(const Page& E1, const BeilinsonComplex& row, std::string* reason) {
  auto fail = [&](const std::string& why) {
    if (reason) *reason = why;
    return false;
  };
  const int q = -row.n;
  std::map<int, GroupHom> phi;
  for (const auto& [p, g] : row.entries) {
    const Quotient* Q = E1.entry(p, q);
    const IntMatrix& reps = row.representatives.at(p);
    IntMatrix m = Q ? Q->reduce(reps) : int_zeros(0, reps.cols());
    GroupHom f{g, E1.group(p, q), m};
    if (!f.is_isomorphism())
      return fail("E_1" + pos(p, q) + " = " + E1.group(p, q).to_string() +
                  " is not identified with " + g.to_string());
    phi.emplace(p, f);
  }
  for (const auto& [p, g] : E1.entries)
    if (g.group.generators() && p.second == q && !row.entries.count(p.first))
      return fail("E_1" + pos(p.first, p.second) + " has no counterpart");
  for (const auto& [p, h] : row.differentials) {
    if (!phi.count(p) || !phi.count(p + 1)) continue;
    GroupHom lhs = compose(E1.d(p, q), phi.at(p));
    GroupHom rhs = compose(phi.at(p + 1), h);
    if (!lhs.equals(rhs)) return fail("d_1 out of " + pos(p, q) + " differs from the row map");
  }
  return true;
}

}  // namespace cochain
