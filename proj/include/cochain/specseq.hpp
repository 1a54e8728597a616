#pragma once

#include "cochain/filtered.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cochain {

using Bidegree = std::pair<int, int>;

/// One page E_r with d_r : E_r^{p,q} -> E_r^{p+r,q-r+1}. Only nonzero
/// entries are stored; differentials only between stored entries.
struct Page {
  int r = 1;
  /// E_r^{p,q} = Z_r^{p,q} / (Z_{r-1}^{p+1,q-1} + d Z_{r-1}^{p-r+1,q+r-2}).
  std::map<Bidegree, Quotient> entries;
  std::map<Bidegree, GroupHom> differentials;

  FgAbGroup group(int p, int q) const;
  const Quotient* entry(int p, int q) const;
  /// d_r out of (p,q); the zero homomorphism when nothing is stored.
  GroupHom d(int p, int q) const;
  Bidegree target(int p, int q) const { return {p + r, q - r + 1}; }
  bool has_nonzero_differential() const;
};

/// Spectral sequence of a filtration by subcomplexes, from Z_r/B_r formulas.
class SpectralSequence {
 public:
  explicit SpectralSequence(FilteredComplex F);

  const FilteredComplex& filtration() const { return F_; }
  /// Z_r^{p,q} = F^p C^{p+q} ∩ d^{-1}(F^{p+r} C^{p+q+1}).
  Subgroup Z(int r, int p, int q) const;
  /// Denominator Z_{r-1}^{p+1,q-1} + d Z_{r-1}^{p-r+1,q+r-2}.
  Subgroup B(int r, int p, int q) const;

  const Page& page(int r);
  /// Page index beyond which every differential vanishes for support reasons.
  int infinity_page() const;

 private:
  FilteredComplex F_;
  std::map<int, Page> pages_;
};

std::vector<Page> pages(const FilteredComplex& F, int r_max);

/// E_{r+1}^{p,q} versus H(E_r, d_r) at every position; mismatches reported.
std::vector<std::string> page_consistency(SpectralSequence& S, int r);

struct ConvergenceRow {
  int n = 0, p = 0;
  FgAbGroup e_infinity;
  FgAbGroup graded_homology;  // gr^p of the induced filtration on H^n
  bool match = false;
};

struct ConvergenceReport {
  int stabilization = 1;  // first page after the last nonzero differential
  int infinity_page = 1;
  Page e_infinity;
  std::vector<ConvergenceRow> rows;
  bool converges() const;
};

ConvergenceReport e_infinity_and_convergence(const FilteredComplex& F);

/// (Dec F)^p C^n = F^{p+n} C^n ∩ d^{-1}(F^{p+n+1} C^{n+1}).
FilteredComplex decalage(const FilteredComplex& F);

using Reindex = std::function<Bidegree(int, int)>;

/// A(p,q) == B(phi(p,q)) on A's support, and phi hits every nonzero entry of B.
bool pages_match(const Page& A, const Page& B, const Reindex& phi);

/// Compare a row complex (groups, ambient representatives, maps) with the
/// row q = -row.n of E_1 through the isomorphism induced by representatives.
bool e1_row_matches(const Page& E1, const BeilinsonComplex& row, std::string* reason = nullptr);

}  // namespace cochain
