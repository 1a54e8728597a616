#include "doctest.h"

#include "cochain/errors.hpp"
#include "cochain/random.hpp"
#include "cochain/specseq.hpp"
#include "support.hpp"

using namespace cochain;
using support::mat;

namespace {

DoubleComplex two_columns(int k) {
  DoubleComplex D;
  const Complex Z = Complex::concentrated(0, 1);
  D.columns[0] = Z;
  D.columns[1] = Z;
  D.horizontal[0] = ComplexMap(Z, Z, {{0, mat({{k}})}});
  return D;
}

// Same filtered complex written in another basis of each C^n.
FilteredComplex change_basis(Rng& rng, const FilteredComplex& F) {
  const Complex& C = F.ambient();
  if (C.empty()) return F;
  std::map<int, std::pair<IntMatrix, IntMatrix>> U;
  for (int n = C.lo(); n <= C.hi(); ++n) U[n] = random_unimodular(rng, C.rank(n), 3);
  std::vector<Index> ranks;
  std::vector<IntMatrix> diffs;
  for (int n = C.lo(); n <= C.hi(); ++n) {
    ranks.push_back(C.rank(n));
    if (n < C.hi()) diffs.push_back(product(product(U[n + 1].first, C.d(n)), U[n].second));
  }
  const Complex D(C.lo(), ranks, diffs);
  std::vector<std::vector<Subgroup>> levels;
  for (int p = F.p_min(); p <= F.p_max(); ++p) {
    std::vector<Subgroup> row;
    for (int n = C.lo(); n <= C.hi(); ++n) row.push_back(Subgroup(C.rank(n), product(U[n].first, F.level(p, n).basis())));
    levels.push_back(row);
  }
  return FilteredComplex(D, F.p_min(), levels);
}

std::map<Bidegree, FgAbGroup> groups(const Page& E) {
  std::map<Bidegree, FgAbGroup> out;
  for (const auto& [b, Q] : E.entries)
    if (!Q.group.is_trivial()) out[b] = Q.group;
  return out;
}

}  // namespace

TEST_SUITE("specseq") {

TEST_CASE("two columns joined by 2") {
  SpectralSequence S(piling(two_columns(2)));
  const Page& E1 = S.page(1);
  CHECK(E1.group(0, 0) == FgAbGroup::free(1));
  CHECK(E1.group(1, 0) == FgAbGroup::free(1));
  CHECK(E1.d(0, 0).equals(GroupHom{E1.group(0, 0), E1.group(1, 0), mat({{2}})}));
  const Page& E2 = S.page(2);
  CHECK(groups(E2) == std::map<Bidegree, FgAbGroup>{{{1, 0}, FgAbGroup::from_cyclic(0, {2})}});
  // Oracle: the total complex is the cone of multiplication by 2.
  const Complex Z = Complex::concentrated(0, 1);
  CHECK(at(homology(cone(ComplexMap(Z, Z, {{0, mat({{2}})}}))), 0) == E2.group(1, 0));
}

TEST_CASE("acyclic columns give empty pages") {
  DoubleComplex D;
  const Complex A(0, {1, 1}, {mat({{1}})});
  D.columns = {{0, A}, {1, A}};
  D.horizontal[0] = ComplexMap::identity(A);
  for (const Page& E : pages(piling(D), 3)) CHECK(groups(E).empty());
}

TEST_CASE("a d_2 that is visible only on E_2") {
  // Z --1--> Z with the target placed two filtration steps above the source.
  const Complex C(0, {1, 1}, {mat({{1}})});
  const FilteredComplex F(C, 0, {{Subgroup::full(1), Subgroup::full(1)},
                                 {Subgroup::zero(1), Subgroup::full(1)},
                                 {Subgroup::zero(1), Subgroup::full(1)}});
  SpectralSequence S(F);
  CHECK(S.page(1).group(0, 0) == FgAbGroup::free(1));
  CHECK(S.page(1).group(2, -1) == FgAbGroup::free(1));
  CHECK_FALSE(S.page(1).has_nonzero_differential());
  CHECK(S.page(2).d(0, 0).is_isomorphism());
  CHECK(groups(S.page(3)).empty());
  CHECK(e_infinity_and_convergence(F).stabilization == 3);
}

TEST_CASE("pages are independent of the chosen bases") {
  Rng rng(53);
  for (int k = 0; k < 25; ++k) {
    const FilteredComplex F = random_mono_filtration(rng);
    const FilteredComplex G = change_basis(rng, F);
    G.validate();
    SpectralSequence SF(F), SG(G);
    for (int r = 1; r <= 3; ++r) {
      CHECK(groups(SF.page(r)) == groups(SG.page(r)));
      // rank of each d_r is basis independent too
      for (const auto& [b, h] : SF.page(r).differentials) CHECK(h.image() == SG.page(r).d(b.first, b.second).image());
    }
  }
}

TEST_CASE("E_infinity ranks add up to the ranks of H") {
  Rng rng(59);
  for (int k = 0; k < 25; ++k) {
    const FilteredComplex F = random_mono_filtration(rng);
    const ConvergenceReport R = e_infinity_and_convergence(F);
    CHECK(R.converges());
    const GradedGroup H = homology(F.ambient());
    std::map<int, Index> ranks;
    for (const auto& [b, Q] : R.e_infinity.entries) ranks[b.first + b.second] += Q.group.free_rank;
    for (const auto& [n, g] : H) CHECK(ranks[n] == g.free_rank);
  }
}

TEST_CASE("page consistency on random filtrations") {
  Rng rng(61);
  for (int k = 0; k < 25; ++k) {
    SpectralSequence S(random_mono_filtration(rng));
    for (int r = 1; r <= S.infinity_page(); ++r) CHECK(page_consistency(S, r).empty());
  }
}

TEST_CASE("decalage shifts pages by one") {
  Rng rng(67);
  const Reindex phi = [](int p, int q) { return Bidegree{2 * p + q, -p}; };
  const Reindex wrong = [](int p, int q) { return Bidegree{p, q}; };
  int rejected = 0;
  for (int k = 0; k < 25; ++k) {
    const FilteredComplex F = random_mono_filtration(rng);
    const FilteredComplex D = decalage(F);
    D.validate();
    CHECK(D.ambient() == F.ambient());
    SpectralSequence SD(D), SF(F);
    for (int r = 1; r <= 3; ++r) {
      CHECK(pages_match(SD.page(r), SF.page(r + 1), phi));
      rejected += !pages_match(SD.page(r), SF.page(r + 1), wrong);
    }
  }
  CHECK(rejected > 0);
}

TEST_CASE("E_1 rows of a piling are the column homology complexes") {
  Rng rng(71);
  for (int k = 0; k < 15; ++k) {
    const DoubleComplex D = random_double_complex(rng);
    const FilteredComplex F = piling(D);
    SpectralSequence S(F);
    for (int n = -6; n <= 6; ++n) {
      std::string why;
      CHECK_MESSAGE(e1_row_matches(S.page(1), beilinson_pi(F, n), &why), why);
    }
  }
}

}  // TEST_SUITE
