#include "doctest.h"

#include "cochain/errors.hpp"
#include "cochain/filtered.hpp"
#include "cochain/random.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace cochain;
using support::mat;

namespace {

// Z --2--> Z with F^1 = 0 + Z: the jump sits in degree 1 only.
FilteredComplex torsion_example() {
  const Complex C(0, {1, 1}, {mat({{2}})});
  return FilteredComplex(C, 0, {{Subgroup::full(1), Subgroup::full(1)}, {Subgroup::zero(1), Subgroup::full(1)}});
}

// Z in degree 0 with F^1 = 2Z, so gr^0 = Z/2 in the naive sense.
FilteredComplex doubled_example() {
  const Complex C = Complex::concentrated(0, 1);
  return FilteredComplex(C, 0, {{Subgroup::full(1)}, {Subgroup(1, mat({{2}}))}});
}

DoubleComplex two_columns(int k) {
  DoubleComplex D;
  const Complex Z = Complex::concentrated(0, 1);
  D.columns[0] = Z;
  D.columns[1] = Z;
  D.horizontal[0] = ComplexMap(Z, Z, {{0, mat({{k}})}});
  return D;
}

}  // namespace

TEST_SUITE("filtered") {

TEST_CASE("levels and boundary conventions") {
  const FilteredComplex F = torsion_example();
  F.validate();
  CHECK(F.level(-5, 0).is_full());
  CHECK(F.level(1, 0).is_zero());
  CHECK(F.level(2, 1).is_zero());
  CHECK(FilteredComplex::constant(F.ambient(), 3).level(3, 1).is_full());
  CHECK(FilteredComplex::constant(F.ambient(), 3).level(4, 1).is_zero());
}

TEST_CASE("validation names the failed invariant") {
  const Complex C(0, {1, 1}, {mat({{2}})});
  auto invariant = [](const FilteredComplex& F) {
    try {
      F.validate();
    } catch (const ValidationError& e) {
      return e.invariant;
    }
    return std::string("none");
  };
  CHECK(invariant(FilteredComplex(C, 0, {{Subgroup::zero(1), Subgroup::full(1)}})) == "exhaustive");
  CHECK(invariant(FilteredComplex(C, 0, {{Subgroup::full(1), Subgroup::full(1)}, {Subgroup::full(1), Subgroup::zero(1)}})) ==
        "d-stable");
  CHECK(invariant(FilteredComplex(C, 0,
                                  {{Subgroup::full(1), Subgroup::full(1)},
                                   {Subgroup::zero(1), Subgroup(1, mat({{2}}))},
                                   {Subgroup::zero(1), Subgroup::full(1)}})) == "decreasing");
  CHECK(invariant(torsion_example()) == "none");
}

TEST_CASE("subquotients") {
  const FilteredComplex F = torsion_example();
  CHECK_THROWS_AS(subquotient(F, 1, 0), OrderError);
  const Complex g0 = graded_piece(F, 0), g1 = graded_piece(F, 1);
  CHECK(trimmed(homology(g0)) == GradedGroup{{0, FgAbGroup::free(1)}});
  CHECK(trimmed(homology(g1)) == GradedGroup{{1, FgAbGroup::free(1)}});
  CHECK(is_split(F));

  const FilteredComplex T = doubled_example();
  CHECK_FALSE(is_split(T));
  const Subquotient S = subquotient(T, 0, 1);
  CHECK(S.cone_model);
  CHECK(trimmed(homology(S.complex)) == GradedGroup{{0, FgAbGroup::from_cyclic(0, {2})}});
}

TEST_CASE("Euler characteristic is additive over graded pieces") {
  Rng rng(41);
  for (int k = 0; k < 30; ++k) {
    const FilteredComplex F = random_mono_filtration(rng);
    int chi = 0;
    for (int p = F.p_min(); p <= F.p_max(); ++p) chi += oracle::euler_characteristic(graded_piece(F, p));
    CHECK(chi == oracle::euler_characteristic(F.ambient()));
  }
}

TEST_CASE("double complexes") {
  SUBCASE("total complex of two columns is the cone up to shift") {
    const DoubleComplex D = two_columns(3);
    const Complex T = total_complex(D);
    CHECK(T.lo() == 0);
    CHECK(T.hi() == 1);
    CHECK(at(homology(T), 1).to_string() == "Z/3");
  }
  SUBCASE("degenerate double complexes") {
    const Complex C(0, {1, 1}, {mat({{5}})});
    CHECK(trimmed(total_homology(DoubleComplex::degenerate(C))) == trimmed(homology(C)));
  }
  SUBCASE("horizontal composites must vanish") {
    DoubleComplex D;
    const Complex Z = Complex::concentrated(0, 1);
    D.columns = {{0, Z}, {1, Z}, {2, Z}};
    D.horizontal[0] = ComplexMap::identity(Z);
    D.horizontal[1] = ComplexMap::identity(Z);
    CHECK_THROWS(D.validate());
  }
  SUBCASE("piling graded pieces are shifted columns") {
    Rng rng(43);
    for (int k = 0; k < 20; ++k) {
      const DoubleComplex D = random_double_complex(rng);
      const FilteredComplex F = piling(D);
      F.validate();
      for (int p = D.i_min(); p <= D.i_max(); ++p) CHECK(graded_piece(F, p) == shift(D.column(p), -p));
    }
  }
}

TEST_CASE("towers and completion") {
  const Complex Z = Complex::concentrated(0, 1);
  GenFilteredComplex G;
  G.p_min = 0;
  G.levels = {Z, Z};
  G.maps = {ComplexMap(Z, Z, {{0, mat({{2}})}})};
  G.validate();
  CHECK(at(homology(graded_piece(G, 0)), 0).to_string() == "Z/2");
  CHECK(trimmed(homology(graded_piece(G, 1))) == GradedGroup{{0, FgAbGroup::free(1)}});

  SUBCASE("zero top: completion keeps homology") {
    const GenFilteredComplex C = completion(G);
    for (int p = 0; p <= 1; ++p) CHECK(trimmed(homology(C.level(p))) == trimmed(homology(G.level(p))));
  }
  SUBCASE("constant top: the limit is removed") {
    G.constant_top = true;
    const GenFilteredComplex C = completion(G);
    CHECK_FALSE(C.constant_top);
    CHECK(trimmed(homology(C.level(1))).empty());
    CHECK(at(homology(C.level(0)), 0).to_string() == "Z/2");
  }
}

TEST_CASE("Day convolution") {
  const FilteredComplex F = torsion_example();
  CHECK(day_convolution(F, day_unit()) == F);
  CHECK(day_convolution(day_unit(), F) == F);
  CHECK_THROWS_AS(day_convolution(doubled_example(), F), ModelError);
  const FilteredComplex FF = day_convolution(F, F);
  FF.validate();
  CHECK(FF.p_min() == 0);
  CHECK(FF.p_max() == 2);
  CHECK(trimmed(homology(graded_piece(FF, 1))) == GradedGroup{{1, FgAbGroup::free(2)}});
}

TEST_CASE("Beilinson rows") {
  const FilteredComplex F = piling(two_columns(2));
  const BeilinsonComplex B = beilinson_pi(F, 0);
  CHECK(B.entries.at(0) == FgAbGroup::free(1));
  CHECK(B.entries.at(1) == FgAbGroup::free(1));
  CHECK(B.differentials.at(0).equals(GroupHom{B.entries.at(0), B.entries.at(1), mat({{2}})}));
}

}  // TEST_SUITE
