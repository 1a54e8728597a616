#include "doctest.h"

#include "cochain/barcobar.hpp"
#include "cochain/errors.hpp"

using namespace cochain;

namespace {

using Coproduct = std::map<std::pair<int, int>, Integer>;

FgAbGroup Z() { return FgAbGroup::free(1); }

}  // namespace

TEST_SUITE("barcobar") {

TEST_CASE("skeleton coalgebras") {
  CHECK(skeleton_coalgebra(0).basis.empty());
  const CoalgebraData C2 = skeleton_coalgebra(2);
  CHECK(C2.coproduct[1] == Coproduct{{{0, 0}, 1}});
  const CoalgebraData C4 = skeleton_coalgebra(4);
  C4.validate();
  CHECK(C4.basis[3].topdeg == 4);
  CHECK(C4.basis[3].weight == 4);
  CHECK(C4.coproduct[3] == Coproduct{{{0, 2}, 1}, {{1, 1}, 1}, {{2, 0}, 1}});
  CHECK(C4.diff[3].empty());
}

TEST_CASE("coalgebra validation") {
  CoalgebraData C = skeleton_coalgebra(3);
  C.coproduct[2] = Coproduct{{{0, 1}, 1}};
  CHECK_THROWS(C.validate());
  CoalgebraData D = skeleton_coalgebra(2);
  D.basis[0].weight = 0;
  CHECK_THROWS_AS(D.validate(), ValidationError);
}

TEST_CASE("cobar") {
  SUBCASE("cobar of skeleta is Lambda^(n)") {
    for (int n = 1; n <= 6; ++n) CHECK(cobar(skeleton_coalgebra(n)) == lambda_n(n));
  }
  SUBCASE("generator names and degrees") {
    const FreeDga A = cobar(skeleton_coalgebra(2));
    CHECK(A.generators()[1].name == "s^-1x2");
    CHECK(A.generators()[1].topdeg == 1);
  }
  SUBCASE("square-zero coalgebra gives a free dga with d = 0") {
    CoalgebraData C;
    C.basis = {{"x", 1, 3}};
    C.coproduct = {Coproduct{}};
    C.diff = {SparseVec{}};
    const FreeDga A = cobar(C);
    REQUIRE(A.generators().size() == 1);
    CHECK(A.generators()[0].topdeg == 0);
    CHECK(A.generators()[0].weight == 3);
    CHECK(A.d_generator(0).is_zero());
  }
  SUBCASE("counit only") {
    const FreeDga A = cobar(CoalgebraData{});
    CHECK(A.generators().empty());
    CHECK(homology_table(A, 3) == BigradedTable{{{0, 0}, Z()}});
  }
}

TEST_CASE("bar") {
  SUBCASE("bar of Z") {
    CHECK(bar(AlgebraData::trivial(4)).basis.empty());
  }
  SUBCASE("bar of the free algebra on one generator") {
    const AlgebraData A = AlgebraData::from_free_dga(FreeDga({{"x", 0, 1}}, {NcPoly{}}), 5);
    A.validate();
    const CoalgebraData B = bar(A, 5);
    B.validate();
    CHECK(bar_homology_table(B, 5) == BigradedTable{{{0, 0}, Z()}, {{1, 1}, Z()}});
  }
  SUBCASE("bar of the exterior algebra is the full skeleton") {
    const CoalgebraData B = bar(AlgebraData::exterior(8), 8);
    BigradedTable expected;
    for (int i = 0; i <= 8; ++i) expected[{i, i}] = Z();
    CHECK(bar_homology_table(B, 8) == expected);
    CHECK(B == skeleton_coalgebra(8));
  }
  SUBCASE("bar of Lambda^(2) passes its own checks") {
    const CoalgebraData B = bar(AlgebraData::from_free_dga(lambda_n(2), 5), 5);
    B.validate();
    // Elements are ordered by weight, then topdeg.
    for (std::size_t i = 1; i < B.basis.size(); ++i)
      CHECK(std::pair{B.basis[i - 1].weight, B.basis[i - 1].topdeg} <= std::pair{B.basis[i].weight, B.basis[i].topdeg});
  }
}

TEST_CASE("algebra data") {
  const AlgebraData E = AlgebraData::exterior(4);
  E.validate();
  CHECK(E.product(0, 0).empty());
  CHECK(homology_table(E) == BigradedTable{{{0, 0}, Z()}, {{0, 1}, Z()}});
  const AlgebraData L = AlgebraData::from_free_dga(lambda_n(2), 4);
  L.validate();
  CHECK(homology_table(L) == homology_table(lambda_n(2), 4));
}

TEST_CASE("bar-cobar round trip at homology level") {
  for (const AlgebraData& A : {AlgebraData::trivial(4), AlgebraData::exterior(4),
                               AlgebraData::from_free_dga(lambda_n(2), 4),
                               AlgebraData::from_free_dga(lambda_n(3), 4)}) {
    const BarCobarReport R = bar_cobar_homology_check(A, 4);
    CHECK(R.ok());
    CHECK(R.algebra == R.cobar_bar);
  }
}

}  // TEST_SUITE
