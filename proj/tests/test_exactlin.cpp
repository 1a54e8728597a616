#include "doctest.h"

#include "cochain/errors.hpp"
#include "cochain/exactlin.hpp"
#include "cochain/random.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace cochain;
using support::mat;
using support::vec;

TEST_SUITE("exactlin") {

TEST_CASE("smith form of a 2x2 example") {
  const IntMatrix M = mat({{2, 4}, {6, 8}});
  const auto S = smith_normal_form(M);
  CHECK(same_matrix(S.D, mat({{2, 0}, {0, 4}})));
  CHECK(same_matrix(product(product(S.U, M), S.V), S.D));
  CHECK(same_matrix(product(S.U, S.U_inv), int_identity(2)));
}

TEST_CASE("smith form of zero and empty matrices") {
  const auto Z = smith_normal_form(int_zeros(3, 2));
  CHECK(Z.rank == 0);
  CHECK(same_matrix(Z.D, int_zeros(3, 2)));
  const auto E = smith_normal_form(int_zeros(0, 4));
  CHECK(E.rank == 0);
  CHECK(E.V.rows() == 4);
}

TEST_CASE("invariant factors agree with determinantal divisors") {
  Rng rng(11);
  for (int k = 0; k < 60; ++k) {
    const IntMatrix M = random_matrix(rng, uniform(rng, 1, 4), uniform(rng, 1, 4), -6, 6);
    const auto d = smith_normal_form(M).diagonal();
    Integer running = 1;
    for (Index j = 1; j <= std::min(M.rows(), M.cols()); ++j) {
      const Integer dj = oracle::determinantal_divisor(M, j);
      if (std::size_t(j) <= d.size()) {
        running *= d[std::size_t(j - 1)];
        CHECK(dj == running);
      } else {
        CHECK(dj == 0);
      }
    }
  }
}

TEST_CASE("rank agrees with rank over a large prime") {
  Rng rng(3);
  for (int k = 0; k < 50; ++k) {
    const IntMatrix M = random_matrix(rng, uniform(rng, 1, 6), uniform(rng, 1, 6), -3, 3);
    CHECK(rank(M) == oracle::rank_mod_p(M, 1000003));
  }
}

TEST_CASE("kernel basis is a saturated basis of the kernel") {
  Rng rng(5);
  for (int k = 0; k < 40; ++k) {
    const IntMatrix M = random_matrix(rng, uniform(rng, 1, 4), uniform(rng, 1, 6), -4, 4);
    const IntMatrix K = kernel_basis(M);
    CHECK(is_zero(product(M, K)));
    CHECK(K.cols() == M.cols() - rank(M));
    for (const auto& d : smith_normal_form(K).diagonal()) CHECK(d == 1);
  }
}

TEST_CASE("subgroup lattice operations") {
  const Subgroup two(1, mat({{2}})), three(1, mat({{3}}));
  CHECK(intersect(two, three) == Subgroup(1, mat({{6}})));
  CHECK(sum(two, three) == Subgroup::full(1));
  CHECK(Subgroup(1, mat({{-4, 6}})) == two);
  CHECK(two.contains(vec({4})));
  CHECK_FALSE(two.contains(vec({3})));
  CHECK(two.contains(Subgroup(1, mat({{6}}))));
  CHECK(saturation(Subgroup(2, mat({{2}, {4}}))) == Subgroup(2, mat({{1}, {2}})));
  // {x : 2x in 6Z} = 3Z
  CHECK(preimage(mat({{2}}), Subgroup(1, mat({{6}}))) == Subgroup(1, mat({{3}})));
  CHECK(kernel(mat({{1, 1}})) == Subgroup(2, mat({{1}, {-1}})));
  CHECK(image(mat({{2, 0}, {0, 3}}), Subgroup(2, mat({{1}, {1}}))) == Subgroup(2, mat({{2}, {3}})));
  CHECK_THROWS_AS(two.coordinates_of(mat({{1}})), ContainmentError);
}

TEST_CASE("subgroup equality is basis independent") {
  Rng rng(17);
  for (int k = 0; k < 30; ++k) {
    const IntMatrix G = random_matrix(rng, 3, uniform(rng, 0, 4), -5, 5);
    const auto [U, Ui] = random_unimodular(rng, G.cols(), 4);
    CHECK(Subgroup(3, G) == Subgroup(3, product(G, U)));
  }
}

TEST_CASE("quotients") {
  SUBCASE("Z^2 / (1,2) is free of rank one") {
    const Quotient Q = quotient(Subgroup::full(2), Subgroup(2, mat({{1}, {2}})));
    CHECK(Q.group == FgAbGroup::free(1));
    CHECK(is_zero(Q.reduce(vec({1, 2}))));
  }
  SUBCASE("Z / 6") {
    const Quotient Q = quotient(Subgroup::full(1), Subgroup(1, mat({{6}})));
    CHECK(Q.group.to_string() == "Z/6");
    CHECK(Q.reduce(vec({7})) == Q.reduce(vec({1})));
  }
  SUBCASE("reduce after lift is the identity") {
    Rng rng(23);
    for (int k = 0; k < 30; ++k) {
      const IntMatrix G = random_matrix(rng, 3, uniform(rng, 0, 3), -4, 4);
      const Subgroup B(3, G);
      const Quotient Q = quotient(Subgroup::full(3), B);
      const IntMatrix back = Q.group.normalize(Q.reduce(Q.representatives()));
      CHECK(same_matrix(back, int_identity(Q.group.generators())));
    }
  }
  SUBCASE("mixed torsion normal form") {
    const Quotient Q = quotient(Subgroup::full(3), Subgroup(3, mat({{2, 0}, {0, 3}, {0, 0}})));
    CHECK(Q.group.to_string() == "Z + Z/6");
  }
}

TEST_CASE("finitely generated abelian groups") {
  const FgAbGroup g = FgAbGroup::from_cyclic(1, {4, 6, 1, 0});
  CHECK(g.free_rank == 2);
  CHECK(g.torsion == std::vector<Integer>{2, 12});
  CHECK(g.to_string() == "Z^2 + Z/2 + Z/12");
  CHECK(direct_sum(FgAbGroup::from_cyclic(0, {2}), FgAbGroup::from_cyclic(0, {3})).to_string() == "Z/6");
  CHECK(FgAbGroup{}.to_string() == "0");
}

TEST_CASE("homology at a spot") {
  CHECK(homology_at(mat({{2}}), int_zeros(0, 1)).to_string() == "Z/2");
  CHECK(homology_at(int_zeros(2, 0), mat({{1, 1}})).to_string() == "Z");
  CHECK_THROWS_AS(homology_at(mat({{1}}), mat({{1}})), NotAComplexError);
  CHECK_THROWS_AS(homology_at(mat({{1}, {0}}), mat({{1}})), DimensionError);
}

TEST_CASE("group homomorphisms") {
  const FgAbGroup Z = FgAbGroup::free(1), Z4 = FgAbGroup::from_cyclic(0, {4});
  const GroupHom twice{Z, Z4, mat({{2}})};
  CHECK(twice.is_well_defined());
  CHECK(twice.image().to_string() == "Z/2");
  CHECK(twice.cokernel().to_string() == "Z/2");
  CHECK(twice.kernel() == Z);
  const GroupHom bad{Z4, Z, mat({{1}})};
  CHECK_FALSE(bad.is_well_defined());
  const GroupHom five{Z4, Z4, mat({{5}})};
  CHECK(five.is_isomorphism());
  CHECK(five.equals(GroupHom{Z4, Z4, mat({{1}})}));
  CHECK(compose(twice, GroupHom{Z, Z, mat({{2}})}).is_zero());
}

}  // TEST_SUITE
