#include "doctest.h"

#include "cochain/complex.hpp"
#include "cochain/errors.hpp"
#include "cochain/random.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace cochain;
using support::mat;

namespace {

// Z --k--> Z in degrees 0, 1.
Complex multiplication(int k) { return Complex(0, {1, 1}, {mat({{k}})}); }

void check_universal_coefficients(const Complex& C) {
  const GradedGroup H = homology(C);
  if (C.empty()) return;
  for (long p : {2L, 3L, 5L})
    for (int n = C.lo() - 1; n <= C.hi() + 1; ++n)
      CHECK(oracle::betti_mod_p(C, n, p) == oracle::predicted_betti_mod_p(H, n, p));
}

}  // namespace

TEST_SUITE("complexes") {

TEST_CASE("shape checks and d^2") {
  CHECK_THROWS_AS(Complex(0, {1, 2}, {mat({{1}})}), DimensionError);
  const Complex bad(0, {1, 1, 1}, {mat({{1}}), mat({{1}})});
  CHECK_FALSE(bad.is_valid());
  try {
    bad.validate();
    FAIL("validate should throw");
  } catch (const NotAComplexError& e) {
    CHECK(e.degree == 0);
  }
  CHECK(Complex(0, {0, 2, 0}, {int_zeros(2, 0), int_zeros(0, 2)}) == Complex::concentrated(1, 2));
}

TEST_CASE("homology of small complexes") {
  CHECK(at(homology(multiplication(2)), 1).to_string() == "Z/2");
  CHECK(at(homology(multiplication(0)), 0) == FgAbGroup::free(1));
  CHECK(homology(multiplication(1)).empty());
  CHECK(homology(Complex{}).empty());
}

TEST_CASE("random homology matches universal coefficients over F_p") {
  Rng rng(101);
  for (int k = 0; k < 40; ++k) check_universal_coefficients(random_complex(rng));
}

TEST_CASE("shift re-indexes homology and flips signs") {
  Rng rng(7);
  for (int k = 0; k < 20; ++k) {
    const Complex C = random_complex(rng);
    for (int s : {-2, -1, 1, 3}) {
      const Complex S = shift(C, s);
      S.validate();
      for (int n = C.lo() - 4; n <= C.hi() + 4; ++n) CHECK(at(homology(S), n) == at(homology(C), n + s));
      if (!C.empty() && C.hi() > C.lo())
        CHECK(same_matrix(S.d(C.lo() - s), (s % 2 == 0 ? Integer(1) : Integer(-1)) * C.d(C.lo())));
    }
  }
}

TEST_CASE("cones") {
  SUBCASE("cone of multiplication by 2 on Z") {
    const Complex Z = Complex::concentrated(0, 1);
    const Complex K = cone(ComplexMap(Z, Z, {{0, mat({{2}})}}));
    CHECK(K.lo() == -1);
    CHECK(at(homology(K), 0).to_string() == "Z/2");
    CHECK(at(homology(K), -1).is_trivial());
  }
  SUBCASE("cone of an identity is acyclic") {
    Rng rng(9);
    for (int k = 0; k < 20; ++k) {
      const Complex C = random_complex(rng);
      CHECK(trimmed(homology(cone(ComplexMap::identity(C)))).empty());
    }
  }
  SUBCASE("Euler characteristic of cone and fiber") {
    Rng rng(19);
    for (int k = 0; k < 20; ++k) {
      const Complex C = random_complex(rng);
      const ComplexMap f = ComplexMap::zero(C, shift(C, 1));
      CHECK(oracle::euler_characteristic(cone(f)) ==
            oracle::euler_characteristic(f.target) - oracle::euler_characteristic(f.source));
      CHECK(trimmed(homology(fiber(f))).size() == trimmed(homology(cone(f))).size());
    }
  }
}

TEST_CASE("chain maps") {
  const Complex A = multiplication(2), B = multiplication(4);
  const ComplexMap f(A, B, {{0, mat({{1}})}, {1, mat({{2}})}});
  CHECK(f.is_valid());
  const ComplexMap g(A, B, {{0, mat({{1}})}, {1, mat({{1}})}});
  CHECK_THROWS_AS(g.validate(), NotAComplexError);
  const auto H = induced_map(f);
  CHECK(H.at(1).source.to_string() == "Z/2");
  CHECK(H.at(1).target.to_string() == "Z/4");
  CHECK(H.at(1).equals(GroupHom{H.at(1).source, H.at(1).target, mat({{2}})}));
  const auto I = induced_map(ComplexMap::identity(B));
  CHECK(I.at(1).equals(GroupHom{I.at(1).source, I.at(1).target, mat({{1}})}));
  CHECK(same_matrix(compose(ComplexMap::identity(B), f).f(0), f.f(0)));
}

TEST_CASE("tensor products satisfy Kunneth over F_p") {
  Rng rng(29);
  for (int k = 0; k < 20; ++k) {
    const Complex C = random_complex(rng, {3, 3, 4}), D = random_complex(rng, {3, 3, 4});
    const Complex T = tensor(C, D);
    T.validate();
    for (long p : {2L, 3L})
      for (int n = C.lo() + D.lo(); n <= C.hi() + D.hi(); ++n) {
        Index expected = 0;
        for (int s = C.lo(); s <= C.hi(); ++s)
          expected += oracle::betti_mod_p(C, s, p) * oracle::betti_mod_p(D, n - s, p);
        CHECK(oracle::betti_mod_p(T, n, p) == expected);
      }
  }
  CHECK(at(homology(tensor(multiplication(2), multiplication(2))), 1).to_string() == "Z/2");
  CHECK(at(homology(tensor(multiplication(2), multiplication(2))), 2).to_string() == "Z/2");
}

TEST_CASE("brutal truncations") {
  const Complex C(0, {1, 1, 1}, {mat({{2}}), mat({{0}})});
  const Complex low = truncate_brutal(C, Truncation::AtMost, 1);
  CHECK(low.hi() == 1);
  CHECK(at(homology(low), 1).to_string() == "Z/2");
  const Complex high = truncate_brutal(C, Truncation::AtLeast, 1);
  CHECK(at(homology(high), 1) == FgAbGroup::free(1));
}

TEST_CASE("total cofiber of spine cubes") {
  SUBCASE("a = 1 is the cone") {
    const Complex Z = Complex::concentrated(0, 1);
    const ComplexMap f(Z, Z, {{0, mat({{3}})}});
    CHECK(trimmed(homology(total_cofiber(spine_cube({f})))) == trimmed(homology(cone(f))));
  }
  SUBCASE("random spines") {
    Rng rng(31);
    for (int k = 0; k < 15; ++k) {
      const auto maps = random_spine(rng, uniform(rng, 1, 3));
      const Cube K = spine_cube(maps);
      K.validate();
      CHECK(trimmed(homology(total_cofiber(K))) == trimmed(homology(iterated_cofiber(maps))));
    }
  }
  SUBCASE("non-commuting faces are rejected") {
    const Complex Z = Complex::concentrated(0, 1);
    Cube K;
    K.dimension = 2;
    K.vertices = {Z, Z, Z, Z};
    K.edges[{0u, 0}] = ComplexMap::identity(Z);
    K.edges[{1u, 1}] = ComplexMap::identity(Z);
    K.edges[{0u, 1}] = ComplexMap::identity(Z);
    K.edges[{2u, 0}] = ComplexMap(Z, Z, {{0, mat({{2}})}});
    CHECK_THROWS_AS(K.validate(), ValidationError);
  }
}

}  // TEST_SUITE
