#include "doctest.h"

#include "cochain/errors.hpp"
#include "cochain/random.hpp"
#include "cochain/serialize.hpp"
#include "support.hpp"

#include <fstream>
#include <sstream>

using namespace cochain;
using support::mat;

namespace {

json fixture(const std::string& name) {
  std::ifstream in(std::string(COCHAIN_TEST_DATA) + "/" + name);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str());
}

// Serialize, print, parse back.
json reparse(const json& j) { return parse_json_text(j.dump()); }

std::string pointer_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const InputError& e) {
    return e.pointer;
  }
  return "<no error>";
}

}  // namespace

TEST_SUITE("serialize") {

TEST_CASE("integers") {
  CHECK(integer_from_json(json(-17), "") == -17);
  const Integer big = parse_integer("123456789012345678901234567890");
  CHECK(integer_from_json(to_json(big), "") == big);
  CHECK_THROWS_AS(integer_from_json(json("12x"), "/a"), InputError);
  CHECK_THROWS_AS(integer_from_json(json(1.5), "/a"), InputError);
}

TEST_CASE("random round trips") {
  Rng rng(83);
  for (int k = 0; k < 20; ++k) {
    const Complex C = random_complex(rng);
    CHECK(complex_from_json(reparse(to_json(C))) == C);

    const FilteredComplex F = random_mono_filtration(rng);
    CHECK(filtered_from_json(reparse(to_json(F))) == F);

    const DoubleComplex D = random_double_complex(rng);
    const DoubleComplex D2 = double_from_json(reparse(to_json(D)));
    CHECK(total_complex(D2) == total_complex(D));
    CHECK(piling(D2) == piling(D));

    const ComplexMap f = ComplexMap::identity(C);
    const ComplexMap g = map_from_json(reparse(to_json(f)));
    CHECK(g.source == C);
    for (const auto& [n, m] : f.components) CHECK(same_matrix(g.f(n), m));

    SpectralSequence S(F);
    const Page& E = S.page(2);
    CHECK(page_table_from_json(reparse(to_json(E))) == page_table(E));

    const ConvergenceReport R = e_infinity_and_convergence(F);
    CHECK(convergence_table_from_json(reparse(to_json(R))) == convergence_table(R));

    const GradedGroup H = homology(C);
    CHECK(graded_group_from_json(reparse(to_json(H))) == H);
  }
}

TEST_CASE("tower round trip") {
  const Complex Z = Complex::concentrated(0, 1);
  GenFilteredComplex G;
  G.levels = {Z, Z, Z};
  G.maps = {ComplexMap(Z, Z, {{0, mat({{2}})}}), ComplexMap::identity(Z)};
  G.constant_top = true;
  const GenFilteredComplex H = gen_filtered_from_json(reparse(to_json(G)));
  CHECK(H.p_min == G.p_min);
  CHECK(H.constant_top);
  REQUIRE(H.maps.size() == 2);
  CHECK(same_matrix(H.maps[0].f(0), mat({{2}})));
}

TEST_CASE("dga and table round trips") {
  const FreeDga L = lambda_n(4);
  CHECK(dga_from_json(reparse(to_json(L))) == L);
  const FreeDga C = cobar(skeleton_coalgebra(3));
  CHECK(dga_from_json(reparse(to_json(C))) == C);
  const BigradedTable T = homology_table(L, 6);
  CHECK(table_from_json(reparse(to_json(T))) == T);
  CHECK(to_json(T).begin().key() == "0,0");
  const FreeDga F = dga_from_json(fixture("lambda2.json"));
  CHECK(F == lambda_n(2));
}

TEST_CASE("fixtures") {
  SUBCASE("two columns") {
    const DoubleComplex D = double_from_json(fixture("two_column.json"));
    SpectralSequence S(piling(D));
    const Page& E2 = S.page(2);
    CHECK(E2.group(1, 0).to_string() == "Z/2");
  }
  SUBCASE("torsion filtration") {
    const FilteredComplex F = filtered_from_json(fixture("filtered_torsion.json"));
    CHECK(e_infinity_and_convergence(F).converges());
  }
  SUBCASE("d^2 != 0 names the invariant") {
    try {
      filtered_from_json(fixture("not_a_complex.json"));
      FAIL("expected a validation error");
    } catch (const ValidationError& e) {
      CHECK(e.invariant == "d^2 = 0");
    }
  }
  SUBCASE("shape errors carry a pointer") {
    CHECK(pointer_of([] { filtered_from_json(fixture("bad_shape.json")); }) == "/differentials/0/0");
  }
}

TEST_CASE("schema violations") {
  CHECK(pointer_of([] { complex_from_json(json::object()); }) == "/support");
  CHECK(pointer_of([] { complex_from_json(parse_json_text(R"({"support":[0,1],"ranks":{"5":1}})")); }) ==
        "/ranks/5");
  CHECK(pointer_of([] { complex_from_json(parse_json_text(R"({"support":[0,1],"ranks":{"x":1}})")); }) ==
        "/ranks/x");
  CHECK(pointer_of([] { group_from_json(parse_json_text(R"({"rank":1,"torsion":[4,6]})")); }) == "/torsion/1");
  CHECK(pointer_of([] {
          dga_from_json(parse_json_text(R"({"generators":[{"name":"a","topdeg":0,"weight":1,
                                            "d":[{"word":["b"],"coeff":1}]}]})"));
        }) == "/generators/0/d/0/word/0");
  CHECK(pointer_of([] { parse_json_text("{"); }) == "");
  CHECK(pointer_of([] {
          double_from_json(parse_json_text(R"({"columns":{"0":{"support":[0,0],"ranks":{"0":1}}},
                                               "horizontal":{"0":{"components":{}}}})"));
        }) == "/horizontal/0");
}

TEST_CASE("empty complexes") {
  const json j = to_json(Complex{});
  CHECK(j["support"] == json::array({0, -1}));
  CHECK(complex_from_json(j).empty());
}

}  // TEST_SUITE
