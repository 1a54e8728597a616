#include "doctest.h"

#include "cochain/errors.hpp"
#include "cochain/koszul.hpp"
#include "cochain/random.hpp"

using namespace cochain;

namespace {

NcPoly random_element(Rng& rng, const FreeDga& A, int t, int w) {
  NcPoly x;
  auto W = A.words(w);
  for (const Word& word : W[t]) x.add(word, uniform(rng, -2, 2));
  return x;
}

// Compositions of w with parts in [1, n].
long compositions(int w, int n) {
  std::vector<long> c(std::size_t(w + 1), 0);
  c[0] = 1;
  for (int k = 1; k <= w; ++k)
    for (int part = 1; part <= std::min(k, n); ++part) c[std::size_t(k)] += c[std::size_t(k - part)];
  return c[std::size_t(w)];
}

}  // namespace

TEST_SUITE("koszul") {

TEST_CASE("Lambda^(n) generators and differentials") {
  CHECK_THROWS_AS(lambda_n(0), DomainError);
  const FreeDga L = lambda_n(3);
  REQUIRE(L.generators().size() == 3);
  CHECK(L.generators()[2].topdeg == 2);
  CHECK(L.generators()[2].weight == 3);
  CHECK(L.to_string(L.d_generator(0)) == "0");
  CHECK(L.to_string(L.d_generator(1)) == "e1*e1");
  CHECK(L.to_string(L.d_generator(2)) == "e1*e2 - e2*e1");
}

TEST_CASE("construction checks") {
  SUBCASE("inhomogeneous differential") {
    CHECK_THROWS_AS(FreeDga({{"a", 0, 1}, {"b", 1, 1}}, {NcPoly{}, NcPoly::word({0, 0})}), GradingError);
  }
  SUBCASE("d^2 != 0") {
    std::vector<Generator> g{{"e1", 0, 1}, {"e2", 1, 2}, {"e3", 2, 3}};
    std::vector<NcPoly> d{NcPoly{}, NcPoly::word({0, 0}), NcPoly::word({0, 1})};
    try {
      FreeDga A(g, d);
      FAIL("expected a validation error");
    } catch (const ValidationError& e) {
      CHECK(e.invariant == "d^2 = 0");
    }
  }
  SUBCASE("weights must be positive") {
    CHECK_THROWS_AS(FreeDga({{"a", 0, 0}}, {NcPoly{}}), DomainError);
  }
  SUBCASE("bidegree of inhomogeneous elements") {
    const FreeDga L = lambda_n(2);
    CHECK_THROWS_AS(L.bidegree(NcPoly::word({0}) + NcPoly::word({1})), GradingError);
    CHECK(L.bidegree(NcPoly::word({1, 0})) == std::pair{1, 3});
  }
}

TEST_CASE("Leibniz rule and d^2 = 0 on random elements") {
  Rng rng(73);
  const FreeDga L = lambda_n(4);
  for (int k = 0; k < 40; ++k) {
    const int w1 = uniform(rng, 1, 4), w2 = uniform(rng, 1, 4);
    auto W1 = L.words(w1), W2 = L.words(w2);
    const int t1 = uniform(rng, W1.begin()->first, W1.rbegin()->first);
    const int t2 = uniform(rng, W2.begin()->first, W2.rbegin()->first);
    const NcPoly x = random_element(rng, L, t1, w1), y = random_element(rng, L, t2, w2);
    const Integer sign = t1 % 2 == 0 ? 1 : -1;
    CHECK(L.differential(x * y) == L.differential(x) * y + sign * (x * L.differential(y)));
    CHECK(L.differential(L.differential(x * y)).is_zero());
  }
}

TEST_CASE("word enumeration") {
  for (int n = 1; n <= 4; ++n) {
    const FreeDga L = lambda_n(n);
    for (int w = 0; w <= 7; ++w) {
      long total = 0;
      for (const auto& [t, ws] : L.words(w)) {
        total += long(ws.size());
        for (const Word& word : ws) CHECK(t == w - int(word.size()));
        CHECK(std::is_sorted(ws.begin(), ws.end()));
      }
      CHECK(total == compositions(w, n));
    }
  }
}

TEST_CASE("Euler characteristic of each weight strand") {
  for (int n = 1; n <= 4; ++n) {
    const FreeDga L = lambda_n(n);
    const BigradedTable H = homology_table(L, 7);
    for (int w = 0; w <= 7; ++w) {
      long chi_words = 0, chi_h = 0;
      for (const auto& [t, ws] : L.words(w)) chi_words += (t % 2 ? -1 : 1) * long(ws.size());
      for (const auto& [tw, g] : H)
        if (tw.second == w) chi_h += (tw.first % 2 ? -1 : 1) * long(g.free_rank);
      CHECK(chi_words == chi_h);
    }
  }
}

TEST_CASE("homology of Lambda^(n)") {
  SUBCASE("n = 1 is the tensor algebra on e1") {
    const BigradedTable H = homology_table(lambda_n(1), 5);
    CHECK(H.size() == 6);
    for (int w = 0; w <= 5; ++w) CHECK(H.at({0, w}) == FgAbGroup::free(1));
  }
  SUBCASE("n = 2, weight <= 6") {
    const BigradedTable H = homology_table(lambda_n(2), 6);
    const BigradedTable expected{{{0, 0}, FgAbGroup::free(1)}, {{0, 1}, FgAbGroup::free(1)},
                                 {{1, 3}, FgAbGroup::free(1)}, {{1, 4}, FgAbGroup::free(1)},
                                 {{2, 6}, FgAbGroup::free(1)}};
    CHECK(H == expected);
  }
  SUBCASE("n = 3 has its second class at (2,4)") {
    const BigradedTable H = homology_table(lambda_n(3), 5);
    CHECK(H.count({2, 4}) == 1);
    CHECK(H.count({2, 5}) == 1);
    CHECK(H.size() == 4);
  }
}

TEST_CASE("strand homology representatives") {
  const StrandHomology S = bigraded_homology(lambda_n(2), 1, 3);
  CHECK(S.group == FgAbGroup::free(1));
  REQUIRE(S.representatives.size() == 1);
  CHECK(lambda_n(2).differential(S.representatives[0]).is_zero());
  CHECK_THROWS_AS(S.class_of(NcPoly::word({0})), GradingError);
}

TEST_CASE("Massey powers") {
  CHECK_THROWS_AS(massey_power_element(1), DomainError);
  const FreeDga L = lambda_n(3);
  CHECK(L.to_string(massey_power_element(3)) == "e1*e2 - e2*e1");
  for (int n = 2; n <= 5; ++n) {
    const MasseyReport R = massey_power(n);
    CHECK(R.is_cycle);
    CHECK(R.group == FgAbGroup::free(1));
    CHECK(R.generates);
    CHECK(R.equals_d_en);
    CHECK(R.vanishes_after);
  }
}

}  // TEST_SUITE
