#include "doctest.h"

#include "bmq/psperm.hpp"
#include "bmq/quiver.hpp"

using namespace bmq;

TEST_CASE("composition applies the right factor first") {
  // x undefined outside {1}, y = transposition (12) on {1,2}
  auto x = partial_identity(2, {1});
  PartialSignedPerm y;
  y.n = 2;
  y.img[1] = 2;
  y.img[2] = 1;
  auto xy = compose(x, y);  // y first: 2 -> 1 -> 1, 1 -> 2 -> undefined
  CHECK(!xy.defined(1));
  CHECK(xy.img[2] == 1);
  auto yx = compose(y, x);  // x first: 1 -> 1 -> 2
  CHECK(yx.img[1] == 2);
  CHECK(!yx.defined(2));
}

TEST_CASE("element text formatting") {
  auto e = partial_identity(3, {1, 3});
  CHECK(element_text(e) == "1 2 3 / 1 - 3");
  PartialSignedPerm s;
  s.n = 2;
  s.img[1] = -1;
  s.img[2] = 2;
  CHECK(element_text(s) == "1 2 / -1 2");
}

TEST_CASE("inverse and partial identity basics") {
  auto gens = realize_generators('B', 2);
  for (auto& [label, g] : gens) {
    auto gi = inverse(g);
    CHECK(compose(compose(g, gi), g) == g);
    CHECK(compose(compose(gi, g), gi) == gi);
  }
  CHECK(gens.at(kEps).is_partial_identity());
  CHECK(!gens.at(0).is_partial_identity());
  CHECK(full_identity(3) == partial_identity(3, {1, 2, 3}));
}

TEST_CASE("generator realizations satisfy the defining shapes") {
  auto a3 = realize_generators('A', 3);
  CHECK(a3.size() == 3);  // s_1, s_2, s_eps
  CHECK(element_text(a3.at(1)) == "1 2 3 / 2 1 3");
  CHECK(element_text(a3.at(2)) == "1 2 3 / 1 3 2");
  CHECK(element_text(a3.at(kEps)) == "1 2 3 / 1 2 -");

  auto b2 = realize_generators('B', 2);
  CHECK(element_text(b2.at(0)) == "1 2 / -1 2");

  auto d4 = realize_generators('D', 4);
  // s_0 is the double sign change on {1,2}
  CHECK(d4.at(0).img[1] == -2);
  CHECK(d4.at(0).img[2] == -1);
}

TEST_CASE("word evaluation applies the rightmost letter first") {
  auto gens = realize_generators('A', 3);
  auto v = evaluate_word({2, kEps, 2}, gens, 3);
  CHECK(v == partial_identity(3, {1, 3}));
  CHECK(evaluate_word({}, gens, 3) == full_identity(3));
}

TEST_CASE("closure sizes match the closed-form counts") {
  CHECK(count_partial_injections(2) == 7);
  CHECK(count_partial_injections(3) == 34);
  CHECK(count_partial_injections(4) == 209);
  CHECK(count_signed_partial_injections(2) == 17);
  CHECK(count_signed_partial_injections(3) == 139);

  CHECK(expected_cardinality('A', 3) == 34);
  CHECK(expected_cardinality('B', 2) == 17);
  CHECK(expected_cardinality('B', 3) == 139);
  CHECK(expected_cardinality('B', 4) == 1473);
  CHECK(expected_cardinality('D', 4) == 1281);
  CHECK(expected_cardinality('D', 5) == 17171);

  for (auto [f, n] : std::vector<std::pair<char, int>>{
           {'A', 2}, {'A', 3}, {'A', 4}, {'B', 2}, {'B', 3}, {'D', 4}}) {
    auto m = generator_closure(realize_generators(f, n), n);
    CHECK(m.size() == expected_cardinality(f, n));
  }
}

TEST_CASE("enumerated monoid products and inverses are consistent") {
  auto m = generator_closure(realize_generators('B', 2), 2);
  REQUIRE(m.size() == 17);
  CHECK(m.elements[0] == full_identity(2));
  for (int a = 0; a < m.size(); ++a) {
    CHECK(m.product(0, a) == a);
    CHECK(m.product(a, 0) == a);
    int ai = m.inverse_of(a);
    CHECK(m.elements[ai] == inverse(m.elements[a]));
    CHECK(m.product(m.product(a, ai), a) == a);
  }
}
