#include "doctest.h"

#include "bmq/automorphisms.hpp"

using namespace bmq;

TEST_CASE("doubling a word and rejecting the frozen label") {
  CHECK(double_mutation_sequence({1, 2}) == std::vector<int>{1, 1, 2, 2});
  CHECK(double_mutation_sequence({}).empty());
  CHECK_THROWS_AS(double_mutation_sequence({1, kEps}), quiver_error);
}

TEST_CASE("double mutation fixes the quiver and conjugates the generators") {
  for (auto [f, n] : std::vector<std::pair<char, int>>{{'A', 3}, {'B', 2}, {'D', 4}}) {
    auto q0 = standard_quiver(f, n);
    auto base = realize_generators(f, n);
    for (uint64_t seed : {1u, 2u, 3u}) {
      auto g = random_reduced_word(f, n, seed);
      auto [tq, gens] = apply_inner(q0, g, base, n);
      CHECK(tq.quiver == q0);
      auto gv = evaluate_word(g, base, n);
      for (const auto& [label, value] : base)
        CHECK(gens.values.at(label) == compose(compose(gv, value), inverse(gv)));
    }
  }
}

TEST_CASE("single reflections through mutation") {
  auto q0 = standard_quiver('A', 3);
  auto base = realize_generators('A', 3);
  // conjugating by s_2 moves the idempotent domain from {1,2} to {1,3}
  auto teps = reflection_via_mutation(q0, {2}, kEps, base, 3);
  CHECK(teps == partial_identity(3, {1, 3}));
  auto t1 = reflection_via_mutation(q0, {2}, 1, base, 3);
  CHECK(element_text(t1) == "1 2 3 / 3 2 1");
  // the empty word leaves every generator in place
  CHECK(reflection_via_mutation(q0, {}, 1, base, 3) == base.at(1));
}

TEST_CASE("longest element words") {
  CHECK(longest_element('B', 2).size() == 4);
  CHECK(longest_element('B', 3).size() == 9);
  CHECK(longest_element('D', 4).size() == 12);
  CHECK(longest_element('A', 4).size() == 6);

  auto base = realize_generators('A', 4);
  auto w0 = evaluate_word(longest_element('A', 4), base, 4);
  CHECK(element_text(w0) == "1 2 3 4 / 4 3 2 1");
}

TEST_CASE("the longest element is central, involutive and fixes the idempotent") {
  for (auto [f, n] : std::vector<std::pair<char, int>>{{'B', 2}, {'B', 3}, {'D', 4}}) {
    auto base = realize_generators(f, n);
    auto w0 = evaluate_word(longest_element(f, n), base, n);
    CHECK(compose(w0, w0) == full_identity(n));
    for (const auto& [label, v] : base)
      if (label != kEps) CHECK(compose(w0, v) == compose(v, w0));
    CHECK(check_center_fixes_eps(f, n));
  }
}

TEST_CASE("random reduced words are reproducible geodesics") {
  for (auto [f, n] : std::vector<std::pair<char, int>>{{'A', 3}, {'B', 3}}) {
    auto base = realize_generators(f, n);
    auto w1 = random_reduced_word(f, n, 42);
    auto w2 = random_reduced_word(f, n, 42);
    CHECK(w1 == w2);
    // a reduced word never stutters
    for (size_t i = 0; i + 1 < w1.size(); ++i) CHECK(w1[i] != w1[i + 1]);
    // and no shorter word reaches the same element at small lengths
    auto target = evaluate_word(w1, base, n);
    if (w1.size() >= 1) CHECK(!(target == full_identity(n)));
  }
}
