#include "doctest.h"

#include <random>

#include "bmq/quiver.hpp"

using namespace bmq;

TEST_CASE("standard quivers have the expected arrows and symmetrizers") {
  auto a3 = standard_quiver('A', 3);
  CHECK(a3.mutable_count() == 2);
  CHECK(a3.arrow(1, 2));
  CHECK(a3.arrow(2, kEps));
  CHECK(!a3.arrow(2, 1));
  CHECK(a3.d() == std::vector<int>{1, 1, 1});

  auto b2 = standard_quiver('B', 2);
  CHECK(b2.arrow(0, 1));
  CHECK(b2.arrow(1, kEps));
  CHECK(weight(b2, 0, 1) == 2);
  CHECK(b2.d() == std::vector<int>{1, 2, 2});

  auto d4 = standard_quiver('D', 4);
  CHECK(d4.arrow(0, 2));
  CHECK(d4.arrow(1, 2));
  CHECK(d4.arrow(2, 3));
  CHECK(d4.arrow(3, kEps));
  CHECK(weight(d4, 0, 2) == 1);

  CHECK_THROWS_AS(standard_quiver('D', 3), quiver_error);
  CHECK_THROWS_AS(standard_quiver('A', 1), quiver_error);
}

TEST_CASE("mutation matches the exchange rule and is an involution") {
  auto q0 = standard_quiver('A', 3);
  auto q1 = mutate(q0, 2);
  CHECK(q1.arrow(2, 1));
  CHECK(q1.arrow(kEps, 2));
  CHECK(q1.arrow(1, kEps));
  CHECK(mutate(q1, 2) == q0);

  CHECK_THROWS_AS(mutate(q0, kEps), quiver_error);

  std::mt19937 rng(7);
  for (auto [f, n] : std::vector<std::pair<char, int>>{
           {'A', 4}, {'B', 3}, {'D', 4}, {'D', 5}}) {
    auto q = standard_quiver(f, n);
    std::vector<int> labels = q.labels();
    labels.pop_back();
    for (int t = 0; t < 40; ++t) {
      int k = labels[rng() % labels.size()];
      auto qk = mutate(q, k);
      qk.check_invariants();
      CHECK(mutate(qk, k) == q);
      q = qk;
    }
  }
}

TEST_CASE("mutation creates oriented chordless cycles") {
  auto q1 = mutate(standard_quiver('A', 3), 2);
  auto cyc = chordless_cycles(q1);
  REQUIRE(cyc.size() == 1);
  CHECK(cyc[0].length() == 3);
  CHECK(cyc[0].contains_frozen);
  CHECK(cyc[0].vertices == std::vector<int>{1, kEps, 2});
  CHECK(cyc[0].weights == std::vector<int>{1, 1, 1});

  CHECK(chordless_cycles(standard_quiver('D', 4)).empty());
}

TEST_CASE("weights and the opposite quiver") {
  auto b3 = standard_quiver('B', 3);
  CHECK(weight(b3, 0, 1) == 2);
  CHECK(weight(b3, 1, 2) == 1);
  CHECK(weight(b3, 0, 2) == 0);
  auto op = opposite(b3);
  CHECK(op.arrow(1, 0));
  CHECK(op.arrow(kEps, 2));
  CHECK(weight(op, 0, 1) == 2);
  CHECK(opposite(op) == b3);
}

TEST_CASE("shortest path to the frozen vertex") {
  auto b2 = standard_quiver('B', 2);
  CHECK(shortest_path_to_frozen(b2, 0) == std::vector<int>{0, 1, kEps});
  CHECK(shortest_path_to_frozen(b2, 1) == std::vector<int>{1, kEps});
}

TEST_CASE("canonical form is invariant under mutable relabeling") {
  auto d4 = standard_quiver('D', 4);
  // swapping the two fork tips 0 and 1 is a diagram symmetry
  auto swapped = quiver_from_edges('D', {0, 1, 2, 3, kEps},
                                   {{1, 2, 1}, {0, 2, 1}, {2, 3, 1}, {3, kEps, 1}});
  CHECK(canonical_form(d4) == canonical_form(swapped));
  CHECK(canonical_form(d4) != canonical_form(mutate(d4, 3)));
}

TEST_CASE("quiver_from_edges infers a symmetrizer or throws") {
  auto b2 = quiver_from_edges('B', {0, 1, kEps}, {{0, 1, 2}, {1, kEps, 1}});
  CHECK(b2 == standard_quiver('B', 2));
  CHECK_THROWS_AS(quiver_from_edges('B', {0, 1, 2}, {{0, 1, 2}, {1, 2, 1}, {2, 0, 1}}),
                  quiver_error);
}
