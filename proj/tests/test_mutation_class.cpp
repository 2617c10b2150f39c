#include "doctest.h"

#include "bmq/mutation_class.hpp"
#include "bmq/quiver.hpp"

using namespace bmq;

TEST_CASE("mutation class sizes at desk ranks") {
  std::vector<std::tuple<char, int, int>> expected = {
      {'A', 3, 5},  {'A', 4, 14}, {'A', 5, 42}, {'B', 2, 6},
      {'B', 3, 20}, {'B', 4, 70}, {'D', 4, 35}, {'D', 5, 126},
  };
  for (auto [f, n, size] : expected) {
    auto cat = enumerate_class(standard_quiver(f, n));
    CHECK(cat.size() == size);
    CHECK(cat.family == f);
    CHECK(cat.n == n);
  }
}

TEST_CASE("witness pivots reach each member from the seed") {
  auto cat = enumerate_class(standard_quiver('B', 3));
  for (int i = 0; i < cat.size(); ++i) {
    auto q = mutate_sequence(cat.members[0], cat.witness[i]);
    CHECK(canonical_form(q) == cat.keys[i]);
  }
}

TEST_CASE("adjacency is an involution up to canonical form") {
  auto cat = enumerate_class(standard_quiver('A', 4));
  for (int i = 0; i < cat.size(); ++i)
    for (size_t c = 0; c < cat.pivot_labels.size(); ++c) {
      int j = cat.adjacency[i][c];
      auto q = mutate(cat.members[i], cat.pivot_labels[c]);
      CHECK(cat.index.at(canonical_form(q)) == j);
    }
}

TEST_CASE("membership predicates accept the standard quivers") {
  CHECK(check_A_eps(standard_quiver('A', 3)));
  CHECK(check_A_eps(standard_quiver('A', 5)));
  CHECK(check_B_eps(standard_quiver('B', 3)));
  CHECK(check_D_eps(standard_quiver('D', 4)));
  // and reject quivers from other families
  CHECK(!check_A_eps(standard_quiver('B', 3)));
  CHECK(!check_B_eps(standard_quiver('A', 3)));
  CHECK(!check_D_eps(standard_quiver('B', 3)));
}

TEST_CASE("distinguished vertex of a B quiver") {
  CHECK(b_zero_vertex(standard_quiver('B', 3)) == 0);
  auto q = mutate(standard_quiver('B', 3), 1);
  CHECK_NOTHROW(b_zero_vertex(q));
}

TEST_CASE("shape classification of D members") {
  auto d4 = standard_quiver('D', 4);
  auto rep = classify_D_eps(d4);
  CHECK(rep.shape == 1);

  auto q3 = mutate_sequence(d4, {3, 2, 0});
  auto r3 = classify_D_eps(q3);
  CHECK(r3.shape >= 1);

  auto cat = enumerate_class(d4);
  for (const auto& m : cat.members) {
    auto all = classify_D_eps_all(m);
    CHECK(all.size() == 1);
  }
}

TEST_CASE("characterizations match enumeration exactly") {
  std::vector<std::tuple<char, int, int>> expected = {
      {'A', 3, 5}, {'A', 4, 14}, {'B', 2, 6}, {'B', 3, 20}, {'D', 4, 35}};
  for (auto [f, n, size] : expected) {
    auto rep = verify_class_characterization(f, n);
    CHECK(rep.enumerated == size);
    CHECK(rep.predicate_only == 0);
    CHECK(rep.enumerated_only == 0);
  }
}
