#include "doctest.h"

#include "bmq/verification.hpp"

using namespace bmq;

namespace {

std::map<int, PartialSignedPerm> shifted_eps_realization(char f, int n) {
  auto gens = realize_generators(f, n);
  std::vector<int> dom;
  for (int v = 2; v <= n; ++v) dom.push_back(v);
  gens[kEps] = partial_identity(n, dom);
  return gens;
}

}  // namespace

TEST_CASE("tracked mutation conjugates the incoming vertices") {
  auto q0 = standard_quiver('A', 3);
  auto base = realize_generators('A', 3);
  auto tq = mutate_tracked(make_tracked(q0, base, 3), 2);
  CHECK(word_text(tq.words.at(1)) == "2 1 2");
  CHECK(word_text(tq.words.at(2)) == "2");
  CHECK(word_text(tq.words.at(kEps)) == "eps");
  CHECK(tq.values.at(1) == evaluate_word({2, 1, 2}, base, 3));
  CHECK(tq.values.at(kEps) == base.at(kEps));
  // mutating back restores the quiver; the assignment becomes the whole
  // generator set conjugated by s_2
  auto back = mutate_tracked(tq, 2);
  CHECK(back.quiver == q0);
  CHECK(word_text(back.words.at(1)) == "2 1 2");
  CHECK(word_text(back.words.at(kEps)) == "2 eps 2");
  auto s2 = base.at(2);
  CHECK(back.values.at(1) == compose(compose(s2, base.at(1)), s2));
  CHECK(back.values.at(kEps) == compose(compose(s2, base.at(kEps)), s2));
}

TEST_CASE("relation checking reports concrete failures") {
  auto q = standard_quiver('A', 3);
  auto base = realize_generators('A', 3);
  auto rep = check_relations(present(q), base, 3, "standard");
  CHECK(rep.pass());
  CHECK(rep.relations_checked == 7);

  // a wrong realization must be caught
  auto broken = base;
  broken[1] = base.at(2);
  auto bad = check_relations(present(q), broken, 3, "broken");
  CHECK(!bad.pass());
  CHECK(!bad.failures.empty());
}

TEST_CASE("every class member satisfies its presentation with tracking") {
  for (auto [f, n] : std::vector<std::pair<char, int>>{{'A', 2}, {'A', 3}, {'B', 2}}) {
    auto reports = verify_mutation_invariance(f, n);
    CHECK(!reports.empty());
    for (const auto& rep : reports) {
      CHECK(rep.failures.empty());
      CHECK(rep.closure_ok);
    }
  }
}

TEST_CASE("bounded congruence reaches the monoid bijectively") {
  auto gens2 = realize_generators('A', 2);
  auto p2 = present(standard_quiver('A', 2));
  bool bij = false;
  for (int L = 1; L <= congruence_length_cap(3) && !bij; ++L) {
    auto rep = bounded_word_congruence(p2, L, gens2, 2);
    CHECK(rep.sound);
    CHECK(rep.monoid_size == 7);
    if (rep.bijective) {
      CHECK(rep.classes == 7);
      CHECK(L <= 4);
      bij = true;
    }
  }
  CHECK(bij);

  auto gens3 = realize_generators('A', 3);
  auto p3 = present(standard_quiver('A', 3));
  auto rep = bounded_word_congruence(p3, 7, gens3, 3);
  CHECK(rep.sound);
  CHECK(rep.bijective);
  CHECK(rep.classes == 34);
}

TEST_CASE("replayed presentations agree with the reference ones") {
  for (auto [f, n] : std::vector<std::pair<char, int>>{{'A', 3}, {'B', 2}}) {
    std::vector<int> pivots;
    for (int k = n - 1; k >= (f == 'A' ? 1 : 0); --k) pivots.push_back(k);
    auto qp = mutate_sequence(standard_quiver(f, n), pivots);
    auto r = shifted_eps_realization(f, n);
    CHECK(relation_sets_equal(present(qp), ef_presentation(f, n), r, n));
  }
  // different monoids must not be conflated
  auto ra = realize_generators('A', 3);
  CHECK(!relation_sets_equal(present(standard_quiver('A', 3)),
                             ef_presentation('B', 3), ra, 3));
}

TEST_CASE("presentations are invariant under reversing all arrows") {
  for (auto [f, n] : std::vector<std::pair<char, int>>{{'A', 3}, {'B', 2}}) {
    auto cat = enumerate_class(standard_quiver(f, n));
    auto base = realize_generators(f, n);
    auto seed = make_tracked(cat.members[0], base, n);
    for (int i = 0; i < cat.size(); ++i) {
      auto tq = mutate_tracked_sequence(seed, cat.witness[i]);
      CHECK(check_opposite_invariance(cat.members[i], tq.values, n));
    }
  }
}

TEST_CASE("cycle equivalences hold across the D4 class") {
  auto rep = check_cycle_equivalences(enumerate_class(standard_quiver('D', 4)));
  CHECK(rep.checked_c3 == 17);
  CHECK(rep.checked_c3w == 0);  // weighted cycles only arise in the B family
  CHECK(rep.checked_c4 == 2);
  CHECK(rep.checked_type4 == 5);
  CHECK(rep.failures == 0);
}

TEST_CASE("cycle equivalences hold across the B3 class") {
  auto rep = check_cycle_equivalences(enumerate_class(standard_quiver('B', 3)));
  CHECK(rep.failures == 0);
  CHECK(rep.checked_c3 + rep.checked_c3w + rep.checked_c4 > 0);
}
