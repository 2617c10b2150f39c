#include "doctest.h"

#include <algorithm>
#include <set>

#include "bmq/mutation_class.hpp"
#include "bmq/presentation.hpp"
#include "bmq/psperm.hpp"

using namespace bmq;

namespace {

std::set<std::pair<std::string, std::string>> relation_set(const Presentation& p) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& r : p.relations) out.insert({word_text(r.lhs), word_text(r.rhs)});
  return out;
}

int concrete_failures(const Presentation& p,
                      const std::map<int, PartialSignedPerm>& gens, int n) {
  int bad = 0;
  for (const auto& r : p.relations)
    if (!(evaluate_word(r.lhs, gens, n) == evaluate_word(r.rhs, gens, n))) ++bad;
  return bad;
}

std::map<int, PartialSignedPerm> shifted_eps_realization(char f, int n) {
  auto gens = realize_generators(f, n);
  std::vector<int> dom;
  for (int v = 2; v <= n; ++v) dom.push_back(v);
  gens[kEps] = partial_identity(n, dom);
  return gens;
}

}  // namespace

TEST_CASE("m-table of the standard quivers") {
  auto ta = m_table(standard_quiver('A', 3));
  CHECK(ta.m(1, 2) == 3);
  CHECK(ta.m(1, 1) == 1);
  CHECK(ta.eps.at(2) == std::pair{3, 4});  // weight-1 pair with eps
  CHECK(ta.eps.at(1) == std::pair{2, 2});  // weight-0 pair commutes

  auto tb = m_table(standard_quiver('B', 2));
  CHECK(tb.m(0, 1) == 4);

  auto tw = m_table(mutate(standard_quiver('B', 2), 1));
  CHECK(tw.eps.at(0) == std::pair{1, 2});  // weight-2 pair with eps
}

TEST_CASE("presentation of the linear rank 3 quiver") {
  auto p = present(standard_quiver('A', 3));
  CHECK(p.kind == "monoid");
  CHECK(p.generators == std::vector<int>{1, 2, kEps});
  CHECK(relation_set(p) ==
        std::set<std::pair<std::string, std::string>>{
            {"1 1", "e"},
            {"2 2", "e"},
            {"eps eps", "eps"},
            {"1 2 1 2 1 2", "e"},
            {"1 eps", "eps 1"},
            {"eps 2 eps", "2 eps 2 eps"},
            {"2 eps 2 eps", "eps 2 eps 2"},
        });
}

TEST_CASE("presentation after one mutation gains the cycle relation") {
  auto q1 = mutate(standard_quiver('A', 3), 2);
  auto p = present(q1);
  CHECK(relation_set(p) ==
        std::set<std::pair<std::string, std::string>>{
            {"1 1", "e"},
            {"2 2", "e"},
            {"eps eps", "eps"},
            {"1 2 1 2 1 2", "e"},
            {"eps 1 eps", "1 eps 1 eps"},
            {"1 eps 1 eps", "eps 1 eps 1"},
            {"eps 2 eps", "2 eps 2 eps"},
            {"2 eps 2 eps", "eps 2 eps 2"},
            {"eps 2 1 2", "2 1 2 eps"},
        });
}

TEST_CASE("path relations of the B and D standard quivers") {
  auto pb = relations_R4(standard_quiver('B', 2));
  REQUIRE(pb.size() == 2);
  CHECK(word_text(pb[0].lhs) == "0 1 eps");
  CHECK(word_text(pb[0].rhs) == "1 eps");
  CHECK(word_text(pb[1].lhs) == "eps 1 0");
  CHECK(word_text(pb[1].rhs) == "eps 1");

  auto pd = relations_R4(standard_quiver('D', 4));
  REQUIRE(pd.size() == 1);
  CHECK(word_text(pd[0].lhs) == "0 2 3 eps 3 2 0");
  CHECK(word_text(pd[0].rhs) == "1 2 3 eps 3 2 1");

  CHECK(relations_R4(standard_quiver('A', 4)).empty());
}

TEST_CASE("all standard presentations hold concretely") {
  for (auto [f, n] : std::vector<std::pair<char, int>>{{'A', 2}, {'A', 3},
                                                       {'A', 4}, {'A', 5},
                                                       {'B', 2}, {'B', 3},
                                                       {'B', 4}, {'D', 4},
                                                       {'D', 5}}) {
    auto p = present(standard_quiver(f, n));
    CHECK(concrete_failures(p, realize_generators(f, n), n) == 0);
  }
}

TEST_CASE("every mutation class member emits a presentation that holds") {
  for (auto [f, n] : std::vector<std::pair<char, int>>{{'A', 4}, {'B', 3}, {'D', 4}}) {
    auto cat = enumerate_class(standard_quiver(f, n));
    for (const auto& q : cat.members) CHECK_NOTHROW(present(q));
  }
}

TEST_CASE("reference presentations hold under the shifted idempotent") {
  for (auto [f, n] : std::vector<std::pair<char, int>>{{'A', 3}, {'A', 4},
                                                       {'B', 2}, {'B', 3},
                                                       {'D', 4}, {'D', 5}}) {
    auto p = ef_presentation(f, n);
    CHECK(concrete_failures(p, shifted_eps_realization(f, n), n) == 0);
  }
}

TEST_CASE("reference presentation shapes") {
  auto a = ef_presentation('A', 3);
  auto rs = relation_set(a);
  CHECK(rs.count({"2 eps", "eps 2"}) == 1);
  CHECK(rs.count({"eps 1 eps 1", "1 eps 1 eps"}) == 1);
  CHECK(rs.count({"1 eps 1 eps", "eps 1 eps"}) == 1);

  auto b = ef_presentation('B', 2);
  auto bs = relation_set(b);
  CHECK(bs.count({"0 1 0 1 0 1 0 1", "e"}) == 1);
  CHECK(bs.count({"0 1 eps 1", "1 eps 1 0"}) == 1);
  CHECK(bs.count({"0 eps", "eps"}) == 1);

  auto d = ef_presentation('D', 4);
  auto ds = relation_set(d);
  CHECK(ds.count({"0 eps 0", "1 eps 1"}) == 1);
  CHECK(ds.count({"0 2 1 eps 1 2", "2 1 eps 1 2 0"}) == 1);
}

TEST_CASE("group presentation drops the idempotent and holds concretely") {
  for (auto [f, n] : std::vector<std::pair<char, int>>{{'A', 3}, {'B', 3}, {'D', 4}}) {
    auto q = mutate_sequence(standard_quiver(f, n), {n - 1});
    auto p = group_presentation(q);
    CHECK(p.kind == "group");
    CHECK(std::find(p.generators.begin(), p.generators.end(), kEps) ==
          p.generators.end());
    auto gens = realize_generators(f, n);
    gens.erase(kEps);
    CHECK(concrete_failures(p, gens, n) == 0);
  }
}

TEST_CASE("word text") {
  CHECK(word_text({}) == "e");
  CHECK(word_text({0, 1, kEps}) == "0 1 eps");
}
