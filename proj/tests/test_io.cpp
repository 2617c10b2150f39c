#include "doctest.h"

#include <cstdio>

#include "bmq/io.hpp"

using namespace bmq;

TEST_CASE("quiver json round-trip") {
  for (auto [f, n] : std::vector<std::pair<char, int>>{{'A', 3}, {'B', 3}, {'D', 4}}) {
    auto q = mutate_sequence(standard_quiver(f, n), {n - 1});
    auto j = quiver_to_json(q);
    CHECK(quiver_from_json(j) == q);
    // vertex names are strings, with "eps" last
    auto verts = j.at("vertices");
    CHECK(verts.back().get<std::string>() == "eps");
    CHECK(verts.front().is_string());
  }
}

TEST_CASE("presentation json round-trip") {
  auto p = present(mutate(standard_quiver('A', 3), 2));
  auto j = presentation_to_json(p);
  auto back = presentation_from_json(j);
  CHECK(back.kind == p.kind);
  CHECK(back.generators == p.generators);
  REQUIRE(back.relations.size() == p.relations.size());
  for (size_t i = 0; i < p.relations.size(); ++i) CHECK(back.relations[i] == p.relations[i]);
}

TEST_CASE("malformed json is rejected with io_error") {
  CHECK_THROWS_AS(quiver_from_json(nlohmann::json{{"family", "A"}}), io_error);
  CHECK_THROWS_AS(presentation_from_json(nlohmann::json::array()), io_error);
  CHECK_THROWS_AS(read_json_file("/nonexistent/path.json"), io_error);
}

TEST_CASE("dot rendering follows the drawing conventions") {
  auto dot = quiver_to_dot(standard_quiver('B', 2));
  CHECK(dot ==
        "digraph quiver {\n"
        "  \"0\";\n"
        "  \"1\";\n"
        "  \"eps\" [style=filled];\n"
        "  \"0\" -> \"1\" [label=\"2\"];\n"
        "  \"1\" -> \"eps\";\n"
        "}\n");
  // weight-1 edges carry no label anywhere
  auto dot_a = quiver_to_dot(standard_quiver('A', 4));
  CHECK(dot_a.find("label") == std::string::npos);
}

TEST_CASE("catalog json carries every member with its witness") {
  auto cat = enumerate_class(standard_quiver('B', 2));
  auto j = catalog_to_json(cat);
  CHECK(j.at("size").get<int>() == 6);
  REQUIRE(j.at("members").size() == 6);
  for (int i = 0; i < 6; ++i) {
    auto q = quiver_from_json(j.at("members")[i].at("quiver"));
    CHECK(q == cat.members[i]);
  }
  CHECK(j.at("members")[0].at("witness").empty());
}

TEST_CASE("file writing and reading round-trips bytes") {
  std::string path = "bmq_io_test.json";
  auto j = quiver_to_json(standard_quiver('D', 4));
  write_text_file(path, j.dump(2));
  auto back = read_json_file(path);
  CHECK(quiver_from_json(back) == standard_quiver('D', 4));
  std::remove(path.c_str());
  CHECK_THROWS_AS(write_text_file("/nonexistent/dir/file.txt", "x"), io_error);
}
