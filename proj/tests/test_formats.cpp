#include "doctest.h"
#include "fixtures.hpp"
#include "pg/formats.hpp"
#include "pg/generator.hpp"

using namespace pg;

TEST_CASE("a triangle document parses and an outer line roots it") {
    auto doc = parse_rotation("pgraph v1\nn 3\n1: 2 3\n2: 3 1\n3: 1 2\nouter: 1 2 3\n");
    CHECK(doc.graph.vertex_count() == 3);
    CHECK(doc.graph.face_count() == 2);
    REQUIRE(doc.outer.has_value());
    CHECK(*doc.outer == std::vector<int>{0, 1, 2});
}

TEST_CASE("comments and blank lines are ignored, round trip is exact") {
    std::string text = "# a triangle\npgraph v1\nn 3\n1: 2 3\n2: 3 1  # note\n3: 1 2\n\n";
    auto doc = parse_rotation(text);
    std::string canonical = write_rotation(doc.graph);
    CHECK(canonical == "pgraph v1\nn 3\n1: 2 3\n2: 3 1\n3: 1 2\n");
    CHECK(write_rotation(parse_rotation(canonical).graph) == canonical);
}

TEST_CASE("parse errors carry line context, build errors pass through") {
    CHECK_THROWS_AS(parse_rotation("pgraph v1\nn 2\n1: 2\n"), FormatError);
    CHECK_THROWS_AS(parse_rotation("n 2\n1: 2\n2: 1\n"), FormatError);
    CHECK_THROWS_AS(parse_rotation("pgraph v1\nn 2\n1: 2\n2:\n"), GraphError); // missing reverse
}

TEST_CASE("the documented planar_code bytes decode to a triangle") {
    std::vector<std::uint8_t> bytes{3, 2, 3, 0, 3, 1, 0, 1, 2, 0};
    auto graphs = read_planar_code(bytes);
    REQUIRE(graphs.size() == 1);
    CHECK(graphs[0].vertex_count() == 3);
    CHECK(graphs[0].rotation(0) == std::vector<int>{1, 2});
    CHECK(graphs[0].rotation(1) == std::vector<int>{2, 0});
}

TEST_CASE("planar_code headers, empty payloads and truncation") {
    std::string h = ">>planar_code<<";
    std::vector<std::uint8_t> empty(h.begin(), h.end());
    CHECK(read_planar_code(empty).empty());
    std::vector<std::uint8_t> truncated{3, 2, 3, 0, 3};
    CHECK_THROWS_AS(read_planar_code(truncated), FormatError);
    std::vector<std::uint8_t> badheader{'>', '>', 'x'};
    CHECK_THROWS_AS(read_planar_code(badheader), FormatError);
}

TEST_CASE("write then read is the identity on byte streams and graphs") {
    std::vector<PlaneGraph> gs;
    gs.push_back(fixtures::triangle());
    gs.push_back(fixtures::cube());
    auto bytes = write_planar_code(gs);
    auto back = read_planar_code(bytes);
    REQUIRE(back.size() == 2);
    CHECK(write_planar_code(back) == bytes);
    for (size_t i = 0; i < gs.size(); ++i) CHECK(back[i].rotations() == gs[i].rotations());
}

TEST_CASE("both formats round-trip across a generated corpus") {
    auto corpus = generate_plane_graphs(5);
    auto bytes = write_planar_code(corpus);
    auto back = read_planar_code(bytes);
    REQUIRE(back.size() == corpus.size());
    CHECK(write_planar_code(back) == bytes);
    for (const auto& g : corpus) {
        auto text = write_rotation(g);
        CHECK(write_rotation(parse_rotation(text).graph) == text);
    }
}
