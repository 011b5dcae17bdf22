#include "doctest.h"
#include "fixtures.hpp"
#include "pg/coloring.hpp"
#include "pg/cycles.hpp"

#include <random>

using namespace pg;

namespace {

const ColorSpec spec110 = ColorSpec::parse("1,1,0");
const ColorSpec spec000 = ColorSpec::parse("0,0,0");
const ColorSpec spec111 = ColorSpec::parse("1,1,1");

// full k^n enumeration oracle
bool sat_by_enumeration(const AbstractGraph& g, const ColorSpec& spec) {
    int k = spec.k();
    std::vector<int> a(g.n, 1);
    while (true) {
        Coloring c(g.n);
        c.color = a;
        if (validate(g, spec, c, true).valid()) return true;
        int i = g.n - 1;
        while (i >= 0 && a[i] == k) a[i--] = 1;
        if (i < 0) return false;
        ++a[i];
    }
}

AbstractGraph random_graph(int n, double p, std::mt19937& rng) {
    AbstractGraph g(n);
    std::uniform_real_distribution<double> d(0, 1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (d(rng) < p) g.add_edge(i, j);
    return g;
}

} // namespace

TEST_CASE("validation counts defects against per-class caps") {
    auto t = fixtures::triangle().abstract();
    Coloring all_one(3);
    all_one.color = {1, 1, 1};
    auto r = validate(t, spec110, all_one, true);
    REQUIRE_FALSE(r.valid());
    CHECK(r.violation->vertex == 0);
    CHECK(r.violation->defect == 2);
    CHECK(r.violation->cap == 1);

    Coloring ok(3);
    ok.color = {1, 1, 2};
    CHECK(validate(t, spec110, ok, true).valid());

    Coloring k4c(4);
    k4c.color = {1, 1, 2, 2};
    CHECK(validate(fixtures::complete(4), spec110, k4c, true).valid());
}

TEST_CASE("out-of-range colors are diagnosed") {
    auto t = fixtures::triangle().abstract();
    Coloring bad(3);
    bad.color = {1, 4, 1};
    CHECK_THROWS_AS(validate(t, spec110, bad, true), std::out_of_range);
}

TEST_CASE("odd cycles are properly 3-colorable and K4 is not") {
    CHECK(solve(fixtures::cycle(7).abstract(), spec000).has_value());
    CHECK_FALSE(solve(fixtures::complete(4), spec000).has_value());
}

TEST_CASE("complete graphs split at five vertices under caps 1,1,0") {
    CHECK(solve(fixtures::complete(5), spec110).has_value());
    CHECK_FALSE(solve(fixtures::complete(6), spec110).has_value());
    for (int m = 2; m <= 6; ++m)
        CHECK(solve(fixtures::complete(m), spec110).has_value() == (m <= 5));
}

TEST_CASE("solver returns the lexicographically least solution") {
    auto c = solve(fixtures::cycle(4).abstract(), spec000);
    REQUIRE(c.has_value());
    CHECK(c->color == std::vector<int>{1, 2, 1, 2});
    auto t = solve(fixtures::triangle().abstract(), spec110);
    REQUIRE(t.has_value());
    CHECK(t->color == std::vector<int>{1, 1, 2});
}

TEST_CASE("solver agrees with full enumeration on random graphs") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 4 + static_cast<int>(rng() % 5); // up to 8
        auto g = random_graph(n, 0.45, rng);
        for (const auto& spec : {spec000, spec110, spec111}) {
            auto got = solve(g, spec);
            CHECK(got.has_value() == sat_by_enumeration(g, spec));
            if (got) CHECK(validate(g, spec, *got, true).valid());
        }
    }
}

TEST_CASE("componentwise larger caps cannot lose solutions") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = random_graph(6, 0.5, rng);
        if (solve(g, spec000)) CHECK(solve(g, spec110).has_value());
        if (solve(g, spec110)) CHECK(solve(g, spec111).has_value());
    }
}

TEST_CASE("wheel precolorings extend exactly when a color stays open for the hub") {
    auto root = RootedPlaneGraph::root_at(fixtures::k4_wheel(), {0, 1, 2});
    Coloring rainbow(4);
    rainbow.color = {1, 2, 3, 0};
    CHECK_FALSE(superextend(root, spec110, rainbow).has_value());

    Coloring repeat(4);
    repeat.color = {1, 1, 2, 0};
    auto ext = superextend(root, spec110, repeat);
    REQUIRE(ext.has_value());
    CHECK(ext->color[3] == 3);
}

TEST_CASE("superextension keeps the precoloring and respects hard color bans") {
    auto root = fixtures::cube_rooted();
    Coloring pre(8);
    pre.color = {1, 2, 1, 2, 0, 0, 0, 0};
    auto ext = superextend(root, spec110, pre);
    REQUIRE(ext.has_value());
    for (int v = 0; v < 8; ++v) {
        if (root.on_c0(v)) {
            CHECK(ext->color[v] == pre.color[v]);
        } else {
            for (int w : root.base().rotation(v))
                if (root.on_c0(w)) CHECK(ext->color[v] != ext->color[w]);
        }
    }
    CHECK(validate(root.base().abstract(), spec110, *ext, true).valid());
}

TEST_CASE("invalid precolorings are refused") {
    auto root = RootedPlaneGraph::root_at(fixtures::k4_wheel(), {0, 1, 2});
    Coloring bad(4);
    bad.color = {3, 3, 1, 0}; // two adjacent vertices in the zero-cap class
    CHECK_THROWS_AS(superextend(root, spec110, bad), InvalidPrecoloring);
    Coloring wrong_domain(4);
    wrong_domain.color = {1, 2, 0, 1};
    CHECK_THROWS_AS(superextend(root, spec110, wrong_domain), InvalidPrecoloring);
}

TEST_CASE("a pendant vertex never blocks superextendability of its triangle") {
    auto root = RootedPlaneGraph::root_at(fixtures::triangle_with_pendant(), {0, 1, 2});
    auto report = verify_superextendability(root, spec110);
    CHECK(report.ok);
    CHECK(report.precolorings_tried == 18); // valid colorings of a triangle under 1,1,0
}

TEST_CASE("family and length preconditions guard the superextendability check") {
    auto root = RootedPlaneGraph::root_at(fixtures::k4_wheel(), {0, 1, 2});
    CHECK_THROWS_AS(verify_superextendability(root, spec110), NotInFamily);
    auto cube = fixtures::cube_rooted();
    CHECK_THROWS_AS(verify_superextendability(cube, spec110), BadC0Length);
}

TEST_CASE("cube face precolorings superextend") {
    auto root = fixtures::cube_rooted();
    Coloring pre(8);
    pre.color = {1, 2, 1, 2, 0, 0, 0, 0};
    CHECK(superextend(root, spec110, pre).has_value());
}
