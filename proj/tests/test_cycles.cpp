#include "doctest.h"
#include "fixtures.hpp"
#include "pg/cycles.hpp"

#include <algorithm>
#include <set>

using namespace pg;

namespace {

// independent oracle: enumerate vertex subsets and all circular orders
std::set<std::vector<int>> brute_force_cycles(const AbstractGraph& g, int max_len) {
    std::set<std::vector<int>> out;
    std::vector<int> verts(g.n);
    for (int i = 0; i < g.n; ++i) verts[i] = i;
    std::vector<int> perm;
    std::vector<char> used(g.n, 0);
    auto rec = [&](auto&& self) -> void {
        int len = static_cast<int>(perm.size());
        if (len >= 3 && g.has_edge(perm.back(), perm.front())) out.insert(canonical_cycle(perm));
        if (len == max_len) return;
        for (int v = 0; v < g.n; ++v) {
            if (used[v]) continue;
            if (!perm.empty() && !g.has_edge(perm.back(), v)) continue;
            used[v] = 1;
            perm.push_back(v);
            self(self);
            perm.pop_back();
            used[v] = 0;
        }
    };
    rec(rec);
    return out;
}

} // namespace

TEST_CASE("K4 has four triangles") {
    auto cycles = find_cycles_up_to(fixtures::k4_wheel().abstract(), 3);
    CHECK(cycles.size() == 4);
}

TEST_CASE("the cube has exactly six 4-cycles and no 3- or 5-cycles") {
    auto cycles = cycles_up_to(fixtures::cube(), 5);
    CHECK(cycles.size() == 6);
    for (const auto& c : cycles) {
        CHECK(c.length() == 4);
        CHECK(c.facial);
        CHECK_FALSE(c.separating);
    }
}

TEST_CASE("C7 contains exactly one cycle") {
    auto cycles = cycles_up_to(fixtures::cycle(7), 7);
    REQUIRE(cycles.size() == 1);
    CHECK(cycles[0].length() == 7);
    CHECK(cycles[0].facial);
}

TEST_CASE("enumeration agrees with the brute-force oracle on all fixtures") {
    for (const auto& g : {fixtures::triangle(), fixtures::cube(), fixtures::k4_wheel(),
                          fixtures::double_wheel(), fixtures::cycle(6),
                          fixtures::triangle_with_pendant()}) {
        auto a = g.abstract();
        for (int L : {3, 5, 8}) {
            auto fast = find_cycles_up_to(a, L);
            auto slow = brute_force_cycles(a, L);
            CHECK(std::set<std::vector<int>>(fast.begin(), fast.end()) == slow);
        }
    }
}

TEST_CASE("separating cycles require vertices on both sides") {
    CHECK_FALSE(is_separating(fixtures::k4_wheel(), {0, 1, 2}));
    CHECK(is_separating(fixtures::double_wheel(), {0, 1, 2}));
    CHECK_FALSE(is_separating(fixtures::cube(), {0, 1, 2, 3}));
    CHECK_THROWS_AS(is_separating(fixtures::cube(), {0, 1, 2}), GraphError);
    CHECK_THROWS_AS(is_separating(fixtures::cube(), {0, 1, 1, 0}), GraphError);
}

TEST_CASE("C5 is rejected from the family with a 5-cycle witness") {
    auto v = check_family_membership(fixtures::cycle(5));
    REQUIRE_FALSE(v.in_family());
    CHECK(v.violation->kind == ViolationKind::FiveCycle);
    CHECK(v.violation->cycle == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("K4 is rejected for adjacent triangles") {
    auto v = check_family_membership(fixtures::k4_wheel());
    REQUIRE_FALSE(v.in_family());
    CHECK(v.violation->kind == ViolationKind::AdjacentTriangles);
}

TEST_CASE("the cube is in the family") {
    CHECK(check_family_membership(fixtures::cube()).in_family());
}

TEST_CASE("membership is equivalent to the stated cycle conditions") {
    for (const auto& g : {fixtures::triangle(), fixtures::cube(), fixtures::k4_wheel(),
                          fixtures::double_wheel(), fixtures::cycle(5), fixtures::cycle(7)}) {
        auto cycles = cycles_up_to(g, 5);
        bool has5 = std::any_of(cycles.begin(), cycles.end(),
                                [](const CycleWitness& c) { return c.length() == 5; });
        bool adjacent33 = false;
        for (size_t i = 0; i < cycles.size(); ++i)
            for (size_t j = i + 1; j < cycles.size(); ++j) {
                if (cycles[i].length() != 3 || cycles[j].length() != 3) continue;
                std::set<std::pair<int, int>> e1;
                auto& a = cycles[i].vertices;
                auto& b = cycles[j].vertices;
                for (int t = 0; t < 3; ++t)
                    e1.insert({std::min(a[t], a[(t + 1) % 3]), std::max(a[t], a[(t + 1) % 3])});
                for (int t = 0; t < 3; ++t)
                    if (e1.count({std::min(b[t], b[(t + 1) % 3]), std::max(b[t], b[(t + 1) % 3])}))
                        adjacent33 = true;
            }
        CHECK(check_family_membership(g).in_family() == (!has5 && !adjacent33));
    }
}
