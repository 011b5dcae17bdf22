#include "doctest.h"
#include "fixtures.hpp"
#include "pg/discharging.hpp"
#include "pg/generator.hpp"

#include <set>

using namespace pg;

TEST_CASE("initial charges follow the degree formulas and sum to zero") {
    auto r = fixtures::cube_rooted();
    auto led = initial_charges(r);
    for (int v = 0; v < 8; ++v) CHECK(led.vertex_initial[v] == Rational(0)); // 2*3-6
    int inner = 0;
    for (int f = 0; f < r.base().face_count(); ++f) {
        if (r.is_outer(f)) {
            CHECK(led.face_initial[f] == Rational(10)); // 4+6
        } else {
            CHECK(led.face_initial[f] == Rational(-2));
            ++inner;
        }
    }
    CHECK(inner == 5);
    CHECK(led.total_initial() == Rational(0));
}

TEST_CASE("a rooted 7-cycle gives the outer face charge 13") {
    auto r = RootedPlaneGraph::root_at(fixtures::cycle(7), {0, 1, 2, 3, 4, 5, 6});
    auto led = initial_charges(r);
    CHECK(led.face_initial[r.outer_face()] == Rational(13));
    CHECK(led.total_initial() == Rational(0));
}

TEST_CASE("degree formulas pin single vertices") {
    auto r = RootedPlaneGraph::root_at(fixtures::double_wheel(), {0, 3, 1});
    auto led = initial_charges(r);
    for (int v = 0; v < 5; ++v)
        CHECK(led.vertex_initial[v] == Rational(2 * r.base().degree(v) - 6));
}

TEST_CASE("the cube ledger matches the worked accounting") {
    auto r = fixtures::cube_rooted();
    auto led = apply_rules(r);

    Rational c0v_total, c0_total, side_total, inner_total;
    for (int v = 0; v < 8; ++v) {
        if (r.on_c0(v)) {
            CHECK(led.vertex_final[v] == frac(-1, 2));
            c0v_total += led.vertex_final[v];
        } else {
            CHECK(led.vertex_final[v] == Rational(0));
        }
    }
    for (int f = 0; f < r.base().face_count(); ++f) {
        if (r.is_outer(f))
            c0_total = led.face_final[f];
        else if (r.c0_incidence(f) == 2) {
            CHECK(led.face_final[f] == Rational(0));
            side_total += led.face_final[f];
        } else {
            CHECK(led.face_final[f] == Rational(-2));
            inner_total += led.face_final[f];
        }
    }
    CHECK(c0v_total == Rational(-2));
    CHECK(c0_total == Rational(4));
    CHECK(side_total == Rational(0));
    CHECK(inner_total == Rational(-2));
    CHECK(led.total_final() == Rational(0));

    int r4 = 0, r5 = 0;
    for (const auto& t : led.transfers) {
        if (t.rule == "R4") {
            CHECK(t.amount == Rational(1));
            ++r4;
        }
        if (t.rule == "R5") {
            CHECK(t.amount == frac(3, 2));
            ++r5;
        }
    }
    CHECK(r4 == 8);
    CHECK(r5 == 4);
}

TEST_CASE("roles on the cube: no triangles, interior vertices rich") {
    auto r = fixtures::cube_rooted();
    auto roles = classify_roles(r);
    for (int v = 0; v < 8; ++v) {
        CHECK_FALSE(roles.bad4[v]);
        CHECK_FALSE(roles.weak5[v]);
        CHECK(roles.q4[v].empty());
        if (r.interior(v)) CHECK(roles.rich[v]);
    }
}

TEST_CASE("conservation and transfer hygiene across every generated rooted graph") {
    std::set<std::string> amounts;
    for (const auto& g : generate_plane_graphs(6)) {
        auto r = RootedPlaneGraph::root_at_face(g, 0);
        auto led = apply_rules(r);
        CHECK(led.total_initial() == Rational(0));
        CHECK(led.total_final() == Rational(0));
        for (const auto& t : led.transfers) {
            amounts.insert(t.amount.str());
            if (t.from.kind == Element::Vertex) {
                bool interior3 = r.interior(t.from.index) && g.degree(t.from.index) == 3;
                CHECK_FALSE(interior3);
            }
        }
    }
    std::set<std::string> allowed{"1/6", "1/2", "2/3", "3/4", "5/6", "1",
                                  "5/4", "3/2", "7/4", "2",   "9/4", "3"};
    for (const auto& a : amounts) CHECK(allowed.count(a));
}

TEST_CASE("ledgers are deterministic and serializations stable") {
    auto r = fixtures::cube_rooted();
    auto led = apply_rules(r);
    auto text = ledger_text(r, led);
    CHECK(text == ledger_text(r, apply_rules(r)));
    CHECK(text.find("C0") != std::string::npos);
    auto kv = ledger_kv(r, led);
    CHECK(kv.find("total.final 0\n") != std::string::npos);
    CHECK(kv.find("C0.initial 10\n") != std::string::npos);
}

TEST_CASE("the final report lists the cube's negative elements") {
    auto r = fixtures::cube_rooted();
    auto led = apply_rules(r);
    auto rep = final_report(r, led, {});
    CHECK(rep.negatives.size() == 5);
    CHECK(rep.total_final == Rational(0));
}
