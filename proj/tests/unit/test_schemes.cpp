#include "doctest.h"
#include "lcert/harness.hpp"
#include "lcert/schemes.hpp"

using namespace lcert;

namespace {

bool accepts(SchemeTag t, const Graph& g, const Certs& c) { return run_pls(g, c, verifier_for(t)).all_accept; }

std::int64_t field(const Certificate& c, const std::string& name) {
    for (auto& f : c.fields)
        if (f.name == name) return f.value;
    FAIL("no field " << name);
    return 0;
}

void expect_invalid(SchemeTag t, const Graph& g) {
    try {
        prove_from_graph(t, g);
        FAIL("prover produced certificates");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidWitness);
    }
}

}  // namespace

TEST_CASE("proper interval") {
    auto p3 = path_graph(3);
    CHECK(accepts(SchemeTag::ProperInterval, p3, prove_from_graph(SchemeTag::ProperInterval, p3)));
    // the middle node first breaks the consecutive-neighbourhood property
    CHECK_THROWS_AS(proper_interval_prove(p3, {{1, 0, 2}, OrderingProperty::ProperInterval}), Error);
    expect_invalid(SchemeTag::ProperInterval, star_graph(3));
    CHECK(accepts(SchemeTag::ProperInterval, complete_graph(5), prove_from_graph(SchemeTag::ProperInterval, complete_graph(5))));
}

TEST_CASE("chordal and interval") {
    auto k3 = with_ids(complete_graph(3), {5, 2, 9});
    auto c = prove_from_graph(SchemeTag::Chordal, k3);
    CHECK(accepts(SchemeTag::Chordal, k3, c));
    auto d = chordal_fields(k3, clique_tree_from_peo(k3, *is_chordal(k3)), false);
    REQUIRE(d.size() == 3);
    for (auto& x : d) {
        CHECK(x.F == 2);
        CHECK(x.depth == 0);
    }
    auto claw = star_graph(3);
    CHECK(accepts(SchemeTag::Interval, claw, prove_from_graph(SchemeTag::Interval, claw)));
    CHECK(accepts(SchemeTag::Chordal, claw, prove_from_graph(SchemeTag::Chordal, claw)));
    auto& sub = builtin_fixtures().get("subdivided-claw").graph;
    expect_invalid(SchemeTag::Interval, sub);
    CHECK(accepts(SchemeTag::Chordal, sub, prove_from_graph(SchemeTag::Chordal, sub)));
    expect_invalid(SchemeTag::Chordal, cycle_graph(4));
}

TEST_CASE("circular arc") {
    auto c6 = cycle_graph(6);
    auto c = prove_from_graph(SchemeTag::CircularArc, c6);
    CHECK(accepts(SchemeTag::CircularArc, c6, c));
    for (auto& x : c) CHECK(field(x, "L") == 2);
    auto k5 = complete_graph(5);
    auto ck = prove_from_graph(SchemeTag::CircularArc, k5);
    for (auto& x : ck) CHECK(field(x, "L") == 5);
    CHECK(accepts(SchemeTag::CircularArc, k5, ck));
    // swapping the positions of two nodes on C6 breaks the runs
    auto bad = c;
    std::swap(bad[0].fields[0].value, bad[1].fields[0].value);
    CHECK_FALSE(accepts(SchemeTag::CircularArc, c6, bad));
}

TEST_CASE("proper circular arc") {
    for (int n = 4; n <= 10; ++n) {
        auto g = cycle_graph(n);
        CHECK(accepts(SchemeTag::ProperCircularArc, g, prove_from_graph(SchemeTag::ProperCircularArc, g)));
    }
    auto k4 = complete_graph(4);
    CHECK(accepts(SchemeTag::ProperCircularArc, k4, prove_from_graph(SchemeTag::ProperCircularArc, k4)));
    expect_invalid(SchemeTag::ProperCircularArc, star_graph(3));
    for (std::uint64_t s = 0; s < 20; ++s) {
        auto [g, m] = random_model(SchemeTag::ProperCircularArc, 5 + static_cast<int>(s), s);
        auto certs = prove_from_model(SchemeTag::ProperCircularArc, g, m);
        CHECK(accepts(SchemeTag::ProperCircularArc, g, certs));
        auto f = decode_proper_circ(certs);
        std::vector<int> seen(g.n(), 0);
        for (auto& x : f) ++seen[x.pi];
        CHECK(std::count(seen.begin(), seen.end(), 1) == g.n());
    }
}

TEST_CASE("trapezoid scan values on a three-node model") {
    TrapezoidModel m;
    m.tz = {{1, 3, 1, 3}, {2, 5, 2, 5}, {4, 6, 4, 6}};
    auto g = graph_of(m);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 2));
    CHECK_FALSE(g.adjacent(0, 2));
    auto pq = trapezoid_scan_values(g, m);
    CHECK(pq[0] == std::pair<int, int>{4, 4});
    CHECK(pq[1] == std::pair<int, int>{7, 7});
    CHECK(pq[2] == std::pair<int, int>{7, 7});
    auto c = trapezoid_prove(g, m);
    CHECK(accepts(SchemeTag::Trapezoid, g, c));
    CHECK(field(c[0], "p") == 4);
    for (auto& v : build_views(g, c, std::nullopt)) {
        auto [ft, fb] = local_f_values(v);
        CHECK(ft == fb);
    }
}

TEST_CASE("permutation instances") {
    auto q3 = construct_Q(3);
    CHECK(accepts(SchemeTag::Permutation, q3, permutation_prove(q3, q_permutation_model(3))));
    auto seven = seven_line_permutation_graph();
    CHECK(accepts(SchemeTag::Permutation, seven, permutation_prove(seven, seven_line_permutation_model())));
    CHECK(accepts(SchemeTag::Trapezoid, seven,
                  prove_from_model(SchemeTag::Trapezoid, seven, GeometricModel{seven_line_permutation_model()})));
    expect_invalid(SchemeTag::Permutation, cycle_graph(6));
    expect_invalid(SchemeTag::Trapezoid, cycle_graph(6));
    // trapezoid certificates are not accepted by the permutation verifier
    auto k2 = complete_graph(2);
    auto tz = prove_from_graph(SchemeTag::Trapezoid, k2);
    CHECK_FALSE(accepts(SchemeTag::Permutation, k2, tz));
}

TEST_CASE("wrong model kind") {
    auto g = path_graph(3);
    IntervalModel iv{{{1, 3}, {2, 5}, {4, 6}}, true};
    CHECK_THROWS_AS(prove_from_model(SchemeTag::Permutation, g, GeometricModel{iv}), Error);
    CHECK(accepts(SchemeTag::CircularArc, g, prove_from_model(SchemeTag::CircularArc, g, GeometricModel{iv})));
    CHECK(accepts(SchemeTag::ProperCircularArc, g, prove_from_model(SchemeTag::ProperCircularArc, g, GeometricModel{iv})));
}

TEST_CASE("honest certificates across generated instances") {
    for (auto t : kAllSchemes)
        for (std::uint64_t s = 0; s < 10; ++s) {
            auto [g, m] = random_model(t, 4 + static_cast<int>(3 * s), 40 + s);
            CHECK_MESSAGE(accepts(t, g, prove_from_model(t, g, m)), scheme_name(t), " seed ", s);
        }
}
