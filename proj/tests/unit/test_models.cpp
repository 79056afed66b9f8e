#include "doctest.h"
#include "lcert/models.hpp"
#include "lcert/oracles.hpp"

using namespace lcert;

namespace {

template <class F>
ErrorKind kind_of(F f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::UnknownScheme;
}

CliqueTree tree(std::vector<std::vector<int>> bags, std::vector<int> parent, int root = 0) {
    CliqueTree t;
    t.bags = std::move(bags);
    t.parent = std::move(parent);
    t.root = root;
    return t;
}

}  // namespace

TEST_CASE("interval model validation") {
    auto p3 = path_graph(3);
    IntervalModel m{{{1, 3}, {2, 5}, {4, 6}}, false};
    CHECK(validate_interval_model(m, p3));
    CHECK(graph_of(m) == p3);
    IntervalModel wrong{{{1, 2}, {3, 4}, {5, 6}}, false};
    CHECK_FALSE(validate_interval_model(wrong, p3));
}

TEST_CASE("no interval model of C4 over all endpoint interleavings") {
    auto c4 = cycle_graph(4);
    // every assignment of 8 distinct endpoints: permutations of slot labels
    std::vector<int> slots{0, 0, 1, 1, 2, 2, 3, 3};
    int models = 0, valid = 0;
    do {
        IntervalModel m;
        m.iv.assign(4, {0, 0});
        std::vector<int> seen(4, 0);
        for (int p = 0; p < 8; ++p) {
            int v = slots[p];
            (seen[v]++ ? m.iv[v].b : m.iv[v].a) = p + 1;
        }
        ++models;
        valid += validate_interval_model(m, c4);
    } while (std::next_permutation(slots.begin(), slots.end()));
    CHECK(models == 2520);
    CHECK(valid == 0);
}

TEST_CASE("no proper interval model of the claw") {
    auto claw = star_graph(3);
    std::vector<int> slots{0, 0, 1, 1, 2, 2, 3, 3};
    int valid = 0;
    do {
        IntervalModel m;
        m.proper = true;
        m.iv.assign(4, {0, 0});
        std::vector<int> seen(4, 0);
        for (int p = 0; p < 8; ++p) {
            int v = slots[p];
            (seen[v]++ ? m.iv[v].b : m.iv[v].a) = p + 1;
        }
        bool nested = false;
        for (int u = 0; u < 4; ++u)
            for (int v = 0; v < 4; ++v)
                if (u != v && m.iv[u].a < m.iv[v].a && m.iv[v].b < m.iv[u].b) nested = true;
        if (!nested) valid += validate_interval_model(m, claw);
    } while (std::next_permutation(slots.begin(), slots.end()));
    CHECK(valid == 0);
}

TEST_CASE("arc models") {
    auto c4 = cycle_graph(4);
    // arcs l..r on 8 slots, each overlapping its two cyclic neighbours
    ArcModel m{{{3, 8}, {5, 2}, {7, 4}, {1, 6}}, 8, true};
    CHECK(validate_arc_model(m, c4));
    ArcModel dup{{{3, 8}, {5, 2}, {7, 4}, {1, 3}}, 8, false};
    CHECK(kind_of([&] { validate_arc_model(dup, c4); }) == ErrorKind::MalformedModel);
    // an interval model embedded in an arc of the circle keeps its verdict
    IntervalModel iv{{{1, 3}, {2, 5}, {4, 6}}, false};
    ArcModel as_arcs{{{3, 1}, {5, 2}, {6, 4}}, 7, false};
    CHECK(validate_arc_model(as_arcs, path_graph(3)) == validate_interval_model(iv, path_graph(3)));
    CHECK(arc_contains_point({2, 7}, 1, 8));
    CHECK_FALSE(arc_contains_point({2, 7}, 4, 8));
}

TEST_CASE("clique tree validation") {
    CHECK(validate_clique_tree(tree({{0, 1, 2}}, {-1}), complete_graph(3)));
    CHECK(validate_clique_tree(tree({{0, 1}, {1, 2}}, {-1, 0}), path_graph(3)));
    CHECK_FALSE(validate_clique_tree(tree({{0, 1}, {2}}, {-1, 0}), path_graph(3)));
}

TEST_CASE("trim partition") {
    auto single = trim_partition(tree({{0, 1, 2}}, {-1}));
    CHECK(single.F[0] == std::vector<int>{0, 1, 2});
    auto two = trim_partition(tree({{0, 1, 2}, {2, 3}}, {-1, 0}));
    CHECK(two.F[0] == std::vector<int>{0, 1, 2});
    CHECK(two.F[1] == std::vector<int>{3});
    CHECK(two.bag_of[3] == 1);
}

TEST_CASE("leaders") {
    // P5 as a path of bags {0,1},{1,2},{2,3},{3,4}; take the first three bags on P4
    auto p4 = path_graph(4);
    auto t = tree({{0, 1}, {1, 2}, {2, 3}}, {-1, 0, 1});
    auto la = choose_leaders(t, p4);
    CHECK(check_leader_conditions(t, p4, la).empty());
    CHECK(la.leader[0] != la.leader[1]);
    CHECK(la.leader[1] != la.leader[2]);
    // star of bags: root {0,1,2,3}, leaves {0,4},{1,5},{2,6}
    auto g = build_graph(7, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {1, 5}, {2, 6}});
    auto star = tree({{0, 1, 2, 3}, {0, 4}, {1, 5}, {2, 6}}, {-1, 0, 0, 0});
    auto ls = choose_leaders(star, g);
    CHECK(check_leader_conditions(star, g, ls).empty());
    for (int b = 1; b <= 3; ++b) {
        CHECK(ls.leader[b] == b - 1);  // in leaf and root
        CHECK(ls.aux[b] == b + 3);     // outside the root
    }
    auto one = choose_leaders(tree({{0, 1, 2}}, {-1}), complete_graph(3));
    CHECK(one.leader[0] == 0);
    CHECK(one.aux[0] == -1);
}

TEST_CASE("normalization re-hangs a leaf under its grandparent") {
    // b0 = {u,v,w,a}, b1 = {u,v,w,b}, b2 = {u,v,c}: b1 ∩ b2 ⊆ b0 ∩ b1
    auto g = build_graph(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}, {0, 4}, {1, 4}, {2, 4}, {0, 5}, {1, 5}});
    auto t = tree({{0, 1, 2, 3}, {0, 1, 2, 4}, {0, 1, 5}}, {-1, 0, 1});
    REQUIRE(validate_clique_tree(t, g));
    auto nt = normalize_clique_tree(t);
    CHECK(nt.parent[2] == 0);
    CHECK(validate_clique_tree(nt, g));
    auto again = normalize_clique_tree(nt);
    CHECK(again.parent == nt.parent);
}

TEST_CASE("trapezoid intersection") {
    Trapezoid a{1, 2, 1, 2}, b{3, 4, 3, 4};
    CHECK_FALSE(trapezoids_intersect(a, b));
    // a corner of one inside the other
    CHECK(trapezoids_intersect({1, 4, 1, 4}, {2, 5, 6, 7}));
    // crossing without corner containment
    CHECK(trapezoids_intersect({1, 2, 7, 8}, {5, 6, 3, 4}));
}

TEST_CASE("permutation to consecutive trapezoid") {
    PermutationModel cross{{1, 2}, {2, 1}};
    auto t = permutation_to_consecutive_trapezoid(cross);
    CHECK(t.tz[0].t1 == 3);
    CHECK(t.tz[0].b1 == 1);
    CHECK(t.tz[1].t1 == 1);
    CHECK(t.tz[1].b1 == 3);
    CHECK(trapezoids_intersect(t.tz[0], t.tz[1]));
    PermutationModel par{{1, 2}, {1, 2}};
    auto u = permutation_to_consecutive_trapezoid(par);
    CHECK_FALSE(trapezoids_intersect(u.tz[0], u.tz[1]));
    auto q3 = q_permutation_model(3);
    CHECK(validate_permutation_model(q3, construct_Q(3)));
    auto tq = permutation_to_consecutive_trapezoid(q3);
    CHECK(validate_trapezoid_model(tq, construct_Q(3)));
    auto back = consecutive_trapezoid_to_permutation(tq);
    CHECK(back.l1 == q3.l1);
    CHECK(back.l2 == q3.l2);
    CHECK(validate_permutation_model(seven_line_permutation_model(), seven_line_permutation_graph()));
}

TEST_CASE("generators") {
    auto [g1, m1] = random_model(SchemeTag::Interval, 1, 0);
    CHECK(g1.n() == 1);
    CHECK(std::get<IntervalModel>(m1).iv.size() == 1);
    for (std::uint64_t s = 0; s < 20; ++s) {
        auto [g, m] = random_model(SchemeTag::Permutation, 10, s);
        CHECK(validate_permutation_model(std::get<PermutationModel>(m), g));
        auto [gc, mc] = random_model(SchemeTag::Chordal, 30, s);
        CHECK(is_chordal(gc).has_value());
        CHECK(validate_clique_tree(std::get<CliqueTree>(mc), gc));
        auto [gt, mt] = random_model(SchemeTag::Trapezoid, 12, s);
        CHECK(validate_trapezoid_model(std::get<TrapezoidModel>(mt), gt));
        auto [ga, ma] = random_model(SchemeTag::ProperCircularArc, 12, s);
        CHECK(validate_arc_model(std::get<ArcModel>(ma), ga));
    }
    auto a = random_model(SchemeTag::Interval, 20, 5);
    auto b = random_model(SchemeTag::Interval, 20, 5);
    CHECK(a.first == b.first);
}

TEST_CASE("f_t equals f_b on generated proper trapezoid models") {
    for (std::uint64_t s = 0; s < 50; ++s) {
        auto [g, m] = random_model(SchemeTag::Trapezoid, 5 + static_cast<int>(s % 30), s);
        for (auto [ft, fb] : trapezoid_f_values(std::get<TrapezoidModel>(m), g)) CHECK(ft == fb);
    }
}

TEST_CASE("model files round trip") {
    std::vector<GeometricModel> ms;
    for (auto t : kAllSchemes) ms.push_back(random_model(t, 9, 4).second);
    for (auto& m : ms) {
        auto text = format_model(m);
        CHECK(format_model(parse_model(text)) == text);
    }
    CHECK(kind_of([] { parse_model("class interval\nn 1\nproper 0\n0 1 2\nextra\n"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { parse_model("class nonsense\n"); }) == ErrorKind::ParseError);
}
