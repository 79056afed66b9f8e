#include "doctest.h"
#include "lcert/oracles.hpp"

using namespace lcert;

TEST_CASE("chordality") {
    CHECK(is_chordal(complete_graph(4)).has_value());
    CHECK_FALSE(is_chordal(cycle_graph(4)).has_value());
    CHECK_FALSE(is_chordal(cycle_graph(6)).has_value());
    auto peo = is_chordal(path_graph(5));
    REQUIRE(peo.has_value());
    CHECK(is_perfect_elimination_ordering(path_graph(5), *peo));
    CHECK_THROWS_AS(clique_tree_from_peo(cycle_graph(4), {0, 1, 2, 3}), Error);
}

TEST_CASE("clique trees from elimination orderings") {
    auto p3 = path_graph(3);
    auto t = clique_tree_from_peo(p3, *is_chordal(p3));
    CHECK(t.size() == 2);
    CHECK(validate_clique_tree(t, p3));
    auto k3 = complete_graph(3);
    CHECK(clique_tree_from_peo(k3, *is_chordal(k3)).size() == 1);
    for (std::uint64_t s = 0; s < 100; ++s) {
        auto [g, m] = random_model(SchemeTag::Chordal, 5 + static_cast<int>(s % 30), s);
        CHECK(validate_clique_tree(clique_tree_from_peo(g, *is_chordal(g)), g));
    }
}

TEST_CASE("interval and proper interval") {
    CHECK(is_interval(path_graph(6)));
    CHECK(is_proper_interval(path_graph(6)));
    CHECK(is_interval(star_graph(3)));
    CHECK_FALSE(is_proper_interval(star_graph(3)));
    CHECK_FALSE(is_interval(cycle_graph(4)));
    CHECK_FALSE(is_proper_interval(cycle_graph(4)));
    auto sub = build_graph(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
    CHECK(has_asteroidal_triple(sub));
    CHECK_FALSE(is_interval(sub));
    CHECK(is_proper_interval_ordering(path_graph(3), {0, 1, 2}));
    CHECK_FALSE(is_proper_interval_ordering(path_graph(3), {0, 2, 1}));
}

TEST_CASE("last index") {
    // empty graph on 3 nodes: identity matrix
    AugmentedAdjacency id{3, {1, 0, 0, 0, 1, 0, 0, 0, 1}};
    CHECK(last_index(id, 0) == 0);
    auto kn = augmented_adjacency(complete_graph(4), {0, 1, 2, 3});
    CHECK_FALSE(last_index(kn, 2).has_value());
    // C4 in cyclic order: column 0 holds rows 3,0,1 -> run ends at row 1
    auto c4 = augmented_adjacency(cycle_graph(4), {0, 1, 2, 3});
    CHECK(last_index(c4, 0) == 1);
}

TEST_CASE("matrix permutations") {
    auto m = augmented_adjacency(cycle_graph(5), {0, 1, 2, 3, 4});
    auto x = m;
    for (int i = 0; i < 5; ++i) x = apply_perm(x, MatrixPerm::Sh);
    CHECK(x == m);
    auto g = augmented_adjacency(path_graph(5), {0, 2, 4, 1, 3});
    CHECK(apply_perm(apply_perm(g, MatrixPerm::Inv), MatrixPerm::Inv) == g);
    CHECK(perm_map(5, MatrixPerm::Inv) == std::vector<int>{3, 2, 1, 0, 4});
    CHECK(perm_map(5, MatrixPerm::Sh) == std::vector<int>{1, 2, 3, 4, 0});
    // the band of C4 moves one step down the diagonal
    auto c4 = augmented_adjacency(cycle_graph(4), {0, 1, 2, 3});
    auto s = apply_perm(c4, MatrixPerm::Sh);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(s.at((i + 1) % 4, (j + 1) % 4) == c4.at(i, j));
}

TEST_CASE("circular 1's properties") {
    CHECK(has_circularly_compatible_ones(augmented_adjacency(complete_graph(5), {0, 1, 2, 3, 4})));
    CHECK(has_circularly_compatible_ones(augmented_adjacency(cycle_graph(6), {0, 1, 2, 3, 4, 5})));
    std::vector<int> o{0, 1, 2, 3};
    int ok = 0;
    do ok += has_circularly_compatible_ones(augmented_adjacency(star_graph(3), o));
    while (std::next_permutation(o.begin(), o.end()));
    CHECK(ok == 0);
    CHECK(has_quasi_circular_ones(augmented_adjacency(complete_graph(4), {0, 1, 2, 3})));
    CHECK_FALSE(has_quasi_circular_ones(augmented_adjacency(path_graph(4), {0, 2, 1, 3})));
    CHECK(column_runs(augmented_adjacency(cycle_graph(6), {0, 1, 2, 3, 4, 5})) == std::vector<int>(6, 2));
    CHECK(column_runs(augmented_adjacency(complete_graph(5), {0, 1, 2, 3, 4})) == std::vector<int>(5, 5));
}

TEST_CASE("ordering searches") {
    CHECK(search_ordering(cycle_graph(5), OrderingProperty::QuasiCircular).has_value());
    for (std::uint64_t s = 0; s < 100; ++s) {
        auto [g, m] = random_model(SchemeTag::Interval, 4 + static_cast<int>(s % 6), s);
        CHECK(search_ordering(g, OrderingProperty::QuasiCircular).has_value());
    }
    auto w = search_ordering(cycle_graph(6), OrderingProperty::CircularlyCompatible);
    REQUIRE(w.has_value());
    CHECK(ordering_has_property(cycle_graph(6), w->order, OrderingProperty::CircularlyCompatible));
    CHECK_FALSE(brute_proper_arc_model(star_graph(3)).has_value());
    auto a = brute_proper_arc_model(cycle_graph(5));
    REQUIRE(a.has_value());
    CHECK(validate_arc_model(*a, cycle_graph(5)));
    CHECK_THROWS_AS(search_ordering(path_graph(11), OrderingProperty::QuasiCircular), Error);
}

TEST_CASE("permutation search and trapezoid fixture") {
    CHECK_FALSE(permutation_model_search(cycle_graph(6)).has_value());
    auto q1 = permutation_model_search(construct_Q(1));
    REQUIRE(q1.has_value());
    CHECK(validate_permutation_model(*q1, construct_Q(1)));
    CHECK(permutation_model_search(construct_Q(2), 10).has_value());
    auto k3 = permutation_model_search(complete_graph(3));
    REQUIRE(k3.has_value());
    CHECK(validate_permutation_model(*k3, complete_graph(3)));
    CHECK(trapezoid_membership_fixture(crossing_Q(3, 1, 2)) == Membership::No);
    auto [g, m] = random_model(SchemeTag::Trapezoid, 12, 3);
    CHECK(trapezoid_membership_fixture(g, std::get<TrapezoidModel>(m)) == Membership::Yes);
    // dense graph above every cap
    std::vector<NodePair> e;
    for (int u = 0; u < 20; ++u)
        for (int v = u + 1; v < 20; ++v)
            if ((u * 7 + v * 3) % 5 != 0) e.push_back({u, v});
    CHECK(trapezoid_membership_fixture(build_graph(20, e)) == Membership::Unknown);
}

TEST_CASE("small catalogs agree with the searches") {
    CHECK(small_catalog_member(cycle_graph(5), SmallClass::CircularArc));
    CHECK_FALSE(small_catalog_member(cycle_graph(5), SmallClass::Permutation));
    CHECK(small_catalog_member(star_graph(3), SmallClass::Permutation));
    CHECK_THROWS_AS(small_catalog_member(path_graph(7), SmallClass::CircularArc), Error);
}
