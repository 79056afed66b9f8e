#include <set>
#include <sstream>

#include "doctest.h"
#include "lcert/graph.hpp"

using namespace lcert;

namespace {

bool induced_cycle_on(const Graph& g, const std::vector<int>& s) {
    std::set<int> in(s.begin(), s.end());
    for (int v : s) {
        int d = 0;
        for (int u : g.neighbors(v)) d += in.count(u);
        if (d != 2) return false;
    }
    // connected within s
    std::set<int> seen{s[0]};
    std::vector<int> st{s[0]};
    while (!st.empty()) {
        int v = st.back();
        st.pop_back();
        for (int u : g.neighbors(v))
            if (in.count(u) && seen.insert(u).second) st.push_back(u);
    }
    return seen.size() == s.size();
}

}  // namespace

TEST_CASE("build_graph basics") {
    auto p3 = build_graph(3, {{0, 1}, {1, 2}});
    CHECK(p3.n() == 3);
    CHECK(p3.m() == 2);
    CHECK(p3.adjacent(0, 1));
    CHECK_FALSE(p3.adjacent(0, 2));
    auto c4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    for (int v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);
    CHECK_THROWS_AS(build_graph(2, {}), Error);
    try {
        build_graph(2, {});
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DisconnectedGraph);
    }
}

TEST_CASE("build_graph rejects bad input") {
    auto kind = [](auto f) {
        try {
            f();
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::UnknownScheme;
    };
    CHECK(kind([] { build_graph(2, {{0, 1}, {1, 0}}); }) == ErrorKind::DuplicateEdge);
    CHECK(kind([] { build_graph(2, {{0, 0}, {0, 1}}); }) == ErrorKind::SelfLoop);
    CHECK(kind([] { build_graph(2, {{0, 2}}); }) == ErrorKind::BadIndex);
    CHECK(kind([] { build_graph(2, {{0, 1}}, std::vector<Id>{5, 5}); }) == ErrorKind::IdCollision);
}

TEST_CASE("ids") {
    auto g = with_ids(path_graph(3), {10, 20, 30});
    CHECK(g.id(1) == 20);
    CHECK(g.index_of(30) == 2);
    CHECK(g.index_of(7) == -1);
    auto h = with_permuted_ids(path_graph(5), 3);
    std::set<Id> s(h.ids().begin(), h.ids().end());
    CHECK(s.size() == 5);
    for (Id x : s) CHECK((x >= 1 && x <= 125));
    CHECK(with_permuted_ids(path_graph(5), 3).ids() == h.ids());
}

TEST_CASE("construct_Q") {
    auto q1 = construct_Q(1);
    CHECK(q1.n() == 5);
    CHECK(q1.m() == 5);
    CHECK(q1.adjacent(1, 3));  // v2 v4
    auto q3 = construct_Q(3);
    CHECK(q3.n() == 15);
    CHECK(q3.m() == 14 + 3);
    CHECK(q3.adjacent(6, 8));
    CHECK(q3.adjacent(11, 13));
}

TEST_CASE("crossing of Q_3 produces the induced 6-cycle") {
    auto [a, b] = q_block(1);
    auto [c, d] = q_block(2);
    CHECK(a == 2);
    CHECK(b == 3);
    CHECK(c == 7);
    CHECK(d == 8);
    auto x = crossing_Q(3, 1, 2);
    // v7, v8, v4, v2, v3, v9
    CHECK(induced_cycle_on(x, {6, 7, 3, 1, 2, 8}));
    CHECK(has_induced_cycle_at_least(x, 5));
    CHECK_FALSE(has_induced_cycle_at_least(construct_Q(3), 5));
}

TEST_CASE("crossing swaps endpoints and is an involution") {
    // 6-cycle 0-1-3-5-4-2 with rungs 0-1 and 4-5 as the swapped pair
    auto g = build_graph(6, {{0, 1}, {4, 5}, {0, 2}, {2, 4}, {1, 3}, {3, 5}});
    auto x = crossing(g, {0, 1}, {4, 5}, {4, 5});
    CHECK_FALSE(x.adjacent(0, 1));
    CHECK_FALSE(x.adjacent(4, 5));
    CHECK(x.adjacent(0, 5));
    CHECK(x.adjacent(1, 4));
    CHECK(x.m() == g.m());
    CHECK(crossing(x, {0, 1}, {4, 5}, {4, 5}) == g);
    CHECK_THROWS_AS(crossing(g, {0, 1}, {1, 2}, {1, 2}), Error);
}

TEST_CASE("induced cycles") {
    CHECK(has_induced_cycle_at_least(cycle_graph(4), 4));
    CHECK_FALSE(has_induced_cycle_at_least(complete_graph(4), 4));
    CHECK(has_induced_cycle_at_least(cycle_graph(6), 5));
    CHECK_FALSE(has_induced_cycle_at_least(path_graph(6), 3));
}

TEST_CASE("edge-list round trip") {
    auto g = with_ids(construct_Q(2), {3, 1, 4, 15, 9, 2, 6, 5, 35, 8});
    auto text = format_edge_list(g);
    CHECK(parse_edge_list(text) == g);
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), Error);
    CHECK_THROWS_AS(parse_edge_list("garbage"), Error);
}
