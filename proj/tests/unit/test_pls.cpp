#include "doctest.h"
#include "lcert/pls.hpp"
#include "lcert/schemes.hpp"

using namespace lcert;

namespace {

bool accepts(const Graph& g, const Certs& c, const Verifier& v) { return run_pls(g, c, v).all_accept; }

Certs st_certs(const std::vector<StCert>& s) {
    Certs out;
    for (auto& x : s) out.push_back(encode(x));
    return out;
}

}  // namespace

TEST_CASE("domains and bit widths") {
    CHECK(domain_bounds(Dom::Id, 4).hi == 64);
    CHECK(domain_bounds(Dom::IdOrNone, 4).lo == 0);
    CHECK(domain_bounds(Dom::Coord2nS, 4).hi == 9);
    CHECK(field_bits(Dom::Id, 16) == 12);
    CHECK(field_bits(Dom::Count, 16) == 4);
    CHECK(field_bits(Dom::Coord2n, 16) == 5);
    CHECK(field_bits(Dom::Bit, 16) == 1);
}

TEST_CASE("run_pls semantics") {
    auto g = path_graph(3);
    Certs empty(3, Certificate{"x", {}, {}});
    auto r = run_pls(g, empty, [](const NodeView&) { return true; });
    CHECK(r.all_accept);
    CHECK(r.verdict() == "all-accept");
    auto r1 = run_pls(g, empty, [](const NodeView& v) { return v.my_id != 1; });
    CHECK_FALSE(r1.all_accept);
    CHECK(r1.rejecting_ids == std::vector<Id>{1});
    auto thrower = run_pls(g, empty, [](const NodeView& v) -> bool {
        if (v.my_id == 2) throw std::runtime_error("boom");
        return true;
    });
    CHECK(thrower.rejecting_ids == std::vector<Id>{2});
    Certs bad = empty;
    bad[0].fields.push_back({"x", Dom::Count, 99});
    auto out_of_domain = run_pls(g, bad, [](const NodeView&) { return true; });
    CHECK(out_of_domain.rejecting_ids == std::vector<Id>{1, 2});
    CHECK(RunReport::csv_header() == "scheme,n,verdict,rejecting_ids,max_cert_bits,seed");
}

TEST_CASE("proper-interval certificates on P3 run end to end") {
    auto g = path_graph(3);
    auto c = proper_interval_prove(g, {{0, 1, 2}, OrderingProperty::ProperInterval});
    CHECK(accepts(g, c, proper_interval_verify));
}

TEST_CASE("spanning tree") {
    auto star = star_graph(4);
    CHECK(accepts(star, spanning_tree_prove(star, 0), spanning_tree_verify));
    auto g = path_graph(4);
    // nodes 2 and 3 (ids 3, 4) point at each other with equal distances
    auto s = spanning_tree_certs(g, 0);
    s[2] = {1, 4, 2, 1};
    s[3] = {1, 3, 2, 1};
    CHECK_FALSE(accepts(g, st_certs(s), spanning_tree_verify));
    auto two = spanning_tree_certs(g, 0);
    for (int v = 2; v < 4; ++v) two[v] = spanning_tree_certs(g, 3)[v];
    auto r = run_pls(g, st_certs(two), spanning_tree_verify);
    CHECK_FALSE(r.all_accept);
}

TEST_CASE("size protocol") {
    auto g = path_graph(4);
    auto sz = size_certs(g, 0);
    CHECK(sz[0].c == 4);
    CHECK(sz[1].c == 3);
    CHECK(sz[2].c == 2);
    CHECK(sz[3].c == 1);
    CHECK(accepts(g, size_prove(g, 0), size_verify));
    auto inflated = size_prove(g, 0);
    inflated[3].fields[0].value = 2;
    CHECK_FALSE(accepts(g, inflated, size_verify));
    auto r = run_pls(g, size_prove(g, 0, 5), size_verify);
    CHECK_FALSE(r.all_accept);
    CHECK(std::find(r.rejecting_ids.begin(), r.rejecting_ids.end(), Id{1}) != r.rejecting_ids.end());
}

TEST_CASE("s-t path protocol") {
    auto p3 = path_graph(3);
    CHECK(accepts(p3, st_path_prove(p3, 0, 2), st_path_verify));
    auto g = path_graph(5);
    auto c = st_path_prove(g, 0, 4);
    // interior node 2 claims a successor that does not carry the flag
    auto gap = c;
    gap[3] = st_path_prove(g, 0, 0)[3];
    CHECK_FALSE(accepts(g, gap, st_path_verify));
    // two flagged segments 0-1 and 3-4 with 2 unflagged
    auto seg = st_path_prove(g, 0, 4);
    seg[2] = st_path_prove(g, 0, 0)[2];
    CHECK_FALSE(accepts(g, seg, st_path_verify));
    CHECK(shortest_path(cycle_graph(6), 0, 3).size() == 4);
}

TEST_CASE("corruptions") {
    auto g = path_graph(5);
    auto c = size_prove(g, 0);
    for (auto s : kAllCorruptions) {
        auto x = corrupt(c, s, 11, 5);
        auto y = corrupt(c, s, 11, 5);
        CHECK(x.size() == c.size());
        bool same = true;
        for (std::size_t i = 0; i < x.size(); ++i) same = same && x[i] == y[i];
        CHECK(same);
        bool changed = false;
        for (std::size_t i = 0; i < x.size(); ++i) changed = changed || !(x[i] == c[i]);
        CHECK(changed);
    }
    Certs one{Certificate{"t", {{"b", Dom::Bit, 0}}, {}}};
    auto flipped = corrupt(one, Corruption::FlipField, 3, 1);
    CHECK(flipped[0].fields[0].value == 1);
    auto swapped = corrupt(corrupt(c, Corruption::SwapTwoNodes, 9, 5), Corruption::SwapTwoNodes, 9, 5);
    for (std::size_t i = 0; i < c.size(); ++i) CHECK(swapped[i] == c[i]);
    auto u = sample_uniform(c, 4, 5);
    for (auto& x : u) CHECK(x.in_domain(5));
    CHECK(parse_corruption("flip-field") == Corruption::FlipField);
}

TEST_CASE("certificate files") {
    auto g = with_ids(path_graph(4), {7, 3, 9, 1});
    auto c = size_prove(g, 1);
    std::string scheme;
    auto back = certs_from_json(certs_to_json("size", g, c), &scheme);
    CHECK(scheme == "size");
    REQUIRE(back.size() == c.size());
    for (std::size_t i = 0; i < c.size(); ++i) CHECK(back[i] == c[i]);
    auto text = certs_to_json("size", g, c);
    CHECK_THROWS_AS(certs_from_json(text.substr(0, text.size() / 2)), Error);
    CHECK_THROWS_AS(certs_from_json("{\"scheme\":\"x\"}"), Error);
}
