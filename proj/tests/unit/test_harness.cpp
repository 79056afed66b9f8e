#include "doctest.h"
#include "lcert/harness.hpp"
#include "lcert/schemes.hpp"

using namespace lcert;

TEST_CASE("registry refuses verdicts without provenance") {
    FixtureRegistry r;
    FixtureEntry e{"c4", cycle_graph(4), {}, ""};
    e.verdicts[SchemeTag::Chordal] = {Membership::No, ""};
    CHECK_THROWS_AS(r.add(e), Error);
    e.verdicts[SchemeTag::Chordal].provenance = "chordality oracle";
    r.add(e);
    CHECK_THROWS_AS(r.add(e), Error);
    CHECK(r.get("c4").verdict(SchemeTag::Chordal) == Membership::No);
    CHECK(r.get("c4").verdict(SchemeTag::Trapezoid) == Membership::Unknown);
    CHECK_THROWS_AS(r.get("missing"), Error);
}

TEST_CASE("builtin no-instances") {
    auto pairs = soundness_pairs();
    CHECK(pairs.size() == 11);
    for (auto& p : pairs) {
        auto& f = builtin_fixtures().get(p.fixture);
        CHECK(f.verdict(p.scheme) == Membership::No);
        CHECK_FALSE(f.verdicts.at(p.scheme).provenance.empty());
    }
}

TEST_CASE("fuzzing") {
    std::vector<Corruption> mix(std::begin(kAllCorruptions), std::end(kAllCorruptions));
    auto& c4 = builtin_fixtures().get("C4");
    // C4 is circular-arc, so it is not a target for that scheme
    CHECK_THROWS_AS(fuzz_pair(c4, SchemeTag::CircularArc, 10, 1, mix), Error);
    auto r = fuzz_pair(c4, SchemeTag::Chordal, 400, 1, mix);
    CHECK(r.iters == 400);
    CHECK(r.accepts == 0);
    CHECK(r.uniform + r.shaped == 400);
    auto a = fuzz_sample(c4, SchemeTag::Chordal, 12345, mix);
    auto b = fuzz_sample(c4, SchemeTag::Chordal, 12345, mix);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}

TEST_CASE("campaign config") {
    CampaignConfig c;
    c.instances = 0;
    CHECK_THROWS_AS(validate_config(c), Error);
    c.instances = 5;
    c.n_lo = 10;
    c.n_hi = 4;
    CHECK_THROWS_AS(validate_config(c), Error);
    c.n_lo = 4;
    c.n_hi = 12;
    validate_config(c);
    auto r = completeness_sweep(c);
    CHECK(r.runs == 5);
    CHECK(r.accepts == 5);
}

TEST_CASE("bits") {
    CHECK(ceil_log2(1) == 0);
    CHECK(ceil_log2(2) == 1);
    CHECK(ceil_log2(5) == 3);
    CHECK(ceil_log2(4096) == 12);
    for (auto t : kAllSchemes) {
        auto k = bits_constants(t);
        auto rows = bits_table(t, {16, 64}, 1);
        REQUIRE(rows.size() == 2);
        for (auto& r : rows) {
            CHECK(r.measured);
            CHECK(r.within);
            CHECK(r.bits <= k.K * r.log2n + k.C);
        }
        CHECK(bits_to_json(t, rows) == bits_to_json(t, bits_table(t, {16, 64}, 1)));
        CHECK(bits_to_csv(t, rows).find('\n') != std::string::npos);
    }
}
