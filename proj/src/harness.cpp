#include "lcert/harness.hpp"

#include <algorithm>
#include <chrono>
#include <mutex>
#include <random>

#include "json.hpp"
#include "lcert/models.hpp"
#include "lcert/schemes.hpp"

namespace lcert {

using json = nlohmann::json;

int ceil_log2(std::int64_t x) {
    int b = 0;
    while ((std::int64_t{1} << b) < x) ++b;
    return b;
}

// ---------------------------------------------------------------- fixtures

Membership FixtureEntry::verdict(SchemeTag t) const {
    auto it = verdicts.find(t);
    return it == verdicts.end() ? Membership::Unknown : it->second.value;
}

void FixtureRegistry::add(FixtureEntry e) {
    for (auto& [t, v] : e.verdicts)
        if (v.value != Membership::Unknown && v.provenance.empty())
            throw Error(ErrorKind::MalformedModel,
                        "fixture " + e.name + ": verdict for " + std::string(scheme_name(t)) + " lacks provenance");
    for (auto& x : entries_)
        if (x.name == e.name) throw Error(ErrorKind::MalformedModel, "duplicate fixture " + e.name);
    entries_.push_back(std::move(e));
}

const FixtureEntry& FixtureRegistry::get(const std::string& name) const {
    for (auto& e : entries_)
        if (e.name == name) return e;
    throw Error(ErrorKind::BadIndex, "no fixture named " + name);
}

namespace {

Verdict yes_no(bool yes, const std::string& how) { return {yes ? Membership::Yes : Membership::No, how}; }

Graph subdivided_claw() {
    // centre 0; legs 0-1-2, 0-3-4, 0-5-6
    return build_graph(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
}

Graph c6_with_pendant_paths() {
    return build_graph(12, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {0, 6}, {6, 7}, {2, 8}, {8, 9}, {4, 10}, {10, 11}});
}

FixtureRegistry make_builtin() {
    FixtureRegistry r;
    {
        FixtureEntry e{"C4", cycle_graph(4), {}, "chordless 4-cycle"};
        bool ch = is_chordal(e.graph).has_value();
        e.verdicts[SchemeTag::Chordal] = yes_no(ch, "oracle run: is_chordal");
        e.verdicts[SchemeTag::Interval] = yes_no(is_interval(e.graph), "oracle run: is_interval");
        e.verdicts[SchemeTag::ProperInterval] = yes_no(is_proper_interval(e.graph), "oracle run: is_proper_interval");
        r.add(std::move(e));
    }
    {
        FixtureEntry e{"K13", star_graph(3), {}, "claw"};
        e.verdicts[SchemeTag::ProperInterval] = yes_no(is_proper_interval(e.graph), "oracle run: is_proper_interval");
        e.verdicts[SchemeTag::ProperCircularArc] =
            yes_no(brute_proper_arc_model(e.graph).has_value(), "oracle run: brute_proper_arc_model");
        r.add(std::move(e));
    }
    {
        FixtureEntry e{"C6", cycle_graph(6), {}, "chordless 6-cycle"};
        auto m = trapezoid_membership_fixture(e.graph);
        e.verdicts[SchemeTag::Trapezoid] = {m, "oracle run: trapezoid_membership_fixture (induced cycle >= 5)"};
        e.verdicts[SchemeTag::Permutation] = {m, "oracle run: trapezoid_membership_fixture (permutation within trapezoid)"};
        r.add(std::move(e));
    }
    {
        FixtureEntry e{"crossing-Q3", crossing_Q(3, 1, 3), {}, "crossing of Q_3 between blocks 1 and 3"};
        auto m = trapezoid_membership_fixture(e.graph);
        e.verdicts[SchemeTag::Trapezoid] = {m, "oracle run: trapezoid_membership_fixture (induced cycle >= 5)"};
        e.verdicts[SchemeTag::Permutation] = {m, "oracle run: trapezoid_membership_fixture (permutation within trapezoid)"};
        r.add(std::move(e));
    }
    {
        FixtureEntry e{"subdivided-claw", subdivided_claw(), {}, "claw with every edge subdivided"};
        e.verdicts[SchemeTag::Interval] =
            yes_no(!has_asteroidal_triple(e.graph) && is_chordal(e.graph).has_value(), "oracle run: has_asteroidal_triple");
        r.add(std::move(e));
    }
    {
        FixtureEntry e{"C6-pendant-paths", c6_with_pendant_paths(), {}, "6-cycle with a 2-path hung on every other vertex"};
        e.verdicts[SchemeTag::CircularArc] =
            yes_no(search_ordering(e.graph, OrderingProperty::QuasiCircular, e.graph.n()).has_value(),
                   "oracle run: search_ordering(quasi-circular), exhaustive");
        r.add(std::move(e));
    }
    return r;
}

}  // namespace

const FixtureRegistry& builtin_fixtures() {
    static const FixtureRegistry r = make_builtin();
    return r;
}

std::vector<NoPair> soundness_pairs() {
    const std::vector<NoPair> wanted = {
        {"C4", SchemeTag::Chordal},
        {"C4", SchemeTag::Interval},
        {"C4", SchemeTag::ProperInterval},
        {"K13", SchemeTag::ProperInterval},
        {"K13", SchemeTag::ProperCircularArc},
        {"C6", SchemeTag::Trapezoid},
        {"C6", SchemeTag::Permutation},
        {"crossing-Q3", SchemeTag::Trapezoid},
        {"crossing-Q3", SchemeTag::Permutation},
        {"subdivided-claw", SchemeTag::Interval},
        {"C6-pendant-paths", SchemeTag::CircularArc},
    };
    std::vector<NoPair> out;
    for (auto& p : wanted)
        if (builtin_fixtures().get(p.fixture).verdict(p.scheme) == Membership::No) out.push_back(p);
    return out;
}

// ---------------------------------------------------------------- campaigns

int scheme_n_cap(SchemeTag) { return 4096; }

void validate_config(const CampaignConfig& c) {
    if (c.instances <= 0 || c.iters <= 0) throw Error(ErrorKind::BadIndex, "campaign counts must be positive");
    if (c.n_lo < 1 || c.n_lo > c.n_hi || c.n_hi > scheme_n_cap(c.scheme))
        throw Error(ErrorKind::TooLarge, "n range outside [1, " + std::to_string(scheme_n_cap(c.scheme)) + "]");
    if (c.mix.empty()) throw Error(ErrorKind::BadIndex, "empty corruption mix");
}

namespace {

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr int kPoolSize = 32;

// Honest certificates of yes-instances with the fixture's node count and ids.
const std::vector<Certs>& honest_pool(const FixtureEntry& f, SchemeTag scheme) {
    static std::mutex mu;
    static std::map<std::pair<std::string, SchemeTag>, std::vector<Certs>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(f.name, scheme);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<Certs> pool;
    for (int k = 0; k < kPoolSize; ++k) {
        auto [h, m] = random_model(scheme, f.graph.n(), 7919 + k);
        pool.push_back(prove_from_model(scheme, with_ids(h, f.graph.ids()), m));
    }
    // The fixture minus one edge, when that is a yes-instance: honest everywhere but two nodes.
    const auto& edges = f.graph.edges();
    for (std::size_t skip = 0; skip < edges.size(); ++skip) {
        std::vector<NodePair> rest;
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (i != skip) rest.push_back(edges[i]);
        if (!is_connected(f.graph.n(), rest)) continue;
        try {
            pool.push_back(prove_from_graph(scheme, build_graph(f.graph.n(), rest, f.graph.ids())));
        } catch (const Error&) {
        }
    }
    return cache.emplace(key, std::move(pool)).first->second;
}

}  // namespace

Certs fuzz_sample(const FixtureEntry& f, SchemeTag scheme, std::uint64_t seed, const std::vector<Corruption>& mix) {
    const auto& pool = honest_pool(f, scheme);
    std::mt19937_64 rng(seed);
    const int n = f.graph.n();
    const bool uniform = rng() % 2 == 0;
    const Certs& base = pool[rng() % pool.size()];
    if (uniform) return sample_uniform(base, rng(), n);
    Certs c = base;
    int k = static_cast<int>(rng() % 4);
    for (int i = 0; i < k; ++i) c = corrupt(c, mix[rng() % mix.size()], rng(), n);
    return c;
}

FuzzResult fuzz_pair(const FixtureEntry& f, SchemeTag scheme, long iters, std::uint64_t seed,
                     const std::vector<Corruption>& mix) {
    if (f.verdict(scheme) != Membership::No)
        throw Error(ErrorKind::MalformedModel,
                    "fixture " + f.name + " is not a registered no-instance for " + std::string(scheme_name(scheme)));
    if (mix.empty()) throw Error(ErrorKind::BadIndex, "empty corruption mix");
    auto t0 = std::chrono::steady_clock::now();
    FuzzResult r;
    r.fixture = f.name;
    r.scheme = scheme;
    r.iters = iters;
    auto verify = verifier_for(scheme);
    RunOptions opt{std::string(scheme_name(scheme)), 0, false};
    for (long i = 0; i < iters; ++i) {
        std::uint64_t s = splitmix(seed * 1000003ULL + static_cast<std::uint64_t>(i));
        (std::mt19937_64(s)() % 2 == 0 ? r.uniform : r.shaped) += 1;
        auto certs = fuzz_sample(f, scheme, s, mix);
        opt.seed = s;
        if (run_pls(f.graph, certs, verify, opt).all_accept) {
            ++r.accepts;
            r.accepting_seeds.push_back(s);
        }
    }
    std::sort(r.accepting_seeds.begin(), r.accepting_seeds.end());
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

SweepResult completeness_sweep(const CampaignConfig& c) {
    validate_config(c);
    SweepResult r;
    r.scheme = c.scheme;
    auto verify = verifier_for(c.scheme);
    std::mt19937_64 rng(c.seed);
    for (int i = 0; i < c.instances; ++i) {
        int n = c.n_lo + static_cast<int>(rng() % static_cast<std::uint64_t>(c.n_hi - c.n_lo + 1));
        std::uint64_t s = rng();
        ++r.runs;
        try {
            auto [g0, m] = random_model(c.scheme, n, s);
            Graph g = with_permuted_ids(g0, s);
            auto certs = prove_from_model(c.scheme, g, m);
            auto rep = run_pls(g, certs, verify, {std::string(scheme_name(c.scheme)), s, true});
            if (rep.all_accept)
                ++r.accepts;
            else
                r.failures.push_back({n, s, "rejected at " + std::to_string(rep.rejecting_ids.size()) + " node(s)"});
        } catch (const std::exception& e) {
            r.failures.push_back({n, s, e.what()});
        }
    }
    return r;
}

// ---------------------------------------------------------------- bits

BitsConstants bits_constants(SchemeTag t) {
    // Per-field widths with L = ceil(log2 n): ids 3L, ids-or-none 3L+1,
    // counts/indices L, [1,2n] L+1, [1,2n+1] L+2, [1,4n] L+2, bits 1.
    // Size sub-certificate 10L+1, path sub-certificate 6L+3.
    switch (t) {
        case SchemeTag::ProperInterval: return {7, 0};
        case SchemeTag::Chordal: return {22, 3};
        case SchemeTag::Interval: return {25, 4};
        case SchemeTag::ProperCircularArc: return {18, 5};
        case SchemeTag::CircularArc: return {12, 1};
        case SchemeTag::Trapezoid: return {28, 15};
        case SchemeTag::Permutation: return {28, 15};
    }
    return {};
}

std::vector<BitsRow> bits_table(SchemeTag t, const std::vector<int>& ns, std::uint64_t seed) {
    auto k = bits_constants(t);
    std::vector<BitsRow> rows;
    Certs shape;
    for (int n : ns) {
        BitsRow row;
        row.n = n;
        row.log2n = ceil_log2(n);
        if (n <= kMeasuredBitsCap) {
            auto [g, m] = random_model(t, n, seed);
            auto certs = prove_from_model(t, g, m);
            auto rep = run_pls(g, certs, verifier_for(t), {std::string(scheme_name(t)), seed, false});
            if (!rep.all_accept) throw Error(ErrorKind::InvalidWitness, "honest run rejected while measuring bits");
            row.bits = rep.max_cert_bits;
            row.measured = true;
            shape = certs;
        } else {
            // field widths depend only on n, so an honest shape from a smaller instance is exact
            if (shape.empty()) {
                auto [g, m] = random_model(t, 16, seed);
                shape = prove_from_model(t, g, m);
            }
            for (auto& c : shape) row.bits = std::max(row.bits, c.bit_size(n));
        }
        row.ratio = row.log2n ? static_cast<double>(row.bits) / row.log2n : 0.0;
        row.within = row.bits <= k.K * row.log2n + k.C;
        rows.push_back(row);
    }
    return rows;
}

// ---------------------------------------------------------------- reports

std::string fuzz_to_json(const std::vector<FuzzResult>& rs) {
    json arr = json::array();
    for (auto& r : rs)
        arr.push_back({{"fixture", r.fixture},
                       {"scheme", std::string(scheme_name(r.scheme))},
                       {"iters", r.iters},
                       {"uniform", r.uniform},
                       {"shaped", r.shaped},
                       {"accepts", r.accepts},
                       {"accepting_seeds", r.accepting_seeds}});
    return arr.dump(2);
}

std::string sweep_to_json(const std::vector<SweepResult>& rs) {
    json arr = json::array();
    for (auto& r : rs) {
        json fails = json::array();
        for (auto& f : r.failures) fails.push_back({{"n", f.n}, {"seed", f.seed}, {"what", f.what}});
        arr.push_back({{"scheme", std::string(scheme_name(r.scheme))},
                       {"runs", r.runs},
                       {"accepts", r.accepts},
                       {"failures", fails}});
    }
    return arr.dump(2);
}

std::string bits_to_json(SchemeTag t, const std::vector<BitsRow>& rows) {
    auto k = bits_constants(t);
    json arr = json::array();
    for (auto& r : rows)
        arr.push_back({{"n", r.n},
                       {"bits", r.bits},
                       {"log2n", r.log2n},
                       {"ratio", r.ratio},
                       {"within", r.within},
                       {"measured", r.measured}});
    json j{{"scheme", std::string(scheme_name(t))}, {"K", k.K}, {"C", k.C}, {"rows", arr}};
    return j.dump(2);
}

std::string bits_to_csv(SchemeTag t, const std::vector<BitsRow>& rows) {
    std::string out = "scheme,n,bits,log2n,ratio,within,measured\n";
    for (auto& r : rows) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.3f", r.ratio);
        out += std::string(scheme_name(t)) + "," + std::to_string(r.n) + "," + std::to_string(r.bits) + "," +
               std::to_string(r.log2n) + "," + buf + "," + (r.within ? "true" : "false") + "," +
               (r.measured ? "true" : "false") + "\n";
    }
    return out;
}

}  // namespace lcert
