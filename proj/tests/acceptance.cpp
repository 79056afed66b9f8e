// Acceptance run: one PASS/FAIL line per criterion. Exit status is the number of failures.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "lcert/harness.hpp"
#include "lcert/models.hpp"
#include "lcert/schemes.hpp"

using namespace lcert;

namespace {

int failures = 0;

void line(int k, bool ok, const std::string& what, double secs) {
    std::printf("%s criterion %d: %s (%.1fs)\n", ok ? "PASS" : "FAIL", k, what.c_str(), secs);
    std::fflush(stdout);
    if (!ok) ++failures;
}

void timed(int k, const std::function<std::pair<bool, std::string>()>& f) {
    auto t0 = std::chrono::steady_clock::now();
    std::pair<bool, std::string> r;
    try {
        r = f();
    } catch (const std::exception& e) {
        r = {false, std::string("exception: ") + e.what()};
    }
    line(k, r.first, r.second, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
}

// Every connected labelled graph on 1..max_n nodes.
void for_each_connected(int max_n, const std::function<void(const Graph&)>& f) {
    for (int n = 1; n <= max_n; ++n) {
        std::vector<NodePair> all;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) all.push_back({u, v});
        const int E = static_cast<int>(all.size());
        for (std::uint32_t m = 0; m < (1u << E); ++m) {
            std::vector<NodePair> es;
            for (int b = 0; b < E; ++b)
                if (m >> b & 1) es.push_back(all[b]);
            if (!is_connected(n, es)) continue;
            f(build_graph(n, es));
        }
    }
}

std::pair<bool, std::string> completeness() {
    int total = 0, ok = 0;
    std::string bad;
    for (auto t : kAllSchemes) {
        CampaignConfig c;
        c.scheme = t;
        c.instances = 200;
        c.n_lo = 4;
        c.n_hi = 48;
        c.seed = 2024;
        auto r = completeness_sweep(c);
        total += r.runs;
        ok += r.accepts;
        if (r.accepts != r.runs) bad += " " + std::string(scheme_name(t));
    }
    return {ok == total, "completeness " + std::to_string(ok) + "/" + std::to_string(total) +
                             " honest runs all-accept" + (bad.empty() ? "" : ", failing:" + bad)};
}

std::pair<bool, std::string> soundness() {
    std::vector<Corruption> mix(std::begin(kAllCorruptions), std::end(kAllCorruptions));
    auto pairs = soundness_pairs();
    long accepts = 0, iters = 0;
    std::string findings;
    for (auto& p : pairs) {
        auto r = fuzz_pair(builtin_fixtures().get(p.fixture), p.scheme, 100000, 17, mix);
        accepts += r.accepts;
        iters += r.iters;
        if (r.accepts)
            findings += " " + p.fixture + "/" + std::string(scheme_name(p.scheme)) + " seed " +
                        std::to_string(r.accepting_seeds.front());
    }
    bool ok = accepts == 0 && pairs.size() == 11;
    return {ok, "soundness " + std::to_string(pairs.size()) + " no-pairs, " + std::to_string(iters) +
                    " sampled assignments, " + std::to_string(accepts) + " all-accept" + findings};
}

std::pair<bool, std::string> lattice() {
    long graphs = 0, bad = 0;
    for_each_connected(6, [&](const Graph& g) {
        ++graphs;
        bool pi = is_proper_interval(g), iv = is_interval(g), ch = is_chordal(g).has_value();
        bool qc = search_ordering(g, OrderingProperty::QuasiCircular).has_value();
        bool cc = search_ordering(g, OrderingProperty::CircularlyCompatible).has_value();
        bool perm = permutation_model_search(g).has_value();
        if (pi && !iv) ++bad;
        if (iv && !ch) ++bad;
        if (iv && !qc) ++bad;
        if (pi && !cc) ++bad;
        if (perm && trapezoid_membership_fixture(g) == Membership::No) ++bad;
    });
    return {bad == 0, "class lattice over " + std::to_string(graphs) + " connected graphs (n<=6), " +
                          std::to_string(bad) + " violations"};
}

std::pair<bool, std::string> agreement() {
    long graphs = 0, bad = 0;
    std::string where;
    for_each_connected(6, [&](const Graph& g) {
        ++graphs;
        auto check = [&](SchemeTag t, bool oracle) {
            bool proved = false;
            try {
                auto c = prove_from_graph(t, g);
                proved = run_pls(g, c, verifier_for(t), {std::string(scheme_name(t))}).all_accept;
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::InvalidWitness) throw;
            }
            if (proved != oracle) {
                if (bad++ == 0) where = " first at " + std::string(scheme_name(t)) + " n=" + std::to_string(g.n());
            }
        };
        check(SchemeTag::ProperInterval, is_interval(g) && is_claw_free(g));
        check(SchemeTag::Chordal, !has_induced_cycle_at_least(g, 4));
        check(SchemeTag::Interval, is_interval(g));
        check(SchemeTag::ProperCircularArc,
              search_ordering(g, OrderingProperty::CircularlyCompatible).has_value());
        check(SchemeTag::CircularArc, small_catalog_member(g, SmallClass::CircularArc));
        check(SchemeTag::Permutation, small_catalog_member(g, SmallClass::Permutation));
    });
    return {bad == 0, "prover/oracle agreement over " + std::to_string(graphs) + " connected graphs x 6 schemes, " +
                          std::to_string(bad) + " disagreements" + where};
}

std::pair<bool, std::string> structure() {
    int chordal_bad = 0, f_bad = 0, cross_bad = 0, cross_cases = 0;
    for (int i = 0; i < 500; ++i) {
        int n = 2 + i % 39;
        auto [g, m] = random_model(SchemeTag::Chordal, n, 9000 + i);
        auto L = chordal_layout(std::get<CliqueTree>(m), g);
        if (!check_trim_conditions(L.tree, L.trim, g.n()).empty()) ++chordal_bad;
        if (!check_leader_conditions(L.tree, g, L.leaders).empty()) ++chordal_bad;
    }
    for (int i = 0; i < 200; ++i) {
        int n = 4 + i % 45;
        auto [g, m] = random_model(SchemeTag::Trapezoid, n, 5000 + i);
        auto& tm = std::get<TrapezoidModel>(m);
        for (auto [ft, fb] : trapezoid_f_values(tm, g))
            if (ft != fb) ++f_bad;
        // the verifier's local counting identity agrees on honest certificates
        auto certs = trapezoid_prove(g, tm);
        for (auto& v : build_views(g, certs, std::nullopt)) {
            auto [lt, lb] = local_f_values(v);
            if (lt != lb) ++f_bad;
        }
    }
    for (int k = 2; k <= 4; ++k)
        for (int i = 1; i <= k; ++i)
            for (int j = i + 1; j <= k; ++j) {
                ++cross_cases;
                if (!has_induced_cycle_at_least(crossing_Q(k, i, j), 5, 5 * k)) ++cross_bad;
            }
    bool ok = chordal_bad == 0 && f_bad == 0 && cross_bad == 0;
    return {ok, "partition/leader conditions on 500 chordal instances (" + std::to_string(chordal_bad) +
                    " bad), f_t=f_b on 200 trapezoid models (" + std::to_string(f_bad) + " bad), " +
                    std::to_string(cross_cases) + " crossings with a chordless cycle >= 5 (" +
                    std::to_string(cross_bad) + " bad)"};
}

std::pair<bool, std::string> compactness() {
    const std::vector<int> ns{16, 64, 256, 1024, 4096};
    int bad = 0;
    std::string detail;
    for (auto t : kAllSchemes) {
        auto k = bits_constants(t);
        auto rows = bits_table(t, ns, 3);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (!rows[i].within) ++bad;
            if (i > 0 && rows[i].bits - rows[i - 1].bits > 2 * k.K) ++bad;
        }
        detail += " " + std::string(scheme_name(t)) + "=" + std::to_string(rows.back().bits);
    }
    return {bad == 0, "bits <= K*ceil(log2 n)+C and bits(4n)-bits(n) <= 2K for n=2^4..2^12, " +
                          std::to_string(bad) + " violations; bits at 4096:" + detail};
}

std::pair<bool, std::string> determinism() {
    int bad = 0;
    for (auto t : kAllSchemes) {
        CampaignConfig c;
        c.scheme = t;
        c.instances = 10;
        c.n_lo = 4;
        c.n_hi = 24;
        c.seed = 99;
        if (sweep_to_json({completeness_sweep(c)}) != sweep_to_json({completeness_sweep(c)})) ++bad;
        if (bits_to_json(t, bits_table(t, {16, 64}, 5)) != bits_to_json(t, bits_table(t, {16, 64}, 5))) ++bad;
    }
    std::vector<Corruption> mix(std::begin(kAllCorruptions), std::end(kAllCorruptions));
    for (auto& p : soundness_pairs()) {
        auto& f = builtin_fixtures().get(p.fixture);
        if (fuzz_to_json({fuzz_pair(f, p.scheme, 500, 4, mix)}) != fuzz_to_json({fuzz_pair(f, p.scheme, 500, 4, mix)}))
            ++bad;
    }
    // neighbour order: 20 instances x 50 orders
    int instances = 0, flips = 0;
    std::mt19937_64 rng(77);
    for (int i = 0; i < 20; ++i) {
        auto t = kAllSchemes[i % kAllSchemes.size()];
        auto [g, m] = random_model(t, 6 + i, 300 + i);
        auto certs = prove_from_model(t, g, m);
        if (i % 2) certs = corrupt(certs, kAllCorruptions[i % 4], rng(), g.n());
        RunOptions base{std::string(scheme_name(t)), 0, false};
        auto ref = run_pls(g, certs, verifier_for(t), base);
        ++instances;
        for (int k = 0; k < 50; ++k) {
            RunOptions o{std::string(scheme_name(t)), rng(), true};
            auto r = run_pls(g, certs, verifier_for(t), o);
            if (r.rejecting_ids != ref.rejecting_ids) ++flips;
        }
    }
    return {bad == 0 && flips == 0, "identical reports on repeated seeds (" + std::to_string(bad) +
                                        " mismatches); " + std::to_string(instances * 50) +
                                        " neighbour-order permutations, " + std::to_string(flips) +
                                        " verdict changes"};
}

}  // namespace

int main() {
    timed(1, completeness);
    timed(2, soundness);
    timed(3, lattice);
    timed(4, agreement);
    timed(5, structure);
    timed(6, compactness);
    timed(7, determinism);
    return failures;
}
