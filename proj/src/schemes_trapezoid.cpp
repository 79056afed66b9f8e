#include <algorithm>
#include <set>

#include "lcert/schemes.hpp"

namespace lcert {

namespace {

TrapezoidFields decode_tz(const Certificate& c, const char* tag) {
    FieldReader r(c, tag);
    TrapezoidFields f;
    f.t1 = r.next("t1");
    f.t2 = r.next("t2");
    f.b1 = r.next("b1");
    f.b2 = r.next("b2");
    f.p = r.next("p");
    f.q = r.next("q");
    r.finish();
    f.size = decode_size(r.sub(0));
    f.pt = decode_path(r.sub(1));
    f.pb = decode_path(r.sub(2));
    return f;
}

Certificate encode_tz(const TrapezoidFields& f, const char* tag) {
    return {tag,
            {{"t1", Dom::Coord2n, f.t1},
             {"t2", Dom::Coord2n, f.t2},
             {"b1", Dom::Coord2n, f.b1},
             {"b2", Dom::Coord2n, f.b2},
             {"p", Dom::Coord2nS, f.p},
             {"q", Dom::Coord2nS, f.q}},
            {encode(f.size), encode(f.pt), encode(f.pb)}};
}

Certs prove_tz(const Graph& g, const TrapezoidModel& m, const char* tag) {
    const int n = g.n();
    bool ok = false;
    try {
        ok = m.mode == TrapezoidMode::Proper && validate_trapezoid_model(m, g);
    } catch (const Error& e) {
        throw Error(ErrorKind::InvalidWitness, e.what());
    }
    if (!ok) throw Error(ErrorKind::InvalidWitness, "not a proper trapezoid model of the graph");
    int top_s = -1, top_t = -1, bot_s = -1, bot_t = -1;
    for (int v = 0; v < n; ++v) {
        if (m.tz[v].t1 == 1) top_s = v;
        if (m.tz[v].t2 == 2 * n) top_t = v;
        if (m.tz[v].b1 == 1) bot_s = v;
        if (m.tz[v].b2 == 2 * n) bot_t = v;
    }
    std::vector<PathCert> pt, pb;
    try {
        pt = path_certs(g, top_s, top_t);
        pb = path_certs(g, bot_s, bot_t);
    } catch (const Error& e) {
        throw Error(ErrorKind::InvalidWitness, e.what());
    }
    auto size = size_certs(g, 0);
    auto scan = trapezoid_scan_values(g, m);
    Certs out;
    for (int v = 0; v < n; ++v) {
        TrapezoidFields f;
        f.t1 = m.tz[v].t1;
        f.t2 = m.tz[v].t2;
        f.b1 = m.tz[v].b1;
        f.b2 = m.tz[v].b2;
        f.p = scan[v].first;
        f.q = scan[v].second;
        f.size = size[v];
        f.pt = pt[v];
        f.pb = pb[v];
        out.push_back(encode_tz(f, tag));
    }
    return out;
}

// f_t, f_b via the counting identity: free slots left of t1 minus neighbour-owned ones.
std::pair<std::int64_t, std::int64_t> f_values(const TrapezoidFields& me,
                                               const std::vector<std::pair<Id, TrapezoidFields>>& nb) {
    std::set<std::int64_t> top, bot;
    for (auto& [i, w] : nb) {
        for (auto x : {w.t1, w.t2})
            if (x < me.t1) top.insert(x);
        for (auto x : {w.b1, w.b2})
            if (x < me.b1) bot.insert(x);
    }
    return {me.t1 - 1 - static_cast<std::int64_t>(top.size()), me.b1 - 1 - static_cast<std::int64_t>(bot.size())};
}

bool verify_tz(const NodeView& view, const char* tag, bool consecutive) {
    const auto me = decode_tz(*view.cert, tag);
    std::vector<std::pair<Id, TrapezoidFields>> nb;
    for (auto& x : view.nbrs) nb.push_back({x.id, decode_tz(*x.cert, tag)});

    // (a)
    std::vector<std::pair<Id, SizeCert>> sz;
    for (auto& [i, f] : nb) sz.push_back({i, f.size});
    if (!size_check(view.my_id, me.size, sz)) return false;
    const std::int64_t n2 = 2 * me.size.claimed_n;

    // (b)
    std::vector<std::pair<Id, PathCert>> pt, pb;
    for (auto& [i, f] : nb) {
        pt.push_back({i, f.pt});
        pb.push_back({i, f.pb});
    }
    if (!path_check(view.my_id, me.pt, pt, me.t1 == 1, me.t2 == n2)) return false;
    if (!path_check(view.my_id, me.pb, pb, me.b1 == 1, me.b2 == n2)) return false;

    // (c)
    if (me.t1 < 1 || me.t2 > n2 || me.b1 < 1 || me.b2 > n2) return false;
    if (me.t1 >= me.t2 || me.b1 >= me.b2) return false;
    if (consecutive && (me.t2 != me.t1 + 1 || me.b2 != me.b1 + 1 || me.t1 % 2 == 0 || me.b1 % 2 == 0)) return false;

    // (d)
    const Trapezoid mine{static_cast<int>(me.t1), static_cast<int>(me.t2), static_cast<int>(me.b1),
                         static_cast<int>(me.b2)};
    for (auto& [i, w] : nb) {
        Trapezoid theirs{static_cast<int>(w.t1), static_cast<int>(w.t2), static_cast<int>(w.b1),
                         static_cast<int>(w.b2)};
        if (!trapezoids_intersect(mine, theirs)) return false;
    }

    auto top_owned = [&](std::int64_t x, Id except) {
        for (auto& [i, w] : nb)
            if (i != except && (w.t1 == x || w.t2 == x)) return true;
        return false;
    };
    auto bot_owned = [&](std::int64_t x, Id except) {
        for (auto& [i, w] : nb)
            if (i != except && (w.b1 == x || w.b2 == x)) return true;
        return false;
    };

    // (e)
    for (auto x = me.t1 + 1; x < me.t2; ++x)
        if (!top_owned(x, 0)) return false;
    for (auto x = me.b1 + 1; x < me.b2; ++x)
        if (!bot_owned(x, 0)) return false;

    // (f)
    if (!(me.t2 < me.p && me.p <= n2 + 1) || !(me.b2 < me.q && me.q <= n2 + 1)) return false;

    // (g), (h)
    for (auto& [i, w] : nb) {
        if (w.p < me.t2 && !top_owned(w.p, i)) return false;
        if (w.q < me.b2 && !bot_owned(w.q, i)) return false;
    }

    // (i)
    auto [ft, fb] = f_values(me, nb);
    return ft == fb;
}

}  // namespace

std::vector<std::pair<int, int>> trapezoid_scan_values(const Graph& g, const TrapezoidModel& m) {
    const int n = g.n();
    std::vector<int> top_owner(2 * n + 1, -1), bot_owner(2 * n + 1, -1);
    for (int v = 0; v < n; ++v) {
        top_owner[m.tz[v].t1] = top_owner[m.tz[v].t2] = v;
        bot_owner[m.tz[v].b1] = bot_owner[m.tz[v].b2] = v;
    }
    auto in_closed = [&](int v, int u) { return u == v || g.adjacent(u, v); };
    std::vector<std::pair<int, int>> out(n);
    for (int v = 0; v < n; ++v) {
        int p = m.tz[v].t1 + 1;
        while (p <= 2 * n && in_closed(v, top_owner[p])) ++p;
        int q = m.tz[v].b1 + 1;
        while (q <= 2 * n && in_closed(v, bot_owner[q])) ++q;
        out[v] = {p, q};
    }
    return out;
}

std::pair<std::int64_t, std::int64_t> local_f_values(const NodeView& v) {
    const char* tag = v.cert->tag == "permutation" ? "permutation" : "trapezoid";
    auto me = decode_tz(*v.cert, tag);
    std::vector<std::pair<Id, TrapezoidFields>> nb;
    for (auto& x : v.nbrs) nb.push_back({x.id, decode_tz(*x.cert, tag)});
    return f_values(me, nb);
}

Certs trapezoid_prove(const Graph& g, const TrapezoidModel& m) { return prove_tz(g, m, "trapezoid"); }

bool trapezoid_verify(const NodeView& v) { return verify_tz(v, "trapezoid", false); }

Certs permutation_prove(const Graph& g, const PermutationModel& m) {
    try {
        if (!validate_permutation_model(m, g))
            throw Error(ErrorKind::InvalidWitness, "not a permutation model of the graph");
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::InvalidWitness) throw;
        throw Error(ErrorKind::InvalidWitness, e.what());
    }
    return prove_tz(g, permutation_to_consecutive_trapezoid(m), "permutation");
}

bool permutation_verify(const NodeView& v) { return verify_tz(v, "permutation", true); }

}  // namespace lcert
