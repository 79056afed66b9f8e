#include <algorithm>
#include <numeric>
#include <tuple>

#include "lcert/schemes.hpp"

namespace lcert {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t n) { return ((a % n) + n) % n; }

// Re-ranks endpoints to slots 1..2n keeping their cyclic order.
ArcModel compact(const ArcModel& m) {
    const int n = static_cast<int>(m.arcs.size());
    std::vector<std::pair<int, int>> pts;  // (slot, 2*node + is_r)
    for (int v = 0; v < n; ++v) {
        pts.push_back({m.arcs[v].l, 2 * v});
        pts.push_back({m.arcs[v].r, 2 * v + 1});
    }
    // at equal slots left endpoints go first, so touching arcs still meet
    std::sort(pts.begin(), pts.end(), [](auto& x, auto& y) {
        return std::make_tuple(x.first, x.second % 2, x.second) < std::make_tuple(y.first, y.second % 2, y.second);
    });
    ArcModel out = m;
    out.span = 2 * n;
    for (int k = 0; k < 2 * n; ++k) {
        auto& a = out.arcs[pts[k].second / 2];
        (pts[k].second % 2 ? a.r : a.l) = k + 1;
    }
    return out;
}

// Rotates slots so that slot 1 comes right after an uncovered gap (if any).
ArcModel rotate_after_gap(const ArcModel& m) {
    const int S = m.span;
    int cut = S;  // gap between slot `cut` and `cut % S + 1`
    for (int p = 1; p <= S; ++p) {
        int q = p % S + 1;
        bool covered = false;
        for (auto& a : m.arcs)
            if (arc_contains_point(a, p, S) && arc_contains_point(a, q, S) && a.r != p) {
                covered = true;
                break;
            }
        if (!covered) {
            cut = p;
            break;
        }
    }
    ArcModel out = m;
    for (auto& a : out.arcs) {
        a.r = static_cast<int>(mod(a.r - cut - 1, S)) + 1;
        a.l = static_cast<int>(mod(a.l - cut - 1, S)) + 1;
    }
    return out;
}

ProperCircFields decode_pc(const Certificate& c) {
    FieldReader r(c, "proper-circular-arc");
    ProperCircFields f;
    f.r = r.next("r");
    f.l = r.next("l");
    f.v1 = r.next("v1");
    f.pi = r.next("pi");
    f.vmin = r.next("vmin");
    f.vmax = r.next("vmax");
    r.finish();
    f.size = decode_size(r.sub(0));
    return f;
}

Certificate encode_pc(const ProperCircFields& f) {
    return {"proper-circular-arc",
            {{"r", Dom::Coord4n, f.r},
             {"l", Dom::Coord4n, f.l},
             {"v1", Dom::Id, f.v1},
             {"pi", Dom::Index, f.pi},
             {"vmin", Dom::Index, f.vmin},
             {"vmax", Dom::Index, f.vmax}},
            {encode(f.size)}};
}

bool same_cycle(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    auto it = std::find(b.begin(), b.end(), a[0]);
    if (it == b.end()) return false;
    std::size_t off = static_cast<std::size_t>(it - b.begin());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[(i + off) % b.size()]) return false;
    return true;
}

}  // namespace

std::vector<ProperCircFields> decode_proper_circ(const Certs& certs) {
    std::vector<ProperCircFields> out;
    for (auto& c : certs) out.push_back(decode_pc(c));
    return out;
}

Certs proper_circ_prove(const Graph& g, const std::optional<OrderingWitness>& w, const std::optional<ArcModel>& arcs) {
    const int n = g.n();
    ArcModel model;
    if (arcs) {
        model = *arcs;
    } else if (w) {
        model = arc_model_from_ordering(g, w->order);
    } else {
        throw Error(ErrorKind::InvalidWitness, "proper circular-arc prover needs arcs or an ordering");
    }
    try {
        if (!model.proper || !validate_arc_model(model, g))
            throw Error(ErrorKind::InvalidWitness, "arc model is not a proper model of the graph");
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::InvalidWitness) throw;
        throw Error(ErrorKind::InvalidWitness, e.what());
    }
    model = rotate_after_gap(compact(model));

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return model.arcs[a].r < model.arcs[b].r; });
    if (w) {
        if (!ordering_has_property(g, w->order, OrderingProperty::CircularlyCompatible))
            throw Error(ErrorKind::InvalidWitness, "ordering lacks circularly compatible 1's");
        if (!same_cycle(w->order, order))
            throw Error(ErrorKind::InvalidWitness, "ordering does not follow the right endpoints");
    }
    if (!has_circularly_compatible_ones(augmented_adjacency(g, order)))
        throw Error(ErrorKind::InvalidWitness, "right-endpoint order lacks circularly compatible 1's");

    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    std::vector<ProperCircFields> f(n);
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        auto& x = f[v];
        x.r = model.arcs[v].r;
        x.l = model.arcs[v].l;
        x.v1 = g.id(order[0]);
        x.pi = i;
        std::vector<char> in(n, 0);
        in[i] = 1;
        int cnt = 1;
        for (int u : g.neighbors(v)) {
            in[pos[u]] = 1;
            ++cnt;
        }
        if (cnt == n) {
            x.vmin = 0;
            x.vmax = n - 1;
        } else {
            int s = i;
            while (in[mod(s - 1, n)]) s = static_cast<int>(mod(s - 1, n));
            int e = i;
            while (in[mod(e + 1, n)]) e = static_cast<int>(mod(e + 1, n));
            if (mod(e - s, n) + 1 != cnt) throw Error(ErrorKind::InvalidWitness, "neighbourhood is not a circular range");
            x.vmin = s;
            x.vmax = e;
        }
        x.size.st = {g.id(order[0]), g.id(order[i == 0 ? 0 : i - 1]), i, i == 0 ? 0 : i - 1};
        x.size.c = n - i;
        x.size.claimed_n = n;
    }
    Certs out;
    for (auto& x : f) out.push_back(encode_pc(x));
    return out;
}

RangeTransform proper_circ_transforms(std::int64_t n, const ProperCircFields& v, const ProperCircFields& succ,
                                      const ProperCircFields& pred) {
    RangeTransform t;
    std::int64_t k = mod(n - v.pi, n);
    t.v_max_shift = mod(v.vmax + k, n);
    t.u_max_shift = mod(succ.vmax + k, n);
    t.v_max_refl = mod(v.pi - v.vmin, n);
    t.w_max_refl = mod(v.pi - pred.vmin, n);
    return t;
}

bool proper_circ_verify(const NodeView& view) {
    const auto me = decode_pc(*view.cert);
    std::vector<std::pair<Id, ProperCircFields>> nb;
    for (auto& x : view.nbrs) nb.push_back({x.id, decode_pc(*x.cert)});

    std::vector<std::pair<Id, SizeCert>> sz;
    for (auto& [i, f] : nb) sz.push_back({i, f.size});
    if (!size_check(view.my_id, me.size, sz)) return false;
    const std::int64_t n = me.size.claimed_n;
    const int span = static_cast<int>(2 * n);

    if (me.v1 != me.size.st.root || me.size.st.d != me.pi) return false;
    if (me.pi < 0 || me.pi >= n || me.vmin >= n || me.vmax >= n) return false;
    if (me.r > span || me.l > span || me.r == me.l) return false;
    if ((me.pi == 0) != (view.my_id == me.v1)) return false;
    const Arc mine{static_cast<int>(me.r), static_cast<int>(me.l)};

    std::vector<char> taken(static_cast<std::size_t>(n), 0);
    taken[me.pi] = 1;
    const std::int64_t width = mod(me.vmax - me.vmin, n);
    const bool universal = width + 1 == n;
    if (mod(me.pi - me.vmin, n) > width) return false;
    if (static_cast<std::int64_t>(nb.size()) != width) return false;
    const ProperCircFields* succ = nullptr;
    const ProperCircFields* pred = nullptr;
    for (auto& [i, u] : nb) {
        if (u.v1 != me.v1) return false;
        if (u.pi < 0 || u.pi >= n || taken[u.pi]) return false;
        taken[u.pi] = 1;
        if (mod(u.pi - me.vmin, n) > width) return false;
        if (u.r > span || u.l > span || u.r == u.l) return false;
        const Arc theirs{static_cast<int>(u.r), static_cast<int>(u.l)};
        if (!arcs_intersect(mine, theirs, span)) return false;
        if (arc_contains_arc(theirs, mine, span) || arc_contains_arc(mine, theirs, span)) return false;
        if (i == me.size.st.parent && view.my_id != me.v1 && u.r >= me.r) return false;  // heap order on r
        if (u.pi == mod(me.pi + 1, n)) succ = &u;
        if (u.pi == mod(me.pi - 1, n)) pred = &u;
    }
    if (me.pi <= n - 2) {
        if (!succ || succ->r <= me.r || !arc_contains_point(mine, static_cast<int>(succ->l), span)) return false;
    }
    auto is_universal = [&](const ProperCircFields& f) { return mod(f.vmax - f.vmin, n) + 1 == n; };
    if (succ && !universal && !is_universal(*succ)) {
        auto t = proper_circ_transforms(n, me, *succ, *succ);
        if (t.v_max_shift > t.u_max_shift) return false;
    }
    if (pred && !universal && !is_universal(*pred)) {
        auto t = proper_circ_transforms(n, me, *pred, *pred);
        if (t.v_max_refl > t.w_max_refl) return false;
    }
    return true;
}

// ---------------------------------------------------------------- circular-arc

std::vector<int> left_endpoint_order(const ArcModel& m) {
    std::vector<int> order(m.arcs.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return m.arcs[a].l < m.arcs[b].l; });
    return order;
}

namespace {

CircFields decode_circ(const Certificate& c) {
    FieldReader r(c, "circular-arc");
    CircFields f;
    f.pi = r.next("pi");
    f.L = r.next("L");
    r.finish();
    f.size = decode_size(r.sub(0));
    return f;
}

}  // namespace

Certs circ_prove(const Graph& g, const OrderingWitness& w) {
    if (!ordering_has_property(g, w.order, OrderingProperty::QuasiCircular))
        throw Error(ErrorKind::InvalidWitness, "ordering lacks quasi-circular 1's");
    const int n = g.n();
    auto L = column_runs(augmented_adjacency(g, w.order));
    auto size = size_certs(g, w.order[0]);
    Certs out(n);
    for (int p = 0; p < n; ++p) {
        int v = w.order[p];
        out[v] = {"circular-arc", {{"pi", Dom::Index, p}, {"L", Dom::Count, L[p]}}, {encode(size[v])}};
    }
    return out;
}

bool circ_verify(const NodeView& view) {
    const auto me = decode_circ(*view.cert);
    std::vector<std::pair<Id, CircFields>> nb;
    for (auto& x : view.nbrs) nb.push_back({x.id, decode_circ(*x.cert)});
    std::vector<std::pair<Id, SizeCert>> sz;
    for (auto& [i, f] : nb) sz.push_back({i, f.size});
    if (!size_check(view.my_id, me.size, sz)) return false;
    const std::int64_t n = me.size.claimed_n;
    if (me.pi < 0 || me.pi >= n || me.L < 1 || me.L > n) return false;

    std::vector<int> at(static_cast<std::size_t>(n), 0);  // neighbours per position
    for (auto& [i, u] : nb) {
        if (u.pi < 0 || u.pi >= n || u.pi == me.pi || u.L < 1 || u.L > n) return false;
        if (++at[u.pi] > 1) return false;
    }
    // my run: exactly one neighbour at each of the next L-1 positions, none right after
    for (std::int64_t j = 1; j < me.L; ++j)
        if (at[mod(me.pi + j, n)] != 1) return false;
    if (me.L < n && at[mod(me.pi + me.L, n)] != 0) return false;
    // closure: each edge lies in one of the two runs
    for (auto& [i, u] : nb) {
        bool in_mine = mod(u.pi - me.pi, n) < me.L;
        bool in_theirs = mod(me.pi - u.pi, n) < u.L;
        if (!in_mine && !in_theirs) return false;
    }
    // continuation step for positions 0..n-2
    if (me.pi <= n - 2) {
        std::int64_t best = -1;
        for (auto& [i, u] : nb) {
            std::int64_t off = mod(u.pi - me.pi, n);
            if (off >= 1 && off < me.L && off + u.L - 1 > me.L - 1 && (best < 0 || off < best)) best = off;
        }
        if (best > 0 && at[mod(me.pi + best, n)] != 1) return false;
    }
    return true;
}

}  // namespace lcert
