#include <algorithm>
#include <map>
#include <set>

#include "lcert/schemes.hpp"

namespace lcert {

// ---------------------------------------------------------------- proper interval

Certs proper_interval_prove(const Graph& g, const OrderingWitness& w) {
    if (!is_proper_interval_ordering(g, w.order))
        throw Error(ErrorKind::InvalidWitness, "ordering violates the proper-interval condition");
    const int n = g.n();
    Id first = g.id(w.order.front()), last = g.id(w.order.back());
    Certs out(n);
    for (int p = 0; p < n; ++p)
        out[w.order[p]] = {"proper-interval",
                           {{"i", Dom::Count, p + 1}, {"id_first", Dom::Id, first}, {"id_last", Dom::Id, last}},
                           {}};
    return out;
}

namespace {

struct PiCert {
    std::int64_t i;
    Id first, last;
};

PiCert decode_pi(const Certificate& c) {
    FieldReader r(c, "proper-interval");
    PiCert p{r.next("i"), r.next("id_first"), r.next("id_last")};
    r.finish();
    return p;
}

}  // namespace

bool proper_interval_verify(const NodeView& v) {
    auto me = decode_pi(*v.cert);
    std::vector<std::int64_t> below, above;
    for (auto& x : v.nbrs) {
        auto c = decode_pi(*x.cert);
        if (c.first != me.first || c.last != me.last) return false;
        if (c.i == me.i) return false;
        (c.i < me.i ? below : above).push_back(c.i);
    }
    if (v.my_id == me.first && me.i != 1) return false;
    std::sort(below.begin(), below.end());
    std::sort(above.begin(), above.end());
    const auto a = static_cast<std::int64_t>(below.size()), b = static_cast<std::int64_t>(above.size());
    // neighbours occupy exactly [i-a, i-1] and [i+1, i+b]
    for (std::int64_t k = 0; k < a; ++k)
        if (below[k] != me.i - a + k) return false;
    for (std::int64_t k = 0; k < b; ++k)
        if (above[k] != me.i + 1 + k) return false;
    if ((v.my_id == me.first) != (a == 0)) return false;
    // The last node cannot compare i with n (n is not part of the certificate);
    // b = 0 there, and descending chains end at the unique first node.
    if ((v.my_id == me.last) != (b == 0)) return false;
    return true;
}

// ---------------------------------------------------------------- chordal layout

ChordalLayout chordal_layout(const CliqueTree& t, const Graph& g) {
    if (!validate_clique_tree(t, g)) throw Error(ErrorKind::InvalidWitness, "not a clique tree of the graph");
    ChordalLayout L;
    try {
        L.tree = normalize_clique_tree(reroot_for_leaders(t));
        L.trim = trim_partition(L.tree);
        L.leaders = choose_leaders(L.tree, g);
    } catch (const Error& e) {
        throw Error(ErrorKind::InvalidWitness, std::string("leader layout failed: ") + e.what());
    }
    return L;
}

namespace {

// Shared by both schemes: classes, depths and parent pointers.
std::vector<ChordalFields> base_fields(const Graph& g, const CliqueTree& t, const TrimPartition& trim,
                                       std::vector<Id>& rho) {
    const int k = t.size();
    auto depth = t.depths();
    rho.assign(k, 0);
    for (int b = 0; b < k; ++b) {
        Id best = 0;
        for (int v : trim.F[b])
            if (best == 0 || g.id(v) < best) best = g.id(v);
        rho[b] = best;
    }
    int root_node = g.index_of(rho[t.root]);
    auto size = size_certs(g, root_node);
    std::vector<ChordalFields> out(g.n());
    for (int v = 0; v < g.n(); ++v) {
        int b = trim.bag_of[v];
        auto& f = out[v];
        f.T = k;
        f.F = rho[b];
        f.fsize = static_cast<std::int64_t>(trim.F[b].size());
        f.depth = depth[b];
        f.P = b == t.root ? rho[b] : rho[t.parent[b]];
        f.size = size[v];
    }
    return out;
}

}  // namespace

std::vector<ChordalFields> chordal_fields(const Graph& g, const CliqueTree& t, bool interval) {
    std::vector<Id> rho;
    if (!interval) {
        auto L = chordal_layout(t, g);
        auto out = base_fields(g, L.tree, L.trim, rho);
        for (int b = 0; b < L.tree.size(); ++b) {
            if (b == L.tree.root) continue;
            auto& e = out[L.leaders.leader[b]];
            e.edge = e.edge == 0 ? rho[b] : std::min(e.edge, rho[b]);
            if (L.leaders.aux[b] >= 0) out[L.leaders.aux[b]].aux = true;
        }
        return out;
    }
    if (!validate_clique_tree(t, g)) throw Error(ErrorKind::InvalidWitness, "not a clique tree of the graph");
    if (!is_path_shaped(t)) throw Error(ErrorKind::InvalidWitness, "clique tree is not a path");
    // Root at an end of the path so every bag has at most one child.
    CliqueTree path = t;
    if (t.children()[t.root].size() == 2) {
        int end = t.root;
        auto ch = t.children();
        while (!ch[end].empty()) end = ch[end].front();
        path = reroot(t, end);
    }
    TrimPartition trim;
    try {
        trim = trim_partition(path);
    } catch (const Error& e) {
        throw Error(ErrorKind::InvalidWitness, e.what());
    }
    auto out = base_fields(g, path, trim, rho);
    auto ch = path.children();
    for (int v = 0; v < g.n(); ++v) {
        int b = trim.bag_of[v];
        out[v].child = ch[b].empty() ? 0 : rho[ch[b].front()];
    }
    return out;
}

namespace {

Certificate encode_chordal(const ChordalFields& f, bool interval) {
    Certificate c{interval ? "interval" : "chordal",
                  {{"T", Dom::Count, f.T},
                   {"F", Dom::Id, f.F},
                   {"fsize", Dom::Count, f.fsize},
                   {"depth", Dom::Index, f.depth},
                   {"P", Dom::Id, f.P},
                   {"edge", Dom::IdOrNone, f.edge},
                   {"aux", Dom::Bit, f.aux ? 1 : 0}},
                  {encode(f.size)}};
    if (interval) c.fields.push_back({"child", Dom::IdOrNone, f.child});
    return c;
}

ChordalFields decode_chordal(const Certificate& c, bool interval) {
    FieldReader r(c, interval ? "interval" : "chordal");
    ChordalFields f;
    f.T = r.next("T");
    f.F = r.next("F");
    f.fsize = r.next("fsize");
    f.depth = r.next("depth");
    f.P = r.next("P");
    f.edge = r.next("edge");
    f.aux = r.next("aux") != 0;
    if (interval) f.child = r.next("child");
    r.finish();
    f.size = decode_size(r.sub(0));
    return f;
}

bool verify_common(const NodeView& v, bool interval) {
    const auto me = decode_chordal(*v.cert, interval);
    std::vector<std::pair<Id, ChordalFields>> nb;
    for (auto& x : v.nbrs) nb.push_back({x.id, decode_chordal(*x.cert, interval)});
    auto find = [&](Id id) -> const ChordalFields* {
        for (auto& [i, f] : nb)
            if (i == id) return &f;
        return nullptr;
    };

    // (i) size and spanning tree; its root is the root bag's selected node
    std::vector<std::pair<Id, SizeCert>> sz;
    for (auto& [i, f] : nb) sz.push_back({i, f.size});
    if (!size_check(v.my_id, me.size, sz)) return false;
    const Id root = me.size.st.root;

    for (auto& [i, f] : nb)
        if (f.T != me.T) return false;
    if (me.depth >= me.T) return false;
    if (me.depth == 0 && me.F != root) return false;
    if (v.my_id == root && (me.depth != 0 || me.F != v.my_id)) return false;
    if (me.F == v.my_id && me.depth == 0 && me.P != v.my_id) return false;

    // class membership: the selected node of my class is me or a neighbour
    if (me.F != v.my_id) {
        auto* lead = find(me.F);
        if (!lead || lead->F != me.F || lead->depth != me.depth || lead->P != me.P || lead->fsize != me.fsize)
            return false;
    }

    // (iii) class is a clique of size fsize; class members agree
    std::int64_t same = 0;
    for (auto& [i, f] : nb) {
        if (f.F != me.F) continue;
        ++same;
        if (f.depth != me.depth || f.P != me.P || f.fsize != me.fsize) return false;
        if (interval && f.child != me.child) return false;
    }
    if (same != me.fsize - 1) return false;

    // (ii) equal depth means equal class
    for (auto& [i, f] : nb)
        if (f.depth == me.depth && f.F != me.F) return false;

    // (iv) deeper neighbour: walk selected nodes up to my class
    for (auto& [i, u] : nb) {
        if (u.depth <= me.depth) continue;
        Id cur = u.F;
        std::int64_t cd = u.depth;
        for (;;) {
            auto* x = find(cur);
            if (!x || x->F != cur || x->depth != cd) return false;
            if (cd == me.depth + 1) {
                if (x->P != me.F) return false;
                break;
            }
            cur = x->P;
            --cd;
        }
    }

    if (interval) {
        if (me.edge != 0 || me.aux) return false;
        std::map<std::pair<Id, std::int64_t>, Id> seen;  // (P, depth) -> selected id
        for (auto& [i, f] : nb) {
            if (f.F != i) continue;  // only selected nodes
            if (f.depth == me.depth + 1 && f.P == me.F && me.child != i) return false;
            if (f.depth == 0) continue;
            auto key = std::make_pair(f.P, f.depth);
            auto it = seen.find(key);
            if (it != seen.end() && it->second != i) return false;
            seen[key] = i;
        }
        if (me.F == v.my_id && me.depth > 0) {
            auto key = std::make_pair(me.P, me.depth);
            auto it = seen.find(key);
            if (it != seen.end() && it->second != v.my_id) return false;
        }
        return true;
    }

    // (v) leader roles
    if (me.edge != 0) {
        auto* c = find(me.edge);
        if (!c || c->F != me.edge || c->depth != me.depth + 1 || c->P != me.F) return false;
    }
    if (me.F == v.my_id && me.depth > 0) {
        bool ok = false;
        for (auto& [i, e] : nb)
            ok = ok || (e.edge != 0 && e.depth == me.depth - 1 && e.F == me.P && e.edge <= v.my_id);
        if (!ok) return false;
    }
    if (me.aux) {
        if (me.edge != 0 || me.depth == 0) return false;
        bool ok = false;
        for (auto& [i, e] : nb) ok = ok || (e.edge != 0 && e.depth == me.depth - 1 && e.F == me.P);
        if (!ok) return false;
    }
    return true;
}

}  // namespace

Certs chordal_prove(const Graph& g, const CliqueTree& t) {
    Certs out;
    for (auto& f : chordal_fields(g, t, false)) out.push_back(encode_chordal(f, false));
    return out;
}

bool chordal_verify(const NodeView& v) { return verify_common(v, false); }

Certs interval_prove(const Graph& g, const CliqueTree& t) {
    Certs out;
    for (auto& f : chordal_fields(g, t, true)) out.push_back(encode_chordal(f, true));
    return out;
}

bool interval_verify(const NodeView& v) { return verify_common(v, true); }

}  // namespace lcert
