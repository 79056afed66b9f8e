#include "lcert/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <unordered_map>

namespace lcert {

// ---------------------------------------------------------------- chordal

std::optional<std::vector<int>> is_chordal(const Graph& g) {
    const int n = g.n();
    // Maximum cardinality search; the visit order reversed is a PEO iff g is chordal.
    std::vector<int> weight(n, 0), visit;
    std::vector<char> done(n, 0);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!done[v] && (best < 0 || weight[v] > weight[best])) best = v;
        done[best] = 1;
        visit.push_back(best);
        for (int u : g.neighbors(best))
            if (!done[u]) ++weight[u];
    }
    std::reverse(visit.begin(), visit.end());
    if (!is_perfect_elimination_ordering(g, visit)) return std::nullopt;
    return visit;
}

bool is_perfect_elimination_ordering(const Graph& g, const std::vector<int>& peo) {
    const int n = g.n();
    if (static_cast<int>(peo.size()) != n) return false;
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        if (peo[i] < 0 || peo[i] >= n || pos[peo[i]] >= 0) return false;
        pos[peo[i]] = i;
    }
    for (int v = 0; v < n; ++v) {
        int p = -1;
        for (int u : g.neighbors(v))
            if (pos[u] > pos[v] && (p < 0 || pos[u] < pos[p])) p = u;
        if (p < 0) continue;
        for (int u : g.neighbors(v))
            if (pos[u] > pos[v] && u != p && !g.adjacent(u, p)) return false;
    }
    return true;
}

CliqueTree clique_tree_from_peo(const Graph& g, const std::vector<int>& peo) {
    if (!is_perfect_elimination_ordering(g, peo)) throw Error(ErrorKind::NotChordal, "not a perfect elimination ordering");
    const int n = g.n();
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[peo[i]] = i;
    CliqueTree t;
    std::vector<int> cliq(n, -1);
    for (int i = n - 1; i >= 0; --i) {
        int v = peo[i];
        std::vector<int> later;
        int p = -1;
        for (int u : g.neighbors(v))
            if (pos[u] > i) {
                later.push_back(u);
                if (p < 0 || pos[u] < pos[p]) p = u;
            }
        if (p < 0) {
            if (!t.bags.empty()) throw Error(ErrorKind::NotChordal, "graph is disconnected");
            t.bags.push_back({v});
            t.parent.push_back(-1);
            t.root = 0;
            cliq[v] = 0;
            continue;
        }
        int b = cliq[p];
        if (later.size() == t.bags[b].size()) {
            t.bags[b].push_back(v);
            cliq[v] = b;
        } else {
            later.push_back(v);
            t.bags.push_back(later);
            t.parent.push_back(b);
            cliq[v] = t.size() - 1;
        }
    }
    for (auto& b : t.bags) std::sort(b.begin(), b.end());
    return t;
}

// ---------------------------------------------------------------- interval

bool has_asteroidal_triple(const Graph& g) {
    const int n = g.n();
    // comp[c][x]: component of x in G - N[c], -1 inside N[c].
    std::vector<std::vector<int>> comp(n, std::vector<int>(n, -1));
    for (int c = 0; c < n; ++c) {
        auto& lab = comp[c];
        int next = 0;
        for (int s = 0; s < n; ++s) {
            if (s == c || g.adjacent(s, c) || lab[s] >= 0) continue;
            std::vector<int> q{s};
            lab[s] = next;
            for (std::size_t k = 0; k < q.size(); ++k)
                for (int y : g.neighbors(q[k]))
                    if (y != c && !g.adjacent(y, c) && lab[y] < 0) {
                        lab[y] = next;
                        q.push_back(y);
                    }
            ++next;
        }
    }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (g.adjacent(a, b)) continue;
            for (int c = b + 1; c < n; ++c) {
                if (g.adjacent(a, c) || g.adjacent(b, c)) continue;
                if (comp[c][a] == comp[c][b] && comp[a][b] == comp[a][c] && comp[b][a] == comp[b][c]) return true;
            }
        }
    return false;
}

bool is_interval(const Graph& g) { return is_chordal(g).has_value() && !has_asteroidal_triple(g); }

bool is_claw_free(const Graph& g) {
    for (int v = 0; v < g.n(); ++v) {
        auto& nb = g.neighbors(v);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                if (g.adjacent(nb[i], nb[j])) continue;
                for (std::size_t k = j + 1; k < nb.size(); ++k)
                    if (!g.adjacent(nb[i], nb[k]) && !g.adjacent(nb[j], nb[k])) return false;
            }
    }
    return true;
}

bool is_proper_interval_ordering(const Graph& g, const std::vector<int>& order) {
    const int n = g.n();
    if (static_cast<int>(order.size()) != n) return false;
    std::vector<char> seen(n, 0);
    for (int v : order) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 2; j < n; ++j) {
            if (!g.adjacent(order[i], order[j])) continue;
            for (int k = i + 1; k < j; ++k)
                if (!g.adjacent(order[i], order[k]) || !g.adjacent(order[k], order[j])) return false;
        }
    return true;
}

std::optional<std::vector<int>> proper_interval_ordering(const Graph& g, int cap) {
    const int n = g.n();
    if (n > cap) throw Error(ErrorKind::TooLarge, "proper-interval ordering search is capped at n=" + std::to_string(cap));
    std::vector<int> order;
    std::vector<char> used(n, 0);
    auto fits = [&](int x) {
        const int p = static_cast<int>(order.size());
        for (int i = 0; i < p; ++i) {
            if (!g.adjacent(order[i], x)) continue;
            for (int k = i + 1; k < p; ++k)
                if (!g.adjacent(order[i], order[k]) || !g.adjacent(order[k], x)) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self) -> bool {
        if (static_cast<int>(order.size()) == n) return true;
        for (int x = 0; x < n; ++x) {
            if (used[x] || !fits(x)) continue;
            used[x] = 1;
            order.push_back(x);
            if (self(self)) return true;
            order.pop_back();
            used[x] = 0;
        }
        return false;
    };
    if (rec(rec)) return order;
    return std::nullopt;
}

bool is_proper_interval(const Graph& g) {
    if (g.n() <= 10) return proper_interval_ordering(g, 10).has_value();
    return is_interval(g) && is_claw_free(g);
}

std::vector<std::vector<int>> maximal_cliques(const Graph& g) {
    const int n = g.n();
    if (n > 64) throw Error(ErrorKind::TooLarge, "maximal clique enumeration is capped at n=64");
    std::vector<std::uint64_t> nb(n, 0);
    for (auto e : g.edges()) {
        nb[e.u] |= std::uint64_t{1} << e.v;
        nb[e.v] |= std::uint64_t{1} << e.u;
    }
    std::vector<std::vector<int>> out;
    auto bk = [&](auto&& self, std::uint64_t R, std::uint64_t P, std::uint64_t X) -> void {
        if (!P && !X) {
            std::vector<int> c;
            for (int v = 0; v < n; ++v)
                if (R >> v & 1) c.push_back(v);
            out.push_back(c);
            return;
        }
        int pivot = __builtin_ctzll(P | X);
        std::uint64_t cand = P & ~nb[pivot];
        while (cand) {
            int v = __builtin_ctzll(cand);
            cand &= cand - 1;
            std::uint64_t bit = std::uint64_t{1} << v;
            self(self, R | bit, P & nb[v], X & nb[v]);
            P &= ~bit;
            X |= bit;
        }
    };
    std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    bk(bk, 0, all, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<CliqueTree> clique_path_search(const Graph& g, int cap) {
    auto cl = maximal_cliques(g);
    const int k = static_cast<int>(cl.size());
    if (k > cap) throw Error(ErrorKind::TooLarge, "clique path search is capped at " + std::to_string(cap) + " cliques");
    const int n = g.n();
    std::vector<int> order, state(n, 0);  // 0 unseen, 1 open, 2 closed
    std::vector<char> used(k, 0);
    std::vector<std::vector<char>> in(k, std::vector<char>(n, 0));
    for (int c = 0; c < k; ++c)
        for (int v : cl[c]) in[c][v] = 1;
    auto rec = [&](auto&& self) -> bool {
        if (static_cast<int>(order.size()) == k) return true;
        for (int c = 0; c < k; ++c) {
            if (used[c]) continue;
            bool ok = true;
            for (int v : cl[c]) ok = ok && state[v] != 2;
            if (!ok) continue;
            auto saved = state;
            for (int v = 0; v < n; ++v)
                if (state[v] == 1 && !in[c][v]) state[v] = 2;
            for (int v : cl[c]) state[v] = 1;
            used[c] = 1;
            order.push_back(c);
            if (self(self)) return true;
            order.pop_back();
            used[c] = 0;
            state = saved;
        }
        return false;
    };
    if (!rec(rec)) return std::nullopt;
    CliqueTree t;
    for (int i = 0; i < k; ++i) {
        t.bags.push_back(cl[order[i]]);
        t.parent.push_back(i - 1);
    }
    t.root = 0;
    return t;
}

// ---------------------------------------------------------------- matrices

AugmentedAdjacency augmented_adjacency(const Graph& g, const std::vector<int>& order) {
    AugmentedAdjacency m;
    m.n = g.n();
    m.cells.assign(static_cast<std::size_t>(m.n) * m.n, 0);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j)
            m.cells[static_cast<std::size_t>(i) * m.n + j] = (i == j || g.adjacent(order[i], order[j])) ? 1 : 0;
    return m;
}

std::optional<int> last_index(const AugmentedAdjacency& m, int j) {
    for (int i = m.n - 1; i >= 0; --i)
        if (m.at(i, j) && !m.at((i + 1) % m.n, j)) return i;
    return std::nullopt;
}

std::vector<int> perm_map(int n, MatrixPerm which) {
    std::vector<int> s(n);
    for (int i = 0; i < n; ++i) {
        if (which == MatrixPerm::Sh) s[i] = (i + 1) % n;
        else s[i] = (i == n - 1) ? i : n - 2 - i;  // 1-based: i -> n - i, n fixed
    }
    return s;
}

namespace {

AugmentedAdjacency permute(const AugmentedAdjacency& m, const std::vector<int>& s) {
    AugmentedAdjacency out;
    out.n = m.n;
    out.cells.assign(m.cells.size(), 0);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) out.cells[static_cast<std::size_t>(s[i]) * m.n + s[j]] = m.at(i, j);
    return out;
}

}  // namespace

AugmentedAdjacency apply_perm(const AugmentedAdjacency& m, MatrixPerm which) {
    return permute(m, perm_map(m.n, which));
}

bool has_circular_ones(const AugmentedAdjacency& m) {
    for (int i = 0; i < m.n; ++i) {
        int rises = 0;
        for (int j = 0; j < m.n; ++j)
            if (m.at(i, j) && !m.at(i, (j + m.n - 1) % m.n)) ++rises;
        if (rises > 1) return false;
    }
    return true;
}

bool has_circularly_compatible_ones(const AugmentedAdjacency& m) {
    if (!has_circular_ones(m)) return false;
    const int n = m.n;
    if (n < 2) return true;
    auto inv = perm_map(n, MatrixPerm::Inv);
    for (int flip = 0; flip < 2; ++flip)
        for (int s = 0; s < n; ++s) {
            std::vector<int> f(n);
            for (int i = 0; i < n; ++i) f[i] = ((flip ? inv[i] : i) + s) % n;
            auto mp = permute(m, f);
            auto a = last_index(mp, 0), b = last_index(mp, 1);
            if (a && b && *a > *b) return false;
        }
    return true;
}

std::vector<int> column_runs(const AugmentedAdjacency& m) {
    std::vector<int> L(m.n);
    for (int i = 0; i < m.n; ++i) {
        int len = 0;
        while (len < m.n && m.at((i + len) % m.n, i)) ++len;
        L[i] = len;
    }
    return L;
}

bool has_quasi_circular_ones(const AugmentedAdjacency& m) {
    const int n = m.n;
    auto L = column_runs(m);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            if (!m.at(r, c)) continue;
            bool in_u = (r - c + n) % n < L[c];
            bool in_v = (c - r + n) % n < L[r];
            if (!in_u && !in_v) return false;
        }
    return true;
}

bool ordering_has_property(const Graph& g, const std::vector<int>& order, OrderingProperty p) {
    if (static_cast<int>(order.size()) != g.n()) return false;
    std::vector<char> seen(g.n(), 0);
    for (int v : order) {
        if (v < 0 || v >= g.n() || seen[v]) return false;
        seen[v] = 1;
    }
    switch (p) {
        case OrderingProperty::ProperInterval: return is_proper_interval_ordering(g, order);
        case OrderingProperty::CircularlyCompatible:
            return has_circularly_compatible_ones(augmented_adjacency(g, order));
        case OrderingProperty::QuasiCircular: return has_quasi_circular_ones(augmented_adjacency(g, order));
    }
    return false;
}

std::optional<OrderingWitness> search_ordering(const Graph& g, OrderingProperty p, int cap) {
    const int n = g.n();
    if (n > cap) throw Error(ErrorKind::TooLarge, "ordering search is capped at n=" + std::to_string(cap));
    if (p == OrderingProperty::ProperInterval) {
        auto o = proper_interval_ordering(g, cap);
        if (!o) return std::nullopt;
        return OrderingWitness{*o, p};
    }
    std::vector<int> order{0};
    std::vector<char> used(n, 0);
    used[0] = 1;
    std::vector<int> unplaced_deg(n);
    for (int v = 0; v < n; ++v) unplaced_deg[v] = g.degree(v) - (g.adjacent(v, 0) ? 1 : 0);

    // Quasi-circular prefix test for node y at position `pos`: every placed
    // neighbour x must be reached by x's forward run or by y's wrapping run.
    auto qc_fits = [&](int y) {
        const int pos = static_cast<int>(order.size());
        int future = n - 1 - pos;
        int later_nb = unplaced_deg[y];
        bool wrap_possible = later_nb == future;
        for (int q = 0; q < pos; ++q) {
            int x = order[q];
            if (!g.adjacent(x, y)) continue;
            bool forward = true;
            for (int k = q + 1; k < pos && forward; ++k) forward = g.adjacent(x, order[k]);
            if (forward) continue;
            bool wrap = wrap_possible;
            for (int k = 0; k <= q && wrap; ++k) wrap = g.adjacent(y, order[k]);
            if (!wrap) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self) -> bool {
        if (static_cast<int>(order.size()) == n) return ordering_has_property(g, order, p);
        for (int y = 0; y < n; ++y) {
            if (used[y]) continue;
            if (p == OrderingProperty::QuasiCircular && !qc_fits(y)) continue;
            used[y] = 1;
            order.push_back(y);
            for (int u : g.neighbors(y)) --unplaced_deg[u];
            if (self(self)) return true;
            for (int u : g.neighbors(y)) ++unplaced_deg[u];
            order.pop_back();
            used[y] = 0;
        }
        return false;
    };
    if (rec(rec)) return OrderingWitness{order, p};
    return std::nullopt;
}

// ---------------------------------------------------------------- proper arcs

namespace {

// Arcs at positions 0..n-1: arc i starts at slot i and covers the starts of
// arcs i..i+k[i]. Ends sharing an integer slot are ordered so that the arc
// starting earlier ends earlier.
std::vector<Arc> arcs_from_runs(const std::vector<int>& k) {
    const int n = static_cast<int>(k.size());
    std::vector<double> pts;
    for (int i = 0; i < n; ++i) {
        double e = i + k[i] + 0.5 - static_cast<double>(k[i]) / (4.0 * n);
        pts.push_back(i);
        pts.push_back(std::fmod(e, static_cast<double>(n)));
    }
    std::vector<int> idx(pts.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return pts[a] < pts[b]; });
    std::vector<int> rank(pts.size());
    for (std::size_t r = 0; r < idx.size(); ++r) rank[idx[r]] = static_cast<int>(r) + 1;
    std::vector<Arc> arcs(n);
    for (int i = 0; i < n; ++i) arcs[i] = {rank[2 * i + 1], rank[2 * i]};
    return arcs;
}

struct ProperArcCatalog {
    struct Entry {
        std::vector<int> k;
        std::vector<int> pos_of;  // node -> position
    };
    std::unordered_map<std::uint32_t, Entry> by_mask;
};

int pair_bit(int u, int v, int n) {
    if (u > v) std::swap(u, v);
    return u * n - u * (u + 1) / 2 + (v - u - 1);
}

const ProperArcCatalog& catalog_for(int n) {
    static std::mutex mu;
    static std::map<int, ProperArcCatalog> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    ProperArcCatalog cat;
    std::map<std::uint32_t, std::vector<int>> patterns;  // position-level mask -> k
    std::vector<int> k(n, 0);
    const int span = 2 * n;
    for (;;) {
        auto arcs = arcs_from_runs(k);
        bool proper = true;
        for (int i = 0; i < n && proper; ++i)
            for (int j = 0; j < n && proper; ++j)
                if (i != j && arc_contains_arc(arcs[i], arcs[j], span)) proper = false;
        if (proper) {
            std::uint32_t mask = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (arcs_intersect(arcs[i], arcs[j], span)) mask |= 1u << pair_bit(i, j, n);
            patterns.emplace(mask, k);
        }
        int d = 0;
        while (d < n && ++k[d] == n) k[d++] = 0;
        if (d == n) break;
    }
    std::vector<int> perm(n);
    for (auto& [pmask, kv] : patterns) {
        std::iota(perm.begin(), perm.end(), 0);
        do {  // perm[node] = position
            std::uint32_t mask = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (pmask >> pair_bit(perm[u], perm[v], n) & 1) mask |= 1u << pair_bit(u, v, n);
            cat.by_mask.emplace(mask, ProperArcCatalog::Entry{kv, perm});
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return cache.emplace(n, std::move(cat)).first->second;
}

}  // namespace

ArcModel arc_model_from_ordering(const Graph& g, const std::vector<int>& order) {
    const int n = g.n();
    auto L = column_runs(augmented_adjacency(g, order));
    std::vector<int> k(n);
    for (int i = 0; i < n; ++i) k[i] = std::min(L[i], n) - 1;
    auto arcs = arcs_from_runs(k);
    ArcModel m;
    m.span = 2 * n;
    m.proper = true;
    m.arcs.resize(n);
    for (int i = 0; i < n; ++i) m.arcs[order[i]] = arcs[i];
    return m;
}

std::optional<ArcModel> brute_proper_arc_model(const Graph& g, int cap) {
    const int n = g.n();
    if (n > cap || n > 7) throw Error(ErrorKind::TooLarge, "brute proper-arc search is capped at n=" + std::to_string(cap));
    const auto& cat = catalog_for(n);
    std::uint32_t mask = 0;
    for (auto e : g.edges()) mask |= 1u << pair_bit(e.u, e.v, n);
    auto it = cat.by_mask.find(mask);
    if (it == cat.by_mask.end()) return std::nullopt;
    auto arcs = arcs_from_runs(it->second.k);
    ArcModel m;
    m.span = 2 * n;
    m.proper = true;
    m.arcs.resize(n);
    for (int v = 0; v < n; ++v) m.arcs[v] = arcs[it->second.pos_of[v]];
    return m;
}

// ---------------------------------------------------------------- small exhaustive catalogs

namespace {

using MaskSet = std::vector<char>;  // indexed by labelled edge mask

void close_under_relabelling(const std::set<std::uint32_t>& base, int n, MaskSet& out) {
    std::vector<int> perm(n);
    for (auto pmask : base) {
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::uint32_t mask = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (pmask >> pair_bit(perm[u], perm[v], n) & 1) mask |= 1u << pair_bit(u, v, n);
            out[mask] = 1;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

// Every arrangement of n arcs with distinct endpoints: a pairing of 2n slots
// plus, per pair, which of the two arcs between them is used.
void arc_arrangements(int n, std::vector<int>& mate, int from, std::set<std::uint32_t>& out) {
    const int S = 2 * n;
    while (from < S && mate[from] >= 0) ++from;
    if (from == S) {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < S; ++i)
            if (mate[i] > i) pairs.push_back({i + 1, mate[i] + 1});
        for (std::uint32_t o = 0; o < (1u << n); ++o) {
            std::vector<Arc> arcs(n);
            for (int k = 0; k < n; ++k)
                arcs[k] = (o >> k & 1) ? Arc{pairs[k].first, pairs[k].second} : Arc{pairs[k].second, pairs[k].first};
            std::uint32_t mask = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (arcs_intersect(arcs[i], arcs[j], S)) mask |= 1u << pair_bit(i, j, n);
            out.insert(mask);
        }
        return;
    }
    for (int to = from + 1; to < S; ++to) {
        if (mate[to] >= 0) continue;
        mate[from] = to;
        mate[to] = from;
        arc_arrangements(n, mate, from + 1, out);
        mate[from] = mate[to] = -1;
    }
}

const MaskSet& small_catalog(int n, SmallClass c) {
    static std::mutex mu;
    static std::map<std::pair<int, SmallClass>, MaskSet> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(n, c);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::set<std::uint32_t> base;
    if (c == SmallClass::CircularArc) {
        std::vector<int> mate(2 * n, -1);
        arc_arrangements(n, mate, 0, base);
    } else {
        std::vector<int> pi(n);  // node i sits at i on one line and pi[i] on the other
        std::iota(pi.begin(), pi.end(), 0);
        do {
            std::uint32_t mask = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (pi[i] > pi[j]) mask |= 1u << pair_bit(i, j, n);
            base.insert(mask);
        } while (std::next_permutation(pi.begin(), pi.end()));
    }
    MaskSet set(std::size_t{1} << (n * (n - 1) / 2), 0);
    close_under_relabelling(base, n, set);
    return cache.emplace(key, std::move(set)).first->second;
}

}  // namespace

bool small_catalog_member(const Graph& g, SmallClass c) {
    const int n = g.n();
    if (n > kSmallCatalogCap) throw Error(ErrorKind::TooLarge, "small catalogs stop at n=" + std::to_string(kSmallCatalogCap));
    std::uint32_t mask = 0;
    for (auto e : g.edges()) mask |= 1u << pair_bit(e.u, e.v, n);
    return small_catalog(n, c)[mask] != 0;
}

// ---------------------------------------------------------------- permutation / trapezoid

std::optional<PermutationModel> permutation_model_search(const Graph& g, int cap) {
    const int n = g.n();
    if (n > cap) throw Error(ErrorKind::TooLarge, "permutation model search is capped at n=" + std::to_string(cap));
    std::vector<int> perm(n);  // perm[pos] = node on the first line
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> before(n);
    std::vector<char> seen(n);
    do {
        // before[v] = number of nodes forced ahead of v on the second line
        std::fill(before.begin(), before.end(), 0);
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                int u = perm[a], v = perm[b];
                if (g.adjacent(u, v)) ++before[u];
                else ++before[v];
            }
        std::fill(seen.begin(), seen.end(), 0);
        bool total = true;
        for (int v = 0; v < n && total; ++v) {
            if (seen[before[v]]) total = false;
            seen[before[v]] = 1;
        }
        if (!total) continue;
        PermutationModel m;
        m.l1.resize(n);
        m.l2.resize(n);
        for (int p = 0; p < n; ++p) m.l1[perm[p]] = p + 1;
        for (int v = 0; v < n; ++v) m.l2[v] = before[v] + 1;
        return m;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

const char* to_string(Membership m) {
    switch (m) {
        case Membership::Yes: return "yes";
        case Membership::No: return "no";
        case Membership::Unknown: return "unknown";
    }
    return "?";
}

Membership trapezoid_membership_fixture(const Graph& g, const std::optional<TrapezoidModel>& witness) {
    if (witness) {
        try {
            if (witness->mode == TrapezoidMode::Proper && validate_trapezoid_model(*witness, g)) return Membership::Yes;
        } catch (const Error&) {
        }
    }
    if (g.n() <= 8 && permutation_model_search(g).has_value()) return Membership::Yes;
    if (g.n() <= kInducedCycleCap && has_induced_cycle_at_least(g, 5)) return Membership::No;
    return Membership::Unknown;
}

}  // namespace lcert
