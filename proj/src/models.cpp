#include "lcert/models.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <sstream>

namespace lcert {

// ---------------------------------------------------------------- clique tree

std::vector<int> CliqueTree::depths() const {
    std::vector<int> d(size(), -1);
    auto ch = children();
    std::vector<int> q{root};
    d[root] = 0;
    for (std::size_t i = 0; i < q.size(); ++i)
        for (int c : ch[q[i]]) {
            d[c] = d[q[i]] + 1;
            q.push_back(c);
        }
    return d;
}

std::vector<std::vector<int>> CliqueTree::children() const {
    std::vector<std::vector<int>> ch(size());
    for (int b = 0; b < size(); ++b)
        if (parent[b] >= 0) ch[parent[b]].push_back(b);
    return ch;
}

std::vector<std::pair<int, int>> CliqueTree::edges() const {
    std::vector<std::pair<int, int>> e;
    for (int b = 0; b < size(); ++b)
        if (parent[b] >= 0) e.push_back({parent[b], b});
    return e;
}

// ---------------------------------------------------------------- predicates

bool intervals_intersect(const Interval& x, const Interval& y) {
    return std::max(x.a, y.a) <= std::min(x.b, y.b);
}

bool arc_contains_point(const Arc& a, int p, int span) {
    (void)span;
    if (a.l <= a.r) return a.l <= p && p <= a.r;
    return p >= a.l || p <= a.r;
}

bool arcs_intersect(const Arc& x, const Arc& y, int span) {
    return arc_contains_point(x, y.l, span) || arc_contains_point(y, x.l, span);
}

bool arc_contains_arc(const Arc& outer, const Arc& inner, int span) {
    auto off = [&](int p) { return ((p - outer.l) % span + span) % span; };
    int lo = off(inner.l), hi = off(inner.r), end = off(outer.r);
    return lo <= hi && hi <= end;
}

bool trapezoids_intersect(const Trapezoid& u, const Trapezoid& v) {
    bool u_left = u.t2 < v.t1 && u.b2 < v.b1;
    bool v_left = v.t2 < u.t1 && v.b2 < u.b1;
    return !(u_left || v_left);
}

// ---------------------------------------------------------------- validators

namespace {

void require_partition(const std::vector<int>& pts, int hi, const char* what) {
    std::vector<int> seen(hi + 1, 0);
    for (int p : pts) {
        if (p < 1 || p > hi) throw Error(ErrorKind::MalformedModel, std::string(what) + " endpoint out of range");
        if (seen[p]++) throw Error(ErrorKind::MalformedModel, std::string(what) + " endpoint repeated");
    }
}

}  // namespace

bool validate_interval_model(const IntervalModel& m, const Graph& g) {
    const int n = g.n();
    if (static_cast<int>(m.iv.size()) != n) throw Error(ErrorKind::MalformedModel, "interval count != n");
    std::vector<int> pts;
    for (auto& x : m.iv) {
        if (x.a >= x.b) throw Error(ErrorKind::MalformedModel, "interval with a >= b");
        pts.push_back(x.a);
        pts.push_back(x.b);
    }
    require_partition(pts, 2 * n, "interval");
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (intervals_intersect(m.iv[u], m.iv[v]) != g.adjacent(u, v)) return false;
            if (m.proper) {
                auto& p = m.iv[u];
                auto& q = m.iv[v];
                if ((p.a < q.a && q.b < p.b) || (q.a < p.a && p.b < q.b)) return false;
            }
        }
    return true;
}

bool validate_arc_model(const ArcModel& m, const Graph& g) {
    const int n = g.n();
    const int span = m.span ? m.span : 2 * n;
    if (static_cast<int>(m.arcs.size()) != n) throw Error(ErrorKind::MalformedModel, "arc count != n");
    if (span < 2 * n) throw Error(ErrorKind::MalformedModel, "span too small");
    std::vector<int> seen(span + 1, 0);
    for (auto& a : m.arcs)
        for (int p : {a.l, a.r}) {
            if (p < 1 || p > span) throw Error(ErrorKind::MalformedModel, "arc endpoint out of range");
            if (seen[p]++) throw Error(ErrorKind::MalformedModel, "arc endpoint repeated");
        }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (arcs_intersect(m.arcs[u], m.arcs[v], span) != g.adjacent(u, v)) return false;
            if (m.proper && (arc_contains_arc(m.arcs[u], m.arcs[v], span) ||
                             arc_contains_arc(m.arcs[v], m.arcs[u], span)))
                return false;
        }
    return true;
}

bool validate_clique_tree(const CliqueTree& t, const Graph& g) {
    const int n = g.n(), k = t.size();
    if (k == 0 || static_cast<int>(t.parent.size()) != k || t.root < 0 || t.root >= k) return false;
    if (t.parent[t.root] != -1) return false;
    for (int b = 0; b < k; ++b)
        if (b != t.root && (t.parent[b] < 0 || t.parent[b] >= k)) return false;
    auto d = t.depths();
    if (std::count(d.begin(), d.end(), -1)) return false;  // cycle or unreachable bag

    std::vector<std::vector<char>> in(k, std::vector<char>(n, 0));
    std::vector<int> count(n, 0);
    std::set<std::vector<int>> uniq;
    for (int b = 0; b < k; ++b) {
        if (t.bags[b].empty()) return false;
        for (int v : t.bags[b]) {
            if (v < 0 || v >= n || in[b][v]) return false;
            in[b][v] = 1;
            ++count[v];
        }
        auto sorted = t.bags[b];
        std::sort(sorted.begin(), sorted.end());
        if (!uniq.insert(sorted).second) return false;
        for (std::size_t i = 0; i < t.bags[b].size(); ++i)
            for (std::size_t j = i + 1; j < t.bags[b].size(); ++j)
                if (!g.adjacent(t.bags[b][i], t.bags[b][j])) return false;
        for (int x = 0; x < n; ++x) {  // maximality
            if (in[b][x]) continue;
            bool all = true;
            for (int v : t.bags[b])
                if (!g.adjacent(x, v)) { all = false; break; }
            if (all) return false;
        }
    }
    for (int v = 0; v < n; ++v)
        if (count[v] == 0) return false;
    for (auto e : g.edges()) {
        bool found = false;
        for (int b = 0; b < k && !found; ++b) found = in[b][e.u] && in[b][e.v];
        if (!found) return false;
    }
    std::vector<int> inner(n, 0);  // tree edges whose both ends hold v
    for (auto [p, c] : t.edges())
        for (int v : t.bags[c])
            if (in[p][v]) ++inner[v];
    for (int v = 0; v < n; ++v)
        if (inner[v] != count[v] - 1) return false;
    return true;
}

bool validate_trapezoid_model(const TrapezoidModel& m, const Graph& g) {
    const int n = g.n();
    if (static_cast<int>(m.tz.size()) != n) throw Error(ErrorKind::MalformedModel, "trapezoid count != n");
    std::vector<int> top, bot;
    for (auto& z : m.tz) {
        if (z.t1 >= z.t2 || z.b1 >= z.b2) throw Error(ErrorKind::MalformedModel, "trapezoid with t1>=t2 or b1>=b2");
        top.push_back(z.t1);
        top.push_back(z.t2);
        bot.push_back(z.b1);
        bot.push_back(z.b2);
        if (m.consecutive && (z.t2 != z.t1 + 1 || z.b2 != z.b1 + 1))
            throw Error(ErrorKind::MalformedModel, "consecutive flag set on non-consecutive trapezoid");
    }
    require_partition(top, 2 * n, "top");
    require_partition(bot, 2 * n, "bottom");
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool x = trapezoids_intersect(m.tz[u], m.tz[v]);
            if (g.adjacent(u, v) && !x) return false;
            if (m.mode == TrapezoidMode::Proper && !g.adjacent(u, v) && x) return false;
        }
    return true;
}

bool validate_permutation_model(const PermutationModel& m, const Graph& g) {
    const int n = g.n();
    if (static_cast<int>(m.l1.size()) != n || static_cast<int>(m.l2.size()) != n)
        throw Error(ErrorKind::MalformedModel, "permutation size != n");
    require_partition(m.l1, n, "l1");
    require_partition(m.l2, n, "l2");
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool cross = static_cast<long>(m.l1[v] - m.l1[u]) * (m.l2[v] - m.l2[u]) < 0;
            if (cross != g.adjacent(u, v)) return false;
        }
    return true;
}

// ---------------------------------------------------------------- derived graphs

namespace {

template <class Pred>
Graph graph_from_pred(int n, Pred pred) {
    std::vector<NodePair> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (pred(u, v)) e.push_back({u, v});
    return build_graph(n, e);
}

}  // namespace

Graph graph_of(const IntervalModel& m) {
    return graph_from_pred(static_cast<int>(m.iv.size()),
                           [&](int u, int v) { return intervals_intersect(m.iv[u], m.iv[v]); });
}

Graph graph_of(const ArcModel& m) {
    int n = static_cast<int>(m.arcs.size());
    int span = m.span ? m.span : 2 * n;
    return graph_from_pred(n, [&](int u, int v) { return arcs_intersect(m.arcs[u], m.arcs[v], span); });
}

Graph graph_of(const TrapezoidModel& m) {
    return graph_from_pred(static_cast<int>(m.tz.size()),
                           [&](int u, int v) { return trapezoids_intersect(m.tz[u], m.tz[v]); });
}

Graph graph_of(const PermutationModel& m) {
    return graph_from_pred(static_cast<int>(m.l1.size()), [&](int u, int v) {
        return static_cast<long>(m.l1[v] - m.l1[u]) * (m.l2[v] - m.l2[u]) < 0;
    });
}

// ---- clique-tree structure ----

TrimPartition trim_partition(const CliqueTree& t) {
    auto d = t.depths();
    int n = 0;
    for (auto& b : t.bags)
        for (int v : b) n = std::max(n, v + 1);
    TrimPartition p;
    p.F.assign(t.size(), {});
    p.bag_of.assign(n, -1);
    // Bottom-up trimming: deepest bags first; a node is removed at the
    // shallowest bag holding it, which is where it lands last.
    std::vector<int> order(t.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return d[a] > d[b]; });
    for (int b : order)
        for (int v : t.bags[b]) p.bag_of[v] = b;
    for (int v = 0; v < n; ++v)
        if (p.bag_of[v] >= 0) p.F[p.bag_of[v]].push_back(v);
    for (int b = 0; b < t.size(); ++b)
        if (p.F[b].empty()) throw Error(ErrorKind::EmptyBagSet, "bag " + std::to_string(b) + " trims to nothing");
    return p;
}

namespace {

bool bag_has(const std::vector<int>& bag, int v) { return std::binary_search(bag.begin(), bag.end(), v); }

std::vector<int> sorted_bag(std::vector<int> b) {
    std::sort(b.begin(), b.end());
    return b;
}

}  // namespace

LeaderAssignment choose_leaders(const CliqueTree& t, const Graph& g) {
    const int k = t.size();
    std::vector<std::vector<int>> bags(k);
    for (int b = 0; b < k; ++b) bags[b] = sorted_bag(t.bags[b]);
    auto d = t.depths();
    auto ch = t.children();
    std::vector<int> bag_count(g.n(), 0);
    for (auto& b : bags)
        for (int v : b) ++bag_count[v];

    auto pick = [&](auto&& ok) {
        int best = -1;
        for (int v = 0; v < g.n(); ++v)
            if (ok(v) && (best < 0 || g.id(v) < g.id(best))) best = v;
        return best;
    };

    LeaderAssignment la;
    la.leader.assign(k, -1);
    la.aux.assign(k, -1);
    la.leader[t.root] = pick([&](int v) { return bag_has(bags[t.root], v) && bag_count[v] == 1; });
    if (la.leader[t.root] < 0 && k > 1)
        throw Error(ErrorKind::LeaderChoiceFailed, "root bag has no node private to it");
    if (la.leader[t.root] < 0) la.leader[t.root] = pick([&](int v) { return bag_has(bags[t.root], v); });

    for (int b = 0; b < k; ++b) {
        if (b == t.root) continue;
        int p = t.parent[b];
        int gp = p >= 0 ? t.parent[p] : -1;
        la.leader[b] = pick([&](int v) {
            return bag_has(bags[b], v) && bag_has(bags[p], v) && (gp < 0 || !bag_has(bags[gp], v));
        });
        if (la.leader[b] < 0)
            throw Error(ErrorKind::LeaderChoiceFailed,
                        "bag " + std::to_string(b) + " shares no node with its parent outside the grandparent");
    }
    std::set<int> leaders(la.leader.begin(), la.leader.end());
    for (int b = 0; b < k; ++b) {
        if (b == t.root || !ch[b].empty()) continue;
        int p = t.parent[b];
        la.aux[b] = pick([&](int v) { return bag_has(bags[b], v) && !bag_has(bags[p], v) && !leaders.count(v); });
        if (la.aux[b] < 0) throw Error(ErrorKind::LeaderChoiceFailed, "leaf " + std::to_string(b) + " has no auxiliary");
    }
    (void)d;
    return la;
}

CliqueTree reroot(const CliqueTree& t, int new_root) {
    CliqueTree out = t;
    std::vector<std::vector<int>> nb(t.size());
    for (auto [p, c] : t.edges()) {
        nb[p].push_back(c);
        nb[c].push_back(p);
    }
    out.root = new_root;
    out.parent.assign(t.size(), -1);
    std::vector<char> seen(t.size(), 0);
    std::vector<int> q{new_root};
    seen[new_root] = 1;
    for (std::size_t i = 0; i < q.size(); ++i)
        for (int y : nb[q[i]])
            if (!seen[y]) {
                seen[y] = 1;
                out.parent[y] = q[i];
                q.push_back(y);
            }
    return out;
}

CliqueTree reroot_for_leaders(const CliqueTree& t) {
    const int k = t.size();
    if (k <= 1) return t;
    int n = 0;
    for (auto& b : t.bags)
        for (int v : b) n = std::max(n, v + 1);
    std::vector<int> bag_count(n, 0);
    for (auto& b : t.bags)
        for (int v : b) ++bag_count[v];
    std::vector<std::vector<int>> nb(k);
    for (auto [p, c] : t.edges()) {
        nb[p].push_back(c);
        nb[c].push_back(p);
    }
    auto ecc = [&](int s) {
        std::vector<int> d(k, -1);
        std::vector<int> q{s};
        d[s] = 0;
        int best = 0;
        for (std::size_t i = 0; i < q.size(); ++i)
            for (int y : nb[q[i]])
                if (d[y] < 0) {
                    d[y] = d[q[i]] + 1;
                    best = std::max(best, d[y]);
                    q.push_back(y);
                }
        return best;
    };
    int best = -1, best_ecc = 0, best_min = 0;
    for (int b = 0; b < k; ++b) {
        bool has_private = false;
        for (int v : t.bags[b]) has_private = has_private || bag_count[v] == 1;
        if (!has_private) continue;
        int e = ecc(b);
        int mn = *std::min_element(t.bags[b].begin(), t.bags[b].end());
        if (best < 0 || e < best_ecc || (e == best_ecc && mn < best_min)) {
            best = b;
            best_ecc = e;
            best_min = mn;
        }
    }
    if (best < 0) throw Error(ErrorKind::LeaderChoiceFailed, "no bag has a private node");
    return reroot(t, best);
}

CliqueTree normalize_clique_tree(const CliqueTree& t) {
    CliqueTree out = t;
    const int k = t.size();
    std::vector<std::vector<int>> bags(k);
    for (int b = 0; b < k; ++b) bags[b] = sorted_bag(t.bags[b]);
    const long guard = static_cast<long>(k) * k + 1;
    for (long it = 0;; ++it) {
        if (it > guard) throw Error(ErrorKind::NonTermination, "normalization exceeded |bags|^2 moves");
        auto d = out.depths();
        int move = -1;
        for (int b = 0; b < k; ++b) {
            if (d[b] < 2) continue;
            int p = out.parent[b], gp = out.parent[p];
            bool covered = true;
            for (int v : bags[b])
                if (bag_has(bags[p], v) && !bag_has(bags[gp], v)) { covered = false; break; }
            if (covered && (move < 0 || d[b] < d[move])) move = b;
        }
        if (move < 0) return out;
        out.parent[move] = out.parent[out.parent[move]];
    }
}

std::string check_leader_conditions(const CliqueTree& t, const Graph& g, const LeaderAssignment& la) {
    const int k = t.size();
    auto d = t.depths();
    auto ch = t.children();
    std::vector<std::vector<int>> bags(k);
    for (int b = 0; b < k; ++b) bags[b] = sorted_bag(t.bags[b]);
    std::set<int> leaders(la.leader.begin(), la.leader.end());
    for (int b = 0; b < k; ++b) {
        int v = la.leader[b];
        if (v < 0 || !bag_has(bags[b], v)) return "leader outside its bag";
        if (b != t.root) {
            int pv = la.leader[t.parent[b]];
            if (pv != v && !g.adjacent(v, pv)) return "leader not adjacent to parent leader";
        }
        for (int c = 0; c < k; ++c)
            if (d[c] != d[b] && la.leader[c] == v) return "leader shared across depths";
        bool leaf = b != t.root && ch[b].empty();
        if (leaf) {
            int w = la.aux[b];
            if (w < 0 || !g.adjacent(w, v)) return "leaf auxiliary missing or not adjacent";
            if (leaders.count(w)) return "auxiliary is also a leader";
        }
    }
    return {};
}

std::string check_trim_conditions(const CliqueTree& t, const TrimPartition& p, int n) {
    auto d = t.depths();
    std::vector<int> hits(n, 0);
    for (int b = 0; b < t.size(); ++b) {
        if (p.F[b].empty()) return "empty part";
        auto mb = sorted_bag(t.bags[b]);
        for (int v : p.F[b]) {
            if (v < 0 || v >= n) return "node out of range";
            ++hits[v];
            if (!bag_has(mb, v)) return "part not inside its bag";
            for (int c = 0; c < t.size(); ++c) {
                if (c == b || d[c] > d[b]) continue;
                if (bag_has(sorted_bag(t.bags[c]), v)) return "part meets a bag at depth <= its own";
            }
        }
    }
    for (int v = 0; v < n; ++v)
        if (hits[v] != 1) return "parts do not partition V";
    return {};
}

CliqueTree clique_path_from_intervals(const IntervalModel& m) {
    struct Ev {
        int x, v;
        bool left;
    };
    std::vector<Ev> ev;
    for (int v = 0; v < static_cast<int>(m.iv.size()); ++v) {
        ev.push_back({m.iv[v].a, v, true});
        ev.push_back({m.iv[v].b, v, false});
    }
    std::sort(ev.begin(), ev.end(), [](const Ev& a, const Ev& b) { return a.x < b.x; });
    CliqueTree t;
    std::set<int> active;
    bool last_left = false;
    for (auto& e : ev) {
        if (e.left) {
            active.insert(e.v);
        } else {
            if (last_left) t.bags.push_back(std::vector<int>(active.begin(), active.end()));
            active.erase(e.v);
        }
        last_left = e.left;
    }
    for (int b = 0; b < t.size(); ++b) t.parent.push_back(b - 1);
    t.root = 0;
    return t;
}

bool is_path_shaped(const CliqueTree& t) {
    auto ch = t.children();
    for (int b = 0; b < t.size(); ++b)
        if (ch[b].size() > (b == t.root ? 2u : 1u)) return false;
    return true;
}

// ---------------------------------------------------------------- trapezoid / permutation

TrapezoidModel permutation_to_consecutive_trapezoid(const PermutationModel& m) {
    TrapezoidModel t;
    t.consecutive = true;
    t.mode = TrapezoidMode::Proper;
    for (std::size_t v = 0; v < m.l1.size(); ++v)
        t.tz.push_back({2 * m.l2[v] - 1, 2 * m.l2[v], 2 * m.l1[v] - 1, 2 * m.l1[v]});
    return t;
}

PermutationModel consecutive_trapezoid_to_permutation(const TrapezoidModel& m) {
    PermutationModel p;
    for (auto& z : m.tz) {
        if (z.t2 != z.t1 + 1 || z.b2 != z.b1 + 1 || z.t1 % 2 == 0 || z.b1 % 2 == 0)
            throw Error(ErrorKind::MalformedModel, "trapezoid is not consecutive");
        p.l1.push_back((z.b1 + 1) / 2);
        p.l2.push_back((z.t1 + 1) / 2);
    }
    return p;
}

std::vector<std::pair<int, int>> trapezoid_f_values(const TrapezoidModel& m, const Graph& g) {
    const int n = g.n();
    std::vector<std::pair<int, int>> out(n);
    for (int v = 0; v < n; ++v) {
        std::set<int> ft, fb;
        for (int w = 0; w < n; ++w) {
            if (w == v || g.adjacent(v, w)) continue;
            for (int x : {m.tz[w].t1, m.tz[w].t2})
                if (x < m.tz[v].t1) ft.insert(x);
            for (int x : {m.tz[w].b1, m.tz[w].b2})
                if (x < m.tz[v].b1) fb.insert(x);
        }
        out[v] = {static_cast<int>(ft.size()), static_cast<int>(fb.size())};
    }
    return out;
}

NonTrapezoidWitness non_trapezoid_conditions(const TrapezoidModel& m, const Graph& g) {
    NonTrapezoidWitness w;
    const int n = g.n();
    for (int v = 0; v < n; ++v)
        for (int x = 0; x < n; ++x) {
            if (x == v || g.adjacent(v, x)) continue;
            for (int p : {m.tz[x].t1, m.tz[x].t2})
                if (m.tz[v].t1 <= p && p <= m.tz[v].t2) w.covered_by_non_neighbor = true;
            for (int p : {m.tz[x].b1, m.tz[x].b2})
                if (m.tz[v].b1 <= p && p <= m.tz[v].b2) w.covered_by_non_neighbor = true;
        }
    for (auto [ft, fb] : trapezoid_f_values(m, g))
        if (ft != fb) w.f_mismatch = true;
    return w;
}

PermutationModel q_permutation_model(int k) {
    PermutationModel p;
    const int top[5] = {2, 1, 3, 5, 4};
    const int mid[3] = {4, 3, 2};
    for (int i = 1; i <= k; ++i) {
        int o = 5 * (i - 1);
        for (int j = 0; j < 5; ++j) p.l2.push_back(o + top[j]);
        p.l1.push_back(i == 1 ? 1 : 5 * (i - 1));
        for (int j = 0; j < 3; ++j) p.l1.push_back(o + mid[j]);
        p.l1.push_back(i == k ? 5 * k : 5 * i + 1);
    }
    return p;
}

PermutationModel seven_line_permutation_model() {
    // red, orange, yellow, purple, blue, gray, green
    return PermutationModel{{1, 6, 3, 2, 4, 7, 5}, {3, 2, 1, 6, 7, 5, 4}};
}

Graph seven_line_permutation_graph() {
    return build_graph(7, {{0, 2}, {2, 3}, {3, 1}, {1, 4}, {4, 6}, {4, 5}, {1, 0}, {5, 3}, {6, 3}, {1, 6}});
}

// ---------------------------------------------------------------- generators

namespace {

std::uint64_t mix_seed(SchemeTag tag, int n, std::uint64_t seed) {
    std::seed_seq ss{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                     static_cast<std::uint32_t>(tag), static_cast<std::uint32_t>(n)};
    std::uint64_t out[1];
    std::uint32_t w[2];
    ss.generate(w, w + 2);
    out[0] = (static_cast<std::uint64_t>(w[0]) << 32) | w[1];
    return out[0];
}

// Ranks of real values, 1-based.
std::vector<int> ranks(const std::vector<double>& xs) {
    std::vector<int> idx(xs.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return xs[a] < xs[b]; });
    std::vector<int> r(xs.size());
    for (std::size_t i = 0; i < idx.size(); ++i) r[idx[i]] = static_cast<int>(i) + 1;
    return r;
}

double frac(double x) { return x - std::floor(x); }

// Expected degree grows like log n so large samples stay connected.
double density(int n) { return std::max(1.0, std::log(static_cast<double>(n))); }

IntervalModel gen_intervals(int n, bool proper, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> U(0.0, 1.0);
    std::vector<double> s(n), e(n);
    double scale = (1.0 + 3.0 * U(rng)) * density(n) / n;
    for (int i = 0; i < n; ++i) s[i] = U(rng);
    if (proper) std::sort(s.begin(), s.end());
    for (int i = 0; i < n; ++i) {
        double len = scale * (0.3 + 2.0 * U(rng));
        if (!proper && U(rng) < 0.1) len = 0.5 * U(rng);
        e[i] = s[i] + len;
        if (proper && i > 0) e[i] = std::max(e[i], e[i - 1] + 1e-9);
    }
    std::vector<double> all;
    for (int i = 0; i < n; ++i) {
        all.push_back(s[i]);
        all.push_back(e[i]);
    }
    auto r = ranks(all);
    IntervalModel m;
    m.proper = proper;
    for (int i = 0; i < n; ++i) m.iv.push_back({r[2 * i], r[2 * i + 1]});
    if (proper) {  // shuffle node labels so index order carries no information
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        IntervalModel out = m;
        for (int i = 0; i < n; ++i) out.iv[perm[i]] = m.iv[i];
        return out;
    }
    return m;
}

std::optional<ArcModel> gen_arcs(int n, bool proper, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> U(0.0, 1.0);
    std::vector<double> s(n), e(n);
    double scale = (1.0 + 3.0 * U(rng)) * density(n) / n;
    for (int i = 0; i < n; ++i) s[i] = U(rng);
    if (proper) std::sort(s.begin(), s.end());
    for (int i = 0; i < n; ++i) {
        double len = scale * (0.3 + 2.0 * U(rng));
        if (!proper && U(rng) < 0.1) len = 0.9 * U(rng);
        e[i] = s[i] + len;
        if (proper && i > 0) e[i] = std::max(e[i], e[i - 1] + 1e-9);
    }
    if (proper) {
        if (e[n - 1] >= e[0] + 1.0) return std::nullopt;
        for (int i = 0; i < n; ++i)
            if (e[i] - s[i] >= 1.0) return std::nullopt;
    }
    std::vector<double> all;
    for (int i = 0; i < n; ++i) {
        all.push_back(frac(s[i]));
        all.push_back(frac(e[i]));
    }
    auto r = ranks(all);
    ArcModel m;
    m.span = 2 * n;
    m.proper = proper;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    m.arcs.resize(n);
    for (int i = 0; i < n; ++i) m.arcs[perm[i]] = {r[2 * i + 1], r[2 * i]};
    return m;
}

std::pair<Graph, CliqueTree> gen_chordal(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> U(0.0, 1.0);
    double p = 0.15 + 0.85 * U(rng);
    CliqueTree t;
    t.bags.push_back({0});
    t.parent.push_back(-1);
    t.root = 0;
    std::vector<NodePair> edges;
    for (int v = 1; v < n; ++v) {
        int b = std::uniform_int_distribution<int>(0, t.size() - 1)(rng);
        std::vector<int> S;
        for (int x : t.bags[b])
            if (U(rng) < p) S.push_back(x);
        if (S.empty()) S.push_back(t.bags[b][std::uniform_int_distribution<std::size_t>(0, t.bags[b].size() - 1)(rng)]);
        for (int x : S) edges.push_back({x, v});
        if (S.size() == t.bags[b].size()) {
            t.bags[b].push_back(v);
        } else {
            S.push_back(v);
            t.bags.push_back(S);
            t.parent.push_back(b);
        }
    }
    for (auto& b : t.bags) std::sort(b.begin(), b.end());
    return {build_graph(n, edges), t};
}

TrapezoidModel gen_trapezoids(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> U(0.0, 1.0);
    std::normal_distribution<double> N(0.0, 1.0);
    double scale = (1.0 + 3.0 * U(rng)) * density(n) / n;
    double drift = 0.05 + 0.3 * U(rng);
    std::vector<double> top, bot;
    for (int i = 0; i < n; ++i) {
        double c = U(rng);
        double ct = c, cb = c + drift * N(rng);
        double lt = scale * (0.2 + 2.0 * U(rng)), lb = scale * (0.2 + 2.0 * U(rng));
        top.push_back(ct);
        top.push_back(ct + lt);
        bot.push_back(cb);
        bot.push_back(cb + lb);
    }
    auto rt = ranks(top), rb = ranks(bot);
    TrapezoidModel m;
    for (int i = 0; i < n; ++i) m.tz.push_back({rt[2 * i], rt[2 * i + 1], rb[2 * i], rb[2 * i + 1]});
    return m;
}

PermutationModel gen_permutation(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> U(0.0, 1.0);
    std::normal_distribution<double> N(0.0, 1.0);
    double sigma = (0.5 + 4.0 * U(rng)) * density(n);
    std::vector<double> a(n), b(n);
    for (int i = 0; i < n; ++i) {
        a[i] = i;
        b[i] = i + sigma * N(rng);
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    auto ra = ranks(a), rb = ranks(b);
    PermutationModel m;
    m.l1.resize(n);
    m.l2.resize(n);
    for (int i = 0; i < n; ++i) {
        m.l1[perm[i]] = ra[i];
        m.l2[perm[i]] = rb[i];
    }
    return m;
}

}  // namespace

std::pair<Graph, GeometricModel> random_model(SchemeTag tag, int n, std::uint64_t seed) {
    if (n < 1) throw Error(ErrorKind::BadIndex, "random_model needs n >= 1");
    std::mt19937_64 rng(mix_seed(tag, n, seed));
    constexpr int kAttempts = 2000;
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        try {
            switch (tag) {
                case SchemeTag::ProperInterval:
                case SchemeTag::Interval: {
                    auto m = gen_intervals(n, tag == SchemeTag::ProperInterval, rng);
                    return {graph_of(m), m};
                }
                case SchemeTag::ProperCircularArc:
                case SchemeTag::CircularArc: {
                    auto m = gen_arcs(n, tag == SchemeTag::ProperCircularArc, rng);
                    if (!m) continue;
                    return {graph_of(*m), *m};
                }
                case SchemeTag::Chordal: {
                    auto [g, t] = gen_chordal(n, rng);
                    return {g, t};
                }
                case SchemeTag::Trapezoid: {
                    auto m = gen_trapezoids(n, rng);
                    return {graph_of(m), m};
                }
                case SchemeTag::Permutation: {
                    auto m = gen_permutation(n, rng);
                    return {graph_of(m), m};
                }
            }
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::DisconnectedGraph) throw;
        }
    }
    throw Error(ErrorKind::SeedExhausted, "no connected sample after " + std::to_string(kAttempts) + " draws");
}

// ---------------------------------------------------------------- model files

std::string model_class(const GeometricModel& m) {
    switch (m.index()) {
        case 0: return "interval";
        case 1: return "arc";
        case 2: return "clique-tree";
        case 3: return "trapezoid";
        default: return "permutation";
    }
}

void write_model(const GeometricModel& model, std::ostream& out) {
    out << "class " << model_class(model) << '\n';
    if (auto* m = std::get_if<IntervalModel>(&model)) {
        out << "n " << m->iv.size() << "\nproper " << m->proper << '\n';
        for (std::size_t v = 0; v < m->iv.size(); ++v) out << v << ' ' << m->iv[v].a << ' ' << m->iv[v].b << '\n';
    } else if (auto* m = std::get_if<ArcModel>(&model)) {
        out << "n " << m->arcs.size() << "\nspan " << m->span << "\nproper " << m->proper << '\n';
        for (std::size_t v = 0; v < m->arcs.size(); ++v) out << v << ' ' << m->arcs[v].r << ' ' << m->arcs[v].l << '\n';
    } else if (auto* m = std::get_if<CliqueTree>(&model)) {
        out << "bags " << m->size() << "\nroot " << m->root << '\n';
        for (int b = 0; b < m->size(); ++b) {
            out << "bag " << b;
            for (int v : m->bags[b]) out << ' ' << v;
            out << '\n';
        }
        for (auto [p, c] : m->edges()) out << "edge " << p << ' ' << c << '\n';
    } else if (auto* m = std::get_if<TrapezoidModel>(&model)) {
        out << "n " << m->tz.size() << "\nmode " << (m->mode == TrapezoidMode::Proper ? "proper" : "semi-proper")
            << "\nconsecutive " << m->consecutive << '\n';
        for (std::size_t v = 0; v < m->tz.size(); ++v) {
            auto& z = m->tz[v];
            out << v << ' ' << z.t1 << ' ' << z.t2 << ' ' << z.b1 << ' ' << z.b2 << '\n';
        }
    } else if (auto* m = std::get_if<PermutationModel>(&model)) {
        out << "n " << m->l1.size() << '\n';
        for (std::size_t v = 0; v < m->l1.size(); ++v) out << v << ' ' << m->l1[v] << ' ' << m->l2[v] << '\n';
    }
}

namespace {

struct LineReader {
    std::vector<std::string> lines;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& why) const {
        throw Error(ErrorKind::ParseError, "model line " + std::to_string(pos) + ": " + why);
    }
    std::istringstream next() {
        if (pos >= lines.size()) fail("unexpected end of model");
        return std::istringstream(lines[pos++]);
    }
    long keyed(const std::string& key) {
        auto ss = next();
        std::string k;
        long v;
        if (!(ss >> k >> v) || k != key) fail("expected '" + key + " <int>'");
        end(ss);
        return v;
    }
    std::string keyed_word(const std::string& key) {
        auto ss = next();
        std::string k, v;
        if (!(ss >> k >> v) || k != key) fail("expected '" + key + " <word>'");
        end(ss);
        return v;
    }
    std::vector<long> row(long index, std::size_t count) {
        auto ss = next();
        long v;
        if (!(ss >> v) || v != index) fail("expected row for node " + std::to_string(index));
        std::vector<long> out(count);
        for (auto& x : out)
            if (!(ss >> x)) fail("short row");
        end(ss);
        return out;
    }
    void end(std::istringstream& ss) const {
        std::string extra;
        if (ss >> extra) fail("trailing garbage");
    }
};

}  // namespace

GeometricModel read_model(std::istream& in) {
    LineReader r;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        r.lines.push_back(line);
    }
    std::string cls = r.keyed_word("class");
    GeometricModel result;
    if (cls == "interval") {
        IntervalModel m;
        long n = r.keyed("n");
        m.proper = r.keyed("proper") != 0;
        for (long v = 0; v < n; ++v) {
            auto x = r.row(v, 2);
            m.iv.push_back({static_cast<int>(x[0]), static_cast<int>(x[1])});
        }
        result = m;
    } else if (cls == "arc") {
        ArcModel m;
        long n = r.keyed("n");
        m.span = static_cast<int>(r.keyed("span"));
        m.proper = r.keyed("proper") != 0;
        for (long v = 0; v < n; ++v) {
            auto x = r.row(v, 2);
            m.arcs.push_back({static_cast<int>(x[0]), static_cast<int>(x[1])});
        }
        result = m;
    } else if (cls == "clique-tree") {
        CliqueTree t;
        long k = r.keyed("bags");
        t.root = static_cast<int>(r.keyed("root"));
        if (k < 1 || t.root < 0 || t.root >= k) r.fail("bad bag count or root");
        t.parent.assign(k, -1);
        for (long b = 0; b < k; ++b) {
            auto ss = r.next();
            std::string tag;
            long idx;
            if (!(ss >> tag >> idx) || tag != "bag" || idx != b) r.fail("expected 'bag " + std::to_string(b) + "'");
            std::vector<int> bag;
            long v;
            while (ss >> v) bag.push_back(static_cast<int>(v));
            if (!ss.eof()) r.fail("bad bag entry");
            t.bags.push_back(bag);
        }
        for (long e = 0; e + 1 < k; ++e) {
            auto ss = r.next();
            std::string tag;
            long p, c;
            if (!(ss >> tag >> p >> c) || tag != "edge") r.fail("expected 'edge p c'");
            r.end(ss);
            if (p < 0 || p >= k || c < 0 || c >= k || c == t.root || t.parent[c] != -1) r.fail("bad tree edge");
            t.parent[c] = static_cast<int>(p);
        }
        result = t;
    } else if (cls == "trapezoid") {
        TrapezoidModel m;
        long n = r.keyed("n");
        std::string mode = r.keyed_word("mode");
        if (mode == "proper") m.mode = TrapezoidMode::Proper;
        else if (mode == "semi-proper") m.mode = TrapezoidMode::SemiProper;
        else r.fail("unknown trapezoid mode");
        m.consecutive = r.keyed("consecutive") != 0;
        for (long v = 0; v < n; ++v) {
            auto x = r.row(v, 4);
            m.tz.push_back({static_cast<int>(x[0]), static_cast<int>(x[1]), static_cast<int>(x[2]),
                            static_cast<int>(x[3])});
        }
        result = m;
    } else if (cls == "permutation") {
        PermutationModel m;
        long n = r.keyed("n");
        for (long v = 0; v < n; ++v) {
            auto x = r.row(v, 2);
            m.l1.push_back(static_cast<int>(x[0]));
            m.l2.push_back(static_cast<int>(x[1]));
        }
        result = m;
    } else {
        r.fail("unknown class '" + cls + "'");
    }
    if (r.pos != r.lines.size()) r.fail("trailing garbage");
    return result;
}

std::string format_model(const GeometricModel& m) {
    std::ostringstream out;
    write_model(m, out);
    return out.str();
}

GeometricModel parse_model(const std::string& text) {
    std::istringstream in(text);
    return read_model(in);
}

}  // namespace lcert
