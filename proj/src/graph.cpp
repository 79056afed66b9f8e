#include "lcert/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace lcert {

const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::DisconnectedGraph: return "DisconnectedGraph";
        case ErrorKind::DuplicateEdge: return "DuplicateEdge";
        case ErrorKind::SelfLoop: return "SelfLoop";
        case ErrorKind::IdCollision: return "IdCollision";
        case ErrorKind::BadIndex: return "BadIndex";
        case ErrorKind::NotIndependent: return "NotIndependent";
        case ErrorKind::NotIsomorphism: return "NotIsomorphism";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::MalformedModel: return "MalformedModel";
        case ErrorKind::EmptyBagSet: return "EmptyBagSet";
        case ErrorKind::LeaderChoiceFailed: return "LeaderChoiceFailed";
        case ErrorKind::NonTermination: return "NonTermination";
        case ErrorKind::SeedExhausted: return "SeedExhausted";
        case ErrorKind::NotChordal: return "NotChordal";
        case ErrorKind::InvalidWitness: return "InvalidWitness";
        case ErrorKind::NoLinePath: return "NoLinePath";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::UnknownScheme: return "UnknownScheme";
    }
    return "Unknown";
}

int Graph::index_of(Id id) const {
    for (int v = 0; v < n_; ++v)
        if (ids_[v] == id) return v;
    return -1;
}

bool Graph::edges_eq(const Graph& o) const {
    if (edges_.size() != o.edges_.size()) return false;
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (edges_[i].u != o.edges_[i].u || edges_[i].v != o.edges_[i].v) return false;
    return true;
}

bool is_connected(int n, const std::vector<NodePair>& edges) {
    if (n <= 0) return false;
    std::vector<std::vector<int>> adj(n);
    for (auto e : edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : adj[x])
            if (!seen[y]) {
                seen[y] = 1;
                ++count;
                stack.push_back(y);
            }
    }
    return count == n;
}

Graph build_unchecked(int n, const std::vector<NodePair>& edges, const std::vector<Id>& ids) {
    Graph g;
    g.n_ = n;
    g.mat_.assign(static_cast<std::size_t>(n) * n, 0);
    g.adj_.assign(n, {});
    for (auto e : edges) {
        NodePair p{std::min(e.u, e.v), std::max(e.u, e.v)};
        g.edges_.push_back(p);
        g.mat_[static_cast<std::size_t>(p.u) * n + p.v] = 1;
        g.mat_[static_cast<std::size_t>(p.v) * n + p.u] = 1;
        g.adj_[p.u].push_back(p.v);
        g.adj_[p.v].push_back(p.u);
    }
    std::sort(g.edges_.begin(), g.edges_.end(),
              [](NodePair a, NodePair b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
    for (auto& a : g.adj_) std::sort(a.begin(), a.end());
    g.ids_ = ids;
    return g;
}

Graph build_graph(int n, const std::vector<NodePair>& edges, const std::optional<std::vector<Id>>& ids) {
    if (n <= 0) throw Error(ErrorKind::DisconnectedGraph, "graph needs at least one node");
    std::set<std::pair<int, int>> seen;
    for (auto e : edges) {
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
            throw Error(ErrorKind::BadIndex, "edge endpoint out of range");
        if (e.u == e.v) throw Error(ErrorKind::SelfLoop, "self-loop at " + std::to_string(e.u));
        auto key = std::make_pair(std::min(e.u, e.v), std::max(e.u, e.v));
        if (!seen.insert(key).second)
            throw Error(ErrorKind::DuplicateEdge,
                        std::to_string(key.first) + "-" + std::to_string(key.second));
    }
    std::vector<Id> id_map(n);
    if (ids) {
        if (static_cast<int>(ids->size()) != n) throw Error(ErrorKind::BadIndex, "id map size mismatch");
        id_map = *ids;
        std::set<Id> uniq(id_map.begin(), id_map.end());
        if (static_cast<int>(uniq.size()) != n) throw Error(ErrorKind::IdCollision, "ids not distinct");
        for (Id x : id_map)
            if (x < 1) throw Error(ErrorKind::BadIndex, "ids must be positive");
    } else {
        std::iota(id_map.begin(), id_map.end(), Id{1});
    }
    if (!is_connected(n, edges)) throw Error(ErrorKind::DisconnectedGraph, "graph is not connected");
    return build_unchecked(n, edges, id_map);
}

Graph with_ids(const Graph& g, const std::vector<Id>& ids) { return build_graph(g.n(), g.edges(), ids); }

Graph with_permuted_ids(const Graph& g, std::uint64_t seed, int c) {
    c = std::clamp(c, 1, 3);
    Id bound = 1;
    for (int i = 0; i < c; ++i) bound *= g.n();
    std::mt19937_64 rng(seed);
    std::vector<Id> ids(g.n());
    if (bound == g.n()) {
        std::iota(ids.begin(), ids.end(), Id{1});
        std::shuffle(ids.begin(), ids.end(), rng);
    } else {
        std::uniform_int_distribution<Id> d(1, bound);
        std::set<Id> used;
        for (auto& x : ids) {
            do { x = d(rng); } while (!used.insert(x).second);
        }
    }
    return with_ids(g, ids);
}

Graph path_graph(int n) {
    std::vector<NodePair> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return build_graph(n, e);
}

Graph cycle_graph(int n) {
    std::vector<NodePair> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    if (n >= 3) e.push_back({0, n - 1});
    return build_graph(n, e);
}

Graph complete_graph(int n) {
    std::vector<NodePair> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.push_back({i, j});
    return build_graph(n, e);
}

Graph star_graph(int leaves) {
    std::vector<NodePair> e;
    for (int i = 1; i <= leaves; ++i) e.push_back({0, i});
    return build_graph(leaves + 1, e);
}

Graph construct_Q(int k) {
    if (k < 1) throw Error(ErrorKind::BadIndex, "construct_Q needs k >= 1");
    int n = 5 * k;
    std::vector<NodePair> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    for (int i = 1; i <= k; ++i) e.push_back({5 * i - 3 - 1, 5 * i - 1 - 1});
    return build_graph(n, e);
}

std::pair<int, int> q_block(int i) { return {5 * i - 2 - 1, 5 * i - 1 - 1}; }

Graph crossing(const Graph& g, const std::vector<int>& h1, const std::vector<int>& h2,
               const std::vector<int>& sigma) {
    const int n = g.n();
    if (h1.size() != h2.size() || sigma.size() != h1.size())
        throw Error(ErrorKind::NotIsomorphism, "sigma must be a bijection h1 -> h2");
    std::vector<int> in1(n, -1), in2(n, 0);
    for (std::size_t i = 0; i < h1.size(); ++i) {
        if (h1[i] < 0 || h1[i] >= n) throw Error(ErrorKind::BadIndex, "h1 node out of range");
        in1[h1[i]] = static_cast<int>(i);
    }
    for (int x : h2) {
        if (x < 0 || x >= n) throw Error(ErrorKind::BadIndex, "h2 node out of range");
        if (in1[x] >= 0) throw Error(ErrorKind::NotIndependent, "h1 and h2 share a node");
        in2[x] = 1;
    }
    std::set<int> img(sigma.begin(), sigma.end());
    if (img.size() != sigma.size()) throw Error(ErrorKind::NotIsomorphism, "sigma not injective");
    for (int s : sigma)
        if (s < 0 || s >= n || !in2[s]) throw Error(ErrorKind::NotIsomorphism, "sigma leaves h2");
    auto sig = [&](int u) { return sigma[in1[u]]; };

    std::set<std::pair<int, int>> E;
    for (auto e : g.edges()) E.insert({e.u, e.v});
    auto has = [&](int a, int b) { return E.count({std::min(a, b), std::max(a, b)}) > 0; };
    auto put = [&](int a, int b, bool on) {
        auto key = std::make_pair(std::min(a, b), std::max(a, b));
        if (on) E.insert(key); else E.erase(key);
    };

    // Pairs {u,v} in h1 are either straight, crossed, or absent on both sides.
    std::set<std::pair<int, int>> crossed_edges;
    std::vector<std::pair<int, int>> straight, crossed;
    for (std::size_t a = 0; a < h1.size(); ++a)
        for (std::size_t b = a + 1; b < h1.size(); ++b) {
            int u = h1[a], v = h1[b];
            bool s1 = has(u, v), s2 = has(sig(u), sig(v));
            bool c1 = has(u, sig(v)), c2 = has(sig(u), v);
            if (s1 != s2 && !(c1 && c2)) throw Error(ErrorKind::NotIsomorphism, "sigma does not preserve edges");
            if (s1 && s2) {
                straight.push_back({u, v});
            } else if (!s1 && !s2 && c1 && c2) {
                crossed.push_back({u, v});
                crossed_edges.insert({std::min(u, sig(v)), std::max(u, sig(v))});
                crossed_edges.insert({std::min(sig(u), v), std::max(sig(u), v)});
            }
        }
    for (auto e : g.edges()) {
        bool between = (in1[e.u] >= 0 && in2[e.v]) || (in1[e.v] >= 0 && in2[e.u]);
        if (between && !crossed_edges.count({e.u, e.v}))
            throw Error(ErrorKind::NotIndependent, "edge between h1 and h2");
    }
    for (auto [u, v] : straight) {
        put(u, v, false);
        put(sig(u), sig(v), false);
        put(u, sig(v), true);
        put(sig(u), v, true);
    }
    for (auto [u, v] : crossed) {
        put(u, sig(v), false);
        put(sig(u), v, false);
        put(u, v, true);
        put(sig(u), sig(v), true);
    }
    std::vector<NodePair> out;
    for (auto [a, b] : E) out.push_back({a, b});
    return build_graph(n, out, g.ids());
}

Graph crossing_Q(int k, int i, int j) {
    Graph q = construct_Q(k);
    auto [a, b] = q_block(i);
    auto [c, d] = q_block(j);
    return crossing(q, {a, b}, {c, d}, {c, d});
}

namespace {

struct CycleSearch {
    const Graph& g;
    int k;
    int s = 0;
    std::vector<int> path;
    std::vector<char> on;

    bool extend() {
        int last = path.back();
        for (int x : g.neighbors(last)) {
            if (x <= s || on[x]) continue;
            bool chord = false;
            for (std::size_t i = 1; i + 1 < path.size(); ++i)
                if (g.adjacent(x, path[i])) { chord = true; break; }
            if (chord) continue;
            if (g.adjacent(x, s)) {
                if (path.size() >= 2 && static_cast<int>(path.size()) + 1 >= k) return true;
                continue;  // closing here; extending further would leave a chord to s
            }
            on[x] = 1;
            path.push_back(x);
            if (extend()) return true;
            path.pop_back();
            on[x] = 0;
        }
        return false;
    }
};

}  // namespace

bool has_induced_cycle_at_least(const Graph& g, int k, int cap) {
    if (g.n() > cap) throw Error(ErrorKind::TooLarge, "induced-cycle search capped at n=" + std::to_string(cap));
    k = std::max(k, 3);
    CycleSearch cs{g, k, 0, {}, {}};
    cs.on.assign(g.n(), 0);
    for (int s = 0; s < g.n(); ++s) {
        cs.s = s;
        for (int p1 : g.neighbors(s)) {
            if (p1 <= s) continue;
            cs.path = {s, p1};
            cs.on.assign(g.n(), 0);
            cs.on[s] = cs.on[p1] = 1;
            if (cs.extend()) return true;
        }
    }
    return false;
}

Graph read_edge_list(std::istream& in) {
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    while (!lines.empty() && lines.back().find_first_not_of(" \t") == std::string::npos) lines.pop_back();
    if (lines.empty()) throw Error(ErrorKind::ParseError, "empty input");
    auto fail = [](std::size_t ln, const std::string& why) {
        throw Error(ErrorKind::ParseError, "line " + std::to_string(ln + 1) + ": " + why);
    };
    auto ints = [&](std::size_t ln, const std::string& text, std::size_t want) {
        std::istringstream ss(text);
        std::vector<long long> out;
        long long x;
        while (ss >> x) out.push_back(x);
        if (!ss.eof()) fail(ln, "unexpected token");
        if (out.size() != want) fail(ln, "expected " + std::to_string(want) + " integers");
        return out;
    };
    auto head = ints(0, lines[0], 2);
    long long n = head[0], m = head[1];
    if (n < 1 || m < 0) fail(0, "bad header");
    if (lines.size() < static_cast<std::size_t>(m) + 1) fail(lines.size(), "missing edge lines");
    std::vector<NodePair> edges;
    for (long long i = 1; i <= m; ++i) {
        auto uv = ints(i, lines[i], 2);
        if (uv[0] >= uv[1]) fail(i, "edge must be written as u v with u < v");
        if (uv[1] >= n) fail(i, "node index out of range");
        edges.push_back({static_cast<int>(uv[0]), static_cast<int>(uv[1])});
    }
    std::optional<std::vector<Id>> ids;
    for (std::size_t ln = static_cast<std::size_t>(m) + 1; ln < lines.size(); ++ln) {
        std::istringstream ss(lines[ln]);
        std::string tag;
        long long i, val;
        if (!(ss >> tag >> i >> val) || tag != "id") fail(ln, "trailing garbage");
        std::string rest;
        if (ss >> rest) fail(ln, "trailing garbage");
        if (i < 0 || i >= n) fail(ln, "id line index out of range");
        if (!ids) {
            ids = std::vector<Id>(n, 0);
        }
        if ((*ids)[i] != 0) fail(ln, "node id given twice");
        (*ids)[i] = val;
    }
    if (ids && std::count(ids->begin(), ids->end(), Id{0})) throw Error(ErrorKind::ParseError, "id map incomplete");
    return build_graph(static_cast<int>(n), edges, ids);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << g.n() << ' ' << g.m() << '\n';
    for (auto e : g.edges()) out << e.u << ' ' << e.v << '\n';
    bool identity = true;
    for (int v = 0; v < g.n(); ++v) identity = identity && g.id(v) == v + 1;
    if (!identity)
        for (int v = 0; v < g.n(); ++v) out << "id " << v << ' ' << g.id(v) << '\n';
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    write_edge_list(g, out);
    return out.str();
}

}  // namespace lcert
