#include "lcert/pls.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

#include "json.hpp"

namespace lcert {

using nlohmann::json;

// ---------------------------------------------------------------- domains

const char* to_string(Dom d) {
    switch (d) {
        case Dom::Id: return "id";
        case Dom::IdOrNone: return "id-or-none";
        case Dom::Count: return "count";
        case Dom::Index: return "index";
        case Dom::Coord2n: return "coord-2n";
        case Dom::Coord2nS: return "coord-2n-sentinel";
        case Dom::Coord4n: return "coord-4n";
        case Dom::Bit: return "bit";
        case Dom::ClaimedN: return "claimed-n";
    }
    return "?";
}

std::optional<Dom> parse_dom(const std::string& s) {
    for (Dom d : {Dom::Id, Dom::IdOrNone, Dom::Count, Dom::Index, Dom::Coord2n, Dom::Coord2nS, Dom::Coord4n, Dom::Bit,
                  Dom::ClaimedN})
        if (s == to_string(d)) return d;
    return std::nullopt;
}

namespace {

std::int64_t id_bound(int n, int c) {
    std::int64_t r = 1;
    for (int i = 0; i < c; ++i) r *= n;
    return r;
}

}  // namespace

DomainBounds domain_bounds(Dom d, int n, int c) {
    const std::int64_t N = n;
    switch (d) {
        case Dom::Id: return {1, id_bound(n, c)};
        case Dom::IdOrNone: return {0, id_bound(n, c)};
        case Dom::Count: return {1, N};
        case Dom::Index: return {0, N - 1};
        case Dom::Coord2n: return {1, 2 * N};
        case Dom::Coord2nS: return {1, 2 * N + 1};
        case Dom::Coord4n: return {1, 4 * N};
        case Dom::Bit: return {0, 1};
        case Dom::ClaimedN: return {1, 2 * N};
    }
    return {0, 0};
}

int field_bits(Dom d, int n, int c) {
    auto b = domain_bounds(d, n, c);
    std::uint64_t size = static_cast<std::uint64_t>(b.hi - b.lo) + 1;
    if (size <= 1) return 0;
    return 64 - __builtin_clzll(size - 1);
}

int Certificate::bit_size(int n, int c) const {
    int bits = 0;
    for (auto& f : fields) bits += field_bits(f.dom, n, c);
    for (auto& s : subs) bits += s.bit_size(n, c);
    return bits;
}

bool Certificate::in_domain(int n, int c) const {
    for (auto& f : fields) {
        auto b = domain_bounds(f.dom, n, c);
        if (f.value < b.lo || f.value > b.hi) return false;
    }
    for (auto& s : subs)
        if (!s.in_domain(n, c)) return false;
    return true;
}

bool Certificate::operator==(const Certificate& o) const {
    if (tag != o.tag || fields.size() != o.fields.size() || subs != o.subs) return false;
    for (std::size_t i = 0; i < fields.size(); ++i)
        if (fields[i].name != o.fields[i].name || fields[i].dom != o.fields[i].dom || fields[i].value != o.fields[i].value)
            return false;
    return true;
}

FieldReader::FieldReader(const Certificate& c, const std::string& tag) : c_(c) {
    if (c.tag != tag) throw Error(ErrorKind::ParseError, "expected certificate '" + tag + "', got '" + c.tag + "'");
}

std::int64_t FieldReader::next(const char* name) {
    if (pos_ >= c_.fields.size() || c_.fields[pos_].name != name)
        throw Error(ErrorKind::ParseError, std::string("missing field '") + name + "' in '" + c_.tag + "'");
    return c_.fields[pos_++].value;
}

const Certificate& FieldReader::sub(std::size_t i) const {
    if (i >= c_.subs.size()) throw Error(ErrorKind::ParseError, "missing sub-certificate in '" + c_.tag + "'");
    return c_.subs[i];
}

void FieldReader::finish() const {
    if (pos_ != c_.fields.size()) throw Error(ErrorKind::ParseError, "extra fields in '" + c_.tag + "'");
}

// ---------------------------------------------------------------- runtime

std::vector<NodeView> build_views(const Graph& g, const Certs& certs, std::optional<std::uint64_t> shuffle_seed) {
    std::vector<NodeView> views(g.n());
    std::mt19937_64 rng(shuffle_seed.value_or(0));
    for (int v = 0; v < g.n(); ++v) {
        auto& view = views[v];
        view.my_id = g.id(v);
        view.cert = &certs[v];
        for (int u : g.neighbors(v)) view.nbrs.push_back({g.id(u), &certs[u]});
        if (shuffle_seed) std::shuffle(view.nbrs.begin(), view.nbrs.end(), rng);
    }
    return views;
}

RunReport run_pls(const Graph& g, const Certs& certs, const Verifier& verifier, const RunOptions& opt) {
    if (static_cast<int>(certs.size()) != g.n())
        throw Error(ErrorKind::BadIndex, "certificate count does not match node count");
    auto t0 = std::chrono::steady_clock::now();
    RunReport r;
    r.scheme = opt.scheme;
    r.n = g.n();
    r.seed = opt.seed;
    for (auto& c : certs) r.max_cert_bits = std::max(r.max_cert_bits, c.bit_size(g.n(), opt.c));
    auto views = build_views(g, certs, opt.shuffle_neighbors ? std::optional<std::uint64_t>(opt.seed) : std::nullopt);
    for (int v = 0; v < g.n(); ++v) {
        bool ok = false;
        bool domain_ok = certs[v].in_domain(g.n(), opt.c);
        for (auto& nb : views[v].nbrs) domain_ok = domain_ok && nb.cert->in_domain(g.n(), opt.c);
        if (!domain_ok) {
            r.diagnostics.push_back("node " + std::to_string(g.id(v)) + ": field outside its domain");
        } else {
            try {
                ok = verifier(views[v]);
            } catch (const std::exception& e) {
                r.diagnostics.push_back("node " + std::to_string(g.id(v)) + ": " + e.what());
            } catch (...) {
                r.diagnostics.push_back("node " + std::to_string(g.id(v)) + ": verifier failure");
            }
        }
        if (!ok) r.rejecting_ids.push_back(g.id(v));
    }
    std::sort(r.rejecting_ids.begin(), r.rejecting_ids.end());
    r.all_accept = r.rejecting_ids.empty();
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::string RunReport::to_json() const {
    json j;
    j["scheme"] = scheme;
    j["n"] = n;
    j["verdict"] = verdict();
    j["rejecting_ids"] = rejecting_ids;
    j["max_cert_bits"] = max_cert_bits;
    j["seed"] = seed;
    return j.dump();
}

std::string RunReport::csv_header() { return "scheme,n,verdict,rejecting_ids,max_cert_bits,seed"; }

std::string RunReport::to_csv_row() const {
    std::ostringstream out;
    out << scheme << ',' << n << ',' << verdict() << ',';
    for (std::size_t i = 0; i < rejecting_ids.size(); ++i) out << (i ? ";" : "") << rejecting_ids[i];
    out << ',' << max_cert_bits << ',' << seed;
    return out.str();
}

bool RunReport::same_outcome(const RunReport& o) const { return to_json() == o.to_json(); }

// ---------------------------------------------------------------- sub-protocols

Certificate encode(const StCert& s) {
    return {"st",
            {{"root", Dom::Id, s.root}, {"parent", Dom::Id, s.parent}, {"d", Dom::Index, s.d}, {"dp", Dom::Index, s.dp}},
            {}};
}

Certificate encode(const SizeCert& s) {
    return {"size", {{"c", Dom::Count, s.c}, {"claimed_n", Dom::ClaimedN, s.claimed_n}}, {encode(s.st)}};
}

Certificate encode(const PathCert& p) {
    return {"path",
            {{"b", Dom::Bit, p.b ? 1 : 0}, {"pred", Dom::IdOrNone, p.pred}, {"succ", Dom::IdOrNone, p.succ}},
            {}};
}

StCert decode_st(const Certificate& c) {
    FieldReader r(c, "st");
    StCert s;
    s.root = r.next("root");
    s.parent = r.next("parent");
    s.d = r.next("d");
    s.dp = r.next("dp");
    r.finish();
    return s;
}

SizeCert decode_size(const Certificate& c) {
    FieldReader r(c, "size");
    SizeCert s;
    s.c = r.next("c");
    s.claimed_n = r.next("claimed_n");
    r.finish();
    s.st = decode_st(r.sub(0));
    return s;
}

PathCert decode_path(const Certificate& c) {
    FieldReader r(c, "path");
    PathCert p;
    p.b = r.next("b") != 0;
    p.pred = r.next("pred");
    p.succ = r.next("succ");
    r.finish();
    return p;
}

bool st_check(Id me, const StCert& mine, const std::vector<std::pair<Id, StCert>>& nbrs) {
    for (auto& [id, s] : nbrs)
        if (s.root != mine.root) return false;
    if (me == mine.root) return mine.d == 0 && mine.dp == 0 && mine.parent == me;
    if (mine.parent == me || mine.d != mine.dp + 1) return false;
    for (auto& [id, s] : nbrs)
        if (id == mine.parent && s.d == mine.dp) return true;
    return false;
}

bool size_check(Id me, const SizeCert& mine, const std::vector<std::pair<Id, SizeCert>>& nbrs) {
    std::vector<std::pair<Id, StCert>> st;
    std::int64_t sum = 1;
    for (auto& [id, s] : nbrs) {
        if (s.claimed_n != mine.claimed_n) return false;
        st.push_back({id, s.st});
        if (s.st.parent == me && id != me) sum += s.c;
    }
    if (!st_check(me, mine.st, st)) return false;
    if (mine.c != sum) return false;
    if (me == mine.st.root && mine.c != mine.claimed_n) return false;
    return true;
}

bool path_check(Id me, const PathCert& mine, const std::vector<std::pair<Id, PathCert>>& nbrs, bool is_s, bool is_t) {
    if (!mine.b) {
        if (is_s || is_t || mine.pred != 0 || mine.succ != 0) return false;
        for (auto& [id, p] : nbrs)
            if (p.b && (p.pred == me || p.succ == me)) return false;
        return true;
    }
    int flagged = 0;
    for (auto& [id, p] : nbrs) flagged += p.b ? 1 : 0;
    auto names_me = [&](Id who, bool as_succ) {
        for (auto& [id, p] : nbrs)
            if (id == who) return p.b && (as_succ ? p.succ == me : p.pred == me);
        return false;
    };
    if (is_s && is_t) return mine.pred == 0 && mine.succ == 0 && flagged == 0;
    if (is_s) return mine.pred == 0 && mine.succ != 0 && flagged == 1 && names_me(mine.succ, false);
    if (is_t) return mine.succ == 0 && mine.pred != 0 && flagged == 1 && names_me(mine.pred, true);
    return mine.pred != 0 && mine.succ != 0 && mine.pred != mine.succ && flagged == 2 && names_me(mine.pred, true) &&
           names_me(mine.succ, false);
}

std::vector<StCert> spanning_tree_certs(const Graph& g, int root) {
    const int n = g.n();
    if (root < 0 || root >= n) throw Error(ErrorKind::BadIndex, "root out of range");
    std::vector<int> dist(n, -1), par(n, -1);
    std::vector<int> q{root};
    dist[root] = 0;
    par[root] = root;
    for (std::size_t i = 0; i < q.size(); ++i)
        for (int y : g.neighbors(q[i]))
            if (dist[y] < 0) {
                dist[y] = dist[q[i]] + 1;
                par[y] = q[i];
                q.push_back(y);
            }
    std::vector<StCert> out(n);
    for (int v = 0; v < n; ++v) out[v] = {g.id(root), g.id(par[v]), dist[v], dist[par[v]]};
    return out;
}

std::vector<SizeCert> size_certs(const Graph& g, int root, std::optional<std::int64_t> claimed_n) {
    auto st = spanning_tree_certs(g, root);
    const int n = g.n();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return st[a].d > st[b].d; });
    std::vector<std::int64_t> cnt(n, 1);
    for (int v : order)
        if (v != root) cnt[g.index_of(st[v].parent)] += cnt[v];
    std::vector<SizeCert> out(n);
    for (int v = 0; v < n; ++v) out[v] = {st[v], cnt[v], claimed_n.value_or(n)};
    return out;
}

std::vector<int> shortest_path(const Graph& g, int s, int t) {
    std::vector<int> par(g.n(), -1);
    std::vector<int> q{s};
    par[s] = s;
    for (std::size_t i = 0; i < q.size(); ++i)
        for (int y : g.neighbors(q[i]))
            if (par[y] < 0) {
                par[y] = q[i];
                q.push_back(y);
            }
    if (par[t] < 0) throw Error(ErrorKind::NoLinePath, "no path between the requested endpoints");
    std::vector<int> path{t};
    while (path.back() != s) path.push_back(par[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<PathCert> path_certs(const Graph& g, int s, int t, const std::vector<int>& given) {
    auto path = given.empty() ? shortest_path(g, s, t) : given;
    if (path.front() != s || path.back() != t) throw Error(ErrorKind::InvalidWitness, "path endpoints differ from s, t");
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (!g.adjacent(path[i], path[i + 1])) throw Error(ErrorKind::InvalidWitness, "path uses a non-edge");
    std::vector<PathCert> out(g.n());
    for (std::size_t i = 0; i < path.size(); ++i) {
        auto& p = out[path[i]];
        if (p.b) throw Error(ErrorKind::InvalidWitness, "path repeats a node");
        p.b = true;
        p.pred = i > 0 ? g.id(path[i - 1]) : 0;
        p.succ = i + 1 < path.size() ? g.id(path[i + 1]) : 0;
    }
    return out;
}

Certs spanning_tree_prove(const Graph& g, int root) {
    Certs out;
    for (auto& s : spanning_tree_certs(g, root)) out.push_back(encode(s));
    return out;
}

bool spanning_tree_verify(const NodeView& v) {
    auto mine = decode_st(*v.cert);
    std::vector<std::pair<Id, StCert>> nb;
    for (auto& x : v.nbrs) nb.push_back({x.id, decode_st(*x.cert)});
    return st_check(v.my_id, mine, nb);
}

Certs size_prove(const Graph& g, int root, std::optional<std::int64_t> claimed_n) {
    Certs out;
    for (auto& s : size_certs(g, root, claimed_n)) out.push_back(encode(s));
    return out;
}

bool size_verify(const NodeView& v) {
    auto mine = decode_size(*v.cert);
    std::vector<std::pair<Id, SizeCert>> nb;
    for (auto& x : v.nbrs) nb.push_back({x.id, decode_size(*x.cert)});
    return size_check(v.my_id, mine, nb);
}

Certs st_path_prove(const Graph& g, int s, int t, const std::vector<int>& path) {
    Certs out;
    for (auto& p : path_certs(g, s, t, path))
        out.push_back({"st-path", {{"s", Dom::Id, g.id(s)}, {"t", Dom::Id, g.id(t)}}, {encode(p)}});
    return out;
}

bool st_path_verify(const NodeView& v) {
    auto read = [](const Certificate& c, Id& s, Id& t) {
        FieldReader r(c, "st-path");
        s = r.next("s");
        t = r.next("t");
        r.finish();
        return decode_path(r.sub(0));
    };
    Id s, t;
    auto mine = read(*v.cert, s, t);
    std::vector<std::pair<Id, PathCert>> nb;
    for (auto& x : v.nbrs) {
        Id s2, t2;
        auto p = read(*x.cert, s2, t2);
        if (s2 != s || t2 != t) return false;
        nb.push_back({x.id, p});
    }
    return path_check(v.my_id, mine, nb, v.my_id == s, v.my_id == t);
}

// ---------------------------------------------------------------- corruption

const char* to_string(Corruption c) {
    switch (c) {
        case Corruption::FlipField: return "flip-field";
        case Corruption::SwapTwoNodes: return "swap-two-nodes";
        case Corruption::ResampleField: return "resample-field";
        case Corruption::Truncate: return "truncate";
    }
    return "?";
}

std::optional<Corruption> parse_corruption(const std::string& s) {
    for (auto c : kAllCorruptions)
        if (s == to_string(c)) return c;
    return std::nullopt;
}

namespace {

void collect_fields(Certificate& c, std::vector<Field*>& out) {
    for (auto& f : c.fields) out.push_back(&f);
    for (auto& s : c.subs) collect_fields(s, out);
}

std::int64_t draw_other(const Field& f, int n, int c, std::mt19937_64& rng) {
    auto b = domain_bounds(f.dom, n, c);
    if (b.hi <= b.lo) return f.value;
    std::int64_t x = std::uniform_int_distribution<std::int64_t>(b.lo, b.hi - 1)(rng);
    return x >= f.value ? x + 1 : x;  // uniform over the domain minus the current value
}

bool mutable_field(const Field& f, int n, int c) {
    auto b = domain_bounds(f.dom, n, c);
    return b.hi > b.lo;
}

}  // namespace

Certs corrupt(const Certs& certs, Corruption strategy, std::uint64_t seed, int n, int c) {
    Certs out = certs;
    if (out.empty()) return out;
    std::mt19937_64 rng(seed);
    const int nodes = static_cast<int>(out.size());
    if (strategy == Corruption::SwapTwoNodes) {
        if (nodes < 2) return out;
        int a = std::uniform_int_distribution<int>(0, nodes - 1)(rng);
        int b = std::uniform_int_distribution<int>(0, nodes - 2)(rng);
        if (b >= a) ++b;
        std::swap(out[a], out[b]);
        return out;
    }
    std::vector<std::pair<int, Field*>> all;
    for (int v = 0; v < nodes; ++v) {
        std::vector<Field*> fs;
        collect_fields(out[v], fs);
        for (auto* f : fs)
            if (mutable_field(*f, n, c)) all.push_back({v, f});
    }
    if (all.empty()) return out;
    auto pick = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
    Field& f = *pick.second;
    switch (strategy) {
        case Corruption::FlipField: {
            auto b = domain_bounds(f.dom, n, c);
            int width = field_bits(f.dom, n, c);
            int bit = std::uniform_int_distribution<int>(0, std::max(0, width - 1))(rng);
            std::int64_t x = b.lo + ((f.value - b.lo) ^ (std::int64_t{1} << bit));
            f.value = (x >= b.lo && x <= b.hi && x != f.value) ? x : draw_other(f, n, c, rng);
            break;
        }
        case Corruption::ResampleField: f.value = draw_other(f, n, c, rng); break;
        case Corruption::Truncate: {
            std::vector<Field*> fs;
            collect_fields(out[pick.first], fs);
            std::size_t from = std::uniform_int_distribution<std::size_t>(0, fs.size() - 1)(rng);
            bool changed = false;
            for (std::size_t i = from; i < fs.size(); ++i) {
                auto lo = domain_bounds(fs[i]->dom, n, c).lo;
                changed = changed || fs[i]->value != lo;
                fs[i]->value = lo;
            }
            if (!changed) f.value = draw_other(f, n, c, rng);
            break;
        }
        case Corruption::SwapTwoNodes: break;
    }
    return out;
}

Certs sample_uniform(const Certs& shape, std::uint64_t seed, int n, int c) {
    Certs out = shape;
    std::mt19937_64 rng(seed);
    for (auto& cert : out) {
        std::vector<Field*> fs;
        collect_fields(cert, fs);
        for (auto* f : fs) {
            auto b = domain_bounds(f->dom, n, c);
            f->value = std::uniform_int_distribution<std::int64_t>(b.lo, b.hi)(rng);
        }
    }
    return out;
}

// ---------------------------------------------------------------- files

namespace {

json cert_json(const Certificate& c) {
    json fields = json::array();
    for (auto& f : c.fields) fields.push_back({{"name", f.name}, {"dom", to_string(f.dom)}, {"value", f.value}});
    json subs = json::array();
    for (auto& s : c.subs) subs.push_back(cert_json(s));
    return {{"tag", c.tag}, {"fields", fields}, {"subs", subs}};
}

Certificate cert_from(const json& j) {
    Certificate c;
    c.tag = j.at("tag").get<std::string>();
    for (auto& f : j.at("fields")) {
        auto dom = parse_dom(f.at("dom").get<std::string>());
        if (!dom) throw Error(ErrorKind::ParseError, "unknown field domain");
        c.fields.push_back({f.at("name").get<std::string>(), *dom, f.at("value").get<std::int64_t>()});
    }
    for (auto& s : j.at("subs")) c.subs.push_back(cert_from(s));
    return c;
}

}  // namespace

std::string certs_to_json(const std::string& scheme, const Graph& g, const Certs& certs) {
    json arr = json::array();
    for (int v = 0; v < g.n(); ++v) arr.push_back({{"node", v}, {"id", g.id(v)}, {"cert", cert_json(certs[v])}});
    json j = {{"scheme", scheme}, {"n", g.n()}, {"certs", arr}};
    return j.dump(1);
}

Certs certs_from_json(const std::string& text, std::string* scheme) {
    try {
        auto j = json::parse(text);
        if (scheme) *scheme = j.at("scheme").get<std::string>();
        int n = j.at("n").get<int>();
        auto& arr = j.at("certs");
        if (!arr.is_array() || static_cast<int>(arr.size()) != n)
            throw Error(ErrorKind::ParseError, "certificate list length differs from n");
        Certs out(n);
        std::vector<char> seen(n, 0);
        for (auto& e : arr) {
            int v = e.at("node").get<int>();
            if (v < 0 || v >= n || seen[v]) throw Error(ErrorKind::ParseError, "bad node index in certificate file");
            seen[v] = 1;
            out[v] = cert_from(e.at("cert"));
        }
        return out;
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("certificate file: ") + e.what());
    }
}

}  // namespace lcert
