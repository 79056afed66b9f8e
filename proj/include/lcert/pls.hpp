#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lcert/graph.hpp"

namespace lcert {

// Field domains; bounds depend on n (and the id exponent c).
enum class Dom {
    Id,          // [1, n^c]
    IdOrNone,    // [0, n^c], 0 = none
    Count,       // [1, n]
    Index,       // [0, n-1]
    Coord2n,     // [1, 2n]
    Coord2nS,    // [1, 2n+1], 2n+1 = no such coordinate
    Coord4n,     // [1, 4n]
    Bit,         // [0, 1]
    ClaimedN,    // [1, 2n]
};

const char* to_string(Dom d);
std::optional<Dom> parse_dom(const std::string& s);

struct DomainBounds {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
};

inline constexpr int kIdExponent = 3;

DomainBounds domain_bounds(Dom d, int n, int c = kIdExponent);
int field_bits(Dom d, int n, int c = kIdExponent);

struct Field {
    std::string name;
    Dom dom = Dom::Bit;
    std::int64_t value = 0;
};

struct Certificate {
    std::string tag;
    std::vector<Field> fields;
    std::vector<Certificate> subs;

    int bit_size(int n, int c = kIdExponent) const;
    bool in_domain(int n, int c = kIdExponent) const;
    bool operator==(const Certificate& o) const;
};

using Certs = std::vector<Certificate>;  // indexed by node

// Sequential typed access; any mismatch throws, which the runtime turns into a reject.
class FieldReader {
public:
    FieldReader(const Certificate& c, const std::string& tag);
    std::int64_t next(const char* name);
    const Certificate& sub(std::size_t i) const;
    void finish() const;

private:
    const Certificate& c_;
    std::size_t pos_ = 0;
};

struct Neighbor {
    Id id = 0;
    const Certificate* cert = nullptr;
};

struct NodeView {
    Id my_id = 0;
    const Certificate* cert = nullptr;
    std::vector<Neighbor> nbrs;
    int degree() const { return static_cast<int>(nbrs.size()); }
};

using Verifier = std::function<bool(const NodeView&)>;

struct RunReport {
    std::string scheme;
    int n = 0;
    bool all_accept = true;
    std::vector<Id> rejecting_ids;  // sorted
    int max_cert_bits = 0;
    std::uint64_t seed = 0;
    double wall_ms = 0;                    // not serialized
    std::vector<std::string> diagnostics;  // not serialized

    std::string verdict() const { return all_accept ? "all-accept" : "reject"; }
    std::string to_json() const;
    static std::string csv_header();
    std::string to_csv_row() const;
    bool same_outcome(const RunReport& o) const;
};

struct RunOptions {
    std::string scheme;
    std::uint64_t seed = 0;
    bool shuffle_neighbors = false;  // adversarial order drawn from seed
    int c = kIdExponent;
};

// One verification round. Out-of-domain fields and verifier exceptions both reject.
RunReport run_pls(const Graph& g, const Certs& certs, const Verifier& verifier, const RunOptions& opt = {});

std::vector<NodeView> build_views(const Graph& g, const Certs& certs, std::optional<std::uint64_t> shuffle_seed);

// ---- toolbox sub-protocols ----

struct StCert {
    Id root = 0;
    Id parent = 0;
    std::int64_t d = 0;
    std::int64_t dp = 0;
};

struct SizeCert {
    StCert st;
    std::int64_t c = 0;
    std::int64_t claimed_n = 0;
};

struct PathCert {
    bool b = false;
    Id pred = 0;
    Id succ = 0;
};

Certificate encode(const StCert& s);
Certificate encode(const SizeCert& s);
Certificate encode(const PathCert& p);
StCert decode_st(const Certificate& c);
SizeCert decode_size(const Certificate& c);
PathCert decode_path(const Certificate& c);

bool st_check(Id me, const StCert& mine, const std::vector<std::pair<Id, StCert>>& nbrs);
bool size_check(Id me, const SizeCert& mine, const std::vector<std::pair<Id, SizeCert>>& nbrs);
bool path_check(Id me, const PathCert& mine, const std::vector<std::pair<Id, PathCert>>& nbrs, bool is_s, bool is_t);

// BFS spanning tree rooted at node `root` (index).
std::vector<StCert> spanning_tree_certs(const Graph& g, int root);
std::vector<SizeCert> size_certs(const Graph& g, int root, std::optional<std::int64_t> claimed_n = std::nullopt);
// Shortest s-t path (induced) unless `path` is given.
std::vector<PathCert> path_certs(const Graph& g, int s, int t, const std::vector<int>& path = {});
std::vector<int> shortest_path(const Graph& g, int s, int t);

Certs spanning_tree_prove(const Graph& g, int root);
bool spanning_tree_verify(const NodeView& v);
Certs size_prove(const Graph& g, int root, std::optional<std::int64_t> claimed_n = std::nullopt);
bool size_verify(const NodeView& v);
// Standalone s-t path certificates carry the ids of s and t.
Certs st_path_prove(const Graph& g, int s, int t, const std::vector<int>& path = {});
bool st_path_verify(const NodeView& v);

// ---- corruption / sampling ----

enum class Corruption { FlipField, SwapTwoNodes, ResampleField, Truncate };
inline constexpr Corruption kAllCorruptions[] = {Corruption::FlipField, Corruption::SwapTwoNodes,
                                                 Corruption::ResampleField, Corruption::Truncate};
const char* to_string(Corruption c);
std::optional<Corruption> parse_corruption(const std::string& s);

Certs corrupt(const Certs& certs, Corruption strategy, std::uint64_t seed, int n, int c = kIdExponent);
// Every field redrawn uniformly from its domain; shapes kept.
Certs sample_uniform(const Certs& shape, std::uint64_t seed, int n, int c = kIdExponent);

// ---- certificate files ----
std::string certs_to_json(const std::string& scheme, const Graph& g, const Certs& certs);
// ParseError on malformed input.
Certs certs_from_json(const std::string& text, std::string* scheme = nullptr);

}  // namespace lcert
