#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "lcert/error.hpp"

namespace lcert {

using Id = std::int64_t;

struct NodePair {
    int u = 0;
    int v = 0;
};

// Immutable simple connected graph with distinct identifiers.
class Graph {
public:
    Graph() = default;

    int n() const { return n_; }
    std::size_t m() const { return edges_.size(); }
    bool adjacent(int u, int v) const { return mat_[static_cast<std::size_t>(u) * n_ + v] != 0; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<NodePair>& edges() const { return edges_; }  // u < v, lexicographic
    Id id(int v) const { return ids_[v]; }
    const std::vector<Id>& ids() const { return ids_; }
    int index_of(Id id) const;  // -1 when absent

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_eq(o) && ids_ == o.ids_; }

private:
    friend Graph build_graph(int, const std::vector<NodePair>&, const std::optional<std::vector<Id>>&);
    friend Graph build_unchecked(int, const std::vector<NodePair>&, const std::vector<Id>&);
    bool edges_eq(const Graph& o) const;

    int n_ = 0;
    std::vector<NodePair> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::uint8_t> mat_;
    std::vector<Id> ids_;
};

// Errors: DisconnectedGraph, DuplicateEdge, SelfLoop, IdCollision, BadIndex.
Graph build_graph(int n, const std::vector<NodePair>& edges,
                  const std::optional<std::vector<Id>>& ids = std::nullopt);

// Same graph, new identifiers.
Graph with_ids(const Graph& g, const std::vector<Id>& ids);
// Random injective ids in [1, n^c] (c capped at 3).
Graph with_permuted_ids(const Graph& g, std::uint64_t seed, int c = 3);

bool is_connected(int n, const std::vector<NodePair>& edges);

// Standard families.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);  // center is node 0

// Path v1..v5k plus chords {v_{5i-3}, v_{5i-1}}; node index = label - 1.
Graph construct_Q(int k);
// H_i = {v_{5i-2}, v_{5i-1}} as 0-based indices.
std::pair<int, int> q_block(int i);

// Edge-pair swap between node-disjoint subgraphs h1 and h2 related by sigma
// (sigma[i] is the image of h1[i]). Straight pairs {u,v},{su,sv} become
// {u,sv},{su,v}; already-crossed pairs are swapped back, so applying the same
// crossing twice is the identity.
Graph crossing(const Graph& g, const std::vector<int>& h1, const std::vector<int>& h2,
               const std::vector<int>& sigma);

// crossing(Q_k) between H_i and H_j (1-based block indices, i < j).
Graph crossing_Q(int k, int i, int j);

inline constexpr int kInducedCycleCap = 16;
// True iff g has a chordless cycle with at least k nodes. TooLarge above the cap.
bool has_induced_cycle_at_least(const Graph& g, int k, int cap = kInducedCycleCap);

// Edge-list text format.
Graph read_edge_list(std::istream& in);
void write_edge_list(const Graph& g, std::ostream& out);
Graph parse_edge_list(const std::string& text);
std::string format_edge_list(const Graph& g);

}  // namespace lcert
