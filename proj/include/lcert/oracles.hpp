#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lcert/graph.hpp"
#include "lcert/models.hpp"

namespace lcert {

// ---- chordal / interval ----

// Elimination order (first entry eliminated first), or nullopt when g has a
// chordless cycle of length >= 4.
std::optional<std::vector<int>> is_chordal(const Graph& g);
bool is_perfect_elimination_ordering(const Graph& g, const std::vector<int>& peo);
// NotChordal if peo is not a perfect elimination ordering of g.
CliqueTree clique_tree_from_peo(const Graph& g, const std::vector<int>& peo);

bool has_asteroidal_triple(const Graph& g);
bool is_interval(const Graph& g);
bool is_claw_free(const Graph& g);

// order[pos] = node. True iff adjacency of v_i, v_j forces adjacency to every node in between.
bool is_proper_interval_ordering(const Graph& g, const std::vector<int>& order);
// Backtracking search; TooLarge above cap.
std::optional<std::vector<int>> proper_interval_ordering(const Graph& g, int cap = 10);
// Ordering search up to n = 10, interval plus claw-free above.
bool is_proper_interval(const Graph& g);

std::vector<std::vector<int>> maximal_cliques(const Graph& g);
// Orders the maximal cliques so that every node's cliques are consecutive.
// TooLarge when more than `cap` cliques.
std::optional<CliqueTree> clique_path_search(const Graph& g, int cap = 9);

// ---- augmented adjacency matrices ----

struct AugmentedAdjacency {
    int n = 0;
    std::vector<std::uint8_t> cells;  // row-major, indexed by position
    bool at(int i, int j) const { return cells[static_cast<std::size_t>(i) * n + j] != 0; }
    bool operator==(const AugmentedAdjacency& o) const { return n == o.n && cells == o.cells; }
};

// Row/column p holds node order[p].
AugmentedAdjacency augmented_adjacency(const Graph& g, const std::vector<int>& order);

// Largest i with M[i][j] = 1 and M[(i+1) mod n][j] = 0; nullopt iff column j is all ones.
std::optional<int> last_index(const AugmentedAdjacency& m, int j);

enum class MatrixPerm { Inv, Sh };
// Rows and columns move together: entry (i, j) goes to (sigma(i), sigma(j)).
// Inv fixes the final position and reverses the others; Sh maps i to i+1 mod n.
AugmentedAdjacency apply_perm(const AugmentedAdjacency& m, MatrixPerm which);
// sigma as an explicit position map (0-based).
std::vector<int> perm_map(int n, MatrixPerm which);

bool has_circular_ones(const AugmentedAdjacency& m);
bool has_circularly_compatible_ones(const AugmentedAdjacency& m);
// Length of the downward run in column i starting at the diagonal (n if all ones).
std::vector<int> column_runs(const AugmentedAdjacency& m);
bool has_quasi_circular_ones(const AugmentedAdjacency& m);

enum class OrderingProperty { ProperInterval, CircularlyCompatible, QuasiCircular };

struct OrderingWitness {
    std::vector<int> order;  // order[pos] = node
    OrderingProperty property = OrderingProperty::ProperInterval;
};

bool ordering_has_property(const Graph& g, const std::vector<int>& order, OrderingProperty p);

inline constexpr int kOrderingSearchCap = 10;
// Exhaustive search (node 0 pinned to position 0 for the shift-invariant
// properties). TooLarge above cap.
std::optional<OrderingWitness> search_ordering(const Graph& g, OrderingProperty p, int cap = kOrderingSearchCap);

// Proper arc model read off a circular ordering: node order[i] gets an arc
// starting at slot i and covering the run of consecutive neighbours after it.
// The result is not validated.
ArcModel arc_model_from_ordering(const Graph& g, const std::vector<int>& order);

// Independent proper-arc oracle: enumerates every start-ordered proper arc
// pattern on n <= cap nodes. TooLarge above cap.
std::optional<ArcModel> brute_proper_arc_model(const Graph& g, int cap = 6);

// ---- permutation / trapezoid ----

std::optional<PermutationModel> permutation_model_search(const Graph& g, int cap = 8);

// Exhaustive catalogs: every arc arrangement / every permutation on n nodes,
// closed under relabelling. Independent of the ordering searches above.
enum class SmallClass { CircularArc, Permutation };
inline constexpr int kSmallCatalogCap = 6;
bool small_catalog_member(const Graph& g, SmallClass c);

enum class Membership { Yes, No, Unknown };
const char* to_string(Membership m);
// Deliberately partial: yes from a validated witness or a permutation model
// (n <= 8), no from a chordless cycle of length >= 5, unknown otherwise.
Membership trapezoid_membership_fixture(const Graph& g, const std::optional<TrapezoidModel>& witness = std::nullopt);

}  // namespace lcert
