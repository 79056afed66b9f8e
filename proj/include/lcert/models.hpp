#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lcert/graph.hpp"
#include "lcert/scheme_tag.hpp"

namespace lcert {

// Closed interval [a, b] with integer endpoints.
struct Interval {
    int a = 0;
    int b = 0;
};

struct IntervalModel {
    std::vector<Interval> iv;  // indexed by node
    bool proper = false;
};

// Arc running counter-clockwise from l to r on a cycle of `span` slots.
struct Arc {
    int r = 0;
    int l = 0;
};

struct ArcModel {
    std::vector<Arc> arcs;
    int span = 0;  // slots 1..span; 0 means 2n
    bool proper = false;
};

struct CliqueTree {
    std::vector<std::vector<int>> bags;  // sorted node lists
    std::vector<int> parent;             // -1 at the root
    int root = 0;

    int size() const { return static_cast<int>(bags.size()); }
    std::vector<int> depths() const;
    std::vector<std::vector<int>> children() const;
    std::vector<std::pair<int, int>> edges() const;  // (parent, child)
};

struct TrimPartition {
    std::vector<std::vector<int>> F;  // per bag, sorted
    std::vector<int> bag_of;          // per node
};

struct LeaderAssignment {
    std::vector<int> leader;  // per bag
    std::vector<int> aux;     // per bag, -1 unless a non-root leaf
};

enum class TrapezoidMode { Proper, SemiProper };

struct Trapezoid {
    int t1 = 0, t2 = 0, b1 = 0, b2 = 0;
};

struct TrapezoidModel {
    std::vector<Trapezoid> tz;
    TrapezoidMode mode = TrapezoidMode::Proper;
    bool consecutive = false;
};

struct PermutationModel {
    std::vector<int> l1;  // bottom line position in [1, n]
    std::vector<int> l2;  // top line position in [1, n]
};

using GeometricModel = std::variant<IntervalModel, ArcModel, CliqueTree, TrapezoidModel, PermutationModel>;

// ---- predicates ----
bool intervals_intersect(const Interval& x, const Interval& y);
bool arc_contains_point(const Arc& a, int p, int span);
bool arcs_intersect(const Arc& x, const Arc& y, int span);
bool arc_contains_arc(const Arc& outer, const Arc& inner, int span);
bool trapezoids_intersect(const Trapezoid& u, const Trapezoid& v);

// ---- validators (MalformedModel on broken coordinate invariants) ----
bool validate_interval_model(const IntervalModel& m, const Graph& g);
bool validate_arc_model(const ArcModel& m, const Graph& g);
bool validate_clique_tree(const CliqueTree& t, const Graph& g);
bool validate_trapezoid_model(const TrapezoidModel& m, const Graph& g);
bool validate_permutation_model(const PermutationModel& m, const Graph& g);

// ---- graphs derived from models ----
Graph graph_of(const IntervalModel& m);
Graph graph_of(const ArcModel& m);
Graph graph_of(const TrapezoidModel& m);
Graph graph_of(const PermutationModel& m);

// ---- clique-tree structure ----
TrimPartition trim_partition(const CliqueTree& t);
LeaderAssignment choose_leaders(const CliqueTree& t, const Graph& g);
CliqueTree normalize_clique_tree(const CliqueTree& t);
// Re-roots at a bag holding a node that lies in no other bag; ties go to the
// smallest eccentricity, then to the smallest node index.
CliqueTree reroot_for_leaders(const CliqueTree& t);
CliqueTree reroot(const CliqueTree& t, int new_root);
// Checks every leader condition; returns an empty string when all hold.
std::string check_leader_conditions(const CliqueTree& t, const Graph& g, const LeaderAssignment& la);
std::string check_trim_conditions(const CliqueTree& t, const TrimPartition& p, int n);

// Maximal cliques of an interval model in left-to-right order, joined as a path.
CliqueTree clique_path_from_intervals(const IntervalModel& m);
bool is_path_shaped(const CliqueTree& t);  // every non-root bag has <= 1 child, root <= 2

// ---- trapezoid / permutation helpers ----
TrapezoidModel permutation_to_consecutive_trapezoid(const PermutationModel& m);
PermutationModel consecutive_trapezoid_to_permutation(const TrapezoidModel& m);
// f_t(v), f_b(v) from their global definition.
std::vector<std::pair<int, int>> trapezoid_f_values(const TrapezoidModel& m, const Graph& g);
// The two conditions of the non-trapezoid characterization for a semi-proper model.
struct NonTrapezoidWitness {
    bool covered_by_non_neighbor = false;
    bool f_mismatch = false;
};
NonTrapezoidWitness non_trapezoid_conditions(const TrapezoidModel& m, const Graph& g);

// Hand-built instances used as fixtures.
PermutationModel q_permutation_model(int k);  // explicit model of Q_k
PermutationModel seven_line_permutation_model();
Graph seven_line_permutation_graph();  // seven segments between two lines

// ---- random yes-instances ----
// Pure in (tag, n, seed). Throws SeedExhausted after bounded resampling.
std::pair<Graph, GeometricModel> random_model(SchemeTag tag, int n, std::uint64_t seed);

// ---- model file format ----
void write_model(const GeometricModel& m, std::ostream& out);
GeometricModel read_model(std::istream& in);
std::string format_model(const GeometricModel& m);
GeometricModel parse_model(const std::string& text);
std::string model_class(const GeometricModel& m);

}  // namespace lcert
