#pragma once

#include <optional>

#include "lcert/graph.hpp"
#include "lcert/models.hpp"
#include "lcert/oracles.hpp"
#include "lcert/pls.hpp"
#include "lcert/scheme_tag.hpp"

namespace lcert {

// Provers throw InvalidWitness when the witness does not certify the class.

// ---- proper interval ----
Certs proper_interval_prove(const Graph& g, const OrderingWitness& w);
bool proper_interval_verify(const NodeView& v);

// ---- chordal / interval ----
struct ChordalFields {
    std::int64_t T = 0;      // |T|
    Id F = 0;                // id of the bag's selected node
    std::int64_t fsize = 0;  // |F_b|
    std::int64_t depth = 0;
    Id P = 0;     // selected node of the parent bag (root: itself)
    Id edge = 0;  // edge-leader payload: smallest child-bag selected id vouched for, 0 if none
    bool aux = false;
    Id child = 0;  // interval only: selected id of the unique child bag, 0 at a leaf
    SizeCert size;
};

// Pipeline used by the prover: root choice, normalization, trim and leaders.
struct ChordalLayout {
    CliqueTree tree;
    TrimPartition trim;
    LeaderAssignment leaders;
};
ChordalLayout chordal_layout(const CliqueTree& t, const Graph& g);
std::vector<ChordalFields> chordal_fields(const Graph& g, const CliqueTree& t, bool interval);

Certs chordal_prove(const Graph& g, const CliqueTree& t);
bool chordal_verify(const NodeView& v);
Certs interval_prove(const Graph& g, const CliqueTree& t);
bool interval_verify(const NodeView& v);

// ---- proper circular-arc ----
struct ProperCircFields {
    std::int64_t r = 0, l = 0;
    Id v1 = 0;
    std::int64_t pi = 0, vmin = 0, vmax = 0;
    SizeCert size;
};
// Arcs are required unless an ordering is given, in which case they are read off it.
Certs proper_circ_prove(const Graph& g, const std::optional<OrderingWitness>& w, const std::optional<ArcModel>& arcs);
bool proper_circ_verify(const NodeView& v);
std::vector<ProperCircFields> decode_proper_circ(const Certs& certs);

// Locally recomputed transformed ranges (exposed for cross-checking against apply_perm).
struct RangeTransform {
    std::int64_t v_max_shift = 0, u_max_shift = 0;  // case 1: self first, successor second
    std::int64_t v_max_refl = 0, w_max_refl = 0;    // case 2: reflected, predecessor second
};
RangeTransform proper_circ_transforms(std::int64_t n, const ProperCircFields& v, const ProperCircFields& succ,
                                      const ProperCircFields& pred);

// ---- circular-arc ----
struct CircFields {
    std::int64_t pi = 0, L = 0;
    SizeCert size;
};
Certs circ_prove(const Graph& g, const OrderingWitness& w);
bool circ_verify(const NodeView& v);
// Ordering by left endpoint, which has quasi-circular 1's for any arc model.
std::vector<int> left_endpoint_order(const ArcModel& m);

// ---- trapezoid / permutation ----
struct TrapezoidFields {
    std::int64_t t1 = 0, t2 = 0, b1 = 0, b2 = 0, p = 0, q = 0;
    SizeCert size;
    PathCert pt, pb;
};
Certs trapezoid_prove(const Graph& g, const TrapezoidModel& m);
bool trapezoid_verify(const NodeView& v);
Certs permutation_prove(const Graph& g, const PermutationModel& m);
bool permutation_verify(const NodeView& v);
// Honest p_v / q_v of a model (2n+1 when no such coordinate).
std::vector<std::pair<int, int>> trapezoid_scan_values(const Graph& g, const TrapezoidModel& m);
// Locally computed f_t, f_b from a view (the counting identity).
std::pair<std::int64_t, std::int64_t> local_f_values(const NodeView& v);

// ---- dispatch ----
Verifier verifier_for(SchemeTag tag);
// Converts the model as needed (e.g. interval model -> clique path).
Certs prove_from_model(SchemeTag tag, const Graph& g, const GeometricModel& m);
// Finds a witness with the desk-scale searches; InvalidWitness when none exists.
Certs prove_from_graph(SchemeTag tag, const Graph& g);

}  // namespace lcert
