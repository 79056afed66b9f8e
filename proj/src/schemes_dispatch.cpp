#include <algorithm>

#include "lcert/schemes.hpp"

namespace lcert {

namespace {

[[noreturn]] void wrong_model(SchemeTag tag, const GeometricModel& m) {
    throw Error(ErrorKind::InvalidWitness, "a " + model_class(m) + " model does not certify " +
                                               std::string(scheme_name(tag)));
}

ArcModel intervals_as_arcs(const IntervalModel& m) {
    ArcModel a;
    int hi = 0;
    for (auto& x : m.iv) {
        a.arcs.push_back({x.b, x.a});
        hi = std::max(hi, x.b);
    }
    a.span = hi + 1;  // leaves an uncovered slot
    a.proper = m.proper;
    return a;
}

std::vector<int> interval_left_order(const IntervalModel& m) {
    std::vector<int> order(m.iv.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return m.iv[x].a < m.iv[y].a; });
    return order;
}

void check_interval_model(const IntervalModel& m, const Graph& g) {
    bool ok = false;
    try {
        ok = validate_interval_model(m, g);
    } catch (const Error& e) {
        throw Error(ErrorKind::InvalidWitness, e.what());
    }
    if (!ok) throw Error(ErrorKind::InvalidWitness, "interval model does not match the graph");
}

void check_arc_model(const ArcModel& m, const Graph& g) {
    bool ok = false;
    try {
        ok = validate_arc_model(m, g);
    } catch (const Error& e) {
        throw Error(ErrorKind::InvalidWitness, e.what());
    }
    if (!ok) throw Error(ErrorKind::InvalidWitness, "arc model does not match the graph");
}

}  // namespace

Verifier verifier_for(SchemeTag tag) {
    switch (tag) {
        case SchemeTag::ProperInterval: return proper_interval_verify;
        case SchemeTag::Chordal: return chordal_verify;
        case SchemeTag::Interval: return interval_verify;
        case SchemeTag::ProperCircularArc: return proper_circ_verify;
        case SchemeTag::CircularArc: return circ_verify;
        case SchemeTag::Trapezoid: return trapezoid_verify;
        case SchemeTag::Permutation: return permutation_verify;
    }
    throw Error(ErrorKind::UnknownScheme, "unknown scheme tag");
}

Certs prove_from_model(SchemeTag tag, const Graph& g, const GeometricModel& m) {
    switch (tag) {
        case SchemeTag::ProperInterval:
            if (auto* iv = std::get_if<IntervalModel>(&m)) {
                check_interval_model(*iv, g);
                return proper_interval_prove(g, {interval_left_order(*iv), OrderingProperty::ProperInterval});
            }
            break;
        case SchemeTag::Chordal:
            if (auto* t = std::get_if<CliqueTree>(&m)) return chordal_prove(g, *t);
            if (auto* iv = std::get_if<IntervalModel>(&m)) {
                check_interval_model(*iv, g);
                return chordal_prove(g, clique_path_from_intervals(*iv));
            }
            break;
        case SchemeTag::Interval:
            if (auto* iv = std::get_if<IntervalModel>(&m)) {
                check_interval_model(*iv, g);
                return interval_prove(g, clique_path_from_intervals(*iv));
            }
            if (auto* t = std::get_if<CliqueTree>(&m)) return interval_prove(g, *t);
            break;
        case SchemeTag::ProperCircularArc:
            if (auto* a = std::get_if<ArcModel>(&m)) return proper_circ_prove(g, std::nullopt, *a);
            if (auto* iv = std::get_if<IntervalModel>(&m)) return proper_circ_prove(g, std::nullopt, intervals_as_arcs(*iv));
            break;
        case SchemeTag::CircularArc:
            if (auto* a = std::get_if<ArcModel>(&m)) {
                check_arc_model(*a, g);
                return circ_prove(g, {left_endpoint_order(*a), OrderingProperty::QuasiCircular});
            }
            if (auto* iv = std::get_if<IntervalModel>(&m)) {
                check_interval_model(*iv, g);
                return circ_prove(g, {interval_left_order(*iv), OrderingProperty::QuasiCircular});
            }
            break;
        case SchemeTag::Trapezoid:
            if (auto* t = std::get_if<TrapezoidModel>(&m)) return trapezoid_prove(g, *t);
            if (auto* p = std::get_if<PermutationModel>(&m)) {
                bool ok = false;
                try {
                    ok = validate_permutation_model(*p, g);
                } catch (const Error& e) {
                    throw Error(ErrorKind::InvalidWitness, e.what());
                }
                if (!ok) throw Error(ErrorKind::InvalidWitness, "permutation model does not match the graph");
                return trapezoid_prove(g, permutation_to_consecutive_trapezoid(*p));
            }
            break;
        case SchemeTag::Permutation:
            if (auto* p = std::get_if<PermutationModel>(&m)) return permutation_prove(g, *p);
            if (auto* t = std::get_if<TrapezoidModel>(&m); t && t->consecutive) {
                PermutationModel p;
                try {
                    p = consecutive_trapezoid_to_permutation(*t);
                } catch (const Error& e) {
                    throw Error(ErrorKind::InvalidWitness, e.what());
                }
                return permutation_prove(g, p);
            }
            break;
    }
    wrong_model(tag, m);
}

Certs prove_from_graph(SchemeTag tag, const Graph& g) {
    auto none = [&]() -> Error {
        return Error(ErrorKind::InvalidWitness, "no " + std::string(scheme_name(tag)) + " witness found");
    };
    switch (tag) {
        case SchemeTag::ProperInterval: {
            auto o = proper_interval_ordering(g);
            if (!o) throw none();
            return proper_interval_prove(g, {*o, OrderingProperty::ProperInterval});
        }
        case SchemeTag::Chordal: {
            auto peo = is_chordal(g);
            if (!peo) throw none();
            return chordal_prove(g, clique_tree_from_peo(g, *peo));
        }
        case SchemeTag::Interval: {
            auto t = clique_path_search(g);
            if (!t) throw none();
            return interval_prove(g, *t);
        }
        case SchemeTag::ProperCircularArc: {
            if (g.n() <= 6) {
                auto a = brute_proper_arc_model(g);
                if (!a) throw none();
                return proper_circ_prove(g, std::nullopt, *a);
            }
            auto w = search_ordering(g, OrderingProperty::CircularlyCompatible);
            if (!w) throw none();
            return proper_circ_prove(g, std::nullopt, arc_model_from_ordering(g, w->order));
        }
        case SchemeTag::CircularArc: {
            auto w = search_ordering(g, OrderingProperty::QuasiCircular);
            if (!w) throw none();
            return circ_prove(g, *w);
        }
        case SchemeTag::Trapezoid: {
            auto p = permutation_model_search(g);
            if (!p) throw none();
            return trapezoid_prove(g, permutation_to_consecutive_trapezoid(*p));
        }
        case SchemeTag::Permutation: {
            auto p = permutation_model_search(g);
            if (!p) throw none();
            return permutation_prove(g, *p);
        }
    }
    throw Error(ErrorKind::UnknownScheme, "unknown scheme tag");
}

}  // namespace lcert
