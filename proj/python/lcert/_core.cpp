#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "json.hpp"
#include "lcert/harness.hpp"
#include "lcert/models.hpp"
#include "lcert/schemes.hpp"

namespace py = pybind11;
using namespace lcert;

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

Graph make_graph(int n, const EdgeList& edges, const std::optional<std::vector<Id>>& ids) {
    std::vector<NodePair> es;
    es.reserve(edges.size());
    for (auto [u, v] : edges) es.push_back({u, v});
    return build_graph(n, es, ids);
}

SchemeTag tag_of(const std::string& s) {
    auto t = parse_scheme(s);
    if (!t) throw Error(ErrorKind::UnknownScheme, s);
    return *t;
}

py::dict report_dict(const RunReport& r) {
    py::dict d;
    d["scheme"] = r.scheme;
    d["n"] = r.n;
    d["verdict"] = r.verdict();
    d["all_accept"] = r.all_accept;
    d["rejecting_ids"] = r.rejecting_ids;
    d["max_cert_bits"] = r.max_cert_bits;
    d["seed"] = r.seed;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Proof-labeling schemes for geometric graph classes";
    static py::exception<Error> err(m, "LcertError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(err, e.what());
        }
    });

    m.def("schemes", [] {
        std::vector<std::string> out;
        for (auto t : kAllSchemes) out.emplace_back(scheme_name(t));
        return out;
    });

    m.def(
        "prove",
        [](const std::string& scheme, int n, const EdgeList& edges, std::optional<std::vector<Id>> ids,
           std::optional<std::string> model) {
            auto t = tag_of(scheme);
            auto g = make_graph(n, edges, ids);
            auto c = model ? prove_from_model(t, g, parse_model(*model)) : prove_from_graph(t, g);
            return certs_to_json(scheme, g, c);
        },
        py::arg("scheme"), py::arg("n"), py::arg("edges"), py::arg("ids") = py::none(), py::arg("model") = py::none(),
        "Certificates as JSON text; searches for a witness when no model text is given.");

    m.def(
        "verify",
        [](const std::string& scheme, int n, const EdgeList& edges, const std::string& certs,
           std::optional<std::vector<Id>> ids, std::uint64_t seed, bool shuffle) {
            auto t = tag_of(scheme);
            auto g = make_graph(n, edges, ids);
            return report_dict(run_pls(g, certs_from_json(certs), verifier_for(t), {scheme, seed, shuffle}));
        },
        py::arg("scheme"), py::arg("n"), py::arg("edges"), py::arg("certs"), py::arg("ids") = py::none(),
        py::arg("seed") = 0, py::arg("shuffle") = false);

    m.def(
        "oracle",
        [](int n, const EdgeList& edges) {
            auto g = make_graph(n, edges, std::nullopt);
            py::dict d;
            d["chordal"] = is_chordal(g).has_value();
            d["interval"] = is_interval(g);
            d["proper-interval"] = is_proper_interval(g);
            d["trapezoid"] = to_string(trapezoid_membership_fixture(g));
            if (n <= kOrderingSearchCap) {
                d["proper-circular-arc"] = search_ordering(g, OrderingProperty::CircularlyCompatible).has_value();
                d["circular-arc"] = search_ordering(g, OrderingProperty::QuasiCircular).has_value();
            }
            return d;
        },
        py::arg("n"), py::arg("edges"));

    m.def(
        "generate",
        [](const std::string& scheme, int n, std::uint64_t seed) {
            auto [g, model] = random_model(tag_of(scheme), n, seed);
            EdgeList es;
            for (auto e : g.edges()) es.emplace_back(e.u, e.v);
            return py::make_tuple(g.n(), es, g.ids(), format_model(model));
        },
        py::arg("scheme"), py::arg("n"), py::arg("seed") = 0, "Returns (n, edges, ids, model_text).");

    m.def(
        "bits",
        [](const std::string& scheme, const std::vector<int>& ns, std::uint64_t seed) {
            return nlohmann::json::parse(bits_to_json(tag_of(scheme), bits_table(tag_of(scheme), ns, seed))).dump();
        },
        py::arg("scheme"), py::arg("ns"), py::arg("seed") = 0, "Bit-size table as JSON text.");

    m.def(
        "corrupt",
        [](int n, const EdgeList& edges, const std::string& certs, const std::string& strategy, std::uint64_t seed,
           std::optional<std::vector<Id>> ids) {
            auto s = parse_corruption(strategy);
            if (!s) throw Error(ErrorKind::ParseError, "unknown corruption " + strategy);
            auto g = make_graph(n, edges, ids);
            std::string scheme;
            auto c = certs_from_json(certs, &scheme);
            return certs_to_json(scheme, g, lcert::corrupt(c, *s, seed, g.n()));
        },
        py::arg("n"), py::arg("edges"), py::arg("certs"), py::arg("strategy"), py::arg("seed") = 0,
        py::arg("ids") = py::none());
}
