#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lcert/harness.hpp"
#include "lcert/models.hpp"
#include "lcert/schemes.hpp"

using namespace lcert;
using json = nlohmann::json;

namespace {

enum Exit { kAccept = 0, kReject = 1, kUsage = 2, kWitness = 3 };

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty() || out == "-") {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(out);
    if (!f) throw Error(ErrorKind::ParseError, "cannot write " + out);
    f << text;
}

SchemeTag scheme_of(const std::string& s) {
    auto t = parse_scheme(s);
    if (!t) throw Error(ErrorKind::UnknownScheme, s);
    return *t;
}

int cmd_gen(const std::string& cls, int n, std::uint64_t seed, const std::string& out) {
    auto tag = scheme_of(cls);
    auto [g, m] = random_model(tag, n, seed);
    std::filesystem::create_directories(out);
    auto stem = std::filesystem::path(out) / (cls + "_n" + std::to_string(n) + "_s" + std::to_string(seed));
    emit(format_edge_list(g), stem.string() + ".graph");
    emit(format_model(m), stem.string() + ".model");
    std::cout << stem.string() << ".graph\n" << stem.string() << ".model\n";
    return kAccept;
}

int cmd_prove(const std::string& scheme, const std::string& graph, const std::string& model, const std::string& out) {
    auto tag = scheme_of(scheme);
    Graph g = parse_edge_list(slurp(graph));
    Certs c = model.empty() ? prove_from_graph(tag, g) : prove_from_model(tag, g, parse_model(slurp(model)));
    emit(certs_to_json(scheme, g, c), out);
    return kAccept;
}

int cmd_verify(const std::string& scheme, const std::string& graph, const std::string& certs, std::uint64_t seed,
               bool shuffle, const std::string& format, const std::string& out) {
    auto tag = scheme_of(scheme);
    Graph g = parse_edge_list(slurp(graph));
    RunReport r;
    try {
        Certs c = certs_from_json(slurp(certs));
        r = run_pls(g, c, verifier_for(tag), {scheme, seed, shuffle});
    } catch (const Error& e) {
        // unreadable or mismatched certificates are a rejection, not a crash
        r.scheme = scheme;
        r.n = g.n();
        r.seed = seed;
        r.all_accept = false;
        r.rejecting_ids = g.ids();
        std::sort(r.rejecting_ids.begin(), r.rejecting_ids.end());
        r.diagnostics.push_back(e.what());
    }
    emit(format == "csv" ? RunReport::csv_header() + "\n" + r.to_csv_row() : r.to_json(), out);
    for (auto& d : r.diagnostics) std::cerr << d << '\n';
    return r.all_accept ? kAccept : kReject;
}

int cmd_oracle(const std::string& graph, const std::string& out) {
    Graph g = parse_edge_list(slurp(graph));
    json j;
    j["n"] = g.n();
    j["chordal"] = is_chordal(g).has_value();
    j["interval"] = is_interval(g);
    j["proper-interval"] = is_proper_interval(g);
    auto opt = [&](auto f) -> json {
        try {
            return f();
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::TooLarge) return "unknown";
            throw;
        }
    };
    j["proper-circular-arc"] =
        opt([&] { return search_ordering(g, OrderingProperty::CircularlyCompatible).has_value(); });
    j["circular-arc"] = opt([&] { return search_ordering(g, OrderingProperty::QuasiCircular).has_value(); });
    j["permutation"] = opt([&] { return permutation_model_search(g).has_value(); });
    j["trapezoid"] = to_string(trapezoid_membership_fixture(g));
    emit(j.dump(2), out);
    return kAccept;
}

int cmd_fuzz(const std::string& scheme, const std::string& fixture, long iters, std::uint64_t seed,
             const std::vector<std::string>& mix_names, const std::string& out) {
    std::vector<Corruption> mix;
    for (auto& m : mix_names) {
        auto c = parse_corruption(m);
        if (!c) throw Error(ErrorKind::ParseError, "unknown corruption " + m);
        mix.push_back(*c);
    }
    if (mix.empty()) mix.assign(std::begin(kAllCorruptions), std::end(kAllCorruptions));
    if (iters <= 0) throw Error(ErrorKind::BadIndex, "iterations must be positive");
    std::vector<FuzzResult> rs;
    if (!fixture.empty()) {
        if (scheme.empty()) throw Error(ErrorKind::ParseError, "--fixture needs --scheme");
        rs.push_back(fuzz_pair(builtin_fixtures().get(fixture), scheme_of(scheme), iters, seed, mix));
    } else {
        for (auto& p : soundness_pairs())
            if (scheme.empty() || scheme_name(p.scheme) == scheme)
                rs.push_back(fuzz_pair(builtin_fixtures().get(p.fixture), p.scheme, iters, seed, mix));
    }
    emit(fuzz_to_json(rs), out);
    for (auto& r : rs)
        if (r.accepts) return kReject;
    return kAccept;
}

int cmd_bits(const std::string& scheme, const std::vector<int>& ns, std::uint64_t seed, const std::string& format,
             const std::string& out) {
    std::vector<SchemeTag> tags;
    if (scheme.empty())
        tags.assign(kAllSchemes.begin(), kAllSchemes.end());
    else
        tags.push_back(scheme_of(scheme));
    std::string text;
    json arr = json::array();
    bool ok = true;
    for (auto t : tags) {
        auto rows = bits_table(t, ns, seed);
        for (auto& r : rows) ok = ok && r.within;
        if (format == "csv") {
            auto csv = bits_to_csv(t, rows);
            text += text.empty() ? csv : csv.substr(csv.find('\n') + 1);
        } else {
            arr.push_back(json::parse(bits_to_json(t, rows)));
        }
    }
    emit(format == "csv" ? text : arr.dump(2), out);
    return ok ? kAccept : kReject;
}

int cmd_report(const std::string& scheme, int instances, int n_lo, int n_hi, std::uint64_t seed,
               const std::string& out) {
    std::vector<SweepResult> rs;
    for (auto t : kAllSchemes) {
        if (!scheme.empty() && scheme_name(t) != scheme) continue;
        CampaignConfig c;
        c.scheme = t;
        c.instances = instances;
        c.n_lo = n_lo;
        c.n_hi = n_hi;
        c.seed = seed;
        rs.push_back(completeness_sweep(c));
    }
    if (rs.empty()) throw Error(ErrorKind::UnknownScheme, scheme);
    emit(sweep_to_json(rs), out);
    for (auto& r : rs)
        if (r.accepts != r.runs) return kReject;
    return kAccept;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Local certification of geometric graph classes"};
    app.require_subcommand(1);
    std::string scheme, graph, model, certs, out, format = "json", fixture;
    int n = 0, instances = 200, n_lo = 4, n_hi = 48;
    std::uint64_t seed = 0;
    long iters = 100000;
    bool shuffle = false;
    std::vector<int> ns{16, 64, 256, 1024, 4096};
    std::vector<std::string> mix;

    auto* gen = app.add_subcommand("gen", "sample a yes-instance and its model");
    gen->add_option("--class,--scheme", scheme, "graph class")->required();
    gen->add_option("--n", n, "node count")->required()->check(CLI::PositiveNumber);
    gen->add_option("--seed", seed);
    gen->add_option("--out", out, "output directory")->required();

    auto* prove = app.add_subcommand("prove", "write certificates for a graph");
    prove->add_option("--scheme", scheme)->required();
    prove->add_option("--graph", graph)->required();
    prove->add_option("--model", model, "model file; omitted: search for a witness");
    prove->add_option("--out", out);

    auto* verify = app.add_subcommand("verify", "run one verification round");
    verify->add_option("--scheme", scheme)->required();
    verify->add_option("--graph", graph)->required();
    verify->add_option("--certs", certs)->required();
    verify->add_option("--seed", seed);
    verify->add_flag("--shuffle", shuffle, "adversarial neighbour order drawn from the seed");
    verify->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    verify->add_option("--out", out);

    auto* oracle = app.add_subcommand("oracle", "centralized class membership");
    oracle->add_option("--graph", graph)->required();
    oracle->add_option("--out", out);

    auto* fuzz = app.add_subcommand("fuzz", "soundness campaign over registered no-instances");
    fuzz->add_option("--scheme", scheme);
    fuzz->add_option("--fixture", fixture);
    fuzz->add_option("--iters", iters);
    fuzz->add_option("--seed", seed);
    fuzz->add_option("--mix", mix, "corruption strategies");
    fuzz->add_option("--out", out);

    auto* bits = app.add_subcommand("bits", "certificate size against the declared bound");
    bits->add_option("--scheme", scheme);
    bits->add_option("--n", ns);
    bits->add_option("--seed", seed);
    bits->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    bits->add_option("--out", out);

    auto* report = app.add_subcommand("report", "completeness sweep over generated yes-instances");
    report->add_option("--scheme", scheme);
    report->add_option("--instances", instances)->check(CLI::PositiveNumber);
    report->add_option("--n-lo", n_lo);
    report->add_option("--n-hi", n_hi);
    report->add_option("--seed", seed);
    report->add_option("--out", out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kUsage;
    }

    try {
        if (*gen) return cmd_gen(scheme, n, seed, out);
        if (*prove) return cmd_prove(scheme, graph, model, out);
        if (*verify) return cmd_verify(scheme, graph, certs, seed, shuffle, format, out);
        if (*oracle) return cmd_oracle(graph, out);
        if (*fuzz) return cmd_fuzz(scheme, fixture, iters, seed, mix, out);
        if (*bits) return cmd_bits(scheme, ns, seed, format, out);
        if (*report) return cmd_report(scheme, instances, n_lo, n_hi, seed, out);
    } catch (const Error& e) {
        std::cerr << e.what() << '\n';
        return e.kind() == ErrorKind::InvalidWitness ? kWitness : kUsage;
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
