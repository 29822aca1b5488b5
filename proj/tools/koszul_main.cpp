#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "koszul/errors.hpp"
#include "koszul/filtration.hpp"
#include "koszul/ideal.hpp"
#include "koszul/io.hpp"

namespace {

using nlohmann::json;

struct RunConfig {
    int n = 0;
    int max_degree = 3;
    std::string format = "text";
    std::string out;
    bool sweep = false;
    bool iso_only = false;
    bool decomposition = false;
    int family_bound = koszul::kDefaultFamilyBound;
};

int family_bound_from_env() {
    const char* s = std::getenv("KOSZUL_FAMILY_BOUND");
    if (!s || !*s) return koszul::kDefaultFamilyBound;
    const std::string text(s);
    try {
        size_t pos = 0;
        const int b = std::stoi(text, &pos);
        if (pos != text.size() || b < 1) throw std::invalid_argument(text);
        return b;
    } catch (const std::exception&) {
        throw koszul::input_error("KOSZUL_FAMILY_BOUND must be a positive integer, got \"" +
                                  text + "\"");
    }
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw koszul::input_error("cannot open output file: " + out_path);
    f << text;
    if (!text.empty() && text.back() != '\n') f << '\n';
}

koszul::Edge parse_edge(const std::string& text) {
    const auto dash = text.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 == text.size()) {
        throw koszul::input_error("edge must be written i-j, got \"" + text + "\"");
    }
    try {
        size_t pa = 0, pb = 0;
        const int a = std::stoi(text.substr(0, dash), &pa);
        const int b = std::stoi(text.substr(dash + 1), &pb);
        if (pa != dash || pb != text.size() - dash - 1 || a < 1 || b < 1) {
            throw std::invalid_argument(text);
        }
        return koszul::Edge(a, b);
    } catch (const koszul::input_error&) {
        throw;
    } catch (const std::exception&) {
        throw koszul::input_error("edge must be written i-j with positive vertices, got \"" +
                                  text + "\"");
    }
}

json graph_json(const koszul::Graph& g) { return json::parse(koszul::graph_to_json(g)); }
json report_json(const koszul::VerificationReport& r) {
    return json::parse(koszul::report_to_json(r));
}

int cmd_enumerate(const RunConfig& cfg) {
    const auto fam = koszul::enumerate_family(cfg.n, cfg.family_bound);
    std::vector<koszul::FamilyMember> nonempty;
    for (const auto& m : fam) {
        if (!m.graph.empty()) nonempty.push_back(m);
    }
    const auto classes = koszul::iso_classes(nonempty);

    if (cfg.format == "dot") {
        namespace fs = std::filesystem;
        const fs::path dir = cfg.out.empty() ? fs::path("gallery") : fs::path(cfg.out);
        fs::create_directories(dir);
        const int width = static_cast<int>(std::to_string(classes.size()).size());
        for (size_t t = 0; t < classes.size(); ++t) {
            std::ostringstream name;
            name << "class_" << std::setw(width) << std::setfill('0') << (t + 1) << ".dot";
            int k = 1;
            for (const auto& e : classes[t].form) k = std::max(k, e.v);
            std::ofstream f(dir / name.str());
            if (!f) throw koszul::input_error("cannot write " + (dir / name.str()).string());
            f << koszul::to_dot(koszul::Graph(k, classes[t].form));
        }
        std::cout << "family size: " << fam.size() << "\n";
        std::cout << "nonempty isomorphism classes: " << classes.size() << "\n";
        std::cout << "wrote " << classes.size() << " DOT files to " << dir.string() << "\n";
        return 0;
    }

    if (cfg.format == "json") {
        json out{{"n", cfg.n}, {"family_size", fam.size()}, {"iso_classes", classes.size()}};
        json cls = json::array();
        for (const auto& c : classes) {
            json form = json::array();
            for (const auto& e : c.form) form.push_back(json::array({e.u, e.v}));
            cls.push_back(json{{"representative", graph_json(c.representative)},
                               {"canonical_form", form},
                               {"count", c.count}});
        }
        out["classes"] = cls;
        if (!cfg.iso_only) {
            json members = json::array();
            for (const auto& m : fam) members.push_back(graph_json(m.graph));
            out["members"] = members;
        }
        emit(out.dump(2), cfg.out);
        return 0;
    }

    std::ostringstream os;
    os << "family size: " << fam.size() << "\n";
    os << "nonempty isomorphism classes: " << classes.size() << "\n";
    for (size_t t = 0; t < classes.size(); ++t) {
        os << "  class " << (t + 1) << " (count " << classes[t].count << "):";
        for (const auto& e : classes[t].form) os << " " << e.u << "-" << e.v;
        os << "\n";
    }
    emit(os.str(), cfg.out);
    return 0;
}

int cmd_verify(const RunConfig& cfg) {
    const auto descent = koszul::verify_descent_closure(cfg.n, cfg.family_bound);
    std::cerr << "descent closure: " << descent.elapsed_seconds << "s\n";
    const auto filt =
        koszul::verify_filtration(cfg.n, cfg.max_degree, cfg.sweep, cfg.family_bound);
    std::cerr << "filtration: " << filt.elapsed_seconds << "s\n";
    std::optional<koszul::VerificationReport> decomp;
    if (cfg.decomposition) {
        decomp = koszul::verify_colon_decomposition(cfg.n, cfg.max_degree, cfg.family_bound);
        std::cerr << "colon decomposition: " << decomp->elapsed_seconds << "s\n";
    }
    const bool ok = descent.verdict && filt.verdict && (!decomp || decomp->verdict);

    if (cfg.format == "json") {
        json out{{"config",
                  {{"n", cfg.n},
                   {"max_degree", cfg.max_degree},
                   {"sweep", cfg.sweep},
                   {"decomposition", cfg.decomposition},
                   {"family_bound", cfg.family_bound}}},
                 {"descent_closure", report_json(descent)},
                 {"filtration", report_json(filt)},
                 {"verdict", ok}};
        out["colon_decomposition"] = decomp ? report_json(*decomp) : json(nullptr);
        emit(out.dump(2), cfg.out);
    } else {
        std::ostringstream os;
        const auto line = [&](const char* name, const koszul::VerificationReport& r) {
            os << name << ": " << (r.verdict ? "ok" : "FAILED") << " (family " << r.family_size
               << ", steps " << r.steps.size() << ")\n";
            for (const auto& c : r.counterexamples) os << "  counterexample: " << c << "\n";
        };
        line("descent closure", descent);
        line("filtration", filt);
        if (decomp) line("colon decomposition", *decomp);
        os << "verdict: " << (ok ? "ok" : "FAILED") << "\n";
        emit(os.str(), cfg.out);
    }
    return ok ? 0 : 1;
}

int cmd_colon(const RunConfig& cfg, const std::vector<std::string>& ideal_specs,
              const std::string& by_spec) {
    std::vector<koszul::Edge> ideal_edges;
    for (const auto& s : ideal_specs) ideal_edges.push_back(parse_edge(s));
    std::vector<koszul::Multidegree> gens;
    for (const auto& e : ideal_edges) gens.push_back(koszul::edge_multidegree(e, cfg.n));
    const koszul::ColonSpec problem{
        koszul::MonomialIdeal::from_generators(cfg.n, std::move(gens)),
        parse_edge(by_spec)};
    const auto& ideal = problem.ideal;
    const auto& by = problem.divisor;

    const auto brute = koszul::colon_brute(ideal, by, cfg.n, cfg.max_degree);
    const auto brute_ideal =
        koszul::minimalize(koszul::MonomialIdeal::from_generators(cfg.n, brute));

    std::optional<koszul::MonomialIdeal> closed;
    std::optional<bool> agree;
    if (ideal_edges.size() == 1) {
        closed = koszul::colon_principal(ideal_edges.front(), by, cfg.n);
        agree = koszul::equal_up_to(*closed, brute_ideal, cfg.n, cfg.max_degree);
    }

    if (cfg.format == "json") {
        json out{{"n", cfg.n},
                 {"D", cfg.max_degree},
                 {"ideal", json::parse(koszul::ideal_to_json(ideal))},
                 {"by", json::array({by.u, by.v})},
                 {"brute_truncated", json::parse(koszul::ideal_to_json(brute_ideal))}};
        out["closed_form"] = closed ? json::parse(koszul::ideal_to_json(*closed)) : json(nullptr);
        out["agree"] = agree ? json(*agree) : json(nullptr);
        emit(out.dump(2), cfg.out);
    } else {
        std::ostringstream os;
        os << "ideal: " << koszul::ideal_to_string(ideal) << "\n";
        os << "divisor: x(" << by.u << "," << by.v << ")\n";
        if (closed) os << "closed form: " << koszul::ideal_to_string(*closed) << "\n";
        os << "brute force (degree <= " << cfg.max_degree
           << "): " << koszul::ideal_to_string(brute_ideal) << "\n";
        if (agree) {
            os << "closed form and brute force agree up to degree " << cfg.max_degree << ": "
               << (*agree ? "yes" : "NO") << "\n";
        }
        emit(os.str(), cfg.out);
    }
    return (!agree || *agree) ? 0 : 1;
}

int run(int argc, char** argv) {
    CLI::App app{
        "Exact combinatorics of the edge ring of a complete graph: family "
        "enumeration, colon ideals, filtration verification"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::vector<std::string> ideal_specs;
    std::string by_spec;

    const auto add_common = [&cfg](CLI::App* sub, bool with_degree) {
        sub->add_option("--n", cfg.n, "ambient vertex count")
            ->required()
            ->check(CLI::Range(2, 64));
        if (with_degree) {
            sub->add_option("--max-degree", cfg.max_degree, "truncation degree D")
                ->check(CLI::Range(1, 16));
        }
        sub->add_option("--out", cfg.out, "output file (directory for DOT galleries)");
    };

    auto* enumerate =
        app.add_subcommand("enumerate", "list the family and its isomorphism classes");
    add_common(enumerate, false);
    enumerate->add_option("--format", cfg.format, "json, dot or text")
        ->check(CLI::IsMember({"json", "dot", "text"}));
    enumerate->add_flag("--iso", cfg.iso_only, "restrict the JSON listing to iso classes");

    auto* verify =
        app.add_subcommand("verify", "check the filtration conditions over the family");
    add_common(verify, true);
    verify->add_option("--format", cfg.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    verify->add_flag("--sweep", cfg.sweep,
                     "probe every simplicial descent pair, not just the canonical one");
    verify->add_flag("--decomposition", cfg.decomposition,
                     "also check the per-step colon decomposition");

    auto* colon =
        app.add_subcommand("colon", "colon of an edge-generated ideal by an edge variable");
    add_common(colon, true);
    colon->add_option("--ideal", ideal_specs, "generating edges, e.g. 1-2,3-4")
        ->required()
        ->delimiter(',');
    colon->add_option("--by", by_spec, "divisor edge, e.g. 1-3")->required();
    colon->add_option("--format", cfg.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    cfg.family_bound = family_bound_from_env();
    if (app.got_subcommand(enumerate)) return cmd_enumerate(cfg);
    if (app.got_subcommand(verify)) return cmd_verify(cfg);
    return cmd_colon(cfg, ideal_specs, by_spec);
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const koszul::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const koszul::capability_error& e) {
        std::cerr << "capability error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
