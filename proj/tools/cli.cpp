// Command-line front end: JSON-lines reports over graph6/edge-list input.
//
// Exit codes: 0 success; 2 bad input or bad arguments (error JSON on
// stderr); 3 census result disagrees with the expected girth-3 member count
// (output is still written).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "starfactor/classifier.hpp"
#include "starfactor/graph.hpp"
#include "starfactor/graph6.hpp"
#include "starfactor/search.hpp"
#include "starfactor/star_factor.hpp"
#include "starfactor/uniformity.hpp"
#include "starfactor/weighting.hpp"

#ifndef STARFACTOR_VERSION
#define STARFACTOR_VERSION "0.0.0"
#endif

namespace {

using json = nlohmann::ordered_json;
using namespace starfactor;

[[noreturn]] void fail(const std::string& message) {
    std::cerr << json{{"error", message}}.dump() << "\n";
    std::exit(2);
}

std::string trimmed(const std::string& line) {
    const auto first = line.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return {};
    const auto last = line.find_last_not_of(" \t\r\n");
    return line.substr(first, last - first + 1);
}

struct InputOptions {
    std::string format = "graph6";
    bool strict = false;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
    cmd->add_option("--format", in.format, "Input format: graph6 (one graph per line) or edgelist (whole stdin is one graph)")
        ->check(CLI::IsMember({"graph6", "edgelist"}))
        ->capture_default_str();
    cmd->add_flag("--strict-g6", in.strict, "Reject graph6 lines with nonzero padding bits");
}

// Reads all graphs from stdin according to the input options. Each graph is
// paired with its graph6 form, which every report echoes back.
std::vector<std::pair<Graph, std::string>> read_graphs(const InputOptions& in) {
    std::vector<std::pair<Graph, std::string>> out;
    if (in.format == "edgelist") {
        std::stringstream buffer;
        buffer << std::cin.rdbuf();
        try {
            Graph g = parse_edge_list(buffer.str());
            std::string echo = to_graph6(g);
            out.emplace_back(std::move(g), std::move(echo));
        } catch (const std::exception& e) {
            fail(std::string("edge list: ") + e.what());
        }
        return out;
    }
    std::string line;
    int lineno = 0;
    while (std::getline(std::cin, line)) {
        ++lineno;
        const std::string body = trimmed(line);
        if (body.empty() || body[0] == '#') continue;
        try {
            Graph g = parse_graph6(body, {.strict = in.strict});
            std::string echo = to_graph6(g);
            out.emplace_back(std::move(g), std::move(echo));
        } catch (const std::exception& e) {
            fail("stdin line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

json girth_json(const Graph& g) {
    const Girth gi = girth(g);
    if (gi.is_finite()) return gi.length();
    return "infinity";
}

// Structural fields shared by every per-graph report.
json stats_json(const Graph& g, const std::string& echo) {
    json j;
    j["input"] = echo;
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    j["girth"] = girth_json(g);
    if (g.vertex_count() == 0) {
        j["min_degree"] = nullptr;
        j["max_degree"] = nullptr;
    } else {
        j["min_degree"] = min_degree(g);
        j["max_degree"] = max_degree(g);
    }
    j["connected"] = is_connected(g);
    const auto [leaves, stems] = leaves_and_stems(g);
    j["leaves"] = leaves;
    j["stems"] = stems;
    return j;
}

json factor_json(const StarFactor& f) {
    json edges = json::array();
    for (const Edge& e : f.edges) edges.push_back({e.u, e.v});
    return json{{"edges", std::move(edges)}, {"centers", f.centers}};
}

json spectrum_json(const std::vector<Rat>& spectrum) {
    // CLI analysis is always unweighted, so every weight is a small integer.
    json arr = json::array();
    for (const Rat& w : spectrum) arr.push_back(static_cast<long long>(numerator(w)));
    return arr;
}

void emit(const json& j) {
    std::cout << j.dump() << "\n";
}

int run_analyze(const InputOptions& in, bool full) {
    for (auto& [g, echo] : read_graphs(in)) {
        json j = stats_json(g, echo);
        UniformityReport report = is_uniform(g, {.full = full});
        j["factor_exists"] = report.factor_exists;
        j["uniform"] = report.uniform;
        j["spectrum"] = spectrum_json(report.spectrum);
        if (report.factor_count) {
            j["factor_count"] = *report.factor_count;
        }
        if (report.witness) {
            j["witness"] = {{"a", factor_json(report.witness->first)},
                            {"b", factor_json(report.witness->second)}};
        }
        emit(j);
    }
    return 0;
}

int run_factors(const InputOptions& in, std::uint64_t limit, int max_star_size) {
    for (auto& [g, echo] : read_graphs(in)) {
        json j = stats_json(g, echo);
        std::optional<int> bound;
        if (max_star_size > 0) bound = max_star_size;
        StarFactorStream stream(g, bound);
        json factors = json::array();
        std::uint64_t count = 0;
        bool truncated = false;
        while (auto f = stream.next()) {
            if (limit != 0 && count == limit) {
                truncated = true;
                break;
            }
            ++count;
            json fj = factor_json(*f);
            fj["weight"] = f->edges.size();
            factors.push_back(std::move(fj));
        }
        j["factor_count"] = count;
        j["truncated"] = truncated;
        j["factors"] = std::move(factors);
        emit(j);
    }
    return 0;
}

int run_classify(const InputOptions& in, const std::string& catalog_path) {
    Catalog catalog;
    std::vector<std::pair<Graph, std::string>> graphs;
    if (!catalog_path.empty()) {
        try {
            if (catalog_path == "-") {
                catalog = load_catalog(std::cin);
            } else {
                std::ifstream file(catalog_path);
                if (!file) fail("cannot open catalog file: " + catalog_path);
                catalog = load_catalog(file);
            }
        } catch (const std::exception& e) {
            fail(std::string("catalog: ") + e.what());
        }
        const CatalogVerification v = verify_catalog(catalog);
        if (!v.ok) {
            std::string msg = "catalog failed verification:";
            for (const auto& issue : v.issues) msg += " " + issue + ";";
            fail(msg);
        }
    }
    if (catalog_path == "-") {
        // stdin was the catalog itself: classify its members.
        for (const Graph& g : catalog.girth3) graphs.emplace_back(g, to_graph6(g));
    } else {
        graphs = read_graphs(in);
    }
    for (auto& [g, echo] : graphs) {
        json j = stats_json(g, echo);
        const Classification c = classify(g, catalog);
        j["status"] = to_string(c.status);
        j["method"] = to_string(c.method);
        j["scope"] = to_string(c.scope);
        if (c.witness) {
            j["witness"] = {{"a", factor_json(c.witness->first)},
                            {"b", factor_json(c.witness->second)}};
        } else {
            j["witness"] = nullptr;
        }
        emit(j);
    }
    return 0;
}

int run_weight_solve(const InputOptions& in, std::uint64_t factor_cap) {
    for (auto& [g, echo] : read_graphs(in)) {
        json j = stats_json(g, echo);
        WeightingOptions options;
        if (factor_cap > 0) options.factor_cap = factor_cap;
        WeightingSolution s = solve_uniform_weighting(g, options);
        switch (s.status) {
            case WeightingSolution::Status::Feasible: j["status"] = "feasible"; break;
            case WeightingSolution::Status::Infeasible: j["status"] = "infeasible"; break;
            case WeightingSolution::Status::NoFactor: j["status"] = "no_factor"; break;
            case WeightingSolution::Status::TruncatedInfeasibleOnly:
                j["status"] = "truncated_infeasible_only";
                break;
        }
        j["feasible"] = s.feasible;
        if (s.weights) {
            json weights = json::array();
            for (const Rat& w : *s.weights) weights.push_back(to_string(w));
            j["weights"] = std::move(weights);
            json edges = json::array();
            for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
            j["edge_order"] = std::move(edges);
        } else {
            j["weights"] = nullptr;
        }
        j["kernel_dimension"] = s.kernel_dimension;
        j["factor_count"] = s.factor_count;
        j["truncated"] = s.truncated;
        emit(j);
    }
    return 0;
}

std::string describe_constraints(const Constraints& c) {
    std::string out = "min_degree=" + std::to_string(c.min_degree);
    if (c.girth_exact) {
        out += " girth=" + std::to_string(*c.girth_exact);
    } else if (c.girth_min) {
        out += " girth_min=" + std::to_string(*c.girth_min);
    } else {
        out += " girth=any";
    }
    out += c.connected ? " connected=true" : " connected=false";
    return out;
}

void write_census(std::ostream& out, const std::vector<CensusEntry>& entries, int n_max,
                  const Constraints& c) {
    out << "# uniform star-factor census\n";
    out << "# tool: starfactor " << STARFACTOR_VERSION << "\n";
    out << "# n_max: " << n_max << "\n";
    out << "# constraints: " << describe_constraints(c) << "\n";
    out << "# members: " << entries.size() << "\n";
    for (const CensusEntry& e : entries) out << to_graph6(e.graph) << "\n";
}

int run_census(int n_max, const Constraints& c, const CensusOptions& options,
               const std::string& out_path) {
    std::vector<CensusEntry> entries;
    try {
        entries = census_uniform(n_max, c, options);
    } catch (const std::exception& e) {
        fail(std::string("census: ") + e.what());
    }
    if (out_path.empty()) {
        write_census(std::cout, entries, n_max, c);
    } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) fail("cannot open output file: " + out_path);
        write_census(file, entries, n_max, c);
        emit(json{{"members", entries.size()},
                  {"n_max", n_max},
                  {"constraints", describe_constraints(c)},
                  {"out", out_path}});
    }
    // The characterization for this exact slice promises five members once
    // n_max reaches the largest of them. A different count means the code
    // and the theory disagree -- report it loudly.
    const bool theorem_slice = c.girth_exact && *c.girth_exact == 3 && c.min_degree == 2 &&
                               c.connected && n_max >= 9 && !options.prune_lemmas;
    if (theorem_slice && entries.size() != 5) {
        std::cerr << json{{"warning", "expected 5 members for the girth-3 slice"},
                          {"members", entries.size()}}
                         .dump()
                  << "\n";
        return 3;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"star-factor uniformity toolkit"};
    app.set_version_flag("--version", STARFACTOR_VERSION);
    app.require_subcommand(1);

    InputOptions in;

    auto* analyze = app.add_subcommand("analyze", "Structural stats plus uniformity of each input graph");
    bool analyze_full = false;
    add_input_options(analyze, in);
    analyze->add_flag("--full", analyze_full,
                      "Enumerate every star-factor (full spectrum and count) instead of stopping at the first weight difference");

    auto* factors = app.add_subcommand("factors", "List star-factors of each input graph");
    std::uint64_t factors_limit = 0;
    int max_star_size = 0;
    add_input_options(factors, in);
    factors->add_option("--limit", factors_limit, "Stop after this many factors (0 = no limit)")
        ->capture_default_str();
    factors->add_option("--max-star-size", max_star_size,
                        "Only enumerate factors whose stars have at most this many leaves (0 = no bound)")
        ->capture_default_str();

    auto* classify_cmd = app.add_subcommand("classify", "Membership in the equal-weight family");
    std::string catalog_path;
    add_input_options(classify_cmd, in);
    classify_cmd->add_option("--catalog", catalog_path,
                             "Catalog file for the girth-3 slice ('-' reads the catalog from stdin and classifies its members)");

    auto* weight = app.add_subcommand("weight-solve",
                                      "Find positive integer edge weights equalizing all star-factor weights");
    std::uint64_t factor_cap = 0;
    add_input_options(weight, in);
    weight->add_option("--factor-cap", factor_cap,
                       "Cap on enumerated factors when building the difference system (0 = default)");

    auto* census = app.add_subcommand("census", "Census of uniform graphs up to a vertex count");
    int n_max = 0;
    Constraints constraints;
    CensusOptions census_options;
    bool allow_disconnected = false;
    int girth_exact = 0;
    int girth_min = 0;
    std::string out_path;
    census->add_option("--n-max", n_max, "Largest vertex count to include")->required();
    census->add_option("--min-degree", constraints.min_degree, "Minimum degree filter")
        ->capture_default_str();
    census->add_option("--girth", girth_exact, "Exact girth filter");
    census->add_option("--girth-min", girth_min, "Minimum girth filter");
    census->add_flag("--allow-disconnected", allow_disconnected, "Include disconnected graphs");
    census->add_option("--jobs", census_options.jobs, "Worker threads")
        ->envname("STARFACTOR_JOBS")
        ->capture_default_str();
    census->add_flag("--prune-lemmas", census_options.prune_lemmas,
                     "Skip factor enumeration on graphs the local non-uniformity tests reject");
    census->add_option("--out", out_path, "Write the census to this file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return 2;
    }

    try {
        if (*analyze) return run_analyze(in, analyze_full);
        if (*factors) return run_factors(in, factors_limit, max_star_size);
        if (*classify_cmd) return run_classify(in, catalog_path);
        if (*weight) return run_weight_solve(in, factor_cap);
        if (*census) {
            if (girth_exact > 0) constraints.girth_exact = girth_exact;
            if (girth_min > 0) constraints.girth_min = girth_min;
            constraints.connected = !allow_disconnected;
            return run_census(n_max, constraints, census_options, out_path);
        }
    } catch (const std::exception& e) {
        fail(e.what());
    }
    return 0;
}
