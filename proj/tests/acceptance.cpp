// Acceptance gate: one self-contained check per release criterion, each with
// a wall-clock budget pinned next to it. Prints one pass/fail line per
// criterion and exits nonzero if any of them fail. Run it from anywhere; the
// only external dependency is the command-line binary (CLI_PATH) used by the
// determinism criterion.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "starfactor/canonical.hpp"
#include "starfactor/classifier.hpp"
#include "starfactor/graph.hpp"
#include "starfactor/graph6.hpp"
#include "starfactor/search.hpp"
#include "starfactor/star_factor.hpp"
#include "starfactor/uniformity.hpp"
#include "starfactor/weighting.hpp"

using namespace starfactor;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

bool contains_iso(const std::vector<CensusEntry>& entries, const Graph& g) {
    return std::any_of(entries.begin(), entries.end(),
                       [&](const CensusEntry& e) { return are_isomorphic(e.graph, g); });
}

bool spectrum_has(const std::vector<Rat>& spectrum, int value) {
    return std::find(spectrum.begin(), spectrum.end(), Rat(value)) != spectrum.end();
}

// --- criterion 1: the cycle family is classified exactly -------------------

Outcome cycles_classified() {
    Constraints slice;
    slice.min_degree = 2;
    slice.girth_exact = 3;
    std::vector<Graph> members;
    for (const CensusEntry& e : census_uniform(7, slice)) members.push_back(e.graph);
    const Catalog catalog = Catalog::with_girth3(members);

    for (int n = 3; n <= 12; ++n) {
        const Graph c = fixtures::cycle(n);
        const bool expect = n == 3 || n == 4 || n == 5 || n == 7;
        if (is_uniform(c).uniform != expect)
            return {false, "wrong uniformity verdict for the " + std::to_string(n) + "-cycle"};
        const Classification cls = classify(c, catalog);
        if ((cls.status == MembershipStatus::InU) != expect)
            return {false, "classifier disagrees on the " + std::to_string(n) + "-cycle"};
        if ((n == 5 || n == 7) && cls.method != Method::Theorem1)
            return {false, "high-girth cycle not decided by the girth>=5 characterization"};
        if (n == 3 && cls.method != Method::Theorem2Catalog)
            return {false, "triangle not decided by the girth-3 catalog"};
        if (n == 4 && cls.scope != Scope::OutsideCharacterization)
            return {false, "4-cycle not flagged as outside the characterized territory"};
    }
    return {true, "cycles n=3..12 uniform exactly for n in {3,4,5,7}, classifier agrees"};
}

// --- criterion 2: the girth >= 5 census is {C5, C7} ------------------------

Outcome high_girth_census() {
    Constraints c;
    c.min_degree = 2;
    c.girth_min = 5;
    CensusOptions options;
    options.jobs = 1;  // budget is for a single-threaded run
    const auto entries = census_uniform(9, c, options);
    if (entries.size() != 2)
        return {false, "expected 2 members, found " + std::to_string(entries.size())};
    if (!contains_iso(entries, fixtures::cycle(5)) || !contains_iso(entries, fixtures::cycle(7)))
        return {false, "members are not the 5-cycle and the 7-cycle"};
    return {true, "exactly {C5, C7} up to n=9, single-threaded"};
}

// --- criterion 3: the girth-3 catalog is reconstructed ---------------------

Outcome girth3_catalog(double* fallback_seconds) {
    Constraints c;
    c.min_degree = 2;
    c.girth_exact = 3;
    CensusOptions options;
    options.jobs = 4;
    const auto entries = census_uniform(9, c, options);
    if (entries.size() != 5)
        return {false, "expected 5 members, found " + std::to_string(entries.size())};
    if (!contains_iso(entries, fixtures::cycle(3)))
        return {false, "triangle missing from the census"};
    if (!contains_iso(entries, fixtures::house()))
        return {false, "house graph missing from the census"};
    std::vector<Graph> members;
    for (const CensusEntry& e : entries) members.push_back(e.graph);
    const CatalogVerification v = verify_catalog(Catalog::with_girth3(members));
    if (!v.ok) return {false, "catalog verification failed: " + v.issues.front()};

    // Documented fallback: stopping at n=8 must already find every member
    // with at most 8 vertices (all five, as it happens), well under budget.
    const auto start = std::chrono::steady_clock::now();
    const auto fallback = census_uniform(8, c, options);
    *fallback_seconds = seconds_since(start);
    if (fallback.size() != entries.size())
        return {false, "n_max=8 fallback found " + std::to_string(fallback.size()) + " members"};
    for (std::size_t i = 0; i < fallback.size(); ++i)
        if (to_graph6(fallback[i].graph) != to_graph6(entries[i].graph))
            return {false, "n_max=8 fallback disagrees with the full run"};
    if (*fallback_seconds >= 120.0)
        return {false, "n_max=8 fallback took " + fmt(*fallback_seconds) + "s (budget 120s)"};
    return {true, "5 classes incl. triangle and house; catalog verifies; n_max=8 fallback in " +
                      fmt(*fallback_seconds) + "s"};
}

// --- criterion 4: the mixed-book family's weight gap ------------------------

Outcome book_weight_gap() {
    for (int k = 3; k <= 6; ++k) {
        const Graph g = fixtures::mixed_book(k);
        const UniformityReport report = is_uniform(g, {.full = true});
        if (!spectrum_has(report.spectrum, k) || !spectrum_has(report.spectrum, 2 * k - 3))
            return {false, "spectrum of the k=" + std::to_string(k) +
                               " book misses a predicted weight"};
        if (report.uniform != (k == 3))
            return {false, "wrong uniformity verdict for the k=" + std::to_string(k) + " book"};
    }
    return {true, "spectra contain {k, 2k-3} for k=3..6; uniform only at k=3"};
}

// --- criterion 5: deletion monotonicity and the local detectors -------------

Outcome lemma_properties() {
    std::uint64_t deletions = 0, detector_hits = 0;
    std::mt19937 rng(20260818u);
    for (int n = 1; n <= 7; ++n) {
        Constraints c;
        c.n = n;
        for (const Graph& g : enumerate_graphs(c)) {
            const UniformityReport report = is_uniform(g);
            if (lemma2_witness(g)) {
                ++detector_hits;
                if (report.uniform)
                    return {false, "stem-triangle detector fired on a uniform graph (n=" +
                                       std::to_string(n) + ")"};
            }
            if (lemma3_violation(g)) {
                ++detector_hits;
                if (report.uniform)
                    return {false, "branch-triangle detector fired on a uniform graph (n=" +
                                       std::to_string(n) + ")"};
            }
            if (!report.uniform) continue;

            // Uniformity survives any edge deletion that leaves no vertex
            // isolated: exhaustive over subsets at n <= 6, sampled at n = 7.
            const std::vector<Edge>& edges = g.edges();
            const int m = static_cast<int>(edges.size());
            auto check_mask = [&](std::uint32_t mask) -> bool {
                std::vector<Edge> chosen;
                for (int b = 0; b < m; ++b)
                    if (mask >> b & 1u) chosen.push_back(edges[static_cast<std::size_t>(b)]);
                const EdgeDeletion del = delete_edges(g, EdgeSet(std::move(chosen)));
                if (!del.isolated.empty()) return true;  // outside the lemma's scope
                ++deletions;
                return is_uniform(del.graph).uniform;
            };
            if (n <= 6) {
                for (std::uint32_t mask = 1; mask < (1u << m); ++mask)
                    if (!check_mask(mask))
                        return {false, "uniformity lost after an edge deletion (n=" +
                                           std::to_string(n) + ")"};
            } else {
                std::uniform_int_distribution<std::uint32_t> dist(1, (1u << m) - 1);
                for (int trial = 0; trial < 1000; ++trial)
                    if (!check_mask(dist(rng)))
                        return {false, "uniformity lost after a sampled edge deletion (n=7)"};
            }
        }
    }
    return {true, std::to_string(deletions) + " isolated-free deletions preserved uniformity; " +
                      std::to_string(detector_hits) + " detector hits all non-uniform"};
}

// --- criterion 6: enumerator equals the brute-force oracle ------------------

Outcome enumerator_oracle() {
    std::uint64_t graphs = 0;
    for (int n = 0; n <= 6; ++n) {
        Constraints c;
        c.n = n;
        c.connected = false;
        for (const Graph& g : enumerate_graphs(c)) {
            if (g.edge_count() > 14) continue;
            ++graphs;
            std::vector<EdgeSet> mine;
            for (const StarFactor& f : enumerate_star_factors(g)) mine.push_back(f.edges);
            std::sort(mine.begin(), mine.end());
            if (mine != oracles::all_star_factors_naive(g))
                return {false, "factor lists differ on an n=" + std::to_string(n) + " graph"};
        }
    }
    return {true, "factor lists match the subset filter on all " + std::to_string(graphs) +
                      " graphs (n<=6, m<=14)"};
}

// --- criterion 7: weighting solver verdicts and certificates ----------------

Outcome weighting_solver(double* slowest_call) {
    *slowest_call = 0.0;
    auto solve_timed = [&](const Graph& g) {
        const auto start = std::chrono::steady_clock::now();
        WeightingSolution s = solve_uniform_weighting(g);
        *slowest_call = std::max(*slowest_call, seconds_since(start));
        if (s.weights) {  // every certificate must actually equalize the weights
            const auto [ok, witness] = is_uniform_weighted(g, Weighting(g, *s.weights));
            if (!ok) s.status = WeightingSolution::Status::NoFactor;  // poison: caller rejects
        }
        return s;
    };

    if (solve_timed(fixtures::cycle(6)).status != WeightingSolution::Status::Infeasible)
        return {false, "6-cycle not reported infeasible"};
    const WeightingSolution c5 = solve_timed(fixtures::cycle(5));
    if (c5.status != WeightingSolution::Status::Feasible ||
        *c5.weights != std::vector<Rat>(5, Rat(1)))
        return {false, "5-cycle missing the all-ones certificate"};
    for (const Graph& g : {fixtures::star(3), fixtures::star(5), fixtures::path(3)}) {
        const WeightingSolution s = solve_timed(g);
        if (s.status != WeightingSolution::Status::Feasible ||
            s.kernel_dimension != g.edge_count())
            return {false, "single-factor graph lacks a full kernel"};
    }
    const WeightingSolution house = solve_timed(fixtures::house());
    if (house.status != WeightingSolution::Status::Feasible)
        return {false, "house graph not feasible"};
    if (*slowest_call >= 1.0)
        return {false, "slowest solver call took " + fmt(*slowest_call) + "s (budget 1s each)"};
    return {true, "verdicts and re-verified certificates correct; slowest call " +
                      fmt(*slowest_call) + "s"};
}

// --- criterion 8: census output is byte-identical across worker counts ------

Outcome census_determinism() {
    const auto dir = std::filesystem::temp_directory_path() /
                     ("starfactor_accept_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    const auto run = [&](int jobs, const std::filesystem::path& out) {
        const std::string cmd = "\"" + std::string(CLI_PATH) +
                                "\" census --n-max 8 --girth 3 --min-degree 2 --jobs " +
                                std::to_string(jobs) + " --out \"" + out.string() +
                                "\" > /dev/null 2>&1";
        const int status = std::system(cmd.c_str());
        return WIFEXITED(status) && WEXITSTATUS(status) == 0;
    };
    const auto slurp = [](const std::filesystem::path& p) {
        std::ifstream f(p, std::ios::binary);
        std::ostringstream buf;
        buf << f.rdbuf();
        return buf.str();
    };
    const auto serial = dir / "census_jobs1.g6";
    const auto parallel = dir / "census_jobs4.g6";
    if (!run(1, serial) || !run(4, parallel)) return {false, "a census run exited nonzero"};
    const std::string a = slurp(serial), b = slurp(parallel);
    if (a.empty() || a != b) return {false, "census files differ between worker counts"};
    return {true, "--jobs 1 and --jobs 4 census files are byte-identical"};
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        double budget_seconds;
        std::function<Outcome()> run;
    };

    double fallback_seconds = 0.0, slowest_call = 0.0;
    const std::vector<Criterion> criteria = {
        {1, 1.0, cycles_classified},
        {2, 300.0, high_girth_census},
        {3, 1800.0, [&] { return girth3_catalog(&fallback_seconds); }},
        {4, 1.0, book_weight_gap},
        {5, 600.0, lemma_properties},
        {6, 300.0, enumerator_oracle},
        {7, 10.0, [&] { return weighting_solver(&slowest_call); }},
        {8, 600.0, census_determinism},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double elapsed = seconds_since(start);
        if (outcome.pass && elapsed >= c.budget_seconds) {
            outcome.pass = false;
            outcome.detail = "took " + fmt(elapsed) + "s (budget " + fmt(c.budget_seconds) + "s)";
        }
        if (!outcome.pass) ++failures;
        std::printf("criterion %d: %s (%ss) - %s\n", c.id, outcome.pass ? "pass" : "fail",
                    fmt(elapsed).c_str(), outcome.detail.c_str());
        std::fflush(stdout);
    }
    if (failures == 0) {
        std::printf("acceptance: all %zu criteria passed\n", criteria.size());
    } else {
        std::printf("acceptance: %d of %zu criteria FAILED\n", failures, criteria.size());
    }
    return failures == 0 ? 0 : 1;
}
