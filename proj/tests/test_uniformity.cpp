#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "starfactor/search.hpp"
#include "starfactor/uniformity.hpp"

using namespace starfactor;
using fixtures::cycle;

TEST_CASE("cycles are uniform exactly for n in {3,4,5,7}") {
    const std::set<int> uniform_sizes = {3, 4, 5, 7};
    for (int n = 3; n <= 12; ++n) {
        auto report = is_uniform(cycle(n));
        CHECK(report.factor_exists);
        CHECK(report.uniform == (uniform_sizes.count(n) > 0));
        CHECK(report.witness.has_value() == !report.uniform);
    }
}

TEST_CASE("known spectra and factor counts") {
    auto c6 = is_uniform(cycle(6), {.full = true});
    CHECK(c6.spectrum == std::vector<Rat>{Rat(3), Rat(4)});
    CHECK(c6.factor_count == 5);

    auto c7 = is_uniform(cycle(7), {.full = true});
    CHECK(c7.spectrum == std::vector<Rat>{Rat(4)});
    CHECK(c7.factor_count == 7);

    auto c9 = is_uniform(cycle(9), {.full = true});
    CHECK(c9.spectrum == std::vector<Rat>{Rat(5), Rat(6)});

    auto house = is_uniform(fixtures::house(), {.full = true});
    CHECK(house.uniform);
    CHECK(house.spectrum == std::vector<Rat>{Rat(3)});
    CHECK(house.factor_count == 7);

    // Two triangles sharing an edge, closed by a degree-2 vertex.
    Graph dashed(5, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    auto d = is_uniform(dashed, {.full = true});
    CHECK(d.uniform);
    CHECK(d.spectrum == std::vector<Rat>{Rat(3)});
    CHECK(d.factor_count == 11);
}

TEST_CASE("report contract: factor_count presence tracks complete enumeration") {
    // Uniform graph: no early exit is possible, so the count is present even
    // without full mode.
    CHECK(is_uniform(cycle(5)).factor_count == 5);
    // Non-uniform graph, early exit: count unknown.
    CHECK(!is_uniform(cycle(6)).factor_count.has_value());
    CHECK(is_uniform(cycle(6), {.full = true}).factor_count == 5);
}

TEST_CASE("degenerate inputs") {
    auto empty = is_uniform(Graph());
    CHECK(empty.factor_exists);
    CHECK(empty.uniform);
    CHECK(empty.spectrum == std::vector<Rat>{Rat(0)});
    CHECK(empty.factor_count == 1);

    auto isolated = is_uniform(Graph(1));
    CHECK(!isolated.factor_exists);
    CHECK(isolated.uniform);  // vacuously
    CHECK(isolated.spectrum.empty());
    CHECK(isolated.factor_count == 0);
}

TEST_CASE("witness factors really disagree in weight") {
    auto report = is_uniform(cycle(9));
    REQUIRE(report.witness.has_value());
    const auto& [a, b] = *report.witness;
    CHECK(a.edges.size() != b.edges.size());
}

TEST_CASE("the hung-quadrangle family separates weights k and 2k-3") {
    for (int k = 3; k <= 6; ++k) {
        const Graph g = fixtures::mixed_book(k);
        auto report = is_uniform(g, {.full = true});
        CHECK(report.uniform == (k == 3));
        auto has = [&](int w) {
            return std::find(report.spectrum.begin(), report.spectrum.end(), Rat(w)) !=
                   report.spectrum.end();
        };
        CHECK(has(k));
        CHECK(has(2 * k - 3));
    }
}

TEST_CASE("weightings validate and look up by edge") {
    const Graph c4 = cycle(4);
    Weighting w = Weighting::constant(c4, Rat(2));
    CHECK(w[Edge(0, 1)] == Rat(2));
    CHECK_THROWS_AS(w[Edge(0, 2)], std::out_of_range);
    CHECK_THROWS_AS(Weighting(c4, {Rat(1)}), std::invalid_argument);          // wrong size
    CHECK_THROWS_AS(Weighting(c4, {Rat(1), Rat(0), Rat(1), Rat(1)}), std::invalid_argument);
    CHECK_THROWS_AS(Weighting(c4, {Rat(1), Rat(-2), Rat(1), Rat(1)}), std::invalid_argument);

    StarFactor f{EdgeSet({{0, 1}, {2, 3}}), {0, 2}};
    CHECK(weight_of(f, w) == Rat(4));
}

TEST_CASE("weighted uniformity detects what constant weights hide") {
    const Graph c4 = cycle(4);  // edges lex: 0-1, 0-3, 1-2, 2-3
    // Matching {01,23} weighs 1+1, matching {03,12} weighs 2+2.
    Weighting skew(c4, {Rat(1), Rat(2), Rat(2), Rat(1)});
    auto [uniform, witness] = is_uniform_weighted(c4, skew);
    CHECK(!uniform);
    REQUIRE(witness.has_value());
    CHECK(weight_of(witness->first, skew) != weight_of(witness->second, skew));

    auto [flat_uniform, flat_witness] = is_uniform_weighted(c4, Weighting::constant(c4));
    CHECK(flat_uniform);
    CHECK(!flat_witness.has_value());

    // C6 stays non-uniform under any constant weighting.
    auto [c6u, c6w] = is_uniform_weighted(cycle(6), Weighting::constant(cycle(6), Rat(5)));
    CHECK(!c6u);
    CHECK(c6w.has_value());
}

TEST_CASE("weight spectra scale linearly") {
    const Graph c6 = cycle(6);
    CHECK(weight_spectrum(c6, Weighting::constant(c6)) == std::vector<Rat>{Rat(3), Rat(4)});
    CHECK(weight_spectrum(c6, Weighting::constant(c6, Rat(3, 2))) ==
          std::vector<Rat>{Rat(9, 2), Rat(6)});

    // A rational, non-constant weighting on C4: both matchings must be listed.
    const Graph c4 = cycle(4);
    Weighting w(c4, {Rat(1, 3), Rat(1), Rat(2), Rat(5)});
    auto spec = weight_spectrum(c4, w);
    CHECK(spec == std::vector<Rat>{Rat(3), Rat(16, 3)});
}

TEST_CASE("factor weights of connected graphs stay within the star-count bounds") {
    // Each star covers its center plus >= 1 satellite, so a factor has
    // between ceil(n/2) and n-1 edges.
    for (int n = 2; n <= 6; ++n) {
        Constraints c;
        c.n = n;
        for (const Graph& g : enumerate_graphs(c)) {
            auto report = is_uniform(g, {.full = true});
            if (!report.factor_exists) continue;
            for (const Rat& w : report.spectrum) {
                CHECK(w >= Rat((n + 1) / 2));
                CHECK(w <= Rat(n - 1));
            }
        }
    }
}

TEST_CASE("stem-triangle configuration detector") {
    auto hit = lemma2_witness(fixtures::triangle_with_pendant());
    REQUIRE(hit.has_value());
    CHECK(hit->triangle == std::array<int, 3>{0, 1, 2});
    CHECK(hit->stem == 2);
    CHECK(hit->leaf == 3);

    CHECK(!lemma2_witness(fixtures::house()).has_value());
    CHECK(!lemma2_witness(fixtures::complete(4)).has_value());
    CHECK(!lemma2_witness(cycle(3)).has_value());
    CHECK(!lemma2_witness(fixtures::path(5)).has_value());  // no triangle at all

    // Two degree-3 vertices on the triangle defeat the pattern.
    CHECK(!lemma2_witness(fixtures::mixed_book(4)).has_value());
}

TEST_CASE("lone-branch triangle detector") {
    auto hit = lemma3_violation(fixtures::triangle_branch_nonstem());
    REQUIRE(hit.has_value());

    CHECK(!lemma3_violation(fixtures::triangle_branch_stem()).has_value());
    CHECK(!lemma3_violation(fixtures::complete(4)).has_value());  // no lone branch
    CHECK(!lemma3_violation(fixtures::mixed_book(4)).has_value());  // two branches
    CHECK(!lemma3_violation(cycle(3)).has_value());
}

TEST_CASE("detector hits imply non-uniformity on every small connected graph") {
    for (int n = 3; n <= 6; ++n) {
        Constraints c;
        c.n = n;
        for (const Graph& g : enumerate_graphs(c)) {
            const bool l2 = lemma2_witness(g).has_value();
            const bool l3 = lemma3_violation(g).has_value();
            if (!l2 && !l3) continue;
            auto report = is_uniform(g);
            CHECK(report.factor_exists);
            CHECK(!report.uniform);
        }
    }
}
