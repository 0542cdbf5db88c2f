#include "oracles.hpp"

#include "subexp/errors.hpp"
#include "subexp/expanders.hpp"
#include "subexp/generators.hpp"
#include "subexp/rng.hpp"
#include "subexp/separators.hpp"

#include <doctest.h>

#include <limits>

using namespace subexp;

TEST_CASE("random regular graphs") {
    CHECK(random_regular(4, 3, 1) == complete_graph(4));
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Graph g = random_regular(6, 3, seed);
        CHECK(g.m() == 9);
        for (Vertex v = 0; v < 6; ++v) CHECK(g.degree(v) == 3);
    }
    CHECK(random_regular(20, 3, 5) == random_regular(20, 3, 5));
    CHECK_THROWS_AS(random_regular(5, 3, 1), ArgumentError);
    CHECK_THROWS_AS(random_regular(3, 3, 1), ArgumentError);
}

TEST_CASE("exact edge expansion") {
    const auto k4 = edge_expansion_exact(complete_graph(4));
    CHECK(k4.cut == 2);  // 4/2, reduced
    CHECK(k4.size == 1);
    CHECK(k4.value() == 2.0);
    const auto c6 = edge_expansion_exact(cycle_graph(6));
    CHECK(c6.cut * 3 == c6.size * 2);
    CHECK(edge_expansion_exact(disjoint_union(complete_graph(4), complete_graph(4))).cut == 0);
    CHECK(edge_expansion_exact(empty_graph(1)).value() == std::numeric_limits<double>::infinity());
    CHECK_THROWS_AS(edge_expansion_exact(path_graph(25)), RefusalError);

    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        const Graph g = random_gnp(6 + static_cast<Vertex>(seed % 10), 0.4, seed);
        const auto a = edge_expansion_exact(g);
        const auto b = edge_expansion_exact_serial(g);
        CHECK(a.cut == b.cut);
        CHECK(a.size == b.size);
        const auto o = oracle::edge_expansion(g);
        REQUIRE(o);
        CHECK(Rational(a.cut, a.size) == *o);
    }
}

TEST_CASE("separator lower bound formula") {
    CHECK(expsep_bound(126, 0, 3.0 / 20.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(expsep_bound(600, 0, 1e15) == doctest::Approx(100.0).epsilon(1e-9));
    CHECK(expsep_bound(200, 2, 0.5) == doctest::Approx(2 * expsep_bound(100, 2, 0.5)).epsilon(1e-12));
    CHECK_THROWS_AS(expsep_bound(100, 0, 0), ArgumentError);
}

TEST_CASE("expander experiment") {
    const auto r0 = expander_separator_experiment(8, 0, 1);
    CHECK(r0.n_prime == 8);
    CHECK(r0.separator_found >= r0.bound);
    CHECK(r0.alpha > 0);

    const auto r1 = expander_separator_experiment(8, 1, 3);
    CHECK(r1.n_prime == 20);
    CHECK(r1.separator_found >= r1.bound);

    // Independent recomputation of the reported quantities.
    const int draw = r1.resamples;
    const Graph base = random_regular(8, 3, derive_seed(3, static_cast<std::uint64_t>(draw)));
    const Graph sub = subdivide_edges(base, 1);
    CHECK(r1.separator_found == oracle::min_balanced_separator(sub));
    CHECK(Rational(r1.alpha_cut, r1.alpha_size) == *oracle::edge_expansion(base));

    // Disconnected samples (two K_4) are resampled, never reported.
    int resampled = 0;
    for (std::uint64_t seed = 0; seed < 300 && resampled == 0; ++seed) {
        const auto r = expander_separator_experiment(8, 0, seed);
        CHECK(r.alpha > 0);
        resampled += r.resamples;
    }
    CHECK(resampled > 0);

    CHECK_THROWS_AS(expander_separator_experiment(9, 0, 1), RefusalError);
    CHECK_THROWS_AS(expander_separator_experiment(20, 3, 1), RefusalError);
    CHECK(expander_csv_header() == "n,d,alpha,m,n_prime,separator_found,bound");
    CHECK(expander_csv_row(r1).rfind("8,3,", 0) == 0);
}
