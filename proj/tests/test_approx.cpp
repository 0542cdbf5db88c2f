#include "oracles.hpp"

#include "subexp/approx.hpp"
#include "subexp/errors.hpp"
#include "subexp/generators.hpp"

#include <doctest.h>

using namespace subexp;

namespace {

Graph copies(const Graph& g, int count) {
    Graph out = empty_graph(0);
    for (int i = 0; i < count; ++i) out = disjoint_union(out, g);
    return out;
}

FractionalPacking halves(Vertex a, Vertex b) {
    FractionalPacking pi;
    pi.entries.push_back({VertexSet{a}, Rational(1, 2)});
    pi.entries.push_back({VertexSet{b}, Rational(1, 2)});
    return pi;
}

}  // namespace

TEST_CASE("brute alpha") {
    CHECK(brute_alpha(cycle_graph(5)) == 2);
    CHECK(brute_alpha(petersen_graph()) == 4);
    CHECK(brute_alpha(empty_graph(7)) == 7);
    CHECK(brute_alpha(empty_graph(0)) == 0);
    CHECK(brute_alpha(copies(cycle_graph(13), 3)) == 18);
    CHECK_THROWS_AS(brute_alpha(path_graph(27)), RefusalError);
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const Graph g = random_gnp(8 + static_cast<Vertex>(seed % 10), 0.3, seed);
        CHECK(brute_alpha(g) == oracle::alpha(g));
    }
}

TEST_CASE("exact maximum independent set") {
    const auto a = exact_max_independent_set(copies(path_graph(2), 2), 2);
    CHECK(a.size == 2);
    CHECK(exact_max_independent_set(copies(complete_graph(4), 2), 4).size == 2);
    const Graph c5s = copies(cycle_graph(5), 10);
    const auto r = exact_max_independent_set(c5s, 5);
    CHECK(r.size == 20);
    CHECK(r.size == brute_alpha(c5s));
    CHECK(oracle::is_independent(c5s, r.vertices.ids()));
    CHECK(static_cast<int>(r.vertices.size()) == r.size);
    CHECK_THROWS_AS(exact_max_independent_set(path_graph(6), 5), ArgumentError);
    CHECK_THROWS_AS(exact_max_independent_set(path_graph(6), 27), ArgumentError);
}

TEST_CASE("PTAS examples") {
    const Graph pet = petersen_graph();
    const auto t = ptas_independent_set(pet, 0.5, FractionalPacking::trivial(), {10});
    CHECK(t.size == 4);
    CHECK(t.support_index == 0);

    const auto p4 = ptas_independent_set(path_graph(4), 0.5, halves(1, 2), {2});
    CHECK(p4.size == 2);
    CHECK(oracle::is_independent(path_graph(4), p4.vertices.ids()));
    CHECK(p4.support_index == 0);  // tie between both residuals goes to the first entry
}

TEST_CASE("PTAS on R_3 with a BFS-layer packing") {
    const Graph r3 = strong_product_cube(3);
    // alpha(R_3) = 8: the odd-coordinate triples are independent, and splitting
    // every coordinate range into {1,2} and {3} covers R_3 by 8 cliques.
    std::vector<Vertex> odd;
    for (int i : {1, 3})
        for (int j : {1, 3})
            for (int k : {1, 3}) odd.push_back(cube_index(3, i, j, k));
    CHECK(oracle::is_independent(r3, odd));
    const int alpha = 8;
    CHECK_THROWS_AS(brute_alpha(r3), RefusalError);

    const auto pi = baker_layer_packing(r3, 2);
    CHECK(thickness_exact(r3, pi) <= Rational(1, 2));
    const long long bound = max_residual_component(r3, pi);
    CHECK(bound <= 26);
    const auto res = ptas_independent_set(r3, 0.5, pi, {bound});
    CHECK(res.size >= 4);  // ceil(0.5 * alpha)
    CHECK(res.size <= alpha);
    CHECK(oracle::is_independent(r3, res.vertices.ids()));
}

TEST_CASE("PTAS preconditions") {
    const Graph p4 = path_graph(4);
    CHECK_THROWS_AS(ptas_independent_set(p4, 0.4, halves(1, 2), {2}), ArgumentError);  // thickness 1/2 > 0.4
    CHECK_THROWS_AS(ptas_independent_set(p4, 0.5, halves(1, 2), {1}), ArgumentError);  // not complementary
    CHECK_THROWS_AS(ptas_independent_set(p4, 0.5, halves(1, 2), {27}), ArgumentError);
    CHECK_THROWS_AS(ptas_independent_set(p4, 0, halves(1, 2), {2}), ArgumentError);
}

TEST_CASE("PTAS guarantee against the oracle, serial and parallel agree") {
    int checked = 0;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const Graph g = seed % 2 == 0 ? random_edge_subgraph(grid_graph(4, 5), 0.8, seed)
                                      : random_bounded_degree(18, 3, 60, seed);
        for (int k : {2, 4}) {
            const double eps = 1.0 / k;
            const auto pi = baker_layer_packing(g, k);
            const long long bound = std::max(1LL, max_residual_component(g, pi));
            const auto a = ptas_independent_set(g, eps, pi, {bound});
            const auto b = ptas_independent_set_serial(g, eps, pi, {bound});
            CHECK(a.vertices == b.vertices);
            CHECK(a.support_index == b.support_index);
            const int alpha = oracle::alpha(g);
            // size >= ceil((1 - eps) alpha), in integers: k * size >= (k - 1) * alpha.
            CHECK(k * a.size >= (k - 1) * alpha);
            CHECK(oracle::is_independent(g, a.vertices.ids()));
            ++checked;
        }
    }
    CHECK(checked == 60);
}

TEST_CASE("subgraph containment") {
    CHECK(contains_subgraph(cycle_graph(6), cycle_graph(6)));
    CHECK_FALSE(contains_subgraph(perfect_matching(8), path_graph(3)));
    CHECK(contains_subgraph(petersen_graph(), cycle_graph(5)));
    CHECK_FALSE(contains_subgraph(petersen_graph(), cycle_graph(4)));
    CHECK(contains_subgraph(path_graph(3), empty_graph(0)));
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const Graph g = random_gnp(9, 0.35, seed);
        const Graph h = random_gnp(4 + static_cast<Vertex>(seed % 2), 0.5, seed + 1000);
        CHECK(contains_subgraph(g, h) == oracle::contains_subgraph(g, h));
    }
}

TEST_CASE("subgraph test through packings") {
    CHECK(subgraph_test(path_graph(4), empty_graph(1), FractionalPacking::trivial(), {4}));
    CHECK(subgraph_test(cycle_graph(6), cycle_graph(6), FractionalPacking::trivial(), {6}));
    CHECK_FALSE(subgraph_test(perfect_matching(8), path_graph(3), FractionalPacking::trivial(), {2}));

    const Graph g = grid_graph(4, 4);
    const auto pi = baker_layer_packing(g, 5);
    const long long bound = max_residual_component(g, pi);
    CHECK(subgraph_test(g, cycle_graph(4), pi, {bound}));
    CHECK_FALSE(subgraph_test(g, cycle_graph(3), pi, {bound}));

    // Thickness 1/3 > 1/(4+1): refused rather than a one-sided answer.
    CHECK_THROWS_AS(subgraph_test(g, cycle_graph(4), baker_layer_packing(g, 3), {16}), RefusalError);
    CHECK_THROWS_AS(subgraph_test(g, cycle_graph(4), pi, {1}), ArgumentError);
}
