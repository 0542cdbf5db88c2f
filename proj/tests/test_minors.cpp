#include "oracles.hpp"

#include "subexp/errors.hpp"
#include "subexp/generators.hpp"
#include "subexp/kernels.hpp"
#include "subexp/minors.hpp"

#include <doctest.h>

using namespace subexp;

namespace {

// Cycle C_{2n} contracted pairwise onto C_n: tree i = {2i, 2i+1}.
MinorCertificate pair_contraction(int n) {
    MinorCertificate cert;
    cert.depth = 1;
    for (int i = 0; i < n; ++i) cert.trees.push_back({i, {{2 * i, -1}, {2 * i + 1, 2 * i}}});
    for (int i = 0; i + 1 < n; ++i) cert.witness_edges.push_back({i, i + 1, 2 * i + 1, 2 * i + 2});
    cert.witness_edges.push_back({0, n - 1, 0, 2 * n - 1});
    return cert;
}

}  // namespace

TEST_CASE("certificate verification") {
    const Graph pet = petersen_graph();
    const auto id = identity_certificate(pet);
    CHECK(verify_certificate(pet, pet, id).ok);
    CHECK(oracle::certificate_ok(pet, pet, id));
    CHECK(measured_depth(id) == 0);
    CHECK(model_graph(id) == pet);

    const auto c3 = pair_contraction(3);
    CHECK(verify_certificate(cycle_graph(6), complete_graph(3), c3).ok);
    CHECK(oracle::certificate_ok(cycle_graph(6), complete_graph(3), c3));
    CHECK(measured_depth(c3) == 1);

    auto overlap = c3;
    overlap.trees[1].nodes.push_back({1, 2});
    const auto r = verify_certificate(cycle_graph(6), complete_graph(3), overlap);
    CHECK_FALSE(r.ok);
    bool named = false;
    for (const auto& v : r.violations) named = named || v.find("trees not disjoint") != std::string::npos;
    CHECK(named);

    auto missing = c3;
    missing.witness_edges.pop_back();
    CHECK_FALSE(verify_certificate(cycle_graph(6), complete_graph(3), missing).ok);

    auto too_deep = c3;
    too_deep.depth = 0;
    CHECK_FALSE(verify_certificate(cycle_graph(6), complete_graph(3), too_deep).ok);

    auto fake_edge = c3;
    fake_edge.witness_edges[0] = {0, 1, 0, 2};  // 0-2 is not an edge of C_6
    CHECK_FALSE(verify_certificate(cycle_graph(6), complete_graph(3), fake_edge).ok);

    auto bad_parent = c3;
    bad_parent.trees[0].nodes[1] = {3, 0};  // 3 is not adjacent to 0
    CHECK_FALSE(verify_certificate(cycle_graph(6), complete_graph(3), bad_parent).ok);
}

TEST_CASE("certificate composition") {
    CHECK(composed_depth(0, 5) == 5);
    CHECK(composed_depth(1, 1) == 4);
    CHECK(composed_depth(4, 4) == 40);

    const auto c6_in_c12 = pair_contraction(6);
    const auto c3_in_c6 = pair_contraction(3);
    REQUIRE(verify_certificate(cycle_graph(12), cycle_graph(6), c6_in_c12).ok);
    const auto c = compose_certificates(cycle_graph(12), cycle_graph(6), c6_in_c12, complete_graph(3), c3_in_c6);
    CHECK(c.depth == 4);
    CHECK(verify_certificate(cycle_graph(12), complete_graph(3), c).ok);
    CHECK(oracle::certificate_ok(cycle_graph(12), complete_graph(3), c));
    CHECK(measured_depth(c) <= 4);

    const auto id = identity_certificate(cycle_graph(6));
    const auto same = compose_certificates(cycle_graph(6), cycle_graph(6), id, complete_graph(3), c3_in_c6);
    CHECK(same.depth == 1);
    CHECK(verify_certificate(cycle_graph(6), complete_graph(3), same).ok);

    auto broken = c3_in_c6;
    broken.witness_edges.clear();
    CHECK_THROWS_AS(compose_certificates(cycle_graph(12), cycle_graph(6), c6_in_c12, complete_graph(3), broken),
                    ArgumentError);
}

TEST_CASE("nabla brute on named graphs") {
    CHECK(nabla_brute(empty_graph(1), 0).density == 0);
    CHECK(nabla_brute(empty_graph(1), 3).density == 0);
    CHECK(nabla_brute(petersen_graph(), 0).density == Rational(3, 2));
    CHECK(nabla_brute(cycle_graph(6), 1).density == 1);
    CHECK(nabla_brute(complete_graph(4), 0).density == Rational(3, 2));
    CHECK(nabla_brute(cycle_graph(6), 0).density == 1);
    CHECK(nabla_brute(path_graph(4), 0).density == Rational(3, 4));
    CHECK_THROWS_AS(nabla_brute(path_graph(11), 1), RefusalError);

    const auto r = nabla_brute(petersen_graph(), 1);
    CHECK(verify_certificate(petersen_graph(), r.minor, r.certificate).ok);
    CHECK(Rational(static_cast<long long>(r.minor.m()), r.minor.n()) == r.density);
    CHECK(r.density >= Rational(3, 2));
}

TEST_CASE("nabla brute agrees with the partition oracle") {
    for (std::uint64_t seed = 0; seed < 24; ++seed) {
        const Graph g = random_gnp(4 + static_cast<Vertex>(seed % 4), 0.45, seed);
        for (int k = 0; k <= 2; ++k) {
            const auto r = nabla_brute(g, k);
            CAPTURE(seed);
            CAPTURE(k);
            CHECK(r.density == oracle::nabla(g, k));
            CHECK(oracle::certificate_ok(g, r.minor, r.certificate));
            CHECK(r.certificate.depth <= k);
        }
    }
}

TEST_CASE("nabla serial and parallel kernels agree") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        const Graph g = random_gnp(7 + static_cast<Vertex>(seed % 3), 0.4, seed);
        for (int k = 0; k <= 2; ++k) {
            const auto bg = BitGraph::from(g);
            const auto a = kernels::serial::densest_shallow_minor(bg, k);
            const auto b = kernels::omp::densest_shallow_minor(bg, k);
            CHECK(a.edges == b.edges);
            CHECK(a.vertices == b.vertices);
            CHECK(a.blocks == b.blocks);
            CHECK(a.centers == b.centers);
            const auto ra = nabla_brute(g, k), rb = nabla_brute_serial(g, k);
            CHECK(ra.density == rb.density);
            CHECK(ra.minor == rb.minor);
        }
    }
}

TEST_CASE("nabla greedy is a certified lower bound") {
    CHECK(nabla_greedy(cycle_graph(6), 1).density >= 1);
    CHECK(nabla_greedy(petersen_graph(), 1).density <= nabla_brute(petersen_graph(), 1).density);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const Graph g = random_gnp(5 + static_cast<Vertex>(seed % 6), 0.35, seed);
        for (int k = 0; k <= 2; ++k) {
            const auto gr = nabla_greedy(g, k);
            CHECK(gr.density <= nabla_brute(g, k).density);
            CHECK(verify_certificate(g, gr.minor, gr.certificate).ok);
            CHECK(measured_depth(gr.certificate) <= k);
            if (k == 0 && g.n() > 0)
                CHECK(gr.density >= Rational(static_cast<long long>(g.m()), g.n()));
        }
    }
    // Larger inputs are fine for the greedy bound.
    const Graph big = grid_graph(12, 12);
    const auto gb = nabla_greedy(big, 2);
    CHECK(verify_certificate(big, gb.minor, gb.certificate).ok);
    CHECK(gb.density >= Rational(static_cast<long long>(big.m()), big.n()));
}

TEST_CASE("K'_t search") {
    const auto c6 = find_k1t(cycle_graph(6), 3);
    REQUIRE(c6.status == SearchStatus::Found);
    REQUIRE(c6.certificate);
    CHECK(verify_certificate(cycle_graph(6), complete_graph(3), *c6.certificate).ok);

    const auto k4 = find_k1t(complete_graph(4), 3);
    CHECK(k4.status == SearchStatus::NotFound);
    CHECK_FALSE(k4.certificate);

    const auto k4p = find_k1t(subdivided_clique(4), 4);
    REQUIRE(k4p.status == SearchStatus::Found);
    CHECK(oracle::certificate_ok(subdivided_clique(4), complete_graph(4), *k4p.certificate));

    const auto k1 = find_k1t(path_graph(2), 1);
    REQUIRE(k1.status == SearchStatus::Found);
    CHECK(k1.certificate->trees.size() == 1);

    CHECK_THROWS_AS(find_k1t(subdivided_clique(6), 6), RefusalError);
    const auto big = find_k1t(subdivided_clique(6), 6, 1000000);
    CHECK(big.status == SearchStatus::Found);
    const auto starved = find_k1t(random_gnp(30, 0.5, 1), 6, 5);
    CHECK(starved.status == SearchStatus::BudgetExhausted);

    // Agreement with plain subgraph search for K'_3 = C_6 and K'_4.
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Graph g = random_gnp(10, 0.3, seed);
        const bool found = find_k1t(g, 3).status == SearchStatus::Found;
        CHECK(found == oracle::contains_subgraph(g, cycle_graph(6)));
    }
}
