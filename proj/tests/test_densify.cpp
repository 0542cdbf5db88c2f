#include "oracles.hpp"

#include "subexp/densify.hpp"
#include "subexp/errors.hpp"
#include "subexp/generators.hpp"

#include <doctest.h>

#include <cmath>

using namespace subexp;

namespace {

bool same_outcome(const DensifyOutcome& a, const DensifyOutcome& b) {
    if (a.kind != b.kind || !(a.minor == b.minor) || a.attempts != b.attempts || a.skipped_stops != b.skipped_stops)
        return false;
    if (a.certificate.trees.size() != b.certificate.trees.size()) return false;
    for (std::size_t i = 0; i < a.certificate.trees.size(); ++i)
        if (a.certificate.trees[i].nodes != b.certificate.trees[i].nodes) return false;
    return a.certificate.witness_edges == b.certificate.witness_edges;
}

void check_outcome(const Graph& g, const DensifyOutcome& r, int t) {
    if (r.kind == DensifyKind::Failed) {
        CHECK_FALSE(r.failed_stage.empty());
        return;
    }
    CHECK(verify_certificate(g, r.minor, r.certificate).ok);
    CHECK(oracle::certificate_ok(g, r.minor, r.certificate));
    CHECK(measured_depth(r.certificate) <= 4);
    if (r.kind == DensifyKind::CliqueMinor) CHECK(r.minor == complete_graph(t));
}

}  // namespace

TEST_CASE("densify on K'_3") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto r = densify_or_clique(cycle_graph(6), 3, 0.1, 0.01, seed);
        CHECK(r.kind != DensifyKind::Failed);
        check_outcome(cycle_graph(6), r, 3);
    }
}

TEST_CASE("densify refuses to certify outside its hypotheses") {
    const Graph k16 = complete_graph(16);
    const auto r = densify_or_clique(k16, 2, 0.5, 64, 1);
    CHECK_FALSE(r.hypotheses_met);  // 64 * 2^4 * 16^1.5 > 120 edges
    check_outcome(k16, r, 2);
    CHECK_THROWS_AS(densify_or_clique(k16, 0, 0.5, 64, 1), ArgumentError);
    CHECK_THROWS_AS(densify_or_clique(k16, 2, 0, 64, 1), ArgumentError);
}

TEST_CASE("densify finds clique minors and dense minors on desk-scale inputs") {
    int cliques = 0, dense = 0;
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        const Graph g = random_gnp(40, 0.5, seed);
        const auto r = densify_or_clique(g, 2, 0.1, 0.02, seed);
        check_outcome(g, r, 2);
        cliques += r.kind == DensifyKind::CliqueMinor;
        const Graph k5 = subdivided_clique(5);
        const auto d = densify_or_clique(k5, 3, 0.1, 0.01, seed);
        check_outcome(k5, d, 3);
        dense += d.kind == DensifyKind::DenseMinor;
        if (d.kind == DensifyKind::DenseMinor) CHECK(d.target_met);
    }
    CHECK(cliques > 0);
    CHECK(dense > 0);
}

TEST_CASE("densify is deterministic under seed") {
    const Graph g = random_gnp(30, 0.6, 3);
    for (std::uint64_t seed : {1u, 9u, 77u}) {
        const auto a = densify_or_clique(g, 3, 0.1, 0.002, seed);
        const auto b = densify_or_clique(g, 3, 0.1, 0.002, seed);
        CHECK(same_outcome(a, b));
    }
}

TEST_CASE("iterating one round equals a single densify step") {
    const Graph g = random_gnp(30, 0.5, 4);
    IterateOptions opt;
    opt.c0 = 0.01;
    const auto it = iterate_densify(g, 2, 0.1, 1, 5, opt);
    const auto one = densify_or_clique(g, 2, 0.1, 0.01, 5);
    CHECK(it.kind == one.kind);
    CHECK(it.minor == one.minor);
    CHECK(it.rounds == 1);
}

TEST_CASE("iterated densify certificates and depth bookkeeping") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        const Graph g = random_gnp(36, 0.4, seed);
        const int m = 1 + static_cast<int>(seed % 3);
        IterateOptions opt;
        opt.c0 = 0.005;
        const auto r = iterate_densify(g, 2, 0.1, m, seed, opt);
        if (r.kind == DensifyKind::Failed) continue;
        CHECK(verify_certificate(g, r.minor, r.certificate).ok);
        CHECK(measured_depth(r.certificate) <= r.depth);
        CHECK(r.certificate.depth == r.depth);
        CHECK(r.depth_within_bound == (static_cast<double>(r.depth) <= std::pow(4.0, m)));
        if (r.kind == DensifyKind::CliqueMinor) CHECK(r.minor == complete_graph(2));
    }
    CHECK_THROWS_AS(iterate_densify(path_graph(4), 2, 0.1, 0, 1), ArgumentError);
}

TEST_CASE("several densify rounds compose certificates") {
    int multi = 0;
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        const Graph g = subdivide_edges(random_gnp(14, 0.6, seed), 1);
        IterateOptions opt;
        opt.c0 = 0.001;
        const auto r = iterate_densify(g, 3, 0.1, 3, seed, opt);
        if (r.kind == DensifyKind::Failed) continue;
        multi += r.rounds >= 2;
        CHECK(verify_certificate(g, r.minor, r.certificate).ok);
        CHECK(oracle::certificate_ok(g, r.minor, r.certificate));
        CHECK(measured_depth(r.certificate) <= r.depth);
        CHECK(r.depth <= 64);
    }
    CHECK(multi > 0);
}

TEST_CASE("shallow clique parameters") {
    const auto r = shallow_clique(random_gnp(100, 0.2, 1), 1.0, 1);
    CHECK(r.t == 2);
    CHECK(r.m == 18);
    CHECK(r.d == "68719476736");  // 4^18

    const auto k1 = shallow_clique(path_graph(5), 1.0, 1);
    CHECK(k1.t == 1);
    CHECK(k1.outcome.kind == DensifyKind::CliqueMinor);
    CHECK(k1.outcome.minor.n() == 1);
    CHECK(verify_certificate(path_graph(5), k1.outcome.minor, k1.outcome.certificate).ok);

    IterateOptions opt;
    opt.c0 = 0.01;
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        const Graph g = random_gnp(70, 0.3, seed);
        const auto s = shallow_clique(g, 1.0, seed, opt);
        if (s.outcome.kind != DensifyKind::Failed)
            CHECK(verify_certificate(g, s.outcome.minor, s.outcome.certificate).ok);
    }
    CHECK_THROWS_AS(shallow_clique(path_graph(5), 0, 1), ArgumentError);
}
