#include "subexp/errors.hpp"
#include "subexp/expanders.hpp"
#include "subexp/generators.hpp"
#include "subexp/io.hpp"

#include <doctest.h>

using namespace subexp;

TEST_CASE("packing round trip keeps exact weights and meta") {
    FractionalPacking pi;
    pi.entries.push_back({VertexSet{0, 2}, Rational(1, 3)});
    pi.entries.push_back({VertexSet{1}, Rational(2, 3)});
    const PackingMeta meta{"iterated-sample", 0.5, 12, 42, 0.6666};
    PackingMeta back;
    const auto again = packing_from_json(Json::parse(packing_to_json(pi, meta).dump()), &back);
    REQUIRE(again.entries.size() == 2);
    CHECK(again.entries[0].set == VertexSet{0, 2});
    CHECK(again.entries[0].weight == Rational(1, 3));
    CHECK(again.entries[1].weight == Rational(2, 3));
    CHECK(back.mode == "iterated-sample");
    CHECK(back.eps == 0.5);
    CHECK(back.bound == 12);
    CHECK(back.seed == std::optional<std::uint64_t>(42));
    CHECK(back.thickness == 0.6666);

    const auto grid = grid_packing(6, 0.5);
    const auto g2 = packing_from_json(packing_to_json(grid, {"grid", 0.5, 125, std::nullopt, 0.5}));
    REQUIRE(g2.entries.size() == grid.entries.size());
    for (std::size_t i = 0; i < grid.entries.size(); ++i) {
        CHECK(g2.entries[i].set == grid.entries[i].set);
        CHECK(g2.entries[i].weight == grid.entries[i].weight);
    }
}

TEST_CASE("decomposition, certificate, separation and report round trips") {
    const Graph p = path_graph(120);
    const auto t = build_bounded_reuse_decomposition(p, 2, 0);
    const auto t2 = decomposition_from_json(Json::parse(decomposition_to_json(t).dump()));
    REQUIRE(t2.nodes.size() == t.nodes.size());
    CHECK(t2.root == t.root);
    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
        CHECK(t2.nodes[i].parent == t.nodes[i].parent);
        CHECK(t2.nodes[i].bag == t.nodes[i].bag);
        CHECK(t2.nodes[i].children == t.nodes[i].children);
    }

    const auto found = find_k1t(subdivided_clique(4), 4);
    REQUIRE(found.certificate);
    const auto c = *found.certificate;
    const auto c2 = certificate_from_json(Json::parse(certificate_to_json(c).dump()));
    CHECK(c2.depth == c.depth);
    REQUIRE(c2.trees.size() == c.trees.size());
    for (std::size_t i = 0; i < c.trees.size(); ++i) {
        CHECK(c2.trees[i].model_vertex == c.trees[i].model_vertex);
        CHECK(c2.trees[i].nodes == c.trees[i].nodes);
    }
    CHECK(c2.witness_edges == c.witness_edges);
    CHECK(verify_certificate(subdivided_clique(4), complete_graph(4), c2).ok);

    const Graph g = petersen_graph();
    const auto s = exact_min_balanced_separation(g);
    const auto s2 = separation_from_json(g, Json::parse(separation_to_json(s).dump()));
    CHECK(s2.side_a == s.side_a);
    CHECK(s2.side_b == s.side_b);
    CHECK(s2.size == s.size);
    CHECK(s2.balanced == s.balanced);

    const auto r = expander_separator_experiment(8, 1, 3);
    const auto r2 = expander_report_from_json(Json::parse(expander_report_to_json(r).dump()));
    CHECK(r2.n == r.n);
    CHECK(r2.alpha == r.alpha);
    CHECK(r2.alpha_cut == r.alpha_cut);
    CHECK(r2.alpha_size == r.alpha_size);
    CHECK(r2.n_prime == r.n_prime);
    CHECK(r2.separator_found == r.separator_found);
    CHECK(r2.bound == r.bound);
    CHECK(r2.resamples == r.resamples);
    CHECK(r2.seed == r.seed);

    const auto v = vertex_set_from_json(vertex_set_to_json(VertexSet{3, 1, 7}));
    CHECK(v == VertexSet{1, 3, 7});

    const auto d = density_report_to_json(nabla_brute(cycle_graph(6), 1));
    CHECK(d["density"] == "1");
    CHECK(d["vertices"] == 3);
}

TEST_CASE("malformed documents raise parse errors") {
    CHECK_THROWS_AS(packing_from_json(Json::parse(R"({"entries": 3})")), ParseError);
    CHECK_THROWS_AS(packing_from_json(Json::parse(R"({"entries": [{"set": [0], "weight_exact": "x/y"}]})")), ParseError);
    CHECK_THROWS_AS(vertex_set_from_json(Json::parse("[2, 1]")), ParseError);
    CHECK_THROWS_AS(decomposition_from_json(Json::parse(R"({"nodes": [{"parent": null, "bag": [0]}, {"parent": null, "bag": [1]}], "root": 0})")),
                    ParseError);
    CHECK_THROWS_AS(certificate_from_json(Json::parse(R"({"depth": 0, "trees": [{"model_vertex": 0, "nodes": [[0]]}], "witness_edges": []})")),
                    ParseError);
    CHECK_THROWS_AS(separation_from_json(path_graph(3), Json::parse(R"({"side_a": [0, 1], "side_b": [1, 2], "size": 2})")),
                    ParseError);
    CHECK_THROWS_AS(expander_report_from_json(Json::parse(R"({"n": 8})")), ParseError);
    CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), ArgumentError);
}
