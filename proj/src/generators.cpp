#include "subexp/generators.hpp"

#include "subexp/errors.hpp"
#include "subexp/rng.hpp"

#include <algorithm>

namespace subexp {

Graph empty_graph(Vertex n) { return Graph(n); }

Graph path_graph(Vertex n) {
    std::vector<Edge> e;
    for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

Graph cycle_graph(Vertex n) {
    if (n < 3) throw ArgumentError("cycle_graph: n must be >= 3");
    std::vector<Edge> e;
    for (Vertex i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, e);
}

Graph complete_graph(Vertex n) {
    std::vector<Edge> e;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

Graph petersen_graph() {
    std::vector<Edge> e;
    for (Vertex i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);          // outer cycle
        e.emplace_back(i, i + 5);                // spokes
        e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return Graph::from_edges(10, e);
}

Graph perfect_matching(Vertex n) {
    if (n % 2 != 0) throw ArgumentError("perfect_matching: n must be even");
    std::vector<Edge> e;
    for (Vertex i = 0; i < n; i += 2) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

Graph grid_graph(int rows, int cols) {
    if (rows < 0 || cols < 0) throw ArgumentError("grid_graph: negative size");
    std::vector<Edge> e;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            const Vertex v = r * cols + c;
            if (c + 1 < cols) e.emplace_back(v, v + 1);
            if (r + 1 < rows) e.emplace_back(v, v + cols);
        }
    return Graph::from_edges(rows * cols, e);
}

Graph subdivided_clique(int t) {
    if (t < 0) throw ArgumentError("subdivided_clique: negative t");
    std::vector<Edge> e;
    Vertex next = t;
    for (Vertex i = 0; i < t; ++i)
        for (Vertex j = i + 1; j < t; ++j) {
            e.emplace_back(i, next);
            e.emplace_back(j, next);
            ++next;
        }
    return Graph::from_edges(next, e);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    auto e = a.edges();
    for (auto [u, v] : b.edges()) e.emplace_back(u + a.n(), v + a.n());
    return Graph::from_edges(a.n() + b.n(), e);
}

Graph random_gnp(Vertex n, double p, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Edge> e;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            if (rng.bernoulli(p)) e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

Graph random_bounded_degree(Vertex n, int max_deg, int attempts, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    std::vector<Edge> e;
    if (n < 2) return Graph(n);
    for (int a = 0; a < attempts; ++a) {
        const auto u = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
        const auto v = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
        if (u == v || deg[static_cast<std::size_t>(u)] >= max_deg || deg[static_cast<std::size_t>(v)] >= max_deg)
            continue;
        const Edge key{std::min(u, v), std::max(u, v)};
        if (std::find(e.begin(), e.end(), key) != e.end()) continue;
        e.push_back(key);
        ++deg[static_cast<std::size_t>(u)];
        ++deg[static_cast<std::size_t>(v)];
    }
    return Graph::from_edges(n, e);
}

Graph random_edge_subgraph(const Graph& g, double keep, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Edge> e;
    for (auto edge : g.edges())
        if (rng.bernoulli(keep)) e.push_back(edge);
    return Graph::from_edges(g.n(), e);
}

VertexSet random_connected_subset(const Graph& g, int size, std::uint64_t seed) {
    if (g.n() == 0 || size <= 0) return {};
    Rng rng(seed);
    std::vector<char> in(static_cast<std::size_t>(g.n()), 0);
    std::vector<Vertex> chosen{static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(g.n())))};
    in[static_cast<std::size_t>(chosen[0])] = 1;
    std::vector<Vertex> frontier;
    while (static_cast<int>(chosen.size()) < size) {
        frontier.clear();
        for (Vertex v : chosen)
            for (Vertex w : g.neighbors(v))
                if (!in[static_cast<std::size_t>(w)]) frontier.push_back(w);
        if (frontier.empty()) break;
        const Vertex pick = frontier[rng.below(frontier.size())];
        in[static_cast<std::size_t>(pick)] = 1;
        chosen.push_back(pick);
    }
    return VertexSet(std::move(chosen));
}

}  // namespace subexp
