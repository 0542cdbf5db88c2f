#pragma once

#include "subexp/graph.hpp"

#include <cstdint>

namespace subexp {

Graph empty_graph(Vertex n);
Graph path_graph(Vertex n);
Graph cycle_graph(Vertex n);
Graph complete_graph(Vertex n);
Graph petersen_graph();
Graph perfect_matching(Vertex n);  // n even; edges {2i, 2i+1}
// rows x cols grid, row-major ids (r * cols + c).
Graph grid_graph(int rows, int cols);
// K'_t: K_t with every edge subdivided once. Branch vertices are 0..t-1.
Graph subdivided_clique(int t);
Graph disjoint_union(const Graph& a, const Graph& b);

// Random graphs for tests and sweeps; deterministic under seed.
Graph random_gnp(Vertex n, double p, std::uint64_t seed);
// Random graph with maximum degree <= max_deg, built by adding random edges.
Graph random_bounded_degree(Vertex n, int max_deg, int attempts, std::uint64_t seed);
// Random edge subgraph keeping each edge with probability keep.
Graph random_edge_subgraph(const Graph& g, double keep, std::uint64_t seed);
// Connected random vertex subset of size <= size grown from a random seed vertex.
VertexSet random_connected_subset(const Graph& g, int size, std::uint64_t seed);

}  // namespace subexp
