#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace subexp {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Sorted list of distinct vertex ids. Construction normalizes (sorts, dedups).
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> ids);
    explicit VertexSet(std::vector<Vertex> ids);

    static VertexSet range(Vertex n);  // {0, ..., n-1}

    std::size_t size() const noexcept { return ids_.size(); }
    bool empty() const noexcept { return ids_.empty(); }
    bool contains(Vertex v) const;
    auto begin() const noexcept { return ids_.begin(); }
    auto end() const noexcept { return ids_.end(); }
    Vertex operator[](std::size_t i) const { return ids_[i]; }
    const std::vector<Vertex>& ids() const noexcept { return ids_; }

    // Throws ArgumentError unless every id lies in [0, n).
    void check_within(Vertex n, std::string_view what = "vertex set") const;

    friend VertexSet set_union(const VertexSet& a, const VertexSet& b);
    friend VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
    friend VertexSet set_difference(const VertexSet& a, const VertexSet& b);

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<Vertex> ids_;
};

// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
// Immutable after construction.
class Graph {
public:
    Graph() = default;
    explicit Graph(Vertex n);  // edgeless

    // Parallel edges are collapsed; loops and out-of-range ids throw ArgumentError.
    static Graph from_edges(Vertex n, std::span<const Edge> edges);

    Vertex n() const noexcept { return static_cast<Vertex>(adj_.size()); }
    std::size_t m() const noexcept { return m_; }
    std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
    int max_degree() const noexcept;
    bool has_edge(Vertex u, Vertex v) const;

    // Canonical edge list: u < v, lexicographically sorted.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<Vertex>> adj_;
    std::size_t m_ = 0;
};

// ---- interchange ----

// "n m" header then m lines "u v"; '#' starts a comment line; blank lines skipped.
Graph parse_edge_list(std::string_view text);
Graph read_edge_list_file(const std::string& path);
std::string write_edge_list(const Graph& g);

// ---- transformations ----

// R_n: strong product of three n-vertex paths. Triple (i,j,k), 1-based, maps to
// (i-1)n^2 + (j-1)n + (k-1).
Graph strong_product_cube(int n);
Vertex cube_index(int n, int i, int j, int k);

// Replaces each edge uv by a path with reps[uv] internal vertices. New vertices are
// numbered from g.n() upward in canonical edge order. Keys are normalized to u < v.
Graph subdivide_edges(const Graph& g, const std::map<Edge, int>& reps);
Graph subdivide_edges(const Graph& g, int uniform_count);

struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_parent;  // local id -> id in the host graph
};
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

// Components as vertex sets, ordered by their smallest vertex.
std::vector<VertexSet> connected_components(const Graph& g);
// Components of g - removed.
std::vector<VertexSet> components_without(const Graph& g, const VertexSet& removed);

struct GraphStats {
    Vertex n = 0;
    std::size_t m = 0;
    int max_degree = 0;
    std::vector<int> component_sizes;  // descending
};
GraphStats graph_stats(const Graph& g);

// Distances from `source` inside the vertices flagged in `allowed` (-1 = unreachable).
std::vector<int> bfs_distances(const Graph& g, Vertex source, const std::vector<char>& allowed);
std::vector<int> bfs_distances(const Graph& g, Vertex source);

}  // namespace subexp
