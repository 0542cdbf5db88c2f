#pragma once

// Exhaustive-search kernels. Every kernel exists twice: a plain serial
// reference in `serial` and an OpenMP version in `omp`. Both return identical
// results (the OpenMP versions reduce deterministically), which the unit tests
// check and bench/ measures.

#include "subexp/graph.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace subexp {

// Adjacency bitmasks for graphs with at most 64 vertices.
struct BitGraph {
    int n = 0;
    std::vector<std::uint64_t> adj;

    static constexpr int kMaxVertices = 64;
    static BitGraph from(const Graph& g);  // throws RefusalError if n > 64
    std::uint64_t all() const { return n == 64 ? ~0ULL : ((1ULL << n) - 1); }
};

namespace kernels {

// Components of the subgraph induced by `mask`, as bitmasks in order of lowest vertex.
std::vector<std::uint64_t> components(const BitGraph& g, std::uint64_t mask);

// Can components with the given weights be split into two groups each of total
// weight <= cap? Exact (subset-sum over reachable totals, total <= 64).
bool splittable(std::span<const int> weights, int cap);

// Same, returning for each component whether it goes to the first group.
std::optional<std::vector<char>> split_assignment(std::span<const int> weights, int cap);

struct EdgeExpansion {
    long long cut = 0;   // edges leaving the minimizing set
    long long size = 0;  // its size; 0 means no admissible set exists (n < 2)
};

// Densest k-shallow minor: blocks of a vertex partition, each inducing a
// connected subgraph within distance k of a center inside the block, followed
// by the densest subset of the quotient graph. Ties go to the first partition in
// restricted-growth-string order, then to the first subset in increasing mask order.
struct ShallowMinorChoice {
    long long edges = 0;
    int vertices = 0;                  // 0 only for the empty graph
    std::vector<std::uint64_t> blocks;  // chosen branch sets
    std::vector<int> centers;           // one per block
};

// Exhaustive-range ceiling for the partition kernel.
inline constexpr int kMaxPartitionVertices = 16;

namespace serial {

// First `size`-subset S (lexicographic order) of the vertices such that the
// components of G - S, weighted by |component & weight_mask|, split into two
// groups each of weight <= cap.
std::optional<std::uint64_t> find_balanced_separator(const BitGraph& g, int size,
                                                     std::uint64_t weight_mask, int cap);

// min over nonempty S, |S| <= n/2 of e(S, V - S) / |S|, as a reduced fraction.
EdgeExpansion min_edge_expansion(const BitGraph& g);

ShallowMinorChoice densest_shallow_minor(const BitGraph& g, int k);

}  // namespace serial

namespace omp {

std::optional<std::uint64_t> find_balanced_separator(const BitGraph& g, int size,
                                                     std::uint64_t weight_mask, int cap);
EdgeExpansion min_edge_expansion(const BitGraph& g);
ShallowMinorChoice densest_shallow_minor(const BitGraph& g, int k);

}  // namespace omp

}  // namespace kernels
}  // namespace subexp
