#pragma once

#include "subexp/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace subexp {

// A separation (A, B): V(A) = side_a, V(B) = side_b, separator = side_a ∩ side_b.
struct Separation {
    VertexSet side_a;
    VertexSet side_b;
    int size = 0;
    bool balanced = false;

    VertexSet separator() const { return set_intersection(side_a, side_b); }
};

// Strict sides may hold at most floor(2n/3) vertices.
inline int balance_cap(int n) { return (2 * n) / 3; }

// Fills in size and the balanced flag.
Separation make_separation(const Graph& g, VertexSet side_a, VertexSet side_b);

// The separation (G, G - E(G)): both sides are all of V(G).
Separation trivial_separation(const Graph& g);

// Violations of the Separation invariants; empty when valid.
std::vector<std::string> validate_separation(const Graph& g, const Separation& s);

// Splits components of G - separator into two sides so that the weight of each
// strict side (weight = number of vertices of `weighted` in it) is <= cap.
// Returns nullopt if no split exists. `weighted` = all vertices gives plain balance.
std::optional<Separation> separation_from_separator(const Graph& g, const VertexSet& separator,
                                                    const VertexSet& weighted, int cap);

// Minimum balanced separation by exhaustive search over separator sizes 0, 1, 2, ...
// Refuses graphs with more than n_limit vertices (hard ceiling 64).
Separation exact_min_balanced_separation(const Graph& g, int n_limit = 30);

// Serial reference of the above (same result).
Separation exact_min_balanced_separation_serial(const Graph& g, int n_limit = 30);

// Smallest BFS layer (from pseudo-peripheral roots) whose removal admits a balanced
// split; falls back to the trivial separation.
Separation heuristic_balanced_separation(const Graph& g);

// Separation with |X - side_a|, |X - side_b| <= floor(2|X|/3) and size <= size_budget.
// Exact minimum when n <= exact_limit, otherwise a BFS-layer heuristic.
// Throws BudgetExceededError carrying the best size found.
Separation x_balanced_separator(const Graph& g, const VertexSet& x, int size_budget, int exact_limit = 30);

// A vertex far from `start` within its component (repeated BFS sweeps).
Vertex pseudo_peripheral_vertex(const Graph& g, Vertex start);

}  // namespace subexp
