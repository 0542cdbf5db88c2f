#pragma once

#include "subexp/graph.hpp"

#include <string>
#include <vector>

namespace subexp {

struct TreeNode {
    int parent = -1;  // -1 for the root
    VertexSet bag;
    std::vector<int> children;
};

// Rooted tree decomposition. Node ids index `nodes`.
struct TreeDecomposition {
    std::vector<TreeNode> nodes;
    int root = -1;

    // Builds nodes from (parent, bag) pairs; fills child lists and the root.
    // Throws ArgumentError unless exactly one parent is -1 and all parents are valid ids.
    static TreeDecomposition from_parents(const std::vector<std::pair<int, VertexSet>>& entries);

    // Distance of every node from the root.
    std::vector<int> depths() const;
};

struct DecompositionReport {
    int width = -1;  // max bag size - 1
    int max_vertex_level_span = 0;
    std::vector<std::string> violations;
};

DecompositionReport validate_decomposition(const Graph& g, const TreeDecomposition& t);

// Recursive bounded-reuse construction with b = 12(tw_budget+1), w = delta*b.
// Requires max degree <= delta. Separator budget failures propagate as
// BudgetExceededError with the failing recursion node described.
TreeDecomposition build_bounded_reuse_decomposition(const Graph& g, int delta, int tw_budget);

// floor(105 * c * n^psi): treewidth bound for classes with separators of size c*n^psi.
long long tw_budget_from_separator(double c, double psi, long long n);

// 2 + 4 log2(delta + 1).
double level_span_bound(int delta);

}  // namespace subexp
