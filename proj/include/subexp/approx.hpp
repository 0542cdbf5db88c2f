#pragma once

#include "subexp/fragility.hpp"
#include "subexp/graph.hpp"

namespace subexp {

struct IndependentSetResult {
    VertexSet vertices;
    int size = 0;
    int support_index = -1;  // packing entry whose residual produced the set
};

// Exact independence number; refuses components with more than 26 vertices.
int brute_alpha(const Graph& g);

// Exact maximum independent set, component by component.
// Requires comp_bound <= 26 and every component of g within comp_bound.
IndependentSetResult exact_max_independent_set(const Graph& g, int comp_bound);

// Best exact solution over the residuals G - X of the packing's support sets.
// Ties go to the lowest support index. Preconditions (thickness <= eps,
// complementarity, bound <= 26) raise ArgumentError.
IndependentSetResult ptas_independent_set(const Graph& g, double eps, const FractionalPacking& pi,
                                          const WitnessClassSpec& w);
IndependentSetResult ptas_independent_set_serial(const Graph& g, double eps, const FractionalPacking& pi,
                                                 const WitnessClassSpec& w);

// Is H a (not necessarily induced) subgraph of G? Backtracking with degree pruning.
bool contains_subgraph(const Graph& g, const Graph& h);

// H subset-of G decided on the packing's residuals. Refuses when the packing's
// thickness exceeds 1/(|V(H)|+1); ArgumentError if the packing is not complementary.
bool subgraph_test(const Graph& g, const Graph& h, const FractionalPacking& pi, const WitnessClassSpec& w);

}  // namespace subexp
