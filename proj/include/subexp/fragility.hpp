#pragma once

#include "subexp/graph.hpp"
#include "subexp/rational.hpp"
#include "subexp/treedecomp.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace subexp {

struct PackingEntry {
    VertexSet set;
    Rational weight;
};

// Probability distribution over removal sets. Weights are exact rationals in
// both construction modes (sampled weights are count / draws).
struct FractionalPacking {
    std::vector<PackingEntry> entries;

    // pi(empty) = 1.
    static FractionalPacking trivial();

    // Merges duplicate sets, drops zero weights, sorts entries by set.
    void normalize();
    Rational total_weight() const;

    // Throws ArgumentError on negative weights, total != 1, or ids outside [0, n).
    void check(Vertex n) const;
};

// Witness class: graphs whose components all have at most `bound` vertices.
struct WitnessClassSpec {
    long long bound = 1;
};

Rational thickness_exact(const Graph& g, const FractionalPacking& pi);
double thickness(const Graph& g, const FractionalPacking& pi);

struct ComplementarityCheck {
    bool ok = true;
    std::string violation;  // first violation, empty when ok
};
ComplementarityCheck validate_complementary(const Graph& g, const FractionalPacking& pi, const WitnessClassSpec& w);

// Largest component of G - X over all support sets X (0 if every residual is empty).
long long max_residual_component(const Graph& g, const FractionalPacking& pi);

// u = ceil(3 / eps), snapped.
int grid_modulus(double eps);

// Packing of R_n: uniform over X_{n,t,u}, t = 0..u-1 (1-based coordinates), or
// trivial when n <= u - 1.
FractionalPacking grid_packing(int n, double eps);

// X_i = union of bags at depths = i (mod k), i = 0..k-1.
std::vector<VertexSet> layered_removal_sets(const Graph& g, const TreeDecomposition& t, int k);

struct SplitConstants {
    double c1 = 0, c2 = 0, c2prime = 0, c3 = 0, c4 = 0, c5 = 0, b = 0;
    double delta = 0, iota = 0;
    int max_degree = 0;
};

// Natural logarithm throughout.
SplitConstants split_constants(double c, double delta, double iota, int max_deg);

enum class PackingMode { Enumerate, Sample };

struct IteratedOptions {
    PackingMode mode = PackingMode::Enumerate;
    int sample_count = 200;
    std::uint64_t seed = 0;
    std::size_t enumeration_budget = 4096;
};

struct IteratedPacking {
    FractionalPacking packing;
    long long bound = 0;              // achieved: max residual component over the support
    double theoretical_bound = 0;     // b^{1/eps} (may be +inf)
    int rounds = 0;                   // t
    std::vector<double> round_sizes;  // n_0 .. n_t
    std::vector<int> round_k;         // k_i = max(1, ceil(iota ln n_i))
};

// Iterated layered construction. Trivial packing when ln n < c4 / eps.
// Enumerate mode throws RefusalError when the support would exceed the budget.
IteratedPacking iterated_vs_packing(const Graph& g, double eps, const SplitConstants& consts,
                                    const IteratedOptions& options);

// Distribution of X1 u X2 with weight pi1(X1) * inner(X1)(X2). Inner packings
// are on G - X1 with the local labels of induced_subgraph(G, V - X1).
FractionalPacking compose_packings(const Graph& g, const FractionalPacking& pi1,
                                   const std::map<VertexSet, FractionalPacking>& inner);

// Uniform over k sets: vertices whose BFS depth (per component, from its lowest
// vertex) is = i (mod k). Thickness 1/k.
FractionalPacking baker_layer_packing(const Graph& g, int k);

// Packing of G[sub] (local labels) induced by intersecting every set with sub.
FractionalPacking restrict_packing(const FractionalPacking& pi, const VertexSet& sub);

}  // namespace subexp
