#pragma once

#include "subexp/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace subexp {

// d-regular simple graph from the pairing model, rejecting loops and multi-edges.
// Throws ArgumentError on n*d odd or n <= d, RefusalError when `attempts` pairings fail.
Graph random_regular(Vertex n, int d, std::uint64_t seed, int attempts = 10000);

struct ExpansionValue {
    long long cut = 0;
    long long size = 0;  // 0 when no admissible set exists (n < 2)
    double value() const;  // +inf when size == 0
};

// min over nonempty S, |S| <= n/2 of e(S, V-S)/|S|, as a reduced fraction.
// Refuses graphs above n_limit (hard ceiling 64). Parallel kernel; `_serial` is the reference.
ExpansionValue edge_expansion_exact(const Graph& g, int n_limit = 24);
ExpansionValue edge_expansion_exact_serial(const Graph& g, int n_limit = 24);

// n' / (3 (1 + 3m/2) (6/alpha + 2)).
double expsep_bound(long long n_prime, int m, double alpha);

struct ExpanderReport {
    Vertex n = 0;
    int d = 3;
    double alpha = 0;
    long long alpha_cut = 0, alpha_size = 0;  // alpha as a fraction
    int m = 0;
    Vertex n_prime = 0;
    int separator_found = 0;
    double bound = 0;
    int resamples = 0;  // disconnected samples rejected
    std::uint64_t seed = 0;
};

// Random 3-regular graph on n vertices (resampling disconnected draws), every
// edge subdivided exactly m times, exact minimum balanced separation compared
// with expsep_bound. Refuses n > 20 or n' above the separator limit.
ExpanderReport expander_separator_experiment(Vertex n, int m, std::uint64_t seed, int separator_limit = 64);

std::string expander_csv_header();
std::string expander_csv_row(const ExpanderReport& r);

}  // namespace subexp
