#pragma once

#include "subexp/graph.hpp"
#include "subexp/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace subexp {

// Branch set of one model vertex: (vertex, parent) pairs, root first with parent -1.
struct BranchTree {
    Vertex model_vertex = 0;
    std::vector<std::pair<Vertex, Vertex>> nodes;
};

// Model edge ij realized by the host edge uv, u in tree i and v in tree j.
struct WitnessEdge {
    Vertex i = 0, j = 0, u = 0, v = 0;
    friend bool operator==(const WitnessEdge&, const WitnessEdge&) = default;
};

// Certifies that a model graph H is a depth-minor of a host graph G.
struct MinorCertificate {
    int depth = 0;
    std::vector<BranchTree> trees;
    std::vector<WitnessEdge> witness_edges;
};

struct CertificateCheck {
    bool ok = true;
    std::vector<std::string> violations;
};

CertificateCheck verify_certificate(const Graph& g, const Graph& h, const MinorCertificate& cert);

// Largest root distance over all branch trees (-1 for malformed trees).
int measured_depth(const MinorCertificate& cert);

// The model graph a certificate describes: one vertex per tree, one edge per witness.
Graph model_graph(const MinorCertificate& cert);

// G as a 0-minor of itself.
MinorCertificate identity_certificate(const Graph& g);

// d1 + d2 (2 d1 + 1).
long long composed_depth(long long d1, long long d2);

// cert1 shows hp is a d1-minor of g; cert2 shows h is a d2-minor of hp. Returns
// a certificate of h in g with depth field composed_depth(d1, d2). Throws
// ArgumentError if either input fails verification.
MinorCertificate compose_certificates(const Graph& g, const Graph& hp, const MinorCertificate& cert1, const Graph& h,
                                      const MinorCertificate& cert2);

struct DensityReport {
    int k = 0;
    int vertices = 0;
    long long edges = 0;
    Rational density = 0;
    Graph minor;
    MinorCertificate certificate;
};

// Exact max density over k-minors (n <= 10). Parallel kernel; the serial
// variant runs the reference enumeration.
DensityReport nabla_brute(const Graph& g, int k);
DensityReport nabla_brute_serial(const Graph& g, int k);

// Certified lower bound on the max density over k-minors.
DensityReport nabla_greedy(const Graph& g, int k);

enum class SearchStatus { Found, NotFound, BudgetExhausted };

struct K1tResult {
    SearchStatus status = SearchStatus::NotFound;
    std::optional<MinorCertificate> certificate;  // K_t at depth <= 1 when found
    long long nodes_explored = 0;
};

// Searches for K'_t as a subgraph. Exact for t <= 5; larger t needs a positive
// node budget (refusal otherwise). budget = 0 means unlimited.
K1tResult find_k1t(const Graph& g, int t, long long budget = 0);

}  // namespace subexp
