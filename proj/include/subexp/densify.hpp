#pragma once

#include "subexp/minors.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace subexp {

enum class DensifyKind { DenseMinor, CliqueMinor, Failed };

struct DensifyOutcome {
    DensifyKind kind = DensifyKind::Failed;
    Graph minor;                  // G' for DenseMinor, K_t for CliqueMinor
    MinorCertificate certificate;  // minor inside the input graph
    bool target_met = false;       // |E(G')| >= (c/32) t^4 |V(G')|^{1+eps+eps^2}
    bool hypotheses_met = false;   // c >= 64 and |E(G)| >= c t^4 n^{1+eps}
    int attempts = 0;              // sampling rounds used
    int skipped_stops = 0;         // stop vertices whose neighborhood had no K'_t
    std::string failed_stage;      // "peel" or "sample" when Failed
    std::string diagnostics;
};

struct DensifyOptions {
    int retries = 16;
    long long k1t_budget = 0;  // node budget for the K'_t search when t > 5
};

// One densify-or-clique step. Deterministic under the seed.
DensifyOutcome densify_or_clique(const Graph& g, int t, double eps, double c, std::uint64_t seed,
                                 const DensifyOptions& options = {});

struct IterateOptions {
    std::optional<double> c0;  // default 2 * 32^m
    DensifyOptions densify;
};

struct IterateOutcome {
    DensifyKind kind = DensifyKind::Failed;
    Graph minor;
    MinorCertificate certificate;
    int rounds = 0;                // densify steps performed
    long long depth = 0;           // exact composed depth
    bool depth_within_bound = true;  // depth <= 4^m
    std::string diagnostics;
};

// Up to m densify steps with c_r = c0 / 32^{r-1} and eps_r = eps + (r-1) eps^2,
// composing certificates after every step.
IterateOutcome iterate_densify(const Graph& g, int t, double eps, int m, std::uint64_t seed,
                               const IterateOptions& options = {});

struct ShallowCliqueOutcome {
    IterateOutcome outcome;
    int m = 0;
    int t = 0;
    std::string d;  // 4^m in decimal
};

// m = ceil(18/eps^2), t = floor(n^{eps/6}), d = 4^m; then iterate_densify with
// eps/6 and a final K'_t search on a dense outcome.
ShallowCliqueOutcome shallow_clique(const Graph& g, double eps, std::uint64_t seed, const IterateOptions& options = {});

}  // namespace subexp
