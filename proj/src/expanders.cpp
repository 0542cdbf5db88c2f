#include "subexp/expanders.hpp"

#include "subexp/errors.hpp"
#include "subexp/kernels.hpp"
#include "subexp/rng.hpp"
#include "subexp/separators.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <set>
#include <sstream>

namespace subexp {

Graph random_regular(Vertex n, int d, std::uint64_t seed, int attempts) {
    if (n < 1 || d < 0) throw ArgumentError("random_regular: need n >= 1 and d >= 0");
    if ((static_cast<long long>(n) * d) % 2 != 0) throw ArgumentError("random_regular: n*d must be even");
    if (n <= d) throw ArgumentError("random_regular: need n > d");
    Rng rng(seed);
    std::vector<Vertex> points;
    for (Vertex v = 0; v < n; ++v)
        for (int i = 0; i < d; ++i) points.push_back(v);
    for (int attempt = 0; attempt < attempts; ++attempt) {
        rng.shuffle(points);
        std::set<Edge> seen;
        bool simple = true;
        for (std::size_t i = 0; i + 1 < points.size() && simple; i += 2) {
            Vertex u = points[i], v = points[i + 1];
            if (u == v) simple = false;
            if (u > v) std::swap(u, v);
            if (!seen.insert({u, v}).second) simple = false;
        }
        if (simple) {
            const std::vector<Edge> edges(seen.begin(), seen.end());
            return Graph::from_edges(n, edges);
        }
    }
    throw RefusalError("random_regular: no simple pairing in " + std::to_string(attempts) + " attempts");
}

double ExpansionValue::value() const {
    if (size == 0) return std::numeric_limits<double>::infinity();
    return static_cast<double>(cut) / static_cast<double>(size);
}

namespace {

ExpansionValue expansion(const Graph& g, int n_limit, bool parallel) {
    const int limit = std::min(n_limit, BitGraph::kMaxVertices);
    if (g.n() > limit)
        throw RefusalError("edge_expansion_exact: " + std::to_string(g.n()) + " vertices exceeds the limit of " +
                           std::to_string(limit));
    const auto bg = BitGraph::from(g);
    const auto e = parallel ? kernels::omp::min_edge_expansion(bg) : kernels::serial::min_edge_expansion(bg);
    return {e.cut, e.size};
}

}  // namespace

ExpansionValue edge_expansion_exact(const Graph& g, int n_limit) { return expansion(g, n_limit, true); }

ExpansionValue edge_expansion_exact_serial(const Graph& g, int n_limit) { return expansion(g, n_limit, false); }

double expsep_bound(long long n_prime, int m, double alpha) {
    if (!(alpha > 0)) throw ArgumentError("expsep_bound: alpha must be > 0");
    if (m < 0 || n_prime < 1) throw ArgumentError("expsep_bound: need m >= 0 and n' >= 1");
    return static_cast<double>(n_prime) / (3.0 * (1.0 + 1.5 * m) * (6.0 / alpha + 2.0));
}

ExpanderReport expander_separator_experiment(Vertex n, int m, std::uint64_t seed, int separator_limit) {
    if (n < 4 || n > 20 || n % 2 != 0) throw RefusalError("expander experiment: n must be even and lie in [4, 20]");
    if (m < 0) throw ArgumentError("expander experiment: m must be >= 0");
    ExpanderReport r;
    r.n = n;
    r.m = m;
    r.seed = seed;
    r.n_prime = static_cast<Vertex>(n + static_cast<long long>(m) * (3 * n / 2));
    if (r.n_prime > std::min(separator_limit, BitGraph::kMaxVertices))
        throw RefusalError("expander experiment: subdivided graph has " + std::to_string(r.n_prime) +
                           " vertices, above the exact separator limit");
    Graph g;
    for (int draw = 0;; ++draw) {
        g = random_regular(n, 3, derive_seed(seed, static_cast<std::uint64_t>(draw)));
        if (connected_components(g).size() == 1) break;
        ++r.resamples;
        if (draw > 1000) throw RefusalError("expander experiment: no connected sample in 1000 draws");
    }
    const auto alpha = edge_expansion_exact(g);
    r.alpha_cut = alpha.cut;
    r.alpha_size = alpha.size;
    r.alpha = alpha.value();
    const Graph sub = subdivide_edges(g, m);
    r.separator_found = exact_min_balanced_separation(sub, separator_limit).size;
    r.bound = expsep_bound(sub.n(), m, r.alpha);
    return r;
}

std::string expander_csv_header() { return "n,d,alpha,m,n_prime,separator_found,bound"; }

std::string expander_csv_row(const ExpanderReport& r) {
    std::ostringstream os;
    os << std::setprecision(12) << r.n << ',' << r.d << ',' << r.alpha << ',' << r.m << ',' << r.n_prime << ','
       << r.separator_found << ',' << r.bound;
    return os.str();
}

}  // namespace subexp
