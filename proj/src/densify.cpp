#include "subexp/densify.hpp"

#include "subexp/errors.hpp"
#include "subexp/generators.hpp"
#include "subexp/rational.hpp"
#include "subexp/rng.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

namespace subexp {

namespace {

using Pair = std::pair<Vertex, Vertex>;

Pair ordered(Vertex a, Vertex b) { return a < b ? Pair{a, b} : Pair{b, a}; }

MinorCertificate trivial_clique_certificate(const Graph& g, int t) {
    MinorCertificate cert;
    if (t == 1 && g.n() > 0) cert.trees.push_back({0, {{0, -1}}});
    return cert;
}

// Stage 5: star contractions into A', stopping at vertices whose neighborhood
// is too dense to contract (then a K'_t search runs there).
class StarContraction {
public:
    StarContraction(const Graph& g, std::vector<Vertex> a_prime, int t, const DensifyOptions& opt)
        : g_(g), a_(std::move(a_prime)), t_(t), opt_(opt), adj_(a_.size()) {
        for (std::size_t i = 0; i < a_.size(); ++i) {
            local_[a_[i]] = static_cast<int>(i);
            trees_.push_back({{a_[i], -1}});
        }
    }

    // Returns a clique outcome if some stop vertex yields K'_t.
    std::optional<DensifyOutcome> process(const std::vector<Vertex>& b_prime, DensifyOutcome& diag) {
        for (Vertex v : b_prime) {
            std::vector<int> nv;
            for (Vertex x : g_.neighbors(v))
                if (auto it = local_.find(x); it != local_.end()) nv.push_back(it->second);
            const int size = static_cast<int>(nv.size());
            int pick = -1, pick_deg = 0;
            for (int w : nv) {
                int d = 0;
                for (int x : nv)
                    if (adj_[static_cast<std::size_t>(w)].count(x)) ++d;
                if (2 * d <= size - 2 && (pick < 0 || d < pick_deg)) {
                    pick = w;
                    pick_deg = d;
                }
            }
            if (pick >= 0) {
                contract(v, pick, nv);
                continue;
            }
            if (auto clique = stop(v, nv)) return clique;
            ++diag.skipped_stops;
        }
        return std::nullopt;
    }

    Graph minor() const {
        std::vector<Edge> edges;
        for (const auto& [key, w] : witness_) edges.push_back(key);
        return Graph::from_edges(static_cast<Vertex>(a_.size()), edges);
    }

    MinorCertificate certificate() const {
        MinorCertificate cert;
        cert.depth = 1;
        for (std::size_t i = 0; i < trees_.size(); ++i) cert.trees.push_back({static_cast<Vertex>(i), trees_[i]});
        for (const auto& [key, w] : witness_) cert.witness_edges.push_back(w);
        return cert;
    }

private:
    void contract(Vertex v, int w, const std::vector<int>& nv) {
        trees_[static_cast<std::size_t>(w)].push_back({v, a_[static_cast<std::size_t>(w)]});
        for (int x : nv) {
            if (x == w || adj_[static_cast<std::size_t>(w)].count(x)) continue;
            adj_[static_cast<std::size_t>(w)].insert(x);
            adj_[static_cast<std::size_t>(x)].insert(w);
            witness_[ordered(w, x)] = {w, x, v, a_[static_cast<std::size_t>(x)]};
        }
    }

    std::optional<DensifyOutcome> stop(Vertex v, const std::vector<int>& nv) {
        // H = G'[N_v] plus v joined to all of N_v, as a 1-minor of g.
        const auto hn = static_cast<Vertex>(nv.size());
        std::map<int, Vertex> hid;
        for (Vertex i = 0; i < hn; ++i) hid[nv[static_cast<std::size_t>(i)]] = i;
        MinorCertificate cert;
        cert.depth = 1;
        std::vector<Edge> edges;
        for (Vertex i = 0; i < hn; ++i) cert.trees.push_back({i, trees_[static_cast<std::size_t>(nv[static_cast<std::size_t>(i)])]});
        cert.trees.push_back({hn, {{v, -1}}});
        for (const auto& [key, w] : witness_) {
            const auto a = hid.find(w.i), b = hid.find(w.j);
            if (a == hid.end() || b == hid.end()) continue;
            cert.witness_edges.push_back({a->second, b->second, w.u, w.v});
            edges.push_back(ordered(a->second, b->second));
        }
        for (Vertex i = 0; i < hn; ++i) {
            cert.witness_edges.push_back({hn, i, v, a_[static_cast<std::size_t>(nv[static_cast<std::size_t>(i)])]});
            edges.push_back({i, hn});
        }
        const Graph h = Graph::from_edges(hn + 1, edges);
        K1tResult found;
        try {
            found = find_k1t(h, t_, opt_.k1t_budget);
        } catch (const RefusalError&) {
            return std::nullopt;
        }
        if (found.status != SearchStatus::Found) return std::nullopt;
        DensifyOutcome out;
        out.kind = DensifyKind::CliqueMinor;
        out.minor = complete_graph(t_);
        out.certificate = compose_certificates(g_, h, cert, out.minor, *found.certificate);
        return out;
    }

    const Graph& g_;
    std::vector<Vertex> a_;
    int t_;
    DensifyOptions opt_;
    std::map<Vertex, int> local_;
    std::vector<std::set<int>> adj_;
    std::vector<std::vector<Pair>> trees_;
    std::map<Pair, WitnessEdge> witness_;
};

}  // namespace

DensifyOutcome densify_or_clique(const Graph& g, int t, double eps, double c, std::uint64_t seed,
                                 const DensifyOptions& options) {
    if (!(eps > 0 && eps < 1)) throw ArgumentError("densify_or_clique: eps must lie in (0, 1)");
    if (t < 1) throw ArgumentError("densify_or_clique: t must be >= 1");
    if (!(c > 0)) throw ArgumentError("densify_or_clique: c must be > 0");
    if (options.retries < 1) throw ArgumentError("densify_or_clique: retries must be >= 1");

    DensifyOutcome out;
    const double t4 = std::pow(static_cast<double>(t), 4);
    const double n0 = g.n();
    out.hypotheses_met = c >= 64 && static_cast<double>(g.m()) >= c * t4 * std::pow(n0, 1 + eps);

    // Stage 1: peel low-degree vertices until the minimum degree exceeds c t^4 n^eps.
    std::vector<char> alive(static_cast<std::size_t>(g.n()), 1);
    std::vector<int> deg(static_cast<std::size_t>(g.n()));
    for (Vertex v = 0; v < g.n(); ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
    long long left = g.n();
    for (bool again = true; again && left > 0;) {
        again = false;
        for (Vertex v = 0; v < g.n() && left > 0; ++v) {
            const double limit = c * t4 * std::pow(static_cast<double>(left), eps);
            if (!alive[static_cast<std::size_t>(v)] || deg[static_cast<std::size_t>(v)] > limit) continue;
            alive[static_cast<std::size_t>(v)] = 0;
            --left;
            for (Vertex w : g.neighbors(v)) --deg[static_cast<std::size_t>(w)];
            again = true;
        }
    }
    if (left == 0) {
        out.failed_stage = "peel";
        out.diagnostics = "every vertex was removed while peeling to minimum degree above c*t^4*n^eps";
        return out;
    }
    const double n = static_cast<double>(left);

    // Stage 2: local-search max cut from a random start.
    Rng rng(seed);
    std::vector<char> side(static_cast<std::size_t>(g.n()), 0);
    for (Vertex v = 0; v < g.n(); ++v)
        if (alive[static_cast<std::size_t>(v)]) side[static_cast<std::size_t>(v)] = rng.bernoulli(0.5) ? 1 : 0;
    for (bool moved = true; moved;) {
        moved = false;
        for (Vertex v = 0; v < g.n(); ++v) {
            if (!alive[static_cast<std::size_t>(v)]) continue;
            int same = 0, other = 0;
            for (Vertex w : g.neighbors(v)) {
                if (!alive[static_cast<std::size_t>(w)]) continue;
                (side[static_cast<std::size_t>(w)] == side[static_cast<std::size_t>(v)] ? same : other)++;
            }
            if (same > other) {
                side[static_cast<std::size_t>(v)] ^= 1;
                moved = true;
            }
        }
    }
    std::vector<Vertex> a, b;
    for (Vertex v = 0; v < g.n(); ++v)
        if (alive[static_cast<std::size_t>(v)]) (side[static_cast<std::size_t>(v)] ? a : b).push_back(v);
    if (a.size() > b.size()) std::swap(a, b);
    std::vector<char> in_a(static_cast<std::size_t>(g.n()), 0);
    for (Vertex v : a) in_a[static_cast<std::size_t>(v)] = 1;

    // Stages 3-4: sample A' with p = n^-eps, keep B' with many neighbors in A'.
    const double p = std::pow(n, -eps);
    const double a_cap = std::pow(n, 1 - eps);
    const double need = c / 4 * t4;
    std::ostringstream diag;
    for (int attempt = 1; attempt <= options.retries; ++attempt) {
        out.attempts = attempt;
        std::vector<Vertex> a_prime;
        std::vector<char> in_ap(static_cast<std::size_t>(g.n()), 0);
        for (Vertex v : a)
            if (rng.bernoulli(p)) {
                a_prime.push_back(v);
                in_ap[static_cast<std::size_t>(v)] = 1;
            }
        std::vector<Vertex> b_prime;
        for (Vertex v : b) {
            int hits = 0;
            for (Vertex w : g.neighbors(v))
                if (in_ap[static_cast<std::size_t>(w)]) ++hits;
            if (hits >= need) b_prime.push_back(v);
        }
        if (static_cast<double>(a_prime.size()) >= a_cap || 2 * b_prime.size() <= b.size()) {
            diag << "attempt " << attempt << ": |A'|=" << a_prime.size() << " (cap " << a_cap << "), |B'|="
                 << b_prime.size() << " (|B|=" << b.size() << "); ";
            continue;
        }

        // Stage 5.
        StarContraction sc(g, a_prime, t, options);
        if (auto clique = sc.process(b_prime, out)) {
            clique->attempts = out.attempts;
            clique->hypotheses_met = out.hypotheses_met;
            clique->skipped_stops = out.skipped_stops;
            clique->diagnostics = diag.str();
            return *clique;
        }
        out.kind = DensifyKind::DenseMinor;
        out.minor = sc.minor();
        out.certificate = sc.certificate();
        const double vn = out.minor.n();
        out.target_met = static_cast<double>(out.minor.m()) >= c / 32 * t4 * std::pow(vn, 1 + eps + eps * eps);
        out.diagnostics = diag.str();
        return out;
    }
    out.failed_stage = "sample";
    out.diagnostics = diag.str();
    return out;
}

IterateOutcome iterate_densify(const Graph& g, int t, double eps, int m, std::uint64_t seed,
                               const IterateOptions& options) {
    if (m < 1) throw ArgumentError("iterate_densify: m must be >= 1");
    if (!(eps > 0 && eps < 1)) throw ArgumentError("iterate_densify: eps must lie in (0, 1)");
    const double c0 = options.c0.value_or(2.0 * std::pow(32.0, m));
    const long double bound = std::pow(4.0L, static_cast<long double>(m));

    IterateOutcome out;
    Graph cur = g;
    MinorCertificate total = identity_certificate(g);
    for (int r = 1; r <= m; ++r) {
        const double eps_r = eps + (r - 1) * eps * eps;
        if (eps_r >= 1) {
            out.kind = DensifyKind::Failed;
            out.diagnostics = "round " + std::to_string(r) + ": density exponent reached 1";
            break;
        }
        const double c_r = c0 / std::pow(32.0, r - 1);
        const std::uint64_t seed_r = r == 1 ? seed : derive_seed(seed, static_cast<std::uint64_t>(r - 1));
        auto step = densify_or_clique(cur, t, eps_r, c_r, seed_r, options.densify);
        out.rounds = r;
        if (step.kind == DensifyKind::Failed) {
            out.kind = DensifyKind::Failed;
            out.diagnostics = "round " + std::to_string(r) + ": failed at stage " + step.failed_stage + "; " +
                              step.diagnostics;
            out.minor = cur;
            out.certificate = total;
            break;
        }
        MinorCertificate next = r == 1 ? step.certificate
                                       : compose_certificates(g, cur, total, step.minor, step.certificate);
        out.depth = r == 1 ? step.certificate.depth : composed_depth(out.depth, step.certificate.depth);
        next.depth = static_cast<int>(out.depth);
        total = std::move(next);
        cur = std::move(step.minor);
        out.kind = step.kind;
        out.minor = cur;
        out.certificate = total;
        if (step.kind == DensifyKind::CliqueMinor) break;
    }
    out.depth_within_bound = static_cast<long double>(out.depth) <= bound;
    return out;
}

ShallowCliqueOutcome shallow_clique(const Graph& g, double eps, std::uint64_t seed, const IterateOptions& options) {
    if (!(eps > 0 && eps <= 1)) throw ArgumentError("shallow_clique: eps must lie in (0, 1]");
    ShallowCliqueOutcome res;
    res.m = static_cast<int>(ceil_snapped(18.0 / (eps * eps)));
    res.t = g.n() == 0 ? 0 : static_cast<int>(floor_snapped(std::pow(static_cast<double>(g.n()), eps / 6)));
    res.d = (BigInt(1) << (2 * res.m)).str();
    auto& out = res.outcome;
    if (res.t <= 1) {
        out.kind = DensifyKind::CliqueMinor;
        out.minor = complete_graph(res.t);
        out.certificate = trivial_clique_certificate(g, res.t);
        return res;
    }
    out = iterate_densify(g, res.t, eps / 6, res.m, seed, options);
    if (out.kind != DensifyKind::DenseMinor) return res;
    K1tResult found;
    try {
        found = find_k1t(out.minor, res.t, options.densify.k1t_budget);
    } catch (const RefusalError& e) {
        out.kind = DensifyKind::Failed;
        out.diagnostics += std::string("final K'_t search refused: ") + e.what();
        return res;
    }
    if (found.status != SearchStatus::Found) {
        out.kind = DensifyKind::Failed;
        out.diagnostics += "dense minor contains no K'_t";
        return res;
    }
    const Graph kt = complete_graph(res.t);
    out.certificate = compose_certificates(g, out.minor, out.certificate, kt, *found.certificate);
    out.depth = composed_depth(out.depth, 1);
    out.certificate.depth = static_cast<int>(out.depth);
    out.minor = kt;
    out.kind = DensifyKind::CliqueMinor;
    out.depth_within_bound = static_cast<long double>(out.depth) <= std::pow(4.0L, static_cast<long double>(res.m));
    return res;
}

}  // namespace subexp
