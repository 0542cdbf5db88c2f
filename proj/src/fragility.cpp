#include "subexp/fragility.hpp"

#include "subexp/errors.hpp"
#include "subexp/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace subexp {

FractionalPacking FractionalPacking::trivial() {
    FractionalPacking p;
    p.entries.push_back({VertexSet{}, Rational(1)});
    return p;
}

void FractionalPacking::normalize() {
    std::map<VertexSet, Rational> merged;
    for (auto& e : entries) merged[e.set] += e.weight;
    entries.clear();
    for (auto& [set, w] : merged)
        if (w != 0) entries.push_back({set, w});
}

Rational FractionalPacking::total_weight() const {
    Rational t = 0;
    for (const auto& e : entries) t += e.weight;
    return t;
}

void FractionalPacking::check(Vertex n) const {
    for (const auto& e : entries) {
        if (e.weight < 0) throw ArgumentError("packing has a negative weight");
        e.set.check_within(n, "packing set");
    }
    if (total_weight() != 1) throw ArgumentError("packing weights sum to " + rational_to_string(total_weight()) + ", not 1");
}

Rational thickness_exact(const Graph& g, const FractionalPacking& pi) {
    std::vector<Rational> load(static_cast<std::size_t>(g.n()));
    for (const auto& e : pi.entries) {
        e.set.check_within(g.n(), "packing set");
        for (Vertex v : e.set) load[static_cast<std::size_t>(v)] += e.weight;
    }
    Rational best = 0;
    for (const auto& l : load) best = std::max(best, l);
    return best;
}

double thickness(const Graph& g, const FractionalPacking& pi) { return to_double(thickness_exact(g, pi)); }

ComplementarityCheck validate_complementary(const Graph& g, const FractionalPacking& pi, const WitnessClassSpec& w) {
    for (std::size_t i = 0; i < pi.entries.size(); ++i) {
        const auto& e = pi.entries[i];
        if (e.weight == 0) continue;
        e.set.check_within(g.n(), "packing set");
        for (const auto& comp : components_without(g, e.set)) {
            if (static_cast<long long>(comp.size()) <= w.bound) continue;
            return {false, "support set " + std::to_string(i) + ": component of size " + std::to_string(comp.size()) +
                               " containing vertex " + std::to_string(comp[0]) + " exceeds bound " +
                               std::to_string(w.bound)};
        }
    }
    return {};
}

long long max_residual_component(const Graph& g, const FractionalPacking& pi) {
    long long best = 0;
    for (const auto& e : pi.entries) {
        if (e.weight == 0) continue;
        for (const auto& comp : components_without(g, e.set)) best = std::max(best, static_cast<long long>(comp.size()));
    }
    return best;
}

int grid_modulus(double eps) {
    if (!(eps > 0 && eps <= 1)) throw ArgumentError("eps must lie in (0, 1]");
    return static_cast<int>(ceil_snapped(3.0 / eps));
}

FractionalPacking grid_packing(int n, double eps) {
    const int u = grid_modulus(eps);
    if (n < 1 || n > 400) throw ArgumentError("grid_packing: n must lie in [1, 400]");
    if (n <= u - 1) return FractionalPacking::trivial();
    FractionalPacking p;
    for (int t = 0; t < u; ++t) {
        std::vector<Vertex> ids;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                for (int k = 1; k <= n; ++k)
                    if (i % u == t || j % u == t || k % u == t) ids.push_back(cube_index(n, i, j, k));
        p.entries.push_back({VertexSet(std::move(ids)), Rational(1, u)});
    }
    p.normalize();
    return p;
}

std::vector<VertexSet> layered_removal_sets(const Graph& g, const TreeDecomposition& t, int k) {
    if (k < 1) throw ArgumentError("layered_removal_sets: k must be >= 1");
    const auto rep = validate_decomposition(g, t);
    if (!rep.violations.empty()) throw ArgumentError("layered_removal_sets: invalid decomposition: " + rep.violations[0]);
    const auto depth = t.depths();
    std::vector<std::vector<Vertex>> sets(static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
        auto& s = sets[static_cast<std::size_t>(depth[i] % k)];
        s.insert(s.end(), t.nodes[i].bag.begin(), t.nodes[i].bag.end());
    }
    std::vector<VertexSet> out;
    for (auto& s : sets) out.emplace_back(std::move(s));
    return out;
}

SplitConstants split_constants(double c, double delta, double iota, int max_deg) {
    if (!(c >= 1)) throw ArgumentError("split_constants: c must be >= 1");
    if (!(delta >= 0 && delta < 1)) throw ArgumentError("split_constants: delta must lie in [0, 1)");
    if (!(iota > 0)) throw ArgumentError("split_constants: iota must be > 0");
    if (!(delta + iota < 1)) throw ArgumentError("split_constants: delta + iota must be < 1");
    if (max_deg < 0) throw ArgumentError("split_constants: max degree must be >= 0");
    SplitConstants s;
    s.delta = delta;
    s.iota = iota;
    s.max_degree = max_deg;
    s.c1 = 105.0 * c;
    s.c2 = 24.0 * (s.c1 + 1.0) * (max_deg + 1.0);
    s.c2prime = std::pow(s.c2, 1.0 / (1.0 - (delta + iota)));
    s.c3 = 1.0 / (delta + iota);
    s.c4 = (2.0 + 4.0 * std::log(max_deg + 1.0)) / ((s.c3 - 1.0) * iota);
    s.c5 = std::exp(s.c3 * s.c4);
    s.b = s.c2prime * s.c5;
    return s;
}

namespace {

using Dist = std::map<VertexSet, Rational>;

class IteratedBuilder {
public:
    IteratedBuilder(const Graph& g, const SplitConstants& k, const IteratedOptions& opt, std::vector<double> sizes,
                    std::vector<int> ks)
        : g_(g), consts_(k), opt_(opt), sizes_(std::move(sizes)), ks_(std::move(ks)) {}

    int rounds() const { return static_cast<int>(ks_.size()); }

    // Distribution of the removed set inside component `comp` from round i on.
    const Dist& component_dist(const VertexSet& comp, int round) {
        const auto key = std::make_pair(comp, round);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        Dist out;
        if (round == rounds()) {
            out[VertexSet{}] = 1;
        } else {
            const auto& layers = layers_for(comp, round);
            const Rational share(1, static_cast<long long>(layers.size()));
            for (const auto& x : layers) {
                Dist d = product(residual_components(comp, x), round + 1);
                for (auto& [set, w] : d) out[set_union(set, x)] += w * share;
                check_budget(out.size());
            }
        }
        return memo_.emplace(key, std::move(out)).first->second;
    }

    Dist product(const std::vector<VertexSet>& comps, int round) {
        Dist acc{{VertexSet{}, Rational(1)}};
        for (const auto& c : comps) {
            const Dist& d = component_dist(c, round);
            if (d.size() == 1 && d.begin()->first.empty()) continue;
            Dist next;
            for (const auto& [s1, w1] : acc)
                for (const auto& [s2, w2] : d) next[set_union(s1, s2)] += w1 * w2;
            check_budget(next.size());
            acc = std::move(next);
        }
        return acc;
    }

    VertexSet sample(const VertexSet& comp, int round, Rng& rng) {
        if (round == rounds()) return {};
        const auto& layers = layers_for(comp, round);
        const auto& x = layers[rng.below(layers.size())];
        VertexSet out = x;
        for (const auto& sub : residual_components(comp, x)) out = set_union(out, sample(sub, round + 1, rng));
        return out;
    }

private:
    void check_budget(std::size_t size) const {
        if (size > opt_.enumeration_budget)
            throw RefusalError("iterated_vs_packing: support exceeds the enumeration budget of " +
                               std::to_string(opt_.enumeration_budget) + " sets; use sample mode");
    }

    std::vector<VertexSet> residual_components(const VertexSet& comp, const VertexSet& removed) {
        const VertexSet rest = set_difference(comp, removed);
        if (rest.empty()) return {};
        const auto sub = induced_subgraph(g_, rest);
        std::vector<VertexSet> out;
        for (const auto& c : connected_components(sub.graph)) {
            std::vector<Vertex> ids;
            for (Vertex v : c) ids.push_back(sub.to_parent[static_cast<std::size_t>(v)]);
            out.emplace_back(std::move(ids));
        }
        return out;
    }

    // k_i layered sets of the bounded-reuse decomposition of G[comp].
    const std::vector<VertexSet>& layers_for(const VertexSet& comp, int round) {
        const auto key = std::make_pair(comp, round);
        if (auto it = layers_.find(key); it != layers_.end()) return it->second;
        const auto sub = induced_subgraph(g_, comp);
        const double ni = sizes_[static_cast<std::size_t>(round)];
        const double raw = consts_.c1 * std::pow(ni, consts_.delta);
        const int tw = static_cast<int>(std::min<double>(floor_snapped(raw), 1e8));
        const auto td = build_bounded_reuse_decomposition(sub.graph, consts_.max_degree, tw);
        std::vector<VertexSet> lifted;
        for (const auto& x : layered_removal_sets(sub.graph, td, ks_[static_cast<std::size_t>(round)])) {
            std::vector<Vertex> ids;
            for (Vertex v : x) ids.push_back(sub.to_parent[static_cast<std::size_t>(v)]);
            lifted.emplace_back(std::move(ids));
        }
        return layers_.emplace(key, std::move(lifted)).first->second;
    }

    const Graph& g_;
    SplitConstants consts_;
    IteratedOptions opt_;
    std::vector<double> sizes_;
    std::vector<int> ks_;
    std::map<std::pair<VertexSet, int>, Dist> memo_;
    std::map<std::pair<VertexSet, int>, std::vector<VertexSet>> layers_;
};

}  // namespace

IteratedPacking iterated_vs_packing(const Graph& g, double eps, const SplitConstants& consts,
                                    const IteratedOptions& options) {
    if (!(eps > 0 && eps <= 1)) throw ArgumentError("iterated_vs_packing: eps must lie in (0, 1]");
    if (g.n() == 0) throw ArgumentError("iterated_vs_packing: graph must be nonempty");
    if (g.max_degree() > consts.max_degree)
        throw ArgumentError("iterated_vs_packing: graph has maximum degree " + std::to_string(g.max_degree()) +
                            " above the constants' " + std::to_string(consts.max_degree));
    if (!(consts.c3 > 1) || !(consts.c4 > 0)) throw ArgumentError("iterated_vs_packing: need c3 > 1 and c4 > 0");
    if (options.mode == PackingMode::Sample && options.sample_count < 1)
        throw ArgumentError("iterated_vs_packing: sample_count must be >= 1");

    IteratedPacking out;
    out.theoretical_bound = std::pow(consts.b, 1.0 / eps);
    const double log_n = std::log(static_cast<double>(g.n()));
    out.round_sizes.push_back(g.n());
    if (log_n < consts.c4 / eps) {
        out.packing = FractionalPacking::trivial();
        out.bound = max_residual_component(g, out.packing);
        return out;
    }
    int t = 0;
    while (t < 64 && consts.c4 * std::pow(consts.c3, t + 1) / log_n <= eps) ++t;
    out.rounds = t;
    for (int i = 0; i < t; ++i) {
        const double ni = out.round_sizes.back();
        out.round_k.push_back(std::max(1, static_cast<int>(ceil_snapped(consts.iota * std::log(ni)))));
        out.round_sizes.push_back(consts.c2 * std::pow(ni, consts.delta + consts.iota));
    }

    IteratedBuilder builder(g, consts, options, out.round_sizes, out.round_k);
    const auto comps = connected_components(g);
    if (options.mode == PackingMode::Enumerate) {
        for (auto& [set, w] : builder.product(comps, 0)) out.packing.entries.push_back({set, w});
    } else {
        std::map<VertexSet, long long> counts;
        for (int d = 0; d < options.sample_count; ++d) {
            Rng rng(derive_seed(options.seed, static_cast<std::uint64_t>(d)));
            VertexSet y;
            for (const auto& c : comps) y = set_union(y, builder.sample(c, 0, rng));
            ++counts[y];
        }
        for (auto& [set, cnt] : counts) out.packing.entries.push_back({set, Rational(cnt, options.sample_count)});
    }
    out.packing.normalize();
    out.bound = max_residual_component(g, out.packing);
    return out;
}

FractionalPacking compose_packings(const Graph& g, const FractionalPacking& pi1,
                                   const std::map<VertexSet, FractionalPacking>& inner) {
    FractionalPacking out;
    for (const auto& e : pi1.entries) {
        if (e.weight == 0) continue;
        e.set.check_within(g.n(), "packing set");
        const auto it = inner.find(e.set);
        if (it == inner.end()) throw ArgumentError("compose_packings: no inner packing for a support set of pi1");
        const VertexSet rest = set_difference(VertexSet::range(g.n()), e.set);
        for (const auto& f : it->second.entries) {
            f.set.check_within(static_cast<Vertex>(rest.size()), "inner packing set");
            std::vector<Vertex> ids(e.set.begin(), e.set.end());
            for (Vertex v : f.set) ids.push_back(rest[static_cast<std::size_t>(v)]);
            out.entries.push_back({VertexSet(std::move(ids)), e.weight * f.weight});
        }
    }
    out.normalize();
    return out;
}

FractionalPacking baker_layer_packing(const Graph& g, int k) {
    if (k < 1) throw ArgumentError("baker_layer_packing: k must be >= 1");
    std::vector<std::vector<Vertex>> sets(static_cast<std::size_t>(k));
    for (const auto& comp : connected_components(g)) {
        const auto dist = bfs_distances(g, comp[0]);
        for (Vertex v : comp) sets[static_cast<std::size_t>(dist[static_cast<std::size_t>(v)] % k)].push_back(v);
    }
    FractionalPacking p;
    for (auto& s : sets) p.entries.push_back({VertexSet(std::move(s)), Rational(1, k)});
    p.normalize();
    return p;
}

FractionalPacking restrict_packing(const FractionalPacking& pi, const VertexSet& sub) {
    FractionalPacking out;
    for (const auto& e : pi.entries) {
        std::vector<Vertex> ids;
        for (Vertex v : set_intersection(e.set, sub))
            ids.push_back(static_cast<Vertex>(std::lower_bound(sub.begin(), sub.end(), v) - sub.begin()));
        out.entries.push_back({VertexSet(std::move(ids)), e.weight});
    }
    out.normalize();
    return out;
}

}  // namespace subexp
