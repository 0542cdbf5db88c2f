#include "subexp/separators.hpp"

#include "subexp/errors.hpp"
#include "subexp/kernels.hpp"

#include <algorithm>
#include <numeric>

namespace subexp {

namespace {

// Exact subset-sum split when affordable, first-fit decreasing otherwise.
std::optional<std::vector<char>> split_weights(const std::vector<int>& weights, int cap) {
    if (cap < 0) return std::nullopt;
    const long long total = std::accumulate(weights.begin(), weights.end(), 0LL);
    if (total <= 64) return kernels::split_assignment(weights, cap);

    std::vector<std::size_t> heavy;
    for (std::size_t i = 0; i < weights.size(); ++i)
        if (weights[i] > 0) heavy.push_back(i);
    std::vector<char> first(weights.size(), 0);
    if (static_cast<long long>(heavy.size()) * (total + 1) <= 40'000'000LL) {
        const std::size_t width = static_cast<std::size_t>(total) + 1;
        std::vector<std::vector<char>> reach(heavy.size() + 1, std::vector<char>(width, 0));
        reach[0][0] = 1;
        for (std::size_t i = 0; i < heavy.size(); ++i) {
            const auto w = static_cast<std::size_t>(weights[heavy[i]]);
            reach[i + 1] = reach[i];
            for (std::size_t x = w; x < width; ++x)
                if (reach[i][x - w]) reach[i + 1][x] = 1;
        }
        long long target = -1;
        for (long long x = std::max(0LL, total - cap); x <= std::min<long long>(cap, total); ++x)
            if (reach.back()[static_cast<std::size_t>(x)]) {
                target = x;
                break;
            }
        if (target < 0) return std::nullopt;
        for (std::size_t i = heavy.size(); i-- > 0;) {
            if (reach[i][static_cast<std::size_t>(target)]) continue;
            first[heavy[i]] = 1;
            target -= weights[heavy[i]];
        }
        return first;
    }
    std::sort(heavy.begin(), heavy.end(), [&](auto a, auto b) { return weights[a] > weights[b]; });
    long long a = 0, b = 0;
    for (auto i : heavy) {
        if (a + weights[i] <= cap) {
            a += weights[i];
            first[i] = 1;
        } else {
            b += weights[i];
        }
    }
    if (b > cap) return std::nullopt;
    return first;
}

VertexSet mask_to_set(std::uint64_t mask) {
    std::vector<Vertex> ids;
    for (; mask; mask &= mask - 1) ids.push_back(std::countr_zero(mask));
    return VertexSet(std::move(ids));
}

std::uint64_t set_to_mask(const VertexSet& s) {
    std::uint64_t m = 0;
    for (Vertex v : s) m |= 1ULL << v;
    return m;
}

// BFS layers of the component of `root`.
std::vector<VertexSet> bfs_layers(const Graph& g, Vertex root) {
    const auto dist = bfs_distances(g, root);
    int depth = 0;
    for (int d : dist) depth = std::max(depth, d);
    std::vector<std::vector<Vertex>> layers(static_cast<std::size_t>(depth) + 1);
    for (Vertex v = 0; v < g.n(); ++v)
        if (dist[static_cast<std::size_t>(v)] >= 0) layers[static_cast<std::size_t>(dist[static_cast<std::size_t>(v)])].push_back(v);
    std::vector<VertexSet> out;
    for (auto& l : layers) out.emplace_back(std::move(l));
    return out;
}

// Candidate separators for the heuristic searches, smallest first.
std::vector<VertexSet> layer_candidates(const Graph& g, const std::vector<Vertex>& roots) {
    std::vector<VertexSet> cands{VertexSet{}};
    for (Vertex r : roots) {
        auto layers = bfs_layers(g, r);
        // Skip the root layer: removing a single far vertex rarely balances anything.
        for (std::size_t i = 1; i < layers.size(); ++i) cands.push_back(std::move(layers[i]));
        if (!layers.empty()) cands.push_back(std::move(layers[0]));
    }
    std::stable_sort(cands.begin(), cands.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    return cands;
}

std::vector<Vertex> heuristic_roots(const Graph& g, const VertexSet& weighted) {
    std::vector<Vertex> roots;
    if (g.n() == 0) return roots;
    // Component carrying the most weight.
    const auto comps = connected_components(g);
    std::size_t best = 0, best_w = 0;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const std::size_t w = set_intersection(comps[i], weighted).size();
        if (w > best_w || (w == best_w && comps[i].size() > comps[best].size())) {
            best = i;
            best_w = w;
        }
    }
    const Vertex start = comps[best][0];
    roots.push_back(pseudo_peripheral_vertex(g, start));
    if (!weighted.empty()) {
        roots.push_back(weighted[0]);
        roots.push_back(pseudo_peripheral_vertex(g, weighted[0]));
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

Separation exact_min_impl(const Graph& g, int n_limit, bool parallel) {
    if (g.n() > std::min(n_limit, BitGraph::kMaxVertices)) {
        throw RefusalError("exact_min_balanced_separation: " + std::to_string(g.n()) + " vertices exceeds limit " +
                           std::to_string(std::min(n_limit, BitGraph::kMaxVertices)) +
                           "; use heuristic_balanced_separation");
    }
    const auto bg = BitGraph::from(g);
    const int cap = balance_cap(g.n());
    const auto all = VertexSet::range(g.n());
    for (int s = 0; s <= g.n(); ++s) {
        const auto mask = parallel ? kernels::omp::find_balanced_separator(bg, s, bg.all(), cap)
                                   : kernels::serial::find_balanced_separator(bg, s, bg.all(), cap);
        if (mask) return *separation_from_separator(g, mask_to_set(*mask), all, cap);
    }
    return trivial_separation(g);  // unreachable: s = n always works
}

}  // namespace

Separation make_separation(const Graph& g, VertexSet side_a, VertexSet side_b) {
    Separation s;
    s.side_a = std::move(side_a);
    s.side_b = std::move(side_b);
    const VertexSet sep = s.separator();
    s.size = static_cast<int>(sep.size());
    const int cap = balance_cap(g.n());
    s.balanced = static_cast<int>(s.side_a.size() - sep.size()) <= cap &&
                 static_cast<int>(s.side_b.size() - sep.size()) <= cap;
    return s;
}

Separation trivial_separation(const Graph& g) {
    return make_separation(g, VertexSet::range(g.n()), VertexSet::range(g.n()));
}

std::vector<std::string> validate_separation(const Graph& g, const Separation& s) {
    std::vector<std::string> out;
    for (const auto* side : {&s.side_a, &s.side_b}) {
        if (!side->empty() && (side->ids().front() < 0 || side->ids().back() >= g.n())) {
            out.push_back("vertex id out of range");
            return out;
        }
    }
    if (set_union(s.side_a, s.side_b).size() != static_cast<std::size_t>(g.n())) out.push_back("sides do not cover V(G)");
    const VertexSet only_a = set_difference(s.side_a, s.side_b);
    const VertexSet only_b = set_difference(s.side_b, s.side_a);
    for (Vertex u : only_a)
        for (Vertex v : g.neighbors(u))
            if (only_b.contains(v)) {
                out.push_back("edge " + std::to_string(u) + "-" + std::to_string(v) + " crosses the separation");
                break;
            }
    const VertexSet sep = s.separator();
    if (static_cast<int>(sep.size()) != s.size) out.push_back("size field does not match |A ∩ B|");
    const int cap = balance_cap(g.n());
    const bool balanced = static_cast<int>(only_a.size()) <= cap && static_cast<int>(only_b.size()) <= cap;
    if (balanced != s.balanced) out.push_back("balanced flag is wrong");
    return out;
}

std::optional<Separation> separation_from_separator(const Graph& g, const VertexSet& separator,
                                                    const VertexSet& weighted, int cap) {
    const auto comps = components_without(g, separator);
    std::vector<int> weights;
    weights.reserve(comps.size());
    for (const auto& c : comps) weights.push_back(static_cast<int>(set_intersection(c, weighted).size()));
    const auto first = split_weights(weights, cap);
    if (!first) return std::nullopt;
    std::vector<Vertex> a(separator.begin(), separator.end());
    std::vector<Vertex> b = a;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        auto& side = (*first)[i] ? a : b;
        side.insert(side.end(), comps[i].begin(), comps[i].end());
    }
    if (b.size() > a.size()) std::swap(a, b);
    return make_separation(g, VertexSet(std::move(a)), VertexSet(std::move(b)));
}

Separation exact_min_balanced_separation(const Graph& g, int n_limit) { return exact_min_impl(g, n_limit, true); }

Separation exact_min_balanced_separation_serial(const Graph& g, int n_limit) {
    return exact_min_impl(g, n_limit, false);
}

Vertex pseudo_peripheral_vertex(const Graph& g, Vertex start) {
    Vertex v = start;
    int ecc = -1;
    for (int sweep = 0; sweep < 8; ++sweep) {
        const auto dist = bfs_distances(g, v);
        Vertex far = v;
        for (Vertex w = 0; w < g.n(); ++w)
            if (dist[static_cast<std::size_t>(w)] > dist[static_cast<std::size_t>(far)]) far = w;
        const int d = dist[static_cast<std::size_t>(far)];
        if (d <= ecc) break;
        ecc = d;
        v = far;
    }
    return v;
}

Separation heuristic_balanced_separation(const Graph& g) {
    const auto all = VertexSet::range(g.n());
    const int cap = balance_cap(g.n());
    for (const auto& cand : layer_candidates(g, heuristic_roots(g, all))) {
        if (auto sep = separation_from_separator(g, cand, all, cap)) return *sep;
    }
    return trivial_separation(g);
}

Separation x_balanced_separator(const Graph& g, const VertexSet& x, int size_budget, int exact_limit) {
    x.check_within(g.n(), "x_balanced_separator");
    const int cap = balance_cap(static_cast<int>(x.size()));
    if (g.n() <= std::min(exact_limit, BitGraph::kMaxVertices)) {
        const auto bg = BitGraph::from(g);
        const std::uint64_t wmask = set_to_mask(x);
        for (int s = 0; s <= std::min(size_budget, g.n()); ++s) {
            if (auto mask = kernels::omp::find_balanced_separator(bg, s, wmask, cap))
                return *separation_from_separator(g, mask_to_set(*mask), x, cap);
        }
        // Exhaustive: nothing within budget. Report the true minimum.
        int best = g.n();
        for (int s = size_budget + 1; s < g.n(); ++s)
            if (kernels::omp::find_balanced_separator(bg, s, wmask, cap)) {
                best = s;
                break;
            }
        throw BudgetExceededError("x_balanced_separator: minimum X-balanced separator has size " +
                                      std::to_string(best) + " > budget " + std::to_string(size_budget),
                                  best);
    }
    int best = g.n();
    for (const auto& cand : layer_candidates(g, heuristic_roots(g, x))) {
        if (static_cast<int>(cand.size()) >= best) break;
        if (auto sep = separation_from_separator(g, cand, x, cap)) {
            if (sep->size <= size_budget) return *sep;
            best = std::min(best, sep->size);
        }
    }
    // Layers can miss single cut vertices (e.g. tree centroids); sweep them all.
    if (best > 1 && size_budget >= 1)
        for (Vertex v = 0; v < g.n(); ++v)
            if (auto sep = separation_from_separator(g, VertexSet{v}, x, cap)) return *sep;
    throw BudgetExceededError("x_balanced_separator: best X-balanced separator found has size " +
                                  std::to_string(best) + " > budget " + std::to_string(size_budget),
                              best);
}

}  // namespace subexp
