#include "subexp/approx.hpp"

#include "subexp/errors.hpp"
#include "subexp/kernels.hpp"

#include <algorithm>
#include <bit>

namespace subexp {

namespace {

constexpr int kMaxComponent = 26;

// Maximum independent subset of `mask`. Vertices of degree <= 1 are taken
// greedily (always safe); otherwise branch on a maximum-degree vertex.
std::uint64_t mis(const BitGraph& g, std::uint64_t mask) {
    if (!mask) return 0;
    int pick = -1, pick_deg = -1;
    for (std::uint64_t m = mask; m; m &= m - 1) {
        const int v = std::countr_zero(m);
        const std::uint64_t nb = g.adj[static_cast<std::size_t>(v)] & mask;
        const int d = std::popcount(nb);
        if (d <= 1) return (1ULL << v) | mis(g, mask & ~((1ULL << v) | nb));
        if (d > pick_deg) {
            pick = v;
            pick_deg = d;
        }
    }
    const std::uint64_t bit = 1ULL << pick;
    const std::uint64_t with = bit | mis(g, mask & ~(bit | g.adj[static_cast<std::size_t>(pick)]));
    const std::uint64_t without = mis(g, mask & ~bit);
    return std::popcount(with) >= std::popcount(without) ? with : without;
}

VertexSet solve_components(const Graph& g, int comp_bound) {
    std::vector<Vertex> chosen;
    for (const auto& comp : connected_components(g)) {
        if (static_cast<int>(comp.size()) > comp_bound)
            throw ArgumentError("component containing vertex " + std::to_string(comp[0]) + " has " +
                                std::to_string(comp.size()) + " vertices, above the bound " +
                                std::to_string(comp_bound));
        const auto sub = induced_subgraph(g, comp);
        const auto bg = BitGraph::from(sub.graph);
        for (std::uint64_t m = mis(bg, bg.all()); m; m &= m - 1)
            chosen.push_back(sub.to_parent[static_cast<std::size_t>(std::countr_zero(m))]);
    }
    return VertexSet(std::move(chosen));
}

IndependentSetResult solve_residual(const Graph& g, const VertexSet& removed, int bound, int index) {
    const auto sub = induced_subgraph(g, set_difference(VertexSet::range(g.n()), removed));
    std::vector<Vertex> ids;
    for (Vertex v : solve_components(sub.graph, bound)) ids.push_back(sub.to_parent[static_cast<std::size_t>(v)]);
    IndependentSetResult r;
    r.vertices = VertexSet(std::move(ids));
    r.size = static_cast<int>(r.vertices.size());
    r.support_index = index;
    return r;
}

void check_ptas_preconditions(const Graph& g, double eps, const FractionalPacking& pi, const WitnessClassSpec& w) {
    if (!(eps > 0 && eps <= 1)) throw ArgumentError("ptas: eps must lie in (0, 1]");
    pi.check(g.n());
    if (w.bound < 1 || w.bound > kMaxComponent)
        throw ArgumentError("ptas: witness bound must lie in [1, 26] for the exact solver");
    const double th = thickness(g, pi);
    if (th > eps + 1e-12)
        throw ArgumentError("ptas: packing thickness " + std::to_string(th) + " exceeds eps " + std::to_string(eps));
    const auto c = validate_complementary(g, pi, w);
    if (!c.ok) throw ArgumentError("ptas: packing is not complementary: " + c.violation);
}

IndependentSetResult best_of(const std::vector<IndependentSetResult>& results) {
    IndependentSetResult best;
    for (const auto& r : results)
        if (r.support_index >= 0 && (best.support_index < 0 || r.size > best.size)) best = r;
    return best;
}

struct Matcher {
    const Graph& g;
    const Graph& h;
    std::vector<Vertex> order;
    std::vector<Vertex> anchor;  // earlier-ordered neighbor of order[i], or -1
    std::vector<Vertex> map;
    std::vector<char> used;

    Matcher(const Graph& g_, const Graph& h_) : g(g_), h(h_), map(static_cast<std::size_t>(h_.n()), -1),
                                                 used(static_cast<std::size_t>(g_.n()), 0) {
        // BFS order per component, larger components first, each started at a max-degree vertex.
        auto comps = connected_components(h);
        std::stable_sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
        std::vector<char> seen(static_cast<std::size_t>(h.n()), 0);
        for (const auto& c : comps) {
            Vertex start = c[0];
            for (Vertex v : c)
                if (h.degree(v) > h.degree(start)) start = v;
            std::vector<Vertex> queue{start};
            seen[static_cast<std::size_t>(start)] = 1;
            anchor.push_back(-1);
            for (std::size_t i = 0; i < queue.size(); ++i) {
                const Vertex u = queue[i];
                order.push_back(u);
                for (Vertex w : h.neighbors(u))
                    if (!seen[static_cast<std::size_t>(w)]) {
                        seen[static_cast<std::size_t>(w)] = 1;
                        queue.push_back(w);
                        anchor.push_back(u);
                    }
            }
        }
    }

    bool fits(Vertex u, Vertex c) const {
        if (used[static_cast<std::size_t>(c)] || g.degree(c) < h.degree(u)) return false;
        for (Vertex w : h.neighbors(u)) {
            const Vertex mw = map[static_cast<std::size_t>(w)];
            if (mw >= 0 && !g.has_edge(c, mw)) return false;
        }
        return true;
    }

    bool extend(std::size_t i) {
        if (i == order.size()) return true;
        const Vertex u = order[i];
        auto attempt = [&](Vertex c) {
            if (!fits(u, c)) return false;
            map[static_cast<std::size_t>(u)] = c;
            used[static_cast<std::size_t>(c)] = 1;
            if (extend(i + 1)) return true;
            map[static_cast<std::size_t>(u)] = -1;
            used[static_cast<std::size_t>(c)] = 0;
            return false;
        };
        if (anchor[i] >= 0) {
            for (Vertex c : g.neighbors(map[static_cast<std::size_t>(anchor[i])]))
                if (attempt(c)) return true;
        } else {
            for (Vertex c = 0; c < g.n(); ++c)
                if (attempt(c)) return true;
        }
        return false;
    }
};

}  // namespace

int brute_alpha(const Graph& g) {
    for (const auto& comp : connected_components(g))
        if (static_cast<int>(comp.size()) > kMaxComponent)
            throw RefusalError("brute_alpha: component of " + std::to_string(comp.size()) +
                               " vertices exceeds the exhaustive limit of 26");
    return static_cast<int>(solve_components(g, kMaxComponent).size());
}

IndependentSetResult exact_max_independent_set(const Graph& g, int comp_bound) {
    if (comp_bound < 0 || comp_bound > kMaxComponent)
        throw ArgumentError("exact_max_independent_set: comp_bound must lie in [0, 26]");
    IndependentSetResult r;
    r.vertices = solve_components(g, comp_bound);
    r.size = static_cast<int>(r.vertices.size());
    r.support_index = 0;
    return r;
}

IndependentSetResult ptas_independent_set(const Graph& g, double eps, const FractionalPacking& pi,
                                          const WitnessClassSpec& w) {
    check_ptas_preconditions(g, eps, pi, w);
    const int count = static_cast<int>(pi.entries.size());
    std::vector<IndependentSetResult> results(pi.entries.size());
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < count; ++i) {
        const auto& e = pi.entries[static_cast<std::size_t>(i)];
        if (e.weight > 0) results[static_cast<std::size_t>(i)] = solve_residual(g, e.set, static_cast<int>(w.bound), i);
    }
    return best_of(results);
}

IndependentSetResult ptas_independent_set_serial(const Graph& g, double eps, const FractionalPacking& pi,
                                                 const WitnessClassSpec& w) {
    check_ptas_preconditions(g, eps, pi, w);
    std::vector<IndependentSetResult> results(pi.entries.size());
    for (std::size_t i = 0; i < pi.entries.size(); ++i)
        if (pi.entries[i].weight > 0)
            results[i] = solve_residual(g, pi.entries[i].set, static_cast<int>(w.bound), static_cast<int>(i));
    return best_of(results);
}

bool contains_subgraph(const Graph& g, const Graph& h) {
    if (h.n() > g.n() || h.m() > g.m()) return false;
    Matcher m(g, h);
    return m.extend(0);
}

bool subgraph_test(const Graph& g, const Graph& h, const FractionalPacking& pi, const WitnessClassSpec& w) {
    pi.check(g.n());
    const Rational limit(1, h.n() + 1);
    if (thickness_exact(g, pi) > limit)
        throw RefusalError("subgraph_test: packing thickness exceeds 1/(|V(H)|+1) = " + rational_to_string(limit) +
                           "; a negative answer would not be conclusive");
    const auto c = validate_complementary(g, pi, w);
    if (!c.ok) throw ArgumentError("subgraph_test: packing is not complementary: " + c.violation);
    for (const auto& e : pi.entries) {
        if (e.weight == 0) continue;
        const auto sub = induced_subgraph(g, set_difference(VertexSet::range(g.n()), e.set));
        if (contains_subgraph(sub.graph, h)) return true;
    }
    return false;
}

}  // namespace subexp
