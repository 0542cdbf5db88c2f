#pragma once

// Independent reference computations for the tests. Everything here is
// deliberately naive (plain enumeration over subsets, maps or partitions) and
// shares no code with the library algorithms it checks.

#include "subexp/fragility.hpp"
#include "subexp/graph.hpp"
#include "subexp/minors.hpp"
#include "subexp/rational.hpp"
#include "subexp/treedecomp.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

using subexp::Edge;
using subexp::Graph;
using subexp::Rational;
using subexp::Vertex;

inline bool in_mask(std::uint64_t mask, int v) { return (mask >> v) & 1ULL; }

inline bool is_independent(const Graph& g, const std::vector<Vertex>& s) {
    std::set<Vertex> in(s.begin(), s.end());
    if (in.size() != s.size()) return false;
    for (const auto& [u, v] : g.edges())
        if (in.count(u) && in.count(v)) return false;
    return true;
}

// alpha(G) by checking every vertex subset.
inline int alpha(const Graph& g) {
    const int n = g.n();
    const auto edges = g.edges();
    int best = 0;
    for (std::uint64_t s = 0; s < (1ULL << n); ++s) {
        const int size = __builtin_popcountll(s);
        if (size <= best) continue;
        bool ok = true;
        for (const auto& [u, v] : edges)
            if (in_mask(s, u) && in_mask(s, v)) {
                ok = false;
                break;
            }
        if (ok) best = size;
    }
    return best;
}

// Does some injective map V(H) -> V(G) send every edge of H onto an edge of G?
inline bool contains_subgraph(const Graph& g, const Graph& h) {
    if (h.n() > g.n()) return false;
    const auto hedges = h.edges();
    std::vector<Vertex> image(static_cast<std::size_t>(h.n()), -1);
    std::vector<char> used(static_cast<std::size_t>(g.n()), 0);
    std::function<bool(int)> go = [&](int i) {
        if (i == h.n()) {
            for (const auto& [a, b] : hedges)
                if (!g.has_edge(image[a], image[b])) return false;
            return true;
        }
        for (Vertex v = 0; v < g.n(); ++v) {
            if (used[v]) continue;
            used[v] = 1;
            image[i] = v;
            if (go(i + 1)) return true;
            used[v] = 0;
        }
        return false;
    };
    return go(0);
}

// Components of G restricted to `alive` via union-find.
inline std::vector<int> component_sizes(const Graph& g, std::uint64_t alive) {
    std::vector<int> parent(static_cast<std::size_t>(g.n()));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& [u, v] : g.edges())
        if (in_mask(alive, u) && in_mask(alive, v)) parent[find(u)] = find(v);
    std::vector<int> count(static_cast<std::size_t>(g.n()), 0);
    for (int v = 0; v < g.n(); ++v)
        if (in_mask(alive, v)) ++count[find(v)];
    std::vector<int> sizes;
    for (int c : count)
        if (c > 0) sizes.push_back(c);
    return sizes;
}

// Minimum size of a balanced separation: smallest S such that the components
// of G - S can be put into two groups each of at most floor(2n/3) vertices.
inline int min_balanced_separator(const Graph& g) {
    const int n = g.n();
    const int cap = 2 * n / 3;
    int best = n;
    for (std::uint64_t s = 0; s < (1ULL << n); ++s) {
        const int size = __builtin_popcountll(s);
        if (size >= best) continue;
        const auto comps = component_sizes(g, ((1ULL << n) - 1) & ~s);
        const int c = static_cast<int>(comps.size());
        bool ok = false;
        for (std::uint64_t a = 0; a < (1ULL << c) && !ok; ++a) {
            int wa = 0, wb = 0;
            for (int i = 0; i < c; ++i) (in_mask(a, i) ? wa : wb) += comps[i];
            ok = wa <= cap && wb <= cap;
        }
        if (ok) best = size;
    }
    return best;
}

// min over nonempty S with |S| <= n/2 of e(S, V-S)/|S|; nullopt when n < 2.
inline std::optional<Rational> edge_expansion(const Graph& g) {
    const int n = g.n();
    std::optional<Rational> best;
    const auto edges = g.edges();
    for (std::uint64_t s = 1; s < (1ULL << n); ++s) {
        const int size = __builtin_popcountll(s);
        if (2 * size > n) continue;
        int cut = 0;
        for (const auto& [u, v] : edges) cut += in_mask(s, u) != in_mask(s, v);
        const Rational r(cut, size);
        if (!best || r < *best) best = r;
    }
    return best;
}

// Maximum over vertices of the total weight of sets containing it.
inline Rational thickness(const Graph& g, const subexp::FractionalPacking& pi) {
    std::vector<Rational> load(static_cast<std::size_t>(g.n()), Rational(0));
    for (const auto& e : pi.entries)
        for (Vertex v : e.set) load[v] += e.weight;
    Rational best = 0;
    for (const auto& x : load) best = std::max(best, x);
    return best;
}

// Largest component of G - X over the support of pi.
inline int max_residual(const Graph& g, const subexp::FractionalPacking& pi) {
    int best = 0;
    const std::uint64_t all = g.n() == 64 ? ~0ULL : ((1ULL << g.n()) - 1);
    for (const auto& e : pi.entries) {
        if (e.weight == 0) continue;
        std::uint64_t x = 0;
        for (Vertex v : e.set) x |= 1ULL << v;
        for (int c : component_sizes(g, all & ~x)) best = std::max(best, c);
    }
    return best;
}

// Tree-decomposition axioms checked directly: tree shape, vertex and edge
// coverage, and that the nodes holding each vertex span a connected subtree
// (node count - 1 == number of tree edges between such nodes).
inline bool decomposition_ok(const Graph& g, const subexp::TreeDecomposition& t) {
    const int nodes = static_cast<int>(t.nodes.size());
    if (nodes == 0 || t.root < 0 || t.root >= nodes) return false;
    int roots = 0;
    for (int i = 0; i < nodes; ++i) {
        const int p = t.nodes[i].parent;
        if (p < 0) {
            ++roots;
            continue;
        }
        if (p >= nodes) return false;
        // Walk up; a cycle would exceed the node count.
        int steps = 0;
        for (int x = i; x >= 0 && steps <= nodes; x = t.nodes[x].parent) ++steps;
        if (steps > nodes) return false;
    }
    if (roots != 1) return false;
    auto holds = [&](int node, Vertex v) {
        const auto& ids = t.nodes[node].bag.ids();
        return std::find(ids.begin(), ids.end(), v) != ids.end();
    };
    for (Vertex v = 0; v < g.n(); ++v) {
        int count = 0, links = 0;
        for (int i = 0; i < nodes; ++i) {
            if (!holds(i, v)) continue;
            ++count;
            if (t.nodes[i].parent >= 0 && holds(t.nodes[i].parent, v)) ++links;
        }
        if (count == 0 || links != count - 1) return false;
    }
    for (const auto& [u, v] : g.edges()) {
        bool covered = false;
        for (int i = 0; i < nodes && !covered; ++i) covered = holds(i, u) && holds(i, v);
        if (!covered) return false;
    }
    return true;
}

// Exact max density |E|/|V| over k-shallow minors, enumerating every partition
// of V plus a marker element whose block is deleted. Other blocks must induce
// a connected subgraph of radius <= k around some member. n <= 9.
inline Rational nabla(const Graph& g, int k) {
    const int n = g.n();
    if (n == 0) return 0;
    Rational best = 0;
    std::vector<int> label(static_cast<std::size_t>(n + 1), 0);  // label[0] is the marker
    auto radius_ok = [&](std::uint64_t block) {
        for (int c = 0; c < n; ++c) {
            if (!in_mask(block, c)) continue;
            std::vector<int> dist(static_cast<std::size_t>(n), -1);
            std::vector<int> queue{c};
            dist[c] = 0;
            for (std::size_t q = 0; q < queue.size(); ++q)
                for (Vertex w : g.neighbors(queue[q]))
                    if (in_mask(block, w) && dist[w] < 0) {
                        dist[w] = dist[queue[q]] + 1;
                        queue.push_back(w);
                    }
            bool ok = true;
            for (int v = 0; v < n; ++v)
                if (in_mask(block, v) && (dist[v] < 0 || dist[v] > k)) ok = false;
            if (ok) return true;
        }
        return false;
    };
    std::function<void(int, int)> go = [&](int i, int blocks) {
        if (i == n + 1) {
            std::vector<std::uint64_t> masks(static_cast<std::size_t>(blocks), 0);
            for (int v = 0; v < n; ++v) masks[label[v + 1]] |= 1ULL << v;
            const int kept = blocks - 1;
            if (kept == 0) return;
            for (int b = 1; b < blocks; ++b)
                if (!radius_ok(masks[b])) return;
            std::set<std::pair<int, int>> qedges;
            for (const auto& [u, v] : g.edges()) {
                const int a = label[u + 1], b = label[v + 1];
                if (a != 0 && b != 0 && a != b) qedges.insert({std::min(a, b), std::max(a, b)});
            }
            best = std::max(best, Rational(static_cast<long long>(qedges.size()), kept));
            return;
        }
        for (int b = 0; b <= blocks; ++b) {
            label[i] = b;
            go(i + 1, std::max(blocks, b + 1));
        }
    };
    label[0] = 0;
    go(1, 1);
    return best;
}

// Certificate check written from the definition: disjoint trees whose parent
// links are host edges inside the tree, roots at depth 0, every tree node
// within cert.depth of its root, and one host edge per edge of h.
inline bool certificate_ok(const Graph& g, const Graph& h, const subexp::MinorCertificate& cert) {
    if (static_cast<int>(cert.trees.size()) != h.n()) return false;
    std::vector<int> owner(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t i = 0; i < cert.trees.size(); ++i) {
        const auto& tree = cert.trees[i];
        if (tree.model_vertex != static_cast<Vertex>(i) || tree.nodes.empty()) return false;
        if (tree.nodes[0].second != -1) return false;
        std::map<Vertex, int> depth;
        for (const auto& [v, p] : tree.nodes) {
            if (v < 0 || v >= g.n() || owner[v] != -1) return false;
            owner[v] = static_cast<int>(i);
            if (p == -1) {
                if (!depth.empty()) return false;
                depth[v] = 0;
                continue;
            }
            if (!depth.count(p) || !g.has_edge(v, p)) return false;
            depth[v] = depth[p] + 1;
            if (depth[v] > cert.depth) return false;
        }
    }
    std::set<std::pair<int, int>> realized;
    for (const auto& w : cert.witness_edges) {
        if (w.u < 0 || w.u >= g.n() || w.v < 0 || w.v >= g.n()) return false;
        if (owner[w.u] != w.i || owner[w.v] != w.j || !g.has_edge(w.u, w.v)) return false;
        realized.insert({std::min(w.i, w.j), std::max(w.i, w.j)});
    }
    for (const auto& e : h.edges())
        if (!realized.count(e)) return false;
    return true;
}

}  // namespace oracle
