#include "subexp/treedecomp.hpp"

#include "subexp/errors.hpp"
#include "subexp/rational.hpp"
#include "subexp/separators.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>

namespace subexp {

TreeDecomposition TreeDecomposition::from_parents(const std::vector<std::pair<int, VertexSet>>& entries) {
    TreeDecomposition t;
    t.nodes.resize(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const int p = entries[i].first;
        if (p < -1 || p >= static_cast<int>(entries.size()) || p == static_cast<int>(i))
            throw ArgumentError("tree node " + std::to_string(i) + " has invalid parent " + std::to_string(p));
        t.nodes[i].parent = p;
        t.nodes[i].bag = entries[i].second;
        if (p == -1) {
            if (t.root != -1) throw ArgumentError("tree decomposition has more than one root");
            t.root = static_cast<int>(i);
        }
    }
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (t.nodes[i].parent >= 0) t.nodes[static_cast<std::size_t>(t.nodes[i].parent)].children.push_back(static_cast<int>(i));
    if (!entries.empty() && t.root == -1) throw ArgumentError("tree decomposition has no root");
    return t;
}

std::vector<int> TreeDecomposition::depths() const {
    std::vector<int> depth(nodes.size(), -1);
    if (root < 0) return depth;
    std::queue<int> q;
    depth[static_cast<std::size_t>(root)] = 0;
    q.push(root);
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        for (int c : nodes[static_cast<std::size_t>(u)].children) {
            if (depth[static_cast<std::size_t>(c)] >= 0) continue;
            depth[static_cast<std::size_t>(c)] = depth[static_cast<std::size_t>(u)] + 1;
            q.push(c);
        }
    }
    return depth;
}

DecompositionReport validate_decomposition(const Graph& g, const TreeDecomposition& t) {
    DecompositionReport rep;
    auto& bad = rep.violations;
    const auto count = t.nodes.size();
    if (count == 0 || t.root < 0 || t.root >= static_cast<int>(count)) {
        bad.push_back("no valid root");
        return rep;
    }
    for (std::size_t i = 0; i < count; ++i) {
        const auto& node = t.nodes[i];
        if (node.children.size() > 2) bad.push_back("node " + std::to_string(i) + " has more than two children");
        for (int c : node.children)
            if (c < 0 || c >= static_cast<int>(count) || t.nodes[static_cast<std::size_t>(c)].parent != static_cast<int>(i))
                bad.push_back("node " + std::to_string(i) + " has inconsistent child " + std::to_string(c));
        if (!node.bag.empty() && (node.bag.ids().front() < 0 || node.bag.ids().back() >= g.n())) {
            bad.push_back("node " + std::to_string(i) + " has a vertex id out of range");
            return rep;
        }
        rep.width = std::max(rep.width, static_cast<int>(node.bag.size()) - 1);
    }
    const auto depth = t.depths();
    for (std::size_t i = 0; i < count; ++i)
        if (depth[i] < 0) {
            bad.push_back("node " + std::to_string(i) + " is not reachable from the root");
            return rep;
        }

    std::vector<std::vector<int>> holders(static_cast<std::size_t>(g.n()));
    for (std::size_t i = 0; i < count; ++i)
        for (Vertex v : t.nodes[i].bag) holders[static_cast<std::size_t>(v)].push_back(static_cast<int>(i));
    for (Vertex v = 0; v < g.n(); ++v) {
        const auto& h = holders[static_cast<std::size_t>(v)];
        if (h.empty()) {
            bad.push_back("vertex " + std::to_string(v) + " not covered");
            continue;
        }
        // Connected iff exactly one holder has a parent outside the holder set.
        int tops = 0;
        std::set<int> levels;
        for (int u : h) {
            const int p = t.nodes[static_cast<std::size_t>(u)].parent;
            if (p < 0 || !t.nodes[static_cast<std::size_t>(p)].bag.contains(v)) ++tops;
            levels.insert(depth[static_cast<std::size_t>(u)]);
        }
        if (tops != 1) bad.push_back("vertex " + std::to_string(v) + " does not induce a connected subtree");
        rep.max_vertex_level_span = std::max(rep.max_vertex_level_span, static_cast<int>(levels.size()));
    }
    for (const auto& [u, v] : g.edges()) {
        const auto& hu = holders[static_cast<std::size_t>(u)];
        const auto& hv = holders[static_cast<std::size_t>(v)];
        std::vector<int> common;
        std::set_intersection(hu.begin(), hu.end(), hv.begin(), hv.end(), std::back_inserter(common));
        if (common.empty()) bad.push_back("edge " + std::to_string(u) + "-" + std::to_string(v) + " not covered");
    }
    return rep;
}

namespace {

class Builder {
public:
    Builder(const Graph& g, int delta, int tw_budget)
        : g_(g), tw_budget_(tw_budget), b_(12LL * (tw_budget + 1)), w_(static_cast<long long>(delta) * b_) {}

    TreeDecomposition run() {
        build(VertexSet::range(g_.n()), VertexSet{}, 0);
        return TreeDecomposition::from_parents(entries_);
    }

private:
    // Emits a decomposition of G[h] whose root bag contains z; returns the root id.
    int build(const VertexSet& h, const VertexSet& z, int level) {
        const auto hn = static_cast<long long>(h.size());
        if (hn <= w_ + b_) return emit(h);

        if (static_cast<long long>(z.size()) <= b_) {
            // Z' = Z plus the lowest-numbered remaining vertices.
            const auto target = static_cast<std::size_t>(std::min(b_, hn));
            std::vector<Vertex> zp(z.begin(), z.end());
            for (Vertex v : h) {
                if (zp.size() >= target) break;
                if (!z.contains(v)) zp.push_back(v);
            }
            const VertexSet z1(std::move(zp));
            const VertexSet rest = set_difference(h, z1);
            std::vector<Vertex> ext;
            for (Vertex u : z1)
                for (Vertex v : g_.neighbors(u))
                    if (rest.contains(v)) ext.push_back(v);
            const VertexSet z2(std::move(ext));
            const int node = emit(set_union(z1, z2));
            if (!rest.empty()) attach(node, build(rest, z2, level + 1));
            return node;
        }

        const auto sub = induced_subgraph(g_, h);
        std::vector<Vertex> local_z;
        for (Vertex v : z) local_z.push_back(static_cast<Vertex>(std::lower_bound(h.begin(), h.end(), v) - h.begin()));
        Separation sep;
        try {
            sep = x_balanced_separator(sub.graph, VertexSet(std::move(local_z)), tw_budget_ + 1);
        } catch (const BudgetExceededError& e) {
            throw BudgetExceededError("decomposition node at recursion level " + std::to_string(level) + " (|V(H)|=" +
                                          std::to_string(h.size()) + ", |Z|=" + std::to_string(z.size()) +
                                          "): " + e.what(),
                                      e.best_size());
        }
        auto lift = [&](const VertexSet& s) {
            std::vector<Vertex> ids;
            for (Vertex v : s) ids.push_back(sub.to_parent[static_cast<std::size_t>(v)]);
            return VertexSet(std::move(ids));
        };
        const VertexSet a = lift(sep.side_a), bside = lift(sep.side_b);
        const VertexSet s = set_intersection(a, bside);
        const VertexSet za = set_union(s, set_difference(z, bside));
        const VertexSet zb = set_union(s, set_difference(z, a));
        if (za.size() >= z.size() || zb.size() >= z.size())
            throw RefusalError("decomposition node at recursion level " + std::to_string(level) +
                               ": root set did not shrink (|Z|=" + std::to_string(z.size()) + ", |Z_A|=" +
                               std::to_string(za.size()) + ", |Z_B|=" + std::to_string(zb.size()) +
                               "); tw_budget too small for this graph?");
        const int node = emit(set_union(z, s));
        attach(node, build(a, za, level + 1));
        attach(node, build(bside, zb, level + 1));
        return node;
    }

    int emit(VertexSet bag) {
        entries_.emplace_back(-1, std::move(bag));
        return static_cast<int>(entries_.size()) - 1;
    }

    void attach(int parent, int child) { entries_[static_cast<std::size_t>(child)].first = parent; }

    const Graph& g_;
    int tw_budget_;
    long long b_, w_;
    std::vector<std::pair<int, VertexSet>> entries_;
};

}  // namespace

TreeDecomposition build_bounded_reuse_decomposition(const Graph& g, int delta, int tw_budget) {
    if (delta < 0 || tw_budget < 0) throw ArgumentError("delta and tw_budget must be nonnegative");
    if (g.max_degree() > delta)
        throw ArgumentError("graph has maximum degree " + std::to_string(g.max_degree()) + " > delta " +
                            std::to_string(delta));
    return Builder(g, delta, tw_budget).run();
}

long long tw_budget_from_separator(double c, double psi, long long n) {
    if (c <= 0 || psi < 0 || psi >= 1 || n < 0) throw ArgumentError("need c > 0, 0 <= psi < 1, n >= 0");
    return floor_snapped(105.0 * c * std::pow(static_cast<double>(n), psi));
}

double level_span_bound(int delta) { return 2.0 + 4.0 * std::log2(static_cast<double>(delta) + 1.0); }

}  // namespace subexp
