#include "subexp/minors.hpp"

#include "subexp/errors.hpp"
#include "subexp/kernels.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

namespace subexp {

namespace {

using Pair = std::pair<Vertex, Vertex>;

Pair ordered(Vertex a, Vertex b) { return a < b ? Pair{a, b} : Pair{b, a}; }

// Depth of every node of a tree given as (vertex, parent) pairs; nullopt if the
// parents do not form a tree rooted at the first node.
std::optional<std::vector<int>> tree_depths(const BranchTree& t) {
    std::map<Vertex, std::size_t> index;
    for (std::size_t i = 0; i < t.nodes.size(); ++i) index.emplace(t.nodes[i].first, i);
    std::vector<int> depth(t.nodes.size(), -1);
    if (t.nodes.empty() || t.nodes[0].second != -1) return std::nullopt;
    depth[0] = 0;
    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
        // Walk up until a node with known depth, at most |tree| steps.
        std::vector<std::size_t> path;
        std::size_t cur = i;
        while (depth[cur] < 0) {
            if (path.size() > t.nodes.size()) return std::nullopt;
            path.push_back(cur);
            const auto it = index.find(t.nodes[cur].second);
            if (t.nodes[cur].second == -1 || it == index.end()) return std::nullopt;
            cur = it->second;
        }
        for (auto p = path.rbegin(); p != path.rend(); ++p) {
            const auto parent = index.at(t.nodes[*p].second);
            depth[*p] = depth[parent] + 1;
        }
    }
    return depth;
}

// Certificate for explicit branch trees of g; model edges are all pairs of trees
// joined by an edge of g, each witnessed by its lexicographically first edge.
DensityReport report_from_trees(const Graph& g, int k, std::vector<std::vector<Pair>> trees) {
    DensityReport rep;
    rep.k = k;
    rep.certificate.depth = k;
    std::vector<int> owner(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t i = 0; i < trees.size(); ++i) {
        for (const auto& [v, p] : trees[i]) owner[static_cast<std::size_t>(v)] = static_cast<int>(i);
        rep.certificate.trees.push_back({static_cast<Vertex>(i), std::move(trees[i])});
    }
    std::set<Pair> seen;
    std::vector<Edge> model_edges;
    for (const auto& [u, v] : g.edges()) {
        const int a = owner[static_cast<std::size_t>(u)], b = owner[static_cast<std::size_t>(v)];
        if (a < 0 || b < 0 || a == b) continue;
        if (!seen.insert(ordered(a, b)).second) continue;
        rep.certificate.witness_edges.push_back({a, b, u, v});
        model_edges.push_back(ordered(a, b));
    }
    rep.vertices = static_cast<int>(trees.size());
    rep.edges = static_cast<long long>(model_edges.size());
    rep.density = rep.vertices == 0 ? Rational(0) : Rational(rep.edges, rep.vertices);
    rep.minor = Graph::from_edges(rep.vertices, model_edges);
    return rep;
}

// BFS tree of `block` from `center`, inside the block.
std::vector<Pair> bfs_tree(const Graph& g, std::uint64_t block, Vertex center) {
    std::vector<Pair> nodes{{center, -1}};
    std::uint64_t seen = 1ULL << center;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (Vertex w : g.neighbors(nodes[i].first)) {
            const std::uint64_t bit = 1ULL << w;
            if ((block & bit) && !(seen & bit)) {
                seen |= bit;
                nodes.push_back({w, nodes[i].first});
            }
        }
    return nodes;
}

DensityReport brute_report(const Graph& g, int k, bool parallel) {
    if (k < 0) throw ArgumentError("nabla_brute: k must be >= 0");
    if (g.n() > 10) throw RefusalError("nabla_brute: " + std::to_string(g.n()) + " vertices exceeds the limit of 10");
    const auto bg = BitGraph::from(g);
    const auto choice = parallel ? kernels::omp::densest_shallow_minor(bg, k)
                                 : kernels::serial::densest_shallow_minor(bg, k);
    std::vector<std::vector<Pair>> trees;
    for (std::size_t i = 0; i < choice.blocks.size(); ++i) trees.push_back(bfs_tree(g, choice.blocks[i], choice.centers[i]));
    return report_from_trees(g, k, std::move(trees));
}

// Kuhn's augmenting paths: assigns each pair a distinct vertex from its list.
class PairMatcher {
public:
    explicit PairMatcher(const std::vector<std::vector<Vertex>>& options) : options_(options) {}

    bool perfect(std::vector<Vertex>& assignment) {
        owner_.clear();
        assignment.assign(options_.size(), -1);
        for (std::size_t p = 0; p < options_.size(); ++p) {
            std::set<Vertex> visited;
            if (!augment(p, visited, assignment)) return false;
        }
        return true;
    }

private:
    bool augment(std::size_t p, std::set<Vertex>& visited, std::vector<Vertex>& assignment) {
        for (Vertex v : options_[p]) {
            if (!visited.insert(v).second) continue;
            const auto it = owner_.find(v);
            if (it == owner_.end() || augment(it->second, visited, assignment)) {
                owner_[v] = p;
                assignment[p] = v;
                return true;
            }
        }
        return false;
    }

    const std::vector<std::vector<Vertex>>& options_;
    std::map<Vertex, std::size_t> owner_;
};

class K1tSearch {
public:
    K1tSearch(const Graph& g, int t, long long budget) : g_(g), t_(t), budget_(budget) {}

    K1tResult run() {
        K1tResult res;
        std::vector<Vertex> branch;
        const bool found = extend(branch, 0);
        res.nodes_explored = nodes_;
        if (found) {
            res.status = SearchStatus::Found;
            res.certificate = certificate(branch);
        } else {
            res.status = exhausted_ ? SearchStatus::BudgetExhausted : SearchStatus::NotFound;
        }
        return res;
    }

private:
    std::vector<Vertex> common(Vertex a, Vertex b, const std::vector<Vertex>& branch) const {
        std::vector<Vertex> out;
        const auto na = g_.neighbors(a), nb = g_.neighbors(b);
        std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(out));
        std::erase_if(out, [&](Vertex v) { return std::find(branch.begin(), branch.end(), v) != branch.end(); });
        return out;
    }

    bool matchable(const std::vector<Vertex>& branch) {
        std::vector<std::vector<Vertex>> options;
        for (std::size_t i = 0; i < branch.size(); ++i)
            for (std::size_t j = i + 1; j < branch.size(); ++j) options.push_back(common(branch[i], branch[j], branch));
        PairMatcher m(options);
        return m.perfect(subdivision_);
    }

    bool extend(std::vector<Vertex>& branch, Vertex from) {
        if (static_cast<int>(branch.size()) == t_) return matchable(branch);
        for (Vertex v = from; v < g_.n(); ++v) {
            if (g_.degree(v) < t_ - 1) continue;
            if (budget_ > 0 && nodes_ >= budget_) {
                exhausted_ = true;
                return false;
            }
            ++nodes_;
            branch.push_back(v);
            bool ok = true;
            for (std::size_t i = 0; i + 1 < branch.size() && ok; ++i) ok = !common(branch[i], v, branch).empty();
            if (ok && matchable(branch) && extend(branch, v + 1)) return true;
            branch.pop_back();
            if (exhausted_) return false;
        }
        return false;
    }

    MinorCertificate certificate(const std::vector<Vertex>& branch) {
        matchable(branch);
        MinorCertificate cert;
        cert.depth = 1;
        for (int i = 0; i < t_; ++i) cert.trees.push_back({i, {{branch[static_cast<std::size_t>(i)], -1}}});
        std::size_t p = 0;
        for (int i = 0; i < t_; ++i)
            for (int j = i + 1; j < t_; ++j, ++p) {
                const Vertex s = subdivision_[p];
                cert.trees[static_cast<std::size_t>(i)].nodes.push_back({s, branch[static_cast<std::size_t>(i)]});
                cert.witness_edges.push_back({i, j, s, branch[static_cast<std::size_t>(j)]});
            }
        return cert;
    }

    const Graph& g_;
    int t_;
    long long budget_;
    long long nodes_ = 0;
    bool exhausted_ = false;
    std::vector<Vertex> subdivision_;
};

}  // namespace

CertificateCheck verify_certificate(const Graph& g, const Graph& h, const MinorCertificate& cert) {
    CertificateCheck chk;
    auto fail = [&](std::string msg) {
        chk.ok = false;
        chk.violations.push_back(std::move(msg));
    };
    if (cert.trees.size() != static_cast<std::size_t>(h.n()))
        fail("certificate has " + std::to_string(cert.trees.size()) + " trees for a model graph on " +
             std::to_string(h.n()) + " vertices");
    std::vector<int> tree_of_model(static_cast<std::size_t>(h.n()), -1);
    std::vector<int> owner(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t ti = 0; ti < cert.trees.size(); ++ti) {
        const auto& t = cert.trees[ti];
        if (t.model_vertex < 0 || t.model_vertex >= h.n()) {
            fail("tree " + std::to_string(ti) + " names model vertex " + std::to_string(t.model_vertex) + " out of range");
            continue;
        }
        if (tree_of_model[static_cast<std::size_t>(t.model_vertex)] >= 0)
            fail("model vertex " + std::to_string(t.model_vertex) + " has two trees");
        tree_of_model[static_cast<std::size_t>(t.model_vertex)] = static_cast<int>(ti);
        bool ids_ok = !t.nodes.empty();
        if (!ids_ok) fail("tree of model vertex " + std::to_string(t.model_vertex) + " is empty");
        for (const auto& [v, p] : t.nodes) {
            if (v < 0 || v >= g.n() || p < -1 || p >= g.n()) {
                fail("tree of model vertex " + std::to_string(t.model_vertex) + " has a vertex id out of range");
                ids_ok = false;
                break;
            }
            if (owner[static_cast<std::size_t>(v)] >= 0) fail("trees not disjoint: vertex " + std::to_string(v) + " reused");
            owner[static_cast<std::size_t>(v)] = t.model_vertex;
        }
        if (!ids_ok) continue;
        for (std::size_t i = 1; i < t.nodes.size(); ++i) {
            const auto [v, p] = t.nodes[i];
            if (p >= 0 && !g.has_edge(v, p))
                fail("tree edge " + std::to_string(v) + "-" + std::to_string(p) + " is not an edge of G");
        }
        const auto depth = tree_depths(t);
        if (!depth) {
            fail("tree of model vertex " + std::to_string(t.model_vertex) + " is not a rooted tree");
            continue;
        }
        const int d = *std::max_element(depth->begin(), depth->end());
        if (d > cert.depth)
            fail("tree of model vertex " + std::to_string(t.model_vertex) + " has depth " + std::to_string(d) + " > " +
                 std::to_string(cert.depth));
    }
    std::set<Pair> covered;
    for (const auto& w : cert.witness_edges) {
        const std::string name = "witness edge (" + std::to_string(w.i) + "," + std::to_string(w.j) + ")";
        if (w.i < 0 || w.j < 0 || w.i >= h.n() || w.j >= h.n() || w.u < 0 || w.v < 0 || w.u >= g.n() || w.v >= g.n()) {
            fail(name + " has an id out of range");
            continue;
        }
        if (!h.has_edge(w.i, w.j)) fail(name + " is not an edge of the model graph");
        if (!g.has_edge(w.u, w.v)) fail(name + " uses a non-edge of G");
        if (owner[static_cast<std::size_t>(w.u)] != w.i || owner[static_cast<std::size_t>(w.v)] != w.j)
            fail(name + " does not join the two trees");
        covered.insert(ordered(w.i, w.j));
    }
    for (const auto& [a, b] : h.edges())
        if (!covered.count({a, b})) fail("model edge " + std::to_string(a) + "-" + std::to_string(b) + " has no witness");
    return chk;
}

int measured_depth(const MinorCertificate& cert) {
    int best = 0;
    for (const auto& t : cert.trees) {
        const auto d = tree_depths(t);
        if (!d) return -1;
        best = std::max(best, *std::max_element(d->begin(), d->end()));
    }
    return best;
}

Graph model_graph(const MinorCertificate& cert) {
    std::vector<Edge> edges;
    for (const auto& w : cert.witness_edges) edges.push_back(ordered(w.i, w.j));
    return Graph::from_edges(static_cast<Vertex>(cert.trees.size()), edges);
}

MinorCertificate identity_certificate(const Graph& g) {
    MinorCertificate cert;
    for (Vertex v = 0; v < g.n(); ++v) cert.trees.push_back({v, {{v, -1}}});
    for (const auto& [u, v] : g.edges()) cert.witness_edges.push_back({u, v, u, v});
    return cert;
}

long long composed_depth(long long d1, long long d2) { return d1 + d2 * (2 * d1 + 1); }

MinorCertificate compose_certificates(const Graph& g, const Graph& hp, const MinorCertificate& cert1, const Graph& h,
                                      const MinorCertificate& cert2) {
    if (auto c = verify_certificate(g, hp, cert1); !c.ok)
        throw ArgumentError("compose_certificates: first certificate invalid: " + c.violations[0]);
    if (auto c = verify_certificate(hp, h, cert2); !c.ok)
        throw ArgumentError("compose_certificates: second certificate invalid: " + c.violations[0]);

    std::vector<const BranchTree*> tree1(static_cast<std::size_t>(hp.n()));
    for (const auto& t : cert1.trees) tree1[static_cast<std::size_t>(t.model_vertex)] = &t;
    std::map<Pair, WitnessEdge> wit1;
    for (const auto& w : cert1.witness_edges) wit1.emplace(ordered(w.i, w.j), w);
    // Host edge joining the trees of model vertices a and b, oriented a -> b.
    auto host_edge = [&](Vertex a, Vertex b) {
        const auto& w = wit1.at(ordered(a, b));
        return w.i == a ? Pair{w.u, w.v} : Pair{w.v, w.u};
    };

    MinorCertificate out;
    out.depth = static_cast<int>(composed_depth(cert1.depth, cert2.depth));
    for (const auto& tx : cert2.trees) {
        std::map<Vertex, std::vector<Vertex>> adj;
        auto link = [&](Vertex a, Vertex b) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        };
        for (const auto& [y, py] : tx.nodes) {
            const auto& ty = *tree1[static_cast<std::size_t>(y)];
            adj[ty.nodes[0].first];
            for (const auto& [v, p] : ty.nodes)
                if (p >= 0) link(v, p);
            if (py >= 0) {
                const auto [a, b] = host_edge(y, py);
                link(a, b);
            }
        }
        const Vertex root = tree1[static_cast<std::size_t>(tx.nodes[0].first)]->nodes[0].first;
        BranchTree bt{tx.model_vertex, {{root, -1}}};
        std::set<Vertex> seen{root};
        for (std::size_t i = 0; i < bt.nodes.size(); ++i) {
            const Vertex u = bt.nodes[i].first;
            for (Vertex w : adj[u])
                if (seen.insert(w).second) bt.nodes.push_back({w, u});
        }
        out.trees.push_back(std::move(bt));
    }
    for (const auto& w : cert2.witness_edges) {
        const auto [a, b] = host_edge(w.u, w.v);
        out.witness_edges.push_back({w.i, w.j, a, b});
    }
    return out;
}

DensityReport nabla_brute(const Graph& g, int k) { return brute_report(g, k, true); }

DensityReport nabla_brute_serial(const Graph& g, int k) { return brute_report(g, k, false); }

DensityReport nabla_greedy(const Graph& g, int k) {
    if (k < 0) throw ArgumentError("nabla_greedy: k must be >= 0");
    const auto n = static_cast<std::size_t>(g.n());
    std::vector<int> block_of(n), depth(n, 0);
    std::vector<Vertex> parent(n, -1);
    std::vector<std::vector<Vertex>> members(n);
    std::vector<std::set<int>> nb(n);
    std::vector<char> alive(n, 1);
    for (Vertex v = 0; v < g.n(); ++v) {
        block_of[static_cast<std::size_t>(v)] = v;
        members[static_cast<std::size_t>(v)] = {v};
        for (Vertex w : g.neighbors(v)) nb[static_cast<std::size_t>(v)].insert(w);
    }
    long long edges = static_cast<long long>(g.m());
    long long count = g.n();

    // Merge singleton branch sets into neighboring ones while the quotient gets denser.
    for (bool changed = k > 0; changed;) {
        changed = false;
        for (Vertex s = 0; s < g.n(); ++s) {
            const int bs = block_of[static_cast<std::size_t>(s)];
            if (members[static_cast<std::size_t>(bs)].size() != 1 || count < 2) continue;
            int best_block = -1;
            Vertex best_anchor = -1;
            long long best_edges = 0;
            for (Vertex v : g.neighbors(s)) {
                const int bv = block_of[static_cast<std::size_t>(v)];
                if (bv == bs || depth[static_cast<std::size_t>(v)] >= k) continue;
                const auto& from = nb[static_cast<std::size_t>(bs)];
                const auto& into = nb[static_cast<std::size_t>(bv)];
                long long gained = 0;
                for (int c : from)
                    if (c != bv && !into.count(c)) ++gained;
                const long long e2 = edges - static_cast<long long>(from.size()) + gained;
                if (e2 * count <= edges * (count - 1)) continue;
                if (best_block < 0 || e2 > best_edges ||
                    (e2 == best_edges && depth[static_cast<std::size_t>(v)] < depth[static_cast<std::size_t>(best_anchor)])) {
                    best_block = bv;
                    best_anchor = v;
                    best_edges = e2;
                }
            }
            if (best_block < 0) continue;
            const auto bsz = static_cast<std::size_t>(bs);
            const auto bvz = static_cast<std::size_t>(best_block);
            for (int c : nb[bsz]) {
                nb[static_cast<std::size_t>(c)].erase(bs);
                if (c != best_block) {
                    nb[static_cast<std::size_t>(c)].insert(best_block);
                    nb[bvz].insert(c);
                }
            }
            nb[bsz].clear();
            alive[bsz] = 0;
            members[bsz].clear();
            members[bvz].push_back(s);
            block_of[static_cast<std::size_t>(s)] = best_block;
            parent[static_cast<std::size_t>(s)] = best_anchor;
            depth[static_cast<std::size_t>(s)] = depth[static_cast<std::size_t>(best_anchor)] + 1;
            edges = best_edges;
            --count;
            changed = true;
        }
    }

    // Min-degree peeling of the quotient; keep the densest stage (first on ties).
    std::set<std::pair<std::size_t, int>> queue;
    std::vector<std::size_t> deg(n, 0);
    for (std::size_t b = 0; b < n; ++b)
        if (alive[b]) {
            deg[b] = nb[b].size();
            queue.insert({deg[b], static_cast<int>(b)});
        }
    std::vector<int> removed;
    long long best_e = edges, best_v = count;
    std::size_t best_stage = 0;
    long long cur_e = edges, cur_v = count;
    while (cur_v > 1) {
        const auto [d, b] = *queue.begin();
        queue.erase(queue.begin());
        removed.push_back(b);
        alive[static_cast<std::size_t>(b)] = 0;
        for (int c : nb[static_cast<std::size_t>(b)]) {
            if (!alive[static_cast<std::size_t>(c)]) continue;
            queue.erase({deg[static_cast<std::size_t>(c)], c});
            --deg[static_cast<std::size_t>(c)];
            queue.insert({deg[static_cast<std::size_t>(c)], c});
        }
        cur_e -= static_cast<long long>(d);
        --cur_v;
        if (cur_e * best_v > best_e * cur_v) {
            best_e = cur_e;
            best_v = cur_v;
            best_stage = removed.size();
        }
    }
    std::set<int> dropped(removed.begin(), removed.begin() + static_cast<std::ptrdiff_t>(best_stage));

    std::vector<std::vector<Pair>> trees;
    for (std::size_t b = 0; b < n; ++b) {
        if (members[b].empty() || dropped.count(static_cast<int>(b))) continue;
        std::vector<Pair> nodes;
        // members are in merge order, so parents precede children.
        for (Vertex v : members[b]) nodes.push_back({v, parent[static_cast<std::size_t>(v)]});
        trees.push_back(std::move(nodes));
    }
    return report_from_trees(g, k, std::move(trees));
}

K1tResult find_k1t(const Graph& g, int t, long long budget) {
    if (t < 0) throw ArgumentError("find_k1t: t must be >= 0");
    if (budget < 0) throw ArgumentError("find_k1t: budget must be >= 0");
    if (t > 5 && budget == 0)
        throw RefusalError("find_k1t: exact search is limited to t <= 5; pass a node budget for larger t");
    K1tResult res;
    if (t == 0) {
        res.status = SearchStatus::Found;
        res.certificate = MinorCertificate{};
        return res;
    }
    if (t == 1) {
        if (g.n() == 0) return res;
        res.status = SearchStatus::Found;
        res.certificate = MinorCertificate{0, {{0, {{0, -1}}}}, {}};
        return res;
    }
    return K1tSearch(g, t, budget).run();
}

}  // namespace subexp
