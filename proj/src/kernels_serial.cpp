#include "subexp/errors.hpp"
#include "subexp/kernels.hpp"
#include "kernels_internal.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace subexp {

BitGraph BitGraph::from(const Graph& g) {
    if (g.n() > kMaxVertices) {
        throw RefusalError("graph has " + std::to_string(g.n()) +
                           " vertices; exhaustive kernels handle at most 64");
    }
    BitGraph b;
    b.n = g.n();
    b.adj.assign(static_cast<std::size_t>(b.n), 0);
    for (Vertex v = 0; v < g.n(); ++v)
        for (Vertex w : g.neighbors(v)) b.adj[static_cast<std::size_t>(v)] |= 1ULL << w;
    return b;
}

namespace kernels {

std::vector<std::uint64_t> components(const BitGraph& g, std::uint64_t mask) {
    std::vector<std::uint64_t> out;
    while (mask) {
        std::uint64_t comp = mask & (~mask + 1);
        std::uint64_t frontier = comp;
        while (frontier) {
            std::uint64_t next = 0;
            for (std::uint64_t f = frontier; f; f &= f - 1) next |= g.adj[static_cast<std::size_t>(std::countr_zero(f))];
            next &= mask & ~comp;
            comp |= next;
            frontier = next;
        }
        out.push_back(comp);
        mask &= ~comp;
    }
    return out;
}

namespace {

using Reach = unsigned __int128;

bool feasible_total(Reach reach, int total, int cap) {
    const int lo = std::max(0, total - cap);
    for (int x = lo; x <= std::min(cap, total); ++x)
        if ((reach >> x) & 1) return true;
    return false;
}

}  // namespace

bool splittable(std::span<const int> weights, int cap) {
    if (cap < 0) return false;
    int total = 0;
    Reach reach = 1;
    for (int w : weights) {
        total += w;
        reach |= reach << w;
    }
    return feasible_total(reach, total, cap);
}

std::optional<std::vector<char>> split_assignment(std::span<const int> weights, int cap) {
    if (cap < 0) return std::nullopt;
    // reach[i] = totals reachable with the first i components
    std::vector<Reach> reach(weights.size() + 1, 0);
    reach[0] = 1;
    int total = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        reach[i + 1] = reach[i] | (reach[i] << weights[i]);
        total += weights[i];
    }
    int target = -1;
    for (int x = std::max(0, total - cap); x <= std::min(cap, total); ++x)
        if ((reach.back() >> x) & 1) {
            target = x;
            break;
        }
    if (target < 0) return std::nullopt;
    std::vector<char> first(weights.size(), 0);
    for (std::size_t i = weights.size(); i-- > 0;) {
        if ((reach[i] >> target) & 1) continue;  // reachable without component i
        first[i] = 1;
        target -= weights[i];
    }
    return first;
}

bool separator_works(const BitGraph& g, std::uint64_t s, std::uint64_t weight_mask, int cap) {
    const std::uint64_t rest = g.all() & ~s;
    int total = 0;
    Reach reach = 1;
    for (std::uint64_t c : components(g, rest)) {
        const int w = std::popcount(c & weight_mask);
        total += w;
        reach |= reach << w;
    }
    return feasible_total(reach, total, cap);
}

namespace serial {

namespace {

// Extends `chosen` by `left` more vertices from [from, n) in lexicographic order.
bool search(const BitGraph& g, std::uint64_t chosen, int from, int left, std::uint64_t weight_mask, int cap,
            std::uint64_t& found) {
    if (left == 0) {
        if (separator_works(g, chosen, weight_mask, cap)) {
            found = chosen;
            return true;
        }
        return false;
    }
    for (int v = from; v <= g.n - left; ++v)
        if (search(g, chosen | (1ULL << v), v + 1, left - 1, weight_mask, cap, found)) return true;
    return false;
}

}  // namespace

std::optional<std::uint64_t> find_balanced_separator(const BitGraph& g, int size, std::uint64_t weight_mask,
                                                     int cap) {
    if (size < 0 || size > g.n) return std::nullopt;
    std::uint64_t found = 0;
    if (search(g, 0, 0, size, weight_mask, cap, found)) return found;
    return std::nullopt;
}

EdgeExpansion min_edge_expansion(const BitGraph& g) {
    EdgeExpansion best;
    if (g.n < 2) return best;
    const std::uint64_t count = 1ULL << g.n;
    std::uint64_t s = 0;
    long long cut = 0, size = 0;
    for (std::uint64_t i = 1; i < count; ++i) {
        const int v = std::countr_zero(i);
        const std::uint64_t bit = 1ULL << v;
        const int inside = std::popcount(g.adj[static_cast<std::size_t>(v)] & s);
        const int deg = std::popcount(g.adj[static_cast<std::size_t>(v)]);
        if (s & bit) {
            s &= ~bit;
            cut -= deg - 2 * inside;
            --size;
        } else {
            s |= bit;
            cut += deg - 2 * inside;
            ++size;
        }
        if (2 * size > g.n) continue;
        if (best.size == 0 || cut * best.size < best.cut * size) best = {cut, size};
    }
    const long long d = std::gcd(best.cut, best.size);
    if (d > 0) best = {best.cut / d, best.size / d};
    return best;
}

ShallowMinorChoice densest_shallow_minor(const BitGraph& g, int k) {
    PartitionSearch search(g, k);
    ShallowMinorChoice best = search.initial();
    search.run({}, best);
    return best;
}

}  // namespace serial

PartitionSearch::PartitionSearch(const BitGraph& g, int k) : g_(g) {
    if (g.n > kMaxPartitionVertices)
        throw RefusalError("partition enumeration handles at most " + std::to_string(kMaxPartitionVertices) +
                           " vertices");
    if (k < 0) throw ArgumentError("shallow minor depth must be >= 0");
    const std::size_t masks = std::size_t{1} << g.n;
    center_.assign(masks, -1);
    for (std::uint64_t mask = 1; mask < masks; ++mask) {
        for (std::uint64_t c = mask; c; c &= c - 1) {
            const int v = std::countr_zero(c);
            std::uint64_t reached = 1ULL << v, frontier = reached;
            for (int d = 0; d < k && frontier; ++d) {
                std::uint64_t next = 0;
                for (std::uint64_t f = frontier; f; f &= f - 1) next |= g.adj[static_cast<std::size_t>(std::countr_zero(f))];
                next &= mask & ~reached;
                reached |= next;
                frontier = next;
            }
            if (reached == mask) {
                center_[mask] = v;
                break;
            }
        }
    }
}

std::vector<std::vector<int>> PartitionSearch::prefixes(int length) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int top) -> void {
        if (static_cast<int>(cur.size()) == length) {
            out.push_back(cur);
            return;
        }
        for (int b = 0; b <= top + 1; ++b) {
            cur.push_back(b);
            self(self, std::max(top, b));
            cur.pop_back();
        }
    };
    if (length == 0) return {{}};
    rec(rec, -1);
    return out;
}

ShallowMinorChoice PartitionSearch::initial() const {
    ShallowMinorChoice c;
    if (g_.n > 0) {
        c.vertices = 1;
        c.blocks = {1};
        c.centers = {0};
    }
    return c;
}

bool PartitionSearch::denser(const ShallowMinorChoice& a, const ShallowMinorChoice& b) {
    if (a.vertices == 0) return false;
    if (b.vertices == 0) return true;
    return a.edges * b.vertices > b.edges * a.vertices;
}

void PartitionSearch::run(const std::vector<int>& prefix, ShallowMinorChoice& best) const {
    std::vector<int> rgs = prefix;
    std::vector<std::uint64_t> blocks;
    for (std::size_t v = 0; v < prefix.size(); ++v) {
        const auto b = static_cast<std::size_t>(prefix[v]);
        if (b >= blocks.size()) blocks.resize(b + 1, 0);
        blocks[b] |= 1ULL << v;
    }
    extend(rgs, blocks, static_cast<int>(prefix.size()), best);
}

void PartitionSearch::extend(std::vector<int>& rgs, std::vector<std::uint64_t>& blocks, int next,
                             ShallowMinorChoice& best) const {
    if (next == g_.n) {
        evaluate(blocks, best);
        return;
    }
    const std::uint64_t bit = 1ULL << next;
    for (std::size_t b = 0; b <= blocks.size(); ++b) {
        const bool fresh = b == blocks.size();
        if (fresh) blocks.push_back(0);
        blocks[b] |= bit;
        rgs.push_back(static_cast<int>(b));
        extend(rgs, blocks, next + 1, best);
        rgs.pop_back();
        blocks[b] &= ~bit;
        if (fresh) blocks.pop_back();
    }
}

void PartitionSearch::evaluate(const std::vector<std::uint64_t>& blocks, ShallowMinorChoice& best) const {
    for (auto b : blocks)
        if (center_[b] < 0) return;
    const std::size_t count = blocks.size();
    std::vector<std::uint32_t> qadj(count, 0);
    for (std::size_t i = 0; i < count; ++i) {
        std::uint64_t nb = 0;
        for (std::uint64_t m = blocks[i]; m; m &= m - 1) nb |= g_.adj[static_cast<std::size_t>(std::countr_zero(m))];
        for (std::size_t j = 0; j < count; ++j)
            if (j != i && (nb & blocks[j])) qadj[i] |= 1U << j;
    }
    thread_local std::vector<long long> edges;
    const std::size_t subsets = std::size_t{1} << count;
    edges.assign(subsets, 0);
    long long best_e = best.edges;
    int best_v = best.vertices;
    std::uint32_t best_s = 0;
    for (std::size_t s = 1; s < subsets; ++s) {
        const int low = std::countr_zero(s);
        const auto rest = static_cast<std::uint32_t>(s & (s - 1));
        edges[s] = edges[rest] + std::popcount(qadj[static_cast<std::size_t>(low)] & rest);
        const int v = std::popcount(s);
        if (best_v == 0 || edges[s] * best_v > best_e * v) {
            best_e = edges[s];
            best_v = v;
            best_s = static_cast<std::uint32_t>(s);
        }
    }
    if (best_s == 0) return;
    best.edges = best_e;
    best.vertices = best_v;
    best.blocks.clear();
    best.centers.clear();
    for (std::uint32_t m = best_s; m; m &= m - 1) {
        const auto b = blocks[static_cast<std::size_t>(std::countr_zero(m))];
        best.blocks.push_back(b);
        best.centers.push_back(center_[b]);
    }
}

}  // namespace kernels
}  // namespace subexp
