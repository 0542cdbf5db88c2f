#include "kernels_internal.hpp"

#include <atomic>
#include <bit>
#include <climits>
#include <numeric>

#include <omp.h>

namespace subexp::kernels::omp {

namespace {

// Lexicographic search inside the branch whose smallest vertex is `branch`;
// gives up once a smaller branch has reported a hit.
bool search(const BitGraph& g, std::uint64_t chosen, int from, int left, std::uint64_t weight_mask, int cap,
            std::uint64_t& found, const std::atomic<int>& best_branch, int branch) {
    if (best_branch.load(std::memory_order_relaxed) < branch) return false;
    if (left == 0) {
        if (separator_works(g, chosen, weight_mask, cap)) {
            found = chosen;
            return true;
        }
        return false;
    }
    for (int v = from; v <= g.n - left; ++v)
        if (search(g, chosen | (1ULL << v), v + 1, left - 1, weight_mask, cap, found, best_branch, branch))
            return true;
    return false;
}

bool less_ratio(const EdgeExpansion& a, const EdgeExpansion& b) {
    if (a.size == 0) return false;
    if (b.size == 0) return true;
    return a.cut * b.size < b.cut * a.size;
}

}  // namespace

std::optional<std::uint64_t> find_balanced_separator(const BitGraph& g, int size, std::uint64_t weight_mask,
                                                     int cap) {
    if (size <= 0 || size > g.n) return serial::find_balanced_separator(g, size, weight_mask, cap);
    std::atomic<int> best_branch{INT_MAX};
    std::uint64_t best_mask = 0;
    const int last = g.n - size;
#pragma omp parallel for schedule(dynamic, 1)
    for (int v = 0; v <= last; ++v) {
        std::uint64_t found = 0;
        if (search(g, 1ULL << v, v + 1, size - 1, weight_mask, cap, found, best_branch, v)) {
#pragma omp critical(subexp_separator_best)
            if (v < best_branch.load()) {
                best_branch.store(v);
                best_mask = found;
            }
        }
    }
    if (best_branch.load() == INT_MAX) return std::nullopt;
    return best_mask;
}

EdgeExpansion min_edge_expansion(const BitGraph& g) {
    if (g.n < 2) return {};
    const int high = std::min(g.n - 1, 8);
    const int low = g.n - high;
    const long long chunks = 1LL << high;
    EdgeExpansion best;
#pragma omp parallel
    {
        EdgeExpansion local;
#pragma omp for schedule(dynamic, 1)
        for (long long p = 0; p < chunks; ++p) {
            std::uint64_t s = static_cast<std::uint64_t>(p) << low;
            long long size = std::popcount(s), cut = 0;
            for (std::uint64_t t = s; t; t &= t - 1)
                cut += std::popcount(g.adj[static_cast<std::size_t>(std::countr_zero(t))] & ~s);
            auto consider = [&] {
                if (size == 0 || 2 * size > g.n) return;
                const EdgeExpansion cand{cut, size};
                if (less_ratio(cand, local)) local = cand;
            };
            consider();
            const std::uint64_t count = 1ULL << low;
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
                consider();
            }
        }
#pragma omp critical(subexp_expansion_best)
        if (less_ratio(local, best)) best = local;
    }
    const long long d = std::gcd(best.cut, best.size);
    if (d > 0) best = {best.cut / d, best.size / d};
    return best;
}

ShallowMinorChoice densest_shallow_minor(const BitGraph& g, int k) {
    const PartitionSearch search(g, k);
    const auto prefixes = PartitionSearch::prefixes(std::min(g.n, 5));
    std::vector<ShallowMinorChoice> local(prefixes.size());
    const int count = static_cast<int>(prefixes.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (int i = 0; i < count; ++i) search.run(prefixes[static_cast<std::size_t>(i)], local[static_cast<std::size_t>(i)]);
    // Chunks follow the serial enumeration order, so a strict-improvement merge
    // reproduces the serial tie-breaking.
    ShallowMinorChoice best = search.initial();
    for (const auto& c : local)
        if (PartitionSearch::denser(c, best)) best = c;
    return best;
}

}  // namespace subexp::kernels::omp
