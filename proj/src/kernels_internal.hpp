#pragma once

#include "subexp/kernels.hpp"

namespace subexp::kernels {

// Does G - s split into two groups of weight <= cap (weights = |component & weight_mask|)?
bool separator_works(const BitGraph& g, std::uint64_t s, std::uint64_t weight_mask, int cap);

}  // namespace subexp::kernels

namespace subexp::kernels {

// Enumerates vertex partitions as restricted growth strings, keeping the densest
// shallow quotient. Each call explores the strings extending `prefix`.
class PartitionSearch {
public:
    PartitionSearch(const BitGraph& g, int k);

    void run(const std::vector<int>& prefix, ShallowMinorChoice& best) const;

    // All restricted growth strings of the given length, lexicographically.
    static std::vector<std::vector<int>> prefixes(int length);

    // Empty graph: vertices 0; otherwise a single vertex.
    ShallowMinorChoice initial() const;

    // Is a better (strictly denser) than b?
    static bool denser(const ShallowMinorChoice& a, const ShallowMinorChoice& b);

private:
    void extend(std::vector<int>& rgs, std::vector<std::uint64_t>& blocks, int next, ShallowMinorChoice& best) const;
    void evaluate(const std::vector<std::uint64_t>& blocks, ShallowMinorChoice& best) const;

    const BitGraph& g_;
    std::vector<int> center_;  // per vertex mask: valid center or -1
};

}  // namespace subexp::kernels
