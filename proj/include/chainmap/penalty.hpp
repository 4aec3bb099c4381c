#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "chainmap/homcomplex.hpp"

namespace chainmap {

struct PenaltyReport {
    long long value = 0;
    std::vector<int> image_counts;     // nonzero entries per domain simplex (column)
    std::vector<int> preimage_counts;  // nonzero entries per codomain simplex (row)
};

// max image support size + max preimage support size; a bisimplicial map
// scores 2.
template <class F>
PenaltyReport bisimplicial_penalty(const ChainMapMatrix<F>& g) {
    PenaltyReport r;
    r.image_counts.assign(g.g.cols, 0);
    r.preimage_counts.assign(g.g.rows, 0);
    for (int j = 0; j < g.g.cols; ++j)
        for (const auto& [i, c] : g.g.columns[j].entries) {
            ++r.image_counts[j];
            ++r.preimage_counts[i];
        }
    int mi = 0, mp = 0;
    for (int v : r.image_counts) mi = std::max(mi, v);
    for (int v : r.preimage_counts) mp = std::max(mp, v);
    r.value = mi + mp;
    return r;
}

struct EnumerationResult {
    uint64_t total = 0;
    long long min_value = 0;
    std::vector<uint64_t> minimizers;            // coefficient vectors as bit patterns
    std::map<long long, uint64_t> histogram;     // penalty value -> count
};

// Exhaustive scan of all 2^|homotopies| coefficient vectors (raw homotopy
// columns, binary counting order, bit n = coefficient of homotopy n).
EnumerationResult enumerate_z2(const MapParameterization<Z2>& p, int cap = 24);

}  // namespace chainmap
