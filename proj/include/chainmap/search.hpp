#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "chainmap/homcomplex.hpp"

namespace chainmap {

struct AnnealSchedule {
    double t0 = 10.0;
    double cooling = 0.999;  // T_k = t0 * cooling^k
};

struct SearchTrace {
    long long iterations = 0;
    long long best_value = 0;
    std::vector<uint8_t> best_coefficients;
    uint64_t seed = 0;
    AnnealSchedule schedule;
    std::vector<std::pair<long long, long long>> best_history;  // (iteration, value)
};

// Objective over a Z/2 coefficient vector; empty function means the
// bisimplicial penalty.
using Z2Objective = std::function<long long(const std::vector<uint8_t>&)>;

SearchTrace simulated_annealing(const MapParameterization<Z2>& p, long long iterations,
                                const AnnealSchedule& schedule, uint64_t seed,
                                const Z2Objective& objective = {});

SearchTrace greedy_search(const MapParameterization<Z2>& p, long long max_evaluations,
                          uint64_t seed, const Z2Objective& objective = {});

SearchTrace random_walk(const MapParameterization<Z2>& p, long long steps, uint64_t seed,
                        const Z2Objective& objective = {});

// Penalty of one coefficient vector (raw homotopies).
long long z2_penalty(const MapParameterization<Z2>& p, const std::vector<uint8_t>& coeffs);

}  // namespace chainmap
