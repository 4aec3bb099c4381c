#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "chainmap/penalty.hpp"
#include "chainmap/rng.hpp"
#include "chainmap/search.hpp"

namespace chainmap {

namespace {

// Incrementally maintained Z/2 map state: a dense bit image of the degree-0
// hom coordinates plus per-column/per-row nonzero counts of the block
// matrix.
class Z2State {
  public:
    explicit Z2State(const MapParameterization<Z2>& p) : p_(p) {
        int n = p.basis0.size();
        row_of_.resize(n);
        col_of_.resize(n);
        for (int f = 0; f < n; ++f) {
            auto [si, tj] = p.basis0.pairs[f];
            col_of_[f] = si;
            row_of_[f] = tj;
        }
        bits_.assign(n, 0);
        col_count_.assign(p.domain->total_count(), 0);
        row_count_.assign(p.codomain->total_count(), 0);
        for (const auto& [i, c] : p.base_vector().entries) flip(i);
        base_bits_ = bits_;
        base_col_ = col_count_;
        base_row_ = row_count_;
    }

    void reset() {
        bits_ = base_bits_;
        col_count_ = base_col_;
        row_count_ = base_row_;
    }

    // XOR homotopy n into the current state.
    void toggle(int n) {
        for (const auto& [i, c] : p_.homotopies_raw[n].entries) flip(i);
    }

    long long penalty() const {
        int mi = 0, mp = 0;
        for (int v : col_count_) mi = std::max(mi, v);
        for (int v : row_count_) mp = std::max(mp, v);
        return mi + mp;
    }

  private:
    void flip(int f) {
        bits_[f] ^= 1;
        int d = bits_[f] ? 1 : -1;
        col_count_[col_of_[f]] += d;
        row_count_[row_of_[f]] += d;
    }

    const MapParameterization<Z2>& p_;
    std::vector<int> row_of_, col_of_;
    std::vector<uint8_t> bits_, base_bits_;
    std::vector<int> col_count_, row_count_, base_col_, base_row_;
};

long long state_penalty_of(const MapParameterization<Z2>& p, Z2State& state,
                           const std::vector<uint8_t>& coeffs) {
    state.reset();
    for (size_t n = 0; n < coeffs.size(); ++n)
        if (coeffs[n]) state.toggle(static_cast<int>(n));
    return state.penalty();
}

}  // namespace

long long z2_penalty(const MapParameterization<Z2>& p, const std::vector<uint8_t>& coeffs) {
    if (coeffs.size() != p.homotopies_raw.size())
        throw std::invalid_argument("z2_penalty: coefficient count mismatch");
    Z2State state(p);
    return state_penalty_of(p, state, coeffs);
}

EnumerationResult enumerate_z2(const MapParameterization<Z2>& p, int cap) {
    int h = static_cast<int>(p.homotopies_raw.size());
    if (h > cap)
        throw std::invalid_argument("enumerate_z2: " + std::to_string(h) +
                                    " homotopies exceed the enumeration cap of " +
                                    std::to_string(cap) +
                                    "; raise the cap explicitly to proceed");

    EnumerationResult res;
    res.total = uint64_t{1} << h;
    Z2State state(p);

    // Binary counting: incrementing x flips its trailing ones plus the next
    // bit, so the state is patched instead of rebuilt.
    res.min_value = state.penalty();
    for (uint64_t x = 0;; ++x) {
        long long v = state.penalty();
        ++res.histogram[v];
        if (v < res.min_value) {
            res.min_value = v;
            res.minimizers.clear();
        }
        if (v == res.min_value) res.minimizers.push_back(x);
        if (x + 1 == res.total) break;
        uint64_t next = x + 1;
        uint64_t changed = x ^ next;
        for (int n = 0; n < h; ++n)
            if (changed >> n & 1) state.toggle(n);
    }
    return res;
}

namespace {

SearchTrace run_search(const MapParameterization<Z2>& p, long long budget, uint64_t seed,
                       const Z2Objective& objective, const AnnealSchedule& schedule,
                       int mode /*0=anneal 1=greedy 2=walk*/) {
    int h = static_cast<int>(p.homotopies_raw.size());
    Z2State state(p);
    auto eval = [&](const std::vector<uint8_t>& c) {
        return objective ? objective(c) : state_penalty_of(p, state, c);
    };

    SearchTrace trace;
    trace.seed = seed;
    trace.schedule = schedule;
    Rng rng(seed);

    std::vector<uint8_t> current(h, 0);
    long long cur_v = eval(current);
    trace.best_value = cur_v;
    trace.best_coefficients = current;
    trace.best_history.push_back({0, cur_v});

    auto note_best = [&](const std::vector<uint8_t>& c, long long v, long long iter) {
        if (v < trace.best_value) {
            trace.best_value = v;
            trace.best_coefficients = c;
            trace.best_history.push_back({iter, v});
        }
    };

    if (mode == 1) {  // greedy descent with randomized restarts
        long long evals = 1;
        while (evals < budget) {
            bool improved = true;
            while (improved && evals < budget) {
                improved = false;
                int best_flip = -1;
                long long best_v = cur_v;
                for (int n = 0; n < h && evals < budget; ++n) {
                    current[n] ^= 1;
                    long long v = eval(current);
                    ++evals;
                    current[n] ^= 1;
                    if (v < best_v) {
                        best_v = v;
                        best_flip = n;
                    }
                }
                if (best_flip >= 0) {
                    current[best_flip] ^= 1;
                    cur_v = best_v;
                    note_best(current, cur_v, evals);
                    improved = true;
                }
            }
            // local minimum: restart from a random vector
            for (int n = 0; n < h; ++n) current[n] = static_cast<uint8_t>(rng.index(2));
            cur_v = eval(current);
            ++evals;
            note_best(current, cur_v, evals);
        }
        trace.iterations = evals;
        return trace;
    }

    for (long long k = 0; k < budget; ++k) {
        if (h == 0) break;
        int n = static_cast<int>(rng.index(h));
        current[n] ^= 1;
        long long v = eval(current);
        bool accept;
        if (mode == 2) {
            accept = true;  // unbiased walk
        } else {
            double t = schedule.t0 * std::pow(schedule.cooling, static_cast<double>(k));
            double delta = static_cast<double>(v - cur_v);
            accept = delta <= 0 || (t > 0 && rng.real() < std::exp(-delta / t));
        }
        if (accept) {
            cur_v = v;
            note_best(current, cur_v, k + 1);
        } else {
            current[n] ^= 1;
        }
    }
    trace.iterations = budget;
    return trace;
}

}  // namespace

SearchTrace simulated_annealing(const MapParameterization<Z2>& p, long long iterations,
                                const AnnealSchedule& schedule, uint64_t seed,
                                const Z2Objective& objective) {
    return run_search(p, iterations, seed, objective, schedule, 0);
}

SearchTrace greedy_search(const MapParameterization<Z2>& p, long long max_evaluations,
                          uint64_t seed, const Z2Objective& objective) {
    return run_search(p, max_evaluations, seed, objective, AnnealSchedule{}, 1);
}

SearchTrace random_walk(const MapParameterization<Z2>& p, long long steps, uint64_t seed,
                        const Z2Objective& objective) {
    return run_search(p, steps, seed, objective, AnnealSchedule{}, 2);
}

}  // namespace chainmap
