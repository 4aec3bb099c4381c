#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "chainmap/sparse.hpp"

namespace chainmap {

template <class F>
struct Reduction {
    int rank = 0;
    std::vector<std::pair<int, int>> pivots;     // (row, original column)
    std::vector<SparseVector<F>> kernel_basis;   // m * k == 0 for each k
    std::vector<SparseVector<F>> image_basis;    // echelon basis of the column space
};

// Column reduction with combination tracking.  Columns are processed left to
// right; a column is repeatedly cancelled against the earlier column sharing
// its lowest nonzero row.  Columns that reduce to zero yield kernel vectors
// (read off the tracked combination), the rest give an echelon image basis.
// Fully deterministic: no pivot heuristics.
template <class F>
Reduction<F> row_reduce(const Matrix<F>& m, bool want_kernel = true) {
    Reduction<F> red;
    std::vector<SparseVector<F>> work(m.columns);
    std::vector<SparseVector<F>> combo;
    if (want_kernel) {
        combo.reserve(m.cols);
        for (int j = 0; j < m.cols; ++j) combo.push_back(SparseVector<F>::unit(m.cols, j));
    }
    std::unordered_map<int, int> low_to_col;
    low_to_col.reserve(m.cols);

    for (int j = 0; j < m.cols; ++j) {
        auto& c = work[j];
        while (!c.empty()) {
            auto it = low_to_col.find(c.low());
            if (it == low_to_col.end()) break;
            int k = it->second;
            F ratio = c.low_coeff() / work[k].low_coeff();
            c.axpy(-ratio, work[k]);
            if (want_kernel) combo[j].axpy(-ratio, combo[k]);
        }
        if (!c.empty()) {
            low_to_col.emplace(c.low(), j);
            red.pivots.emplace_back(c.low(), j);
            red.image_basis.push_back(c);
        } else if (want_kernel) {
            red.kernel_basis.push_back(combo[j]);
        }
    }
    red.rank = static_cast<int>(red.pivots.size());
    return red;
}

template <class F>
int rank(const Matrix<F>& m) {
    return row_reduce(m, false).rank;
}

// Coefficients c with sum_i c_i basis_i == v, if v lies in the span.
template <class F>
std::optional<SparseVector<F>> solve_membership(const std::vector<SparseVector<F>>& basis,
                                                const SparseVector<F>& v) {
    int n = static_cast<int>(basis.size());
    int dim = v.dim;
    for (const auto& b : basis)
        if (b.dim != dim) throw std::invalid_argument("solve_membership: dimension mismatch");

    Matrix<F> m(dim, n + 1);
    for (int j = 0; j < n; ++j) m.columns[j] = basis[j];
    m.columns[n] = v;
    for (auto& c : m.columns) c.dim = dim;

    Reduction<F> red = row_reduce(m, true);
    for (const auto& k : red.kernel_basis) {
        F last = k.get(n);
        if (!FieldTraits<F>::is_zero(last)) {
            // sum_j k_j basis_j + last * v == 0  =>  v = -(1/last) sum k_j basis_j
            SparseVector<F> coeffs(n);
            F scale = -(FieldTraits<F>::one() / last);
            for (const auto& [i, c] : k.entries)
                if (i < n) coeffs.entries.emplace_back(i, c * scale);
            return coeffs;
        }
    }
    return std::nullopt;
}

// Representatives of the quotient span(cycles) / span(boundaries): the
// earliest cycles (in input order) that stay independent modulo the
// boundaries and the previously accepted cycles, each scaled to leading
// coefficient one.
template <class F>
std::vector<SparseVector<F>> quotient_representatives(const std::vector<SparseVector<F>>& cycles,
                                                      const std::vector<SparseVector<F>>& boundaries) {
    std::unordered_map<int, SparseVector<F>> low_to_vec;
    auto reduce_against = [&](SparseVector<F> c) {
        while (!c.empty()) {
            auto it = low_to_vec.find(c.low());
            if (it == low_to_vec.end()) break;
            F ratio = c.low_coeff() / it->second.low_coeff();
            c.axpy(-ratio, it->second);
        }
        return c;
    };
    for (const auto& b : boundaries) {
        SparseVector<F> r = reduce_against(b);
        if (!r.empty()) low_to_vec.emplace(r.low(), r);
    }
    std::vector<SparseVector<F>> reps;
    for (const auto& z : cycles) {
        SparseVector<F> r = reduce_against(z);
        if (!r.empty()) {
            low_to_vec.emplace(r.low(), r);
            SparseVector<F> rep = z;
            rep.normalize_leading();
            reps.push_back(std::move(rep));
        }
    }
    return reps;
}

}  // namespace chainmap
