#pragma once

#include <cmath>

#include "chainmap/homcomplex.hpp"
#include "chainmap/lp.hpp"
#include "chainmap/rng.hpp"

namespace chainmap {

template <class F>
F abs_value(const F& x) {
    return x < FieldTraits<F>::zero() ? -x : x;
}

// Maximum absolute column sum (the operator 1-norm).
template <class F>
F matrix_one_norm(const Matrix<F>& m) {
    F best = FieldTraits<F>::zero();
    for (int j = 0; j < m.cols; ++j) {
        F s = FieldTraits<F>::zero();
        for (const auto& [i, c] : m.columns[j].entries) s = s + abs_value(c);
        if (s > best) best = s;
    }
    return best;
}

template <class F>
F norm_objective(const Matrix<F>& m) {
    return matrix_one_norm(m) + matrix_one_norm(m.transpose());
}

// The ||G||_1 + ||G^T||_1 program over the affine chart, with G eliminated:
// variables are the homotopy coefficients c_n (free), one absolute-value
// auxiliary per hom-basis entry, and the two norm bounds t1, t2.
template <class F>
struct NormLp {
    LinearProgram<F> lp;
    int num_c = 0;        // c variables come first
    int num_entries = 0;  // then s variables, then t1, t2
    HomotopySet set = HomotopySet::Reduced;
};

template <class F>
NormLp<F> build_norm_lp(const MapParameterization<F>& p, HomotopySet set = HomotopySet::Reduced) {
    const auto& hs = p.homotopies(set == HomotopySet::Reduced);
    NormLp<F> out;
    out.set = set;
    int H = static_cast<int>(hs.size());
    int E = p.basis0.size();
    out.num_c = H;
    out.num_entries = E;

    auto& lp = out.lp;
    lp.num_vars = H + E + 2;
    lp.objective.assign(lp.num_vars, FieldTraits<F>::zero());
    lp.objective[H + E] = FieldTraits<F>::one();      // t1
    lp.objective[H + E + 1] = FieldTraits<F>::one();  // t2
    lp.nonneg.assign(lp.num_vars, true);
    for (int n = 0; n < H; ++n) lp.nonneg[n] = false;

    std::vector<F> base = p.base_vector().to_dense();

    // s_e >= +-G_e(c):  -+ sum_n H_ne c_n + s_e >= +- base_e
    for (int e = 0; e < E; ++e) {
        SparseVector<F> pos(lp.num_vars), neg(lp.num_vars);
        for (int n = 0; n < H; ++n) {
            F h = hs[n].get(e);
            if (FieldTraits<F>::is_zero(h)) continue;
            pos.entries.emplace_back(n, -h);
            neg.entries.emplace_back(n, h);
        }
        pos.entries.emplace_back(H + e, FieldTraits<F>::one());
        neg.entries.emplace_back(H + e, FieldTraits<F>::one());
        lp.add_row(pos, Sense::GE, base[e]);
        lp.add_row(neg, Sense::GE, -base[e]);
    }

    // column sums bounded by t1, row sums (of G) by t2
    std::vector<std::vector<int>> by_col(p.domain->total_count()), by_row(p.codomain->total_count());
    for (int e = 0; e < E; ++e) {
        auto [si, tj] = p.basis0.pairs[e];
        by_col[si].push_back(e);
        by_row[tj].push_back(e);
    }
    auto add_bound = [&](const std::vector<int>& entries, int t_var) {
        if (entries.empty()) return;
        SparseVector<F> row(lp.num_vars);
        for (int e : entries) row.entries.emplace_back(H + e, FieldTraits<F>::one());
        row.entries.emplace_back(t_var, -FieldTraits<F>::one());
        lp.add_row(row, Sense::LE, FieldTraits<F>::zero());
    };
    for (const auto& es : by_col) add_bound(es, H + E);
    for (const auto& es : by_row) add_bound(es, H + E + 1);
    return out;
}

template <class F>
struct VertexSample {
    ChainMapMatrix<F> map;
    std::vector<F> coefficients;
    F lp_optimum = FieldTraits<F>::zero();
    F attained = FieldTraits<F>::zero();
    bool basic = false;
};

// Random extremal point of the admissible set: solve the norm LP, pin its
// optimum value as a constraint, then minimize a random direction over the
// homotopy coefficients.
template <class F>
VertexSample<F> random_vertex(const MapParameterization<F>& p, uint64_t seed,
                              HomotopySet set = HomotopySet::Reduced) {
    NormLp<F> norm = build_norm_lp(p, set);
    LpResult<F> stage1 = solve_lp(norm.lp, seed);
    if (stage1.status != LpStatus::Optimal)
        throw InternalError("norm LP must be bounded and feasible");

    LinearProgram<F> lp2 = norm.lp;
    {
        // t1 + t2 <= optimum pins the optimal face
        SparseVector<F> face(lp2.num_vars);
        face.entries.emplace_back(norm.num_c + norm.num_entries, FieldTraits<F>::one());
        face.entries.emplace_back(norm.num_c + norm.num_entries + 1, FieldTraits<F>::one());
        F rhs = stage1.objective_value;
        if constexpr (!FieldTraits<F>::exact) rhs = rhs + 1e-9;  // rounding headroom
        lp2.add_row(face, Sense::LE, rhs);
    }
    Rng rng(seed);
    std::fill(lp2.objective.begin(), lp2.objective.end(), FieldTraits<F>::zero());
    for (int n = 0; n < norm.num_c; ++n)
        lp2.objective[n] = FieldTraits<F>::from_int(rng.int_range(-1000, 1000));

    LpResult<F> stage2 = solve_lp(lp2, seed);
    if (stage2.status != LpStatus::Optimal)
        throw InternalError("optimal-face LP must be bounded and feasible");

    VertexSample<F> out;
    out.coefficients.assign(stage2.x.begin(), stage2.x.begin() + norm.num_c);
    out.map = evaluate_map(p, out.coefficients, set);
    out.lp_optimum = stage1.objective_value;
    out.attained = norm_objective(out.map.g);
    out.basic = stage2.is_basic;
    return out;
}

// Entrywise 2-norm over 1-norm of the flattened matrix; peaks at 1 for a
// single spike, 1/sqrt(n) for n equal entries.
template <class F>
double sparsity_score(const Matrix<F>& m) {
    double l1 = 0, l2 = 0;
    for (int j = 0; j < m.cols; ++j)
        for (const auto& [i, c] : m.columns[j].entries) {
            double v = std::abs(FieldTraits<F>::to_double(c));
            l1 += v;
            l2 += v * v;
        }
    if (l1 == 0) throw std::invalid_argument("sparsity_score: zero map");
    return std::sqrt(l2) / l1;
}

}  // namespace chainmap
