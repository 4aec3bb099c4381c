#pragma once

#include <vector>

#include "chainmap/sparse.hpp"

namespace chainmap {

enum class Sense { LE, EQ, GE };
enum class LpStatus { Optimal, Infeasible, Unbounded };

template <class F>
struct LpRow {
    SparseVector<F> coeffs;
    Sense sense = Sense::LE;
    F rhs = FieldTraits<F>::zero();
};

template <class F>
struct LinearProgram {
    int num_vars = 0;
    std::vector<F> objective;    // minimized; dense, size num_vars
    std::vector<LpRow<F>> rows;
    std::vector<bool> nonneg;    // per variable: true = [0, inf), false = free

    void add_row(const SparseVector<F>& coeffs, Sense sense, const F& rhs) {
        rows.push_back({coeffs, sense, rhs});
    }
};

template <class F>
struct LpResult {
    LpStatus status = LpStatus::Optimal;
    F objective_value = FieldTraits<F>::zero();
    std::vector<F> x;       // values of the original variables
    bool is_basic = false;  // solution is a basic (vertex) solution
    long long pivots = 0;
};

// Two-phase dense simplex with Bland's anti-cycling rule.  Deterministic;
// exact over the rationals.  The seed parameter is recorded interface parity
// only: pivoting never consults it.
template <class F>
LpResult<F> solve_lp(const LinearProgram<F>& lp, uint64_t seed = 0);

// --- implementation ---

namespace lp_detail {

template <class F>
struct Tableau {
    int m = 0, n = 0;                     // rows, structural columns
    std::vector<std::vector<F>> a;        // m x (n+1), last column = rhs
    std::vector<F> z;                     // reduced-cost row, size n+1
    std::vector<int> basis;               // basic variable per row

    void pivot(int row, int col) {
        F inv = FieldTraits<F>::one() / a[row][col];
        for (auto& v : a[row]) v = v * inv;
        for (int r = 0; r < m; ++r) {
            if (r == row || FieldTraits<F>::is_zero(a[r][col])) continue;
            F factor = a[r][col];
            for (int c = 0; c <= n; ++c) a[r][c] = a[r][c] - factor * a[row][c];
        }
        if (!FieldTraits<F>::is_zero(z[col])) {
            F factor = z[col];
            for (int c = 0; c <= n; ++c) z[c] = z[c] - factor * a[row][c];
        }
        basis[row] = col;
    }

    void load_costs(const std::vector<F>& cost) {
        z.assign(n + 1, FieldTraits<F>::zero());
        for (int j = 0; j < n; ++j) z[j] = cost[j];
        for (int r = 0; r < m; ++r) {
            const F& cb = cost[basis[r]];
            if (FieldTraits<F>::is_zero(cb)) continue;
            for (int c = 0; c <= n; ++c) z[c] = z[c] - cb * a[r][c];
        }
    }
};

// Minimize cost over the tableau with Bland's rule.  allowed[j] marks
// columns that may enter the basis.  Returns false if unbounded.
template <class F>
bool run_simplex(Tableau<F>& t, const std::vector<F>& cost, const std::vector<bool>& allowed,
                 long long& pivots) {
    const F zero = FieldTraits<F>::zero();
    const long long pivot_cap = 2'000'000;
    t.load_costs(cost);
    while (true) {
        if (pivots > pivot_cap) throw std::runtime_error("simplex pivot cap exceeded");
        int enter = -1;
        for (int j = 0; j < t.n; ++j) {
            if (!allowed[j]) continue;
            if (t.z[j] < zero && !FieldTraits<F>::is_zero(t.z[j])) {
                enter = j;
                break;  // Bland: lowest eligible index
            }
        }
        if (enter < 0) return true;
        int leave = -1;
        F best_ratio = zero;
        for (int r = 0; r < t.m; ++r) {
            const F& arj = t.a[r][enter];
            if (arj > zero && !FieldTraits<F>::is_zero(arj)) {
                F ratio = t.a[r][t.n] / arj;
                if (leave < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && t.basis[r] < t.basis[leave]))
                    leave = r, best_ratio = ratio;
            }
        }
        if (leave < 0) return false;  // unbounded
        t.pivot(leave, enter);
        ++pivots;
    }
}

}  // namespace lp_detail

template <class F>
LpResult<F> solve_lp(const LinearProgram<F>& lp, uint64_t /*seed*/) {
    using lp_detail::Tableau;
    const F zero = FieldTraits<F>::zero();
    const F one = FieldTraits<F>::one();

    // standard form: free variables split, slack/surplus appended, then
    // artificials for rows without a natural basic column
    int m = static_cast<int>(lp.rows.size());
    std::vector<int> pos_col(lp.num_vars), neg_col(lp.num_vars, -1);
    int n = 0;
    for (int j = 0; j < lp.num_vars; ++j) {
        pos_col[j] = n++;
        if (!lp.nonneg[j]) neg_col[j] = n++;
    }
    int slack_base = n;
    for (int r = 0; r < m; ++r)
        if (lp.rows[r].sense != Sense::EQ) ++n;
    int art_base = n;

    Tableau<F> t;
    t.m = m;
    std::vector<std::vector<F>> rows(m);
    std::vector<int> art_of(m, -1), slack_of(m, -1);
    {
        int next_slack = slack_base;
        for (int r = 0; r < m; ++r) {
            const auto& row = lp.rows[r];
            std::vector<F> a(art_base, zero);
            for (const auto& [j, c] : row.coeffs.entries) {
                a[pos_col[j]] = a[pos_col[j]] + c;
                if (neg_col[j] >= 0) a[neg_col[j]] = a[neg_col[j]] - c;
            }
            F rhs = row.rhs;
            F slack_sign = zero;
            if (row.sense == Sense::LE) slack_sign = one;
            if (row.sense == Sense::GE) slack_sign = -one;
            int sc = -1;
            if (row.sense != Sense::EQ) sc = next_slack++;
            // normalize to nonnegative rhs
            bool flip = rhs < zero && !FieldTraits<F>::is_zero(rhs);
            if (flip) {
                for (auto& v : a) v = -v;
                rhs = -rhs;
                slack_sign = -slack_sign;
            }
            if (sc >= 0) {
                a.resize(art_base, zero);
                a[sc] = slack_sign;
                slack_of[r] = (slack_sign == one) ? sc : -1;  // usable as basis only if +1
            }
            a.push_back(rhs);
            rows[r] = std::move(a);
        }
    }
    // artificials where no slack can serve as the initial basic variable
    int n_total = art_base;
    for (int r = 0; r < m; ++r)
        if (slack_of[r] < 0) art_of[r] = n_total++;
    t.n = n_total;
    t.a.assign(m, {});
    t.basis.assign(m, -1);
    for (int r = 0; r < m; ++r) {
        auto& a = rows[r];
        F rhs = a.back();
        a.pop_back();
        a.resize(n_total, zero);
        if (art_of[r] >= 0) {
            a[art_of[r]] = one;
            t.basis[r] = art_of[r];
        } else {
            t.basis[r] = slack_of[r];
        }
        a.push_back(rhs);
        t.a[r] = std::move(a);
    }

    LpResult<F> res;
    std::vector<bool> allowed(n_total, true);

    // phase 1: drive artificials to zero
    bool have_art = false;
    for (int r = 0; r < m; ++r) have_art |= art_of[r] >= 0;
    if (have_art) {
        std::vector<F> cost1(n_total, zero);
        for (int r = 0; r < m; ++r)
            if (art_of[r] >= 0) cost1[art_of[r]] = one;
        if (!lp_detail::run_simplex(t, cost1, allowed, res.pivots)) {
            res.status = LpStatus::Infeasible;  // phase 1 cannot be unbounded
            return res;
        }
        F p1 = zero;
        for (int r = 0; r < m; ++r)
            if (cost1[t.basis[r]] == one) p1 = p1 + t.a[r][t.n];
        if (!FieldTraits<F>::is_zero(p1)) {
            res.status = LpStatus::Infeasible;
            return res;
        }
        // pivot lingering zero-level artificials out where possible
        for (int r = 0; r < m; ++r) {
            if (t.basis[r] < art_base) continue;
            for (int j = 0; j < art_base; ++j)
                if (!FieldTraits<F>::is_zero(t.a[r][j])) {
                    t.pivot(r, j);
                    ++res.pivots;
                    break;
                }
        }
        for (int j = art_base; j < n_total; ++j) allowed[j] = false;
    }

    // phase 2
    std::vector<F> cost2(n_total, zero);
    for (int j = 0; j < lp.num_vars; ++j) {
        cost2[pos_col[j]] = lp.objective[j];
        if (neg_col[j] >= 0) cost2[neg_col[j]] = -lp.objective[j];
    }
    if (!lp_detail::run_simplex(t, cost2, allowed, res.pivots)) {
        res.status = LpStatus::Unbounded;
        return res;
    }

    res.status = LpStatus::Optimal;
    res.is_basic = true;
    std::vector<F> std_x(n_total, zero);
    for (int r = 0; r < m; ++r) std_x[t.basis[r]] = t.a[r][t.n];
    res.x.assign(lp.num_vars, zero);
    for (int j = 0; j < lp.num_vars; ++j) {
        res.x[j] = std_x[pos_col[j]];
        if (neg_col[j] >= 0) res.x[j] = res.x[j] - std_x[neg_col[j]];
        res.objective_value = res.objective_value + lp.objective[j] * res.x[j];
    }
    return res;
}

}  // namespace chainmap
