#pragma once

// Independent reference computations used only by tests.  These deliberately
// avoid the library's elimination/LP/Kronecker code paths.

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "chainmap/fields.hpp"
#include "chainmap/lp.hpp"
#include "chainmap/rng.hpp"
#include "chainmap/sparse.hpp"

namespace oracles {

using chainmap::BigInt;
using chainmap::Rational;

// Rank by fraction-free Bareiss elimination over big integers.
inline int bareiss_rank(std::vector<std::vector<BigInt>> a) {
    if (a.empty() || a[0].empty()) return 0;
    int rows = static_cast<int>(a.size());
    int cols = static_cast<int>(a[0].size());
    int rank = 0;
    BigInt prev(1);
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        for (int r = rank + 1; r < rows; ++r) {
            for (int c = col + 1; c < cols; ++c)
                a[r][c] = (a[rank][col] * a[r][c] - a[r][col] * a[rank][c]) / prev;
            a[r][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

// Clears denominators of a rational matrix column-by-column, then Bareiss.
inline int bareiss_rank(const chainmap::Matrix<Rational>& m) {
    std::vector<std::vector<BigInt>> a(m.rows, std::vector<BigInt>(m.cols, 0));
    for (int j = 0; j < m.cols; ++j) {
        BigInt lcm(1);
        for (const auto& [i, c] : m.columns[j].entries) {
            BigInt den = boost::multiprecision::denominator(c);
            lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
        }
        for (const auto& [i, c] : m.columns[j].entries)
            a[i][j] = boost::multiprecision::numerator(c) *
                      (lcm / boost::multiprecision::denominator(c));
    }
    return bareiss_rank(std::move(a));
}

// Explicit Kronecker product (F (x) F) as a dense matrix, paired with a dense
// matrix-vector product.  Index convention: pair (a, b) -> a * n + b.
template <class F>
std::vector<F> kron_matvec(const chainmap::Matrix<F>& m, const std::vector<F>& v) {
    int I = m.cols, J = m.rows;
    std::vector<std::vector<F>> dense(J, std::vector<F>(I, chainmap::FieldTraits<F>::zero()));
    for (int j = 0; j < I; ++j)
        for (const auto& [i, c] : m.columns[j].entries) dense[i][j] = c;
    std::vector<F> out(static_cast<size_t>(J) * J, chainmap::FieldTraits<F>::zero());
    for (int r1 = 0; r1 < J; ++r1)
        for (int r2 = 0; r2 < J; ++r2) {
            F acc = chainmap::FieldTraits<F>::zero();
            for (int c1 = 0; c1 < I; ++c1) {
                if (chainmap::FieldTraits<F>::is_zero(dense[r1][c1])) continue;
                for (int c2 = 0; c2 < I; ++c2)
                    acc = acc + dense[r1][c1] * dense[r2][c2] * v[static_cast<size_t>(c1) * I + c2];
            }
            out[static_cast<size_t>(r1) * J + r2] = acc;
        }
    return out;
}

// Brute-force LP oracle: enumerate every basic solution of the standard form
// min c^T x, A x = b (after adding slack/surplus and splitting free
// variables), keep the feasible ones, return the best objective.  Dense
// Gaussian solve, independent of the library's simplex.  Only for tiny LPs.
template <class F>
struct BfsOracle {
    bool feasible = false;
    bool bounded_hint = true;  // not detected; caller keeps LPs bounded
    F best = chainmap::FieldTraits<F>::zero();
};

template <class F>
BfsOracle<F> enumerate_basic_solutions(const chainmap::LinearProgram<F>& lp) {
    using chainmap::FieldTraits;
    const F zero = FieldTraits<F>::zero();
    int m = static_cast<int>(lp.rows.size());

    // standard-form columns: split frees, add slack per inequality
    std::vector<std::vector<F>> cols;
    std::vector<F> cost;
    for (int j = 0; j < lp.num_vars; ++j) {
        std::vector<F> col(m, zero);
        for (int r = 0; r < m; ++r) col[r] = lp.rows[r].coeffs.get(j);
        cols.push_back(col);
        cost.push_back(lp.objective[j]);
        if (!lp.nonneg[j]) {
            std::vector<F> neg(m, zero);
            for (int r = 0; r < m; ++r) neg[r] = -col[r];
            cols.push_back(neg);
            cost.push_back(-lp.objective[j]);
        }
    }
    for (int r = 0; r < m; ++r) {
        if (lp.rows[r].sense == chainmap::Sense::EQ) continue;
        std::vector<F> col(m, zero);
        col[r] = lp.rows[r].sense == chainmap::Sense::LE ? FieldTraits<F>::one()
                                                         : -FieldTraits<F>::one();
        cols.push_back(col);
        cost.push_back(zero);
    }
    std::vector<F> b(m);
    for (int r = 0; r < m; ++r) b[r] = lp.rows[r].rhs;

    int n = static_cast<int>(cols.size());
    BfsOracle<F> out;
    std::vector<int> pick(m);
    // iterate over all m-subsets of columns
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == m) {
            // solve B x = b by dense elimination
            std::vector<std::vector<F>> a(m, std::vector<F>(m + 1, zero));
            for (int r = 0; r < m; ++r) {
                for (int k = 0; k < m; ++k) a[r][k] = cols[pick[k]][r];
                a[r][m] = b[r];
            }
            for (int col = 0, row = 0; col < m && row < m; ++col) {
                int piv = -1;
                for (int r = row; r < m; ++r)
                    if (!FieldTraits<F>::is_zero(a[r][col])) {
                        piv = r;
                        break;
                    }
                if (piv < 0) return;  // singular basis
                std::swap(a[piv], a[row]);
                F inv = FieldTraits<F>::one() / a[row][col];
                for (auto& v : a[row]) v = v * inv;
                for (int r = 0; r < m; ++r)
                    if (r != row && !FieldTraits<F>::is_zero(a[r][col])) {
                        F f = a[r][col];
                        for (int k = 0; k <= m; ++k) a[r][k] = a[r][k] - f * a[row][k];
                    }
                ++row;
            }
            F obj = zero;
            for (int k = 0; k < m; ++k) {
                if (a[k][m] < zero && !FieldTraits<F>::is_zero(a[k][m])) return;  // infeasible
                obj = obj + cost[pick[k]] * a[k][m];
            }
            if (!out.feasible || obj < out.best) {
                out.feasible = true;
                out.best = obj;
            }
            return;
        }
        for (int j = start; j < n; ++j) {
            pick[depth] = j;
            rec(j + 1, depth + 1);
        }
    };
    rec(0, 0);
    return out;
}

// Union-find for connectivity oracles.
struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
    int components() {
        int c = 0;
        for (int i = 0; i < static_cast<int>(parent.size()); ++i)
            if (find(i) == i) ++c;
        return c;
    }
};

// Random rational matrix with small integer entries.
inline chainmap::Matrix<Rational> random_rational_matrix(int rows, int cols, chainmap::Rng& rng,
                                                         double density = 0.6) {
    chainmap::Matrix<Rational> m(rows, cols);
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i)
            if (rng.real() < density) {
                long long num = rng.int_range(-5, 5);
                long long den = rng.int_range(1, 4);
                if (num != 0) m.set(i, j, Rational(num, den));
            }
    return m;
}

}  // namespace oracles
