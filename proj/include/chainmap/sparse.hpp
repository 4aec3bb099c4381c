#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "chainmap/fields.hpp"

namespace chainmap {

// Sparse vector over a field: strictly increasing indices, no stored zeros.
template <class F>
struct SparseVector {
    int dim = 0;
    std::vector<std::pair<int, F>> entries;

    SparseVector() = default;
    explicit SparseVector(int dimension) : dim(dimension) {}

    static SparseVector unit(int dimension, int index) {
        SparseVector v(dimension);
        v.entries.emplace_back(index, FieldTraits<F>::one());
        return v;
    }

    bool empty() const { return entries.empty(); }
    size_t nnz() const { return entries.size(); }

    F get(int i) const {
        auto it = std::lower_bound(entries.begin(), entries.end(), i,
                                   [](const auto& e, int k) { return e.first < k; });
        if (it != entries.end() && it->first == i) return it->second;
        return FieldTraits<F>::zero();
    }

    void push(int i, const F& c) {  // append; caller keeps indices increasing
        if (FieldTraits<F>::is_zero(c)) return;
        if (!entries.empty() && entries.back().first >= i)
            throw std::invalid_argument("SparseVector::push out of order");
        if (i < 0 || i >= dim) throw std::invalid_argument("SparseVector::push index out of range");
        entries.emplace_back(i, c);
    }

    // Largest stored index, -1 if empty.
    int low() const { return entries.empty() ? -1 : entries.back().first; }
    F low_coeff() const { return entries.back().second; }

    SparseVector& scale(const F& a) {
        if (FieldTraits<F>::is_zero(a)) {
            entries.clear();
            return *this;
        }
        for (auto& e : entries) e.second = e.second * a;
        return *this;
    }

    // this += a * other (merge of sorted entry lists, zeros dropped).
    void axpy(const F& a, const SparseVector& other) {
        if (FieldTraits<F>::is_zero(a) || other.entries.empty()) return;
        std::vector<std::pair<int, F>> merged;
        merged.reserve(entries.size() + other.entries.size());
        size_t i = 0, j = 0;
        while (i < entries.size() || j < other.entries.size()) {
            if (j == other.entries.size() ||
                (i < entries.size() && entries[i].first < other.entries[j].first)) {
                merged.push_back(entries[i++]);
            } else if (i == entries.size() || other.entries[j].first < entries[i].first) {
                F c = a * other.entries[j].second;
                if (!FieldTraits<F>::is_zero(c)) merged.emplace_back(other.entries[j].first, c);
                ++j;
            } else {
                F c = entries[i].second + a * other.entries[j].second;
                if (!FieldTraits<F>::is_zero(c)) merged.emplace_back(entries[i].first, c);
                ++i;
                ++j;
            }
        }
        entries = std::move(merged);
    }

    // Scale so the first stored coefficient becomes one.
    SparseVector& normalize_leading() {
        if (!entries.empty()) scale(FieldTraits<F>::one() / entries.front().second);
        return *this;
    }

    std::vector<F> to_dense() const {
        std::vector<F> d(dim, FieldTraits<F>::zero());
        for (const auto& [i, c] : entries) d[i] = c;
        return d;
    }

    friend bool operator==(const SparseVector& a, const SparseVector& b) {
        return a.dim == b.dim && a.entries == b.entries;
    }
};

template <class F>
SparseVector<F> from_dense(const std::vector<F>& d) {
    SparseVector<F> v(static_cast<int>(d.size()));
    for (int i = 0; i < v.dim; ++i)
        if (!FieldTraits<F>::is_zero(d[i])) v.entries.emplace_back(i, d[i]);
    return v;
}

// Column-major sparse matrix.
template <class F>
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<SparseVector<F>> columns;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), columns(c, SparseVector<F>(r)) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int j = 0; j < n; ++j) m.columns[j].push(j, FieldTraits<F>::one());
        return m;
    }

    SparseVector<F>& col(int j) { return columns[j]; }
    const SparseVector<F>& col(int j) const { return columns[j]; }

    F get(int r, int c) const { return columns[c].get(r); }

    void set(int r, int c, const F& value) {
        if (r < 0 || r >= rows || c < 0 || c >= cols)
            throw std::invalid_argument("Matrix::set out of range");
        auto& es = columns[c].entries;
        auto it = std::lower_bound(es.begin(), es.end(), r,
                                   [](const auto& e, int k) { return e.first < k; });
        if (it != es.end() && it->first == r) {
            if (FieldTraits<F>::is_zero(value))
                es.erase(it);
            else
                it->second = value;
        } else if (!FieldTraits<F>::is_zero(value)) {
            es.insert(it, {r, value});
        }
    }

    void add_at(int r, int c, const F& delta) { set(r, c, get(r, c) + delta); }

    size_t nnz() const {
        size_t n = 0;
        for (const auto& c : columns) n += c.nnz();
        return n;
    }

    SparseVector<F> apply(const SparseVector<F>& v) const {
        if (v.dim != cols) throw std::invalid_argument("Matrix::apply dimension mismatch");
        SparseVector<F> out(rows);
        for (const auto& [j, c] : v.entries) out.axpy(c, columns[j]);
        return out;
    }

    Matrix transpose() const {
        Matrix t(cols, rows);
        for (int j = 0; j < cols; ++j)
            for (const auto& [i, c] : columns[j].entries) t.columns[i].entries.emplace_back(j, c);
        return t;  // per-column entries are naturally sorted by construction
    }

    Matrix multiply(const Matrix& other) const {
        if (cols != other.rows) throw std::invalid_argument("Matrix::multiply shape mismatch");
        Matrix out(rows, other.cols);
        for (int j = 0; j < other.cols; ++j) out.columns[j] = apply(other.columns[j]);
        return out;
    }

    bool is_zero() const {
        for (const auto& c : columns)
            if (!c.empty()) return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows == b.rows && a.cols == b.cols && a.columns == b.columns;
    }

    template <class G, class Fn>
    Matrix<G> map_entries(Fn&& fn) const {
        Matrix<G> out(rows, cols);
        for (int j = 0; j < cols; ++j)
            for (const auto& [i, c] : columns[j].entries) {
                G g = fn(c);
                if (!FieldTraits<G>::is_zero(g)) out.columns[j].entries.emplace_back(i, g);
            }
        return out;
    }
};

template <class F>
Matrix<double> to_double_matrix(const Matrix<F>& m) {
    return m.template map_entries<double>([](const F& c) { return FieldTraits<F>::to_double(c); });
}

}  // namespace chainmap
