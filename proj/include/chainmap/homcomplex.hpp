#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <vector>

#include "chainmap/simplicial.hpp"

namespace chainmap {

struct InternalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Flat basis of the degree-n term of Hom(C*(X), C*(Y)): pairs (sigma, tau)
// with dim(tau) - dim(sigma) = n, ordered by (dim sigma, sigma index, tau
// index).  Indices are global simplex indices in X and Y.
struct HomBasisIndex {
    int degree = 0;
    std::vector<std::pair<int, int>> pairs;   // flat -> (global sigma, global tau)
    std::map<std::pair<int, int>, int> flat;  // (global sigma, global tau) -> flat

    static HomBasisIndex build(const SimplicialComplex& X, const SimplicialComplex& Y, int degree);

    int size() const { return static_cast<int>(pairs.size()); }
    int at(int sigma_global, int tau_global) const {
        auto it = flat.find({sigma_global, tau_global});
        if (it == flat.end()) throw std::invalid_argument("pair not in hom basis");
        return it->second;
    }
};

// Matrix of d^H_n : Hom_n -> Hom_{n-1}.  On a basis element sigma* (x) tau,
//   d^H(sigma* (x) tau) = sigma* (x) boundary(tau)
//                         + (-1)^{n+1} sum_k [boundary(sigma_k) : sigma] sigma_k* (x) tau.
template <class F>
Matrix<F> hom_boundary(const SimplicialComplex& X, const SimplicialComplex& Y, int n);

// A concrete map C*(X) -> C*(Y) as a (total Y simplices) x (total X
// simplices) matrix, block-diagonal by dimension for degree-0 elements.
template <class F>
struct ChainMapMatrix {
    Matrix<F> g;
    std::shared_ptr<const SimplicialComplex> domain;
    std::shared_ptr<const SimplicialComplex> codomain;

    // g * boundary_X == boundary_Y * g, blockwise.
    bool is_chain_map() const {
        for (int d = 1; d <= domain->max_dim(); ++d) {
            Matrix<F> bx = full_boundary(*domain, d);
            Matrix<F> by = full_boundary(*codomain, d);
            Matrix<F> lhs = g.multiply(bx);
            Matrix<F> rhs = by.multiply(g);
            for (int j = 0; j < lhs.cols; ++j) {
                SparseVector<F> diff = lhs.columns[j];
                diff.axpy(-FieldTraits<F>::one(), rhs.columns[j]);
                if (!diff.empty()) return false;
            }
        }
        return true;
    }

    bool block_diagonal() const {
        for (int j = 0; j < g.cols; ++j) {
            int dj = domain->simplex_at(j).dim();
            for (const auto& [i, c] : g.columns[j].entries)
                if (codomain->simplex_at(i).dim() != dj) return false;
        }
        return true;
    }

  private:
    // boundary on the concatenated basis, zero outside the (d-1, d) block
    static Matrix<F> full_boundary(const SimplicialComplex& k, int d) {
        Matrix<F> m(k.total_count(), k.total_count());
        if (d > k.max_dim()) return m;
        Matrix<F> bd = boundary_matrix<F>(k, d);
        int roff = k.global_offset(d - 1), coff = k.global_offset(d);
        for (int j = 0; j < bd.cols; ++j)
            for (const auto& [i, c] : bd.columns[j].entries)
                m.columns[coff + j].entries.emplace_back(roff + i, c);
        return m;
    }
};

// Affine chart of the chain-homotopy classes [X, Y]: fixed generators f_m
// with coefficients b_m, plus the homotopy directions h_n (raw columns of
// d^H_1 and a reduced independent basis of their span).
template <class F>
struct MapParameterization {
    std::shared_ptr<const SimplicialComplex> domain;
    std::shared_ptr<const SimplicialComplex> codomain;
    HomBasisIndex basis0;

    std::vector<SparseVector<F>> generators;  // flat degree-0 coordinates
    std::vector<int> generator_dims;          // homology dimension of each generator
    std::vector<F> b;                         // fixed generator coefficients

    std::vector<SparseVector<F>> homotopies_raw;      // all columns of d^H_1
    std::vector<SparseVector<F>> homotopies_reduced;  // independent spanning subset

    int h0_dim = 0;  // dim ker d^H_0 - rank d^H_1, as an elimination cross-check

    const std::vector<SparseVector<F>>& homotopies(bool reduced) const {
        return reduced ? homotopies_reduced : homotopies_raw;
    }

    // The fixed part sum_m b_m f_m in flat coordinates.
    SparseVector<F> base_vector() const {
        SparseVector<F> v(basis0.size());
        for (size_t m = 0; m < generators.size(); ++m) v.axpy(b[m], generators[m]);
        return v;
    }
};

enum class HomotopySet { Raw, Reduced };

template <class F>
Matrix<F> flat_to_matrix(const HomBasisIndex& basis, const SparseVector<F>& v,
                         const SimplicialComplex& X, const SimplicialComplex& Y) {
    Matrix<F> m(Y.total_count(), X.total_count());
    for (const auto& [flat, c] : v.entries) {
        auto [si, tj] = basis.pairs[flat];
        m.add_at(tj, si, c);
    }
    return m;
}

template <class F>
SparseVector<F> matrix_to_flat(const HomBasisIndex& basis, const Matrix<F>& m) {
    SparseVector<F> v(basis.size());
    std::vector<std::pair<int, F>> ents;
    for (int j = 0; j < m.cols; ++j)
        for (const auto& [i, c] : m.columns[j].entries) ents.emplace_back(basis.at(j, i), c);
    std::sort(ents.begin(), ents.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [i, c] : ents) v.entries.emplace_back(i, c);
    return v;
}

// Compute the parameterization of [X, Y]: generators are pure tensors
// (cohomology representative of X) (x) (homology representative of Y) per
// dimension, verified against the hom-complex elimination (they must be
// cycles of d^H_0, independent modulo im d^H_1, and exactly dim H_0(Hom)
// many).
template <class F>
MapParameterization<F> chain_map_generators(const SimplicialComplex& X, const SimplicialComplex& Y);

// Kuenneth-type rank: sum_k dim H^k(X) * dim H_{k+n}(Y), from the individual
// complexes only; independent check on chain_map_generators.
template <class F>
int kunneth_rank(const SimplicialComplex& X, const SimplicialComplex& Y, int n) {
    int total = 0;
    for (int k = 0; k <= X.max_dim(); ++k) {
        int bx = cobetti<F>(X, k);
        if (bx == 0) continue;
        total += bx * betti<F>(Y, k + n);
    }
    return total;
}

// G = sum_m b_m F_m + sum_n c_n H_n; always a chain map (verified).
template <class F>
ChainMapMatrix<F> evaluate_map(const MapParameterization<F>& p, const std::vector<F>& c,
                               HomotopySet set = HomotopySet::Raw, bool verify = true);

// Matrix of the induced map H_dim(X) -> H_dim(Y) in the canonical
// representative bases.
template <class F>
Matrix<F> induced_homology_map(const ChainMapMatrix<F>& g, int dim);

struct BPolicy {
    bool all_ones = true;
    std::vector<long long> by_dimension;  // coefficient per homology dimension
};

template <class F>
std::vector<F> select_b_coefficients(const MapParameterization<F>& p, const BPolicy& policy) {
    std::vector<F> b;
    b.reserve(p.generators.size());
    for (size_t m = 0; m < p.generators.size(); ++m) {
        if (policy.all_ones) {
            b.push_back(FieldTraits<F>::one());
        } else {
            int d = p.generator_dims[m];
            long long v = d < static_cast<int>(policy.by_dimension.size()) ? policy.by_dimension[d] : 0;
            b.push_back(FieldTraits<F>::from_int(v));
        }
    }
    return b;
}

// Cast a rational parameterization to double coefficients (for the
// floating-point optimization stages).
MapParameterization<double> to_double_parameterization(const MapParameterization<Rational>& p);

// --- template definitions ---

template <class F>
Matrix<F> hom_boundary(const SimplicialComplex& X, const SimplicialComplex& Y, int n) {
    HomBasisIndex src = HomBasisIndex::build(X, Y, n);
    HomBasisIndex dst = HomBasisIndex::build(X, Y, n - 1);
    Matrix<F> m(dst.size(), src.size());

    // coface incidence of X: for each sigma, the cofaces sigma_k with the
    // coefficient of sigma in boundary(sigma_k)
    std::vector<std::vector<std::pair<int, F>>> cofaces(X.total_count());
    for (int d = 1; d <= X.max_dim(); ++d) {
        Matrix<F> bd = boundary_matrix<F>(X, d);
        int roff = X.global_offset(d - 1), coff = X.global_offset(d);
        for (int j = 0; j < bd.cols; ++j)
            for (const auto& [i, c] : bd.columns[j].entries)
                cofaces[roff + i].emplace_back(coff + j, c);
    }

    F sign = (n % 2 == 0) ? -FieldTraits<F>::one() : FieldTraits<F>::one();  // (-1)^{n+1}
    for (int col = 0; col < src.size(); ++col) {
        auto [si, tj] = src.pairs[col];
        const Simplex& tau = Y.simplex_at(tj);
        std::vector<std::pair<int, F>> ents;
        if (tau.dim() >= 1) {
            F s = FieldTraits<F>::one();
            for (int i = 0; i <= tau.dim(); ++i) {
                ents.emplace_back(dst.at(si, Y.global_index(tau.face(i))), s);
                s = -s;
            }
        }
        for (const auto& [sk, c] : cofaces[si]) ents.emplace_back(dst.at(sk, tj), sign * c);
        std::sort(ents.begin(), ents.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (const auto& [r, c] : ents) m.add_at(r, col, c);
    }
    return m;
}

template <class F>
MapParameterization<F> chain_map_generators(const SimplicialComplex& X, const SimplicialComplex& Y) {
    if (!X.is_face_closed() || !Y.is_face_closed())
        throw std::invalid_argument("chain_map_generators: complexes must be face-closed");

    MapParameterization<F> p;
    p.domain = std::make_shared<SimplicialComplex>(X);
    p.codomain = std::make_shared<SimplicialComplex>(Y);
    p.basis0 = HomBasisIndex::build(X, Y, 0);

    Matrix<F> d0 = hom_boundary<F>(X, Y, 0);
    Matrix<F> d1 = hom_boundary<F>(X, Y, 1);

    p.homotopies_raw = d1.columns;
    Reduction<F> red1 = row_reduce(d1, false);
    p.homotopies_reduced = red1.image_basis;
    int ker0 = d0.cols - rank(d0);
    p.h0_dim = ker0 - red1.rank;

    // pure-tensor representatives per homology dimension
    for (int k = 0; k <= std::min(X.max_dim(), Y.max_dim()); ++k) {
        auto alphas = cohomology_representatives<F>(X, k);
        auto zs = homology_representatives<F>(Y, k);
        int xoff = X.global_offset(k), yoff = Y.global_offset(k);
        for (const auto& alpha : alphas)
            for (const auto& z : zs) {
                SparseVector<F> f(p.basis0.size());
                std::vector<std::pair<int, F>> ents;
                for (const auto& [i, a] : alpha.entries)
                    for (const auto& [j, c] : z.entries)
                        ents.emplace_back(p.basis0.at(xoff + i, yoff + j), a * c);
                std::sort(ents.begin(), ents.end(),
                          [](const auto& u, const auto& v) { return u.first < v.first; });
                for (auto& [idx, c] : ents)
                    if (!FieldTraits<F>::is_zero(c)) f.entries.emplace_back(idx, c);
                f.normalize_leading();
                p.generators.push_back(std::move(f));
                p.generator_dims.push_back(k);
            }
    }

    // cross-checks against the hom-complex elimination
    if (static_cast<int>(p.generators.size()) != p.h0_dim)
        throw InternalError("generator count disagrees with hom-complex homology dimension");
    for (const auto& f : p.generators)
        if (!d0.apply(f).empty()) throw InternalError("generator is not a cycle of the hom boundary");
    auto reps = quotient_representatives(p.generators, p.homotopies_raw);
    if (reps.size() != p.generators.size())
        throw InternalError("generators are dependent modulo homotopies");

    p.b.assign(p.generators.size(), FieldTraits<F>::one());
    return p;
}

template <class F>
ChainMapMatrix<F> evaluate_map(const MapParameterization<F>& p, const std::vector<F>& c,
                               HomotopySet set, bool verify) {
    const auto& hs = p.homotopies(set == HomotopySet::Reduced);
    if (c.size() != hs.size())
        throw std::invalid_argument("evaluate_map: coefficient count does not match homotopy count");
    SparseVector<F> v = p.base_vector();
    for (size_t i = 0; i < hs.size(); ++i) v.axpy(c[i], hs[i]);

    ChainMapMatrix<F> out;
    out.domain = p.domain;
    out.codomain = p.codomain;
    out.g = flat_to_matrix(p.basis0, v, *p.domain, *p.codomain);
    if (verify && !out.is_chain_map()) throw InternalError("evaluated map violates the chain-map identity");
    return out;
}

template <class F>
Matrix<F> induced_homology_map(const ChainMapMatrix<F>& g, int dim) {
    if (!g.is_chain_map()) throw std::invalid_argument("induced_homology_map: input is not a chain map");
    const SimplicialComplex& X = *g.domain;
    const SimplicialComplex& Y = *g.codomain;
    auto xreps = homology_representatives<F>(X, dim);
    auto yreps = homology_representatives<F>(Y, dim);
    Matrix<F> out(static_cast<int>(yreps.size()), static_cast<int>(xreps.size()));
    if (xreps.empty() || dim > Y.max_dim()) return out;

    // columns: [y representatives | boundaries of Y in dim]; solve for each image
    std::vector<SparseVector<F>> basis = yreps;
    if (dim + 1 <= Y.max_dim())
        for (const auto& col : boundary_matrix<F>(Y, dim + 1).columns) basis.push_back(col);

    int xoff = X.global_offset(dim), yoff = Y.global_offset(dim);
    for (size_t a = 0; a < xreps.size(); ++a) {
        std::vector<F> dense(Y.count(dim), FieldTraits<F>::zero());
        for (const auto& [i, c] : xreps[a].entries) {
            for (const auto& [row, gc] : g.g.columns[xoff + i].entries) {
                int local = row - yoff;
                if (local < 0 || local >= Y.count(dim))
                    throw std::invalid_argument("induced_homology_map: map is not degree-preserving");
                dense[local] = dense[local] + c * gc;
            }
        }
        SparseVector<F> img = from_dense(dense);
        auto sol = solve_membership(basis, img);
        if (!sol)
            throw InternalError("chain map image is not expressible in homology basis plus boundaries");
        for (const auto& [i, c] : sol->entries)
            if (i < static_cast<int>(yreps.size())) out.add_at(i, static_cast<int>(a), c);
    }
    return out;
}

}  // namespace chainmap
