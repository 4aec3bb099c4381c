#include "chainmap/homcomplex.hpp"

namespace chainmap {

HomBasisIndex HomBasisIndex::build(const SimplicialComplex& X, const SimplicialComplex& Y,
                                   int degree) {
    HomBasisIndex idx;
    idx.degree = degree;
    for (int p = 0; p <= X.max_dim(); ++p) {
        int q = p + degree;
        if (q < 0 || q > Y.max_dim()) continue;
        int xoff = X.global_offset(p), yoff = Y.global_offset(q);
        for (int i = 0; i < X.count(p); ++i)
            for (int j = 0; j < Y.count(q); ++j) {
                idx.flat.emplace(std::make_pair(xoff + i, yoff + j),
                                 static_cast<int>(idx.pairs.size()));
                idx.pairs.emplace_back(xoff + i, yoff + j);
            }
    }
    return idx;
}

MapParameterization<double> to_double_parameterization(const MapParameterization<Rational>& p) {
    MapParameterization<double> q;
    q.domain = p.domain;
    q.codomain = p.codomain;
    q.basis0 = p.basis0;
    q.generator_dims = p.generator_dims;
    q.h0_dim = p.h0_dim;
    auto cast = [](const SparseVector<Rational>& v) {
        SparseVector<double> w(v.dim);
        for (const auto& [i, c] : v.entries) {
            double d = FieldTraits<Rational>::to_double(c);
            if (!FieldTraits<double>::is_zero(d)) w.entries.emplace_back(i, d);
        }
        return w;
    };
    for (const auto& g : p.generators) q.generators.push_back(cast(g));
    for (const auto& h : p.homotopies_raw) q.homotopies_raw.push_back(cast(h));
    for (const auto& h : p.homotopies_reduced) q.homotopies_reduced.push_back(cast(h));
    for (const auto& b : p.b) q.b.push_back(FieldTraits<Rational>::to_double(b));
    return q;
}

}  // namespace chainmap
