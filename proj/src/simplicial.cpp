#include "chainmap/simplicial.hpp"

#include <algorithm>
#include <cmath>

namespace chainmap {

void SimplicialComplex::insert(const Simplex& s, std::optional<double> filtration) {
    if (s.vertices.empty()) throw std::invalid_argument("cannot insert the empty simplex");
    if (filtration) {
        auto it = filtration_.find(s);
        if (it == filtration_.end() || *filtration < it->second) filtration_[s] = *filtration;
    }
    if (index_.count(s)) return;
    int d = s.dim();
    if (d >= static_cast<int>(by_dim_.size())) by_dim_.resize(d + 1);
    auto& bucket = by_dim_[d];
    bucket.insert(std::upper_bound(bucket.begin(), bucket.end(), s), s);
    reindex(d);
}

void SimplicialComplex::insert_closed(const Simplex& s, std::optional<double> filtration) {
    insert(s, filtration);
    if (s.dim() == 0) return;
    for (int i = 0; i <= s.dim(); ++i) insert_closed(s.face(i), filtration);
}

void SimplicialComplex::reindex(int dim) {
    for (int i = 0; i < static_cast<int>(by_dim_[dim].size()); ++i) index_[by_dim_[dim][i]] = i;
}

int SimplicialComplex::total_count() const {
    int n = 0;
    for (const auto& b : by_dim_) n += static_cast<int>(b.size());
    return n;
}

int SimplicialComplex::local_index(const Simplex& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) throw std::invalid_argument("simplex not in complex: " + s.str());
    return it->second;
}

int SimplicialComplex::global_offset(int dim) const {
    int off = 0;
    for (int d = 0; d < dim && d <= max_dim(); ++d) off += count(d);
    return off;
}

int SimplicialComplex::global_index(const Simplex& s) const {
    return global_offset(s.dim()) + local_index(s);
}

const Simplex& SimplicialComplex::simplex_at(int global_index) const {
    for (int d = 0; d <= max_dim(); ++d) {
        if (global_index < count(d)) return by_dim_[d][global_index];
        global_index -= count(d);
    }
    throw std::invalid_argument("global simplex index out of range");
}

std::optional<double> SimplicialComplex::filtration(const Simplex& s) const {
    auto it = filtration_.find(s);
    if (it == filtration_.end()) return std::nullopt;
    return it->second;
}

void SimplicialComplex::set_filtration(const Simplex& s, double f) { filtration_[s] = f; }

bool SimplicialComplex::is_face_closed() const {
    for (int d = 1; d <= max_dim(); ++d)
        for (const auto& s : by_dim_[d])
            for (int i = 0; i <= d; ++i)
                if (!contains(s.face(i))) return false;
    return true;
}

bool SimplicialComplex::filtration_monotone() const {
    for (const auto& [s, f] : filtration_) {
        if (s.dim() == 0) continue;
        for (int i = 0; i <= s.dim(); ++i) {
            auto ff = filtration(s.face(i));
            if (ff && *ff > f + 1e-12) return false;
        }
    }
    return true;
}

namespace {

SimplicialComplex n_gon(int n) {
    if (n < 3) throw std::invalid_argument("n_gon requires n >= 3");
    SimplicialComplex k;
    for (int i = 0; i < n; ++i) k.insert(Simplex{i});
    for (int i = 0; i + 1 < n; ++i) k.insert(Simplex{i, i + 1});
    k.insert(Simplex{0, n - 1});
    for (int i = 0; i < n; ++i) {
        double a = 2.0 * M_PI * i / n;
        k.set_vertex_position(i, {std::cos(a), std::sin(a)});
    }
    return k;
}

SimplicialComplex octahedron() {
    SimplicialComplex k;
    // Vertex pairs (0,1), (2,3), (4,5) are antipodal; faces pick one from
    // each pair.
    const std::vector<std::vector<double>> pos = {{1, 0, 0},  {-1, 0, 0}, {0, 1, 0},
                                                  {0, -1, 0}, {0, 0, 1},  {0, 0, -1}};
    for (int a : {0, 1})
        for (int b : {2, 3})
            for (int c : {4, 5}) k.insert_closed(Simplex{a, b, c});
    for (int v = 0; v < 6; ++v) k.set_vertex_position(v, pos[v]);
    return k;
}

SimplicialComplex icosahedron() {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<std::vector<double>> pos;
    for (double s1 : {1.0, -1.0})
        for (double s2 : {phi, -phi}) {
            pos.push_back({0.0, s1, s2});
            pos.push_back({s1, s2, 0.0});
            pos.push_back({s2, 0.0, s1});
        }
    auto dist2 = [&](int a, int b) {
        double d = 0;
        for (int i = 0; i < 3; ++i) d += (pos[a][i] - pos[b][i]) * (pos[a][i] - pos[b][i]);
        return d;
    };
    SimplicialComplex k;
    // Edges join vertices at the minimal inter-vertex distance (length 2).
    for (int a = 0; a < 12; ++a)
        for (int b = a + 1; b < 12; ++b)
            if (dist2(a, b) < 4.0 + 1e-9)
                for (int c = b + 1; c < 12; ++c)
                    if (dist2(a, c) < 4.0 + 1e-9 && dist2(b, c) < 4.0 + 1e-9)
                        k.insert_closed(Simplex{a, b, c});
    for (int v = 0; v < 12; ++v) k.set_vertex_position(v, pos[v]);
    return k;
}

}  // namespace

SimplicialComplex model_complex(ModelName name, int n) {
    switch (name) {
        case ModelName::Triangle:
            return n_gon(3);
        case ModelName::Square:
            return n_gon(4);
        case ModelName::NGon:
            return n_gon(n);
        case ModelName::FilledTriangle: {
            SimplicialComplex k = n_gon(3);
            k.insert(Simplex{0, 1, 2});
            return k;
        }
        case ModelName::Octahedron:
            return octahedron();
        case ModelName::Icosahedron:
            return icosahedron();
    }
    throw std::invalid_argument("unknown model complex");
}

SimplicialComplex model_complex(const std::string& name, int n) {
    if (name == "triangle") return model_complex(ModelName::Triangle);
    if (name == "square") return model_complex(ModelName::Square);
    if (name == "ngon" || name == "n_gon") return model_complex(ModelName::NGon, n);
    if (name == "filled_triangle") return model_complex(ModelName::FilledTriangle);
    if (name == "octahedron") return model_complex(ModelName::Octahedron);
    if (name == "icosahedron") return model_complex(ModelName::Icosahedron);
    throw std::invalid_argument("unknown model complex: " + name);
}

}  // namespace chainmap
