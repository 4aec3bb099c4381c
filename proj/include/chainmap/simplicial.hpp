#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "chainmap/reduce.hpp"
#include "chainmap/sparse.hpp"

namespace chainmap {

// Simplex with sorted, duplicate-free vertex ids.
struct Simplex {
    std::vector<int> vertices;

    Simplex() = default;
    Simplex(std::initializer_list<int> vs) : vertices(vs) { validate(); }
    explicit Simplex(std::vector<int> vs) : vertices(std::move(vs)) { validate(); }

    int dim() const { return static_cast<int>(vertices.size()) - 1; }

    Simplex face(int i) const {  // drop the i-th vertex
        Simplex f;
        f.vertices.reserve(vertices.size() - 1);
        for (int k = 0; k < static_cast<int>(vertices.size()); ++k)
            if (k != i) f.vertices.push_back(vertices[k]);
        return f;
    }

    std::string str() const {
        std::string s = "[";
        for (size_t i = 0; i < vertices.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(vertices[i]);
        }
        return s + "]";
    }

    friend bool operator==(const Simplex& a, const Simplex& b) { return a.vertices == b.vertices; }
    friend bool operator<(const Simplex& a, const Simplex& b) {
        if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
        return a.vertices < b.vertices;
    }

  private:
    void validate() const {
        for (size_t i = 0; i + 1 < vertices.size(); ++i)
            if (vertices[i] >= vertices[i + 1])
                throw std::invalid_argument("Simplex vertices must be strictly increasing");
        if (!vertices.empty() && vertices.front() < 0)
            throw std::invalid_argument("Simplex vertex ids must be non-negative");
    }
};

// Finite simplicial complex with a fixed, reproducible basis order per
// dimension (lexicographic on vertex lists).  Optionally carries filtration
// values and vertex geometry.
class SimplicialComplex {
  public:
    void insert(const Simplex& s, std::optional<double> filtration = std::nullopt);

    // Insert s and all of its faces (faces inherit the filtration value only
    // if absent and smaller).
    void insert_closed(const Simplex& s, std::optional<double> filtration = std::nullopt);

    int max_dim() const { return static_cast<int>(by_dim_.size()) - 1; }
    int count(int dim) const {
        return (dim >= 0 && dim <= max_dim()) ? static_cast<int>(by_dim_[dim].size()) : 0;
    }
    int total_count() const;

    const std::vector<Simplex>& simplices(int dim) const {
        static const std::vector<Simplex> empty;
        return (dim >= 0 && dim <= max_dim()) ? by_dim_[dim] : empty;
    }

    bool contains(const Simplex& s) const { return index_.count(s) > 0; }

    // Index of s within its dimension's basis order.
    int local_index(const Simplex& s) const;

    // Index of s in the concatenated (dimension-major) basis order.
    int global_index(const Simplex& s) const;
    int global_offset(int dim) const;  // start of dimension block
    const Simplex& simplex_at(int global_index) const;

    std::optional<double> filtration(const Simplex& s) const;
    void set_filtration(const Simplex& s, double f);

    bool has_geometry() const { return !geometry_.empty(); }
    const std::map<int, std::vector<double>>& geometry() const { return geometry_; }
    void set_vertex_position(int vertex, std::vector<double> coords) {
        geometry_[vertex] = std::move(coords);
    }

    bool is_face_closed() const;
    bool filtration_monotone() const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.by_dim_ == b.by_dim_ && a.filtration_ == b.filtration_ && a.geometry_ == b.geometry_;
    }

  private:
    std::vector<std::vector<Simplex>> by_dim_;  // sorted lexicographically within each dim
    std::map<Simplex, int> index_;              // simplex -> local index
    std::map<Simplex, double> filtration_;
    std::map<int, std::vector<double>> geometry_;

    void reindex(int dim);
};

// Boundary operator C_dim -> C_{dim-1}; the column of [v0..vd] holds
// alternating signs (-1)^i on the faces [v0..v^i..vd].
template <class F>
Matrix<F> boundary_matrix(const SimplicialComplex& k, int dim) {
    if (dim < 1) throw std::invalid_argument("boundary_matrix: dim must be >= 1");
    Matrix<F> m(k.count(dim - 1), k.count(dim));
    const auto& simplices = k.simplices(dim);
    for (int j = 0; j < static_cast<int>(simplices.size()); ++j) {
        const Simplex& s = simplices[j];
        std::vector<std::pair<int, F>> ents;
        F sign = FieldTraits<F>::one();
        for (int i = 0; i <= dim; ++i) {
            ents.emplace_back(k.local_index(s.face(i)), sign);
            sign = -sign;
        }
        std::sort(ents.begin(), ents.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto& [r, c] : ents)
            if (!FieldTraits<F>::is_zero(c)) m.columns[j].entries.emplace_back(r, c);
    }
    return m;
}

// Betti number in the given dimension.
template <class F>
int betti(const SimplicialComplex& k, int dim) {
    if (dim < 0 || dim > k.max_dim()) return 0;
    int cycles = (dim == 0) ? k.count(0) : k.count(dim) - rank(boundary_matrix<F>(k, dim));
    int bd = (dim + 1 > k.max_dim()) ? 0 : rank(boundary_matrix<F>(k, dim + 1));
    return cycles - bd;
}

// Cohomology Betti number (computed from coboundary ranks; equals betti over
// a field).
template <class F>
int cobetti(const SimplicialComplex& k, int dim) {
    if (dim < 0 || dim > k.max_dim()) return 0;
    int cocycles = (dim == k.max_dim())
                       ? k.count(dim)
                       : k.count(dim) - rank(boundary_matrix<F>(k, dim + 1).transpose());
    int cb = (dim == 0) ? 0 : rank(boundary_matrix<F>(k, dim).transpose());
    return cocycles - cb;
}

// Basis of cycles in dimension dim (kernel of the boundary; all of C_0 when
// dim == 0).
template <class F>
std::vector<SparseVector<F>> cycle_basis(const SimplicialComplex& k, int dim);

// Homology representatives in dimension dim, leading coefficient one.
template <class F>
std::vector<SparseVector<F>> homology_representatives(const SimplicialComplex& k, int dim);

// Cohomology representatives in dimension dim (cocycles modulo coboundaries).
template <class F>
std::vector<SparseVector<F>> cohomology_representatives(const SimplicialComplex& k, int dim);

enum class ModelName { Triangle, Square, NGon, FilledTriangle, Octahedron, Icosahedron };

SimplicialComplex model_complex(ModelName name, int n = 0);
SimplicialComplex model_complex(const std::string& name, int n = 0);

// --- template definitions ---

template <class F>
std::vector<SparseVector<F>> cycle_basis(const SimplicialComplex& k, int dim) {
    std::vector<SparseVector<F>> cycles;
    if (dim == 0) {
        for (int i = 0; i < k.count(0); ++i) cycles.push_back(SparseVector<F>::unit(k.count(0), i));
    } else if (dim <= k.max_dim()) {
        cycles = row_reduce(boundary_matrix<F>(k, dim)).kernel_basis;
    }
    return cycles;
}

template <class F>
std::vector<SparseVector<F>> homology_representatives(const SimplicialComplex& k, int dim) {
    if (dim < 0 || dim > k.max_dim()) return {};
    std::vector<SparseVector<F>> boundaries;
    if (dim + 1 <= k.max_dim()) boundaries = boundary_matrix<F>(k, dim + 1).columns;
    return quotient_representatives(cycle_basis<F>(k, dim), boundaries);
}

template <class F>
std::vector<SparseVector<F>> cohomology_representatives(const SimplicialComplex& k, int dim) {
    if (dim < 0 || dim > k.max_dim()) return {};
    std::vector<SparseVector<F>> cocycles;
    if (dim == k.max_dim()) {
        for (int i = 0; i < k.count(dim); ++i)
            cocycles.push_back(SparseVector<F>::unit(k.count(dim), i));
    } else {
        cocycles = row_reduce(boundary_matrix<F>(k, dim + 1).transpose()).kernel_basis;
    }
    std::vector<SparseVector<F>> coboundaries;
    if (dim >= 1) coboundaries = boundary_matrix<F>(k, dim).transpose().columns;
    return quotient_representatives(cocycles, coboundaries);
}

}  // namespace chainmap
