#include "chainmap/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "chainmap/rng.hpp"

namespace chainmap {

void PointCloud::validate() const {
    if (points.empty()) throw std::invalid_argument("point cloud is empty");
    size_t d = points[0].size();
    for (const auto& p : points) {
        if (p.size() != d) throw std::invalid_argument("point cloud rows have mixed dimensions");
        for (double x : p)
            if (!std::isfinite(x)) throw std::invalid_argument("point cloud has non-finite coordinate");
    }
}

double euclidean(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(s);
}

namespace {

// Clique expansion of a weighted graph into a flag complex.  edge_value must
// be symmetric; vertices enter at 0.
SimplicialComplex flag_complex(int n, const std::vector<std::vector<double>>& edge_value,
                               double r_max, int max_dim,
                               const std::vector<std::vector<double>>* coords) {
    SimplicialComplex k;
    for (int i = 0; i < n; ++i) k.insert(Simplex{i}, 0.0);
    std::vector<std::vector<int>> nbr(n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (edge_value[a][b] <= r_max) {
                k.insert(Simplex{a, b}, edge_value[a][b]);
                nbr[a].push_back(b);
            }
    if (max_dim >= 2) {
        // grow cliques: extend each simplex by later vertices adjacent to all
        std::vector<std::pair<std::vector<int>, double>> frontier;
        for (int a = 0; a < n; ++a)
            for (int b : nbr[a]) frontier.push_back({{a, b}, edge_value[a][b]});
        for (int d = 2; d <= max_dim && !frontier.empty(); ++d) {
            std::vector<std::pair<std::vector<int>, double>> next;
            for (const auto& [vs, val] : frontier) {
                for (int c : nbr[vs.back()]) {
                    bool ok = true;
                    double v = val;
                    for (int u : vs) {
                        if (u == c || edge_value[u][c] > r_max) {
                            ok = false;
                            break;
                        }
                        v = std::max(v, edge_value[u][c]);
                    }
                    if (!ok) continue;
                    auto ext = vs;
                    ext.push_back(c);
                    k.insert(Simplex(ext), v);
                    next.push_back({std::move(ext), v});
                }
            }
            frontier = std::move(next);
        }
    }
    if (coords)
        for (int i = 0; i < n; ++i) k.set_vertex_position(i, (*coords)[i]);
    return k;
}

}  // namespace

SimplicialComplex vietoris_rips(const PointCloud& p, double r_max, int max_dim) {
    p.validate();
    if (r_max < 0 || max_dim < 0) throw std::invalid_argument("vietoris_rips: bad parameters");
    int n = p.size();
    std::vector<std::vector<double>> dist(n, std::vector<double>(n, 0.0));
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) dist[a][b] = dist[b][a] = euclidean(p.points[a], p.points[b]);
    return flag_complex(n, dist, r_max, max_dim, &p.points);
}

std::vector<int> maxmin_landmarks_from(const PointCloud& p, int count, int first) {
    p.validate();
    int n = p.size();
    if (count < 1 || count > n) throw std::invalid_argument("maxmin_landmarks: count out of range");
    if (first < 0 || first >= n) throw std::invalid_argument("maxmin_landmarks: bad first index");
    std::vector<int> chosen = {first};
    std::vector<bool> taken(n, false);
    taken[first] = true;
    std::vector<double> dist_to_set(n, std::numeric_limits<double>::infinity());
    while (static_cast<int>(chosen.size()) < count) {
        int last = chosen.back();
        for (int i = 0; i < n; ++i)
            dist_to_set[i] = std::min(dist_to_set[i], euclidean(p.points[i], p.points[last]));
        int best = -1;
        double best_d = -1;
        for (int i = 0; i < n; ++i)
            if (!taken[i] && dist_to_set[i] > best_d + 1e-15) {
                best = i;
                best_d = dist_to_set[i];
            }
        chosen.push_back(best);
        taken[best] = true;
    }
    return chosen;
}

std::vector<int> maxmin_landmarks(const PointCloud& p, int count, uint64_t seed) {
    Rng rng(seed);
    p.validate();
    return maxmin_landmarks_from(p, count, static_cast<int>(rng.index(p.size())));
}

SimplicialComplex lazy_witness(const PointCloud& p, const std::vector<int>& landmarks, int nu,
                               double r_max, int max_dim) {
    p.validate();
    if (landmarks.empty()) throw std::invalid_argument("lazy_witness: no landmarks");
    if (nu < 0) throw std::invalid_argument("lazy_witness: nu must be >= 0");
    for (int l : landmarks)
        if (l < 0 || l >= p.size()) throw std::invalid_argument("lazy_witness: bad landmark index");

    int n = static_cast<int>(landmarks.size());
    int w = p.size();
    std::vector<std::vector<double>> d(n, std::vector<double>(w));  // landmark x witness
    for (int a = 0; a < n; ++a)
        for (int i = 0; i < w; ++i) d[a][i] = euclidean(p.points[landmarks[a]], p.points[i]);

    std::vector<double> m_nu(w, 0.0);
    if (nu > 0) {
        if (nu > n) throw std::invalid_argument("lazy_witness: nu exceeds landmark count");
        for (int i = 0; i < w; ++i) {
            std::vector<double> ds(n);
            for (int a = 0; a < n; ++a) ds[a] = d[a][i];
            std::nth_element(ds.begin(), ds.begin() + (nu - 1), ds.end());
            m_nu[i] = ds[nu - 1];
        }
    }

    std::vector<std::vector<double>> edge_value(n, std::vector<double>(n, 0.0));
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            double best = std::numeric_limits<double>::infinity();
            for (int i = 0; i < w; ++i)
                best = std::min(best, std::max(d[a][i], d[b][i]) - m_nu[i]);
            edge_value[a][b] = edge_value[b][a] = std::max(0.0, best);
        }

    std::vector<std::vector<double>> coords(n);
    for (int a = 0; a < n; ++a) coords[a] = p.points[landmarks[a]];
    return flag_complex(n, edge_value, r_max, max_dim, &coords);
}

}  // namespace chainmap
