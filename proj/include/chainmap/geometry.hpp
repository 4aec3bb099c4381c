#pragma once

#include <vector>

#include "chainmap/simplicial.hpp"

namespace chainmap {

struct PointCloud {
    std::vector<std::vector<double>> points;  // all rows share one dimension

    int size() const { return static_cast<int>(points.size()); }
    int ambient_dim() const { return points.empty() ? 0 : static_cast<int>(points[0].size()); }
    void validate() const;
};

double euclidean(const std::vector<double>& a, const std::vector<double>& b);

// Flag complex on the metric graph with edges at distance <= r_max;
// filtration value of a simplex is its largest pairwise distance.
SimplicialComplex vietoris_rips(const PointCloud& p, double r_max, int max_dim);

// Sequential max-min landmark selection.  The first landmark is a seeded
// uniform draw; each later landmark maximizes the distance to the chosen
// set, ties broken by lowest index.
std::vector<int> maxmin_landmarks(const PointCloud& p, int count, uint64_t seed);
std::vector<int> maxmin_landmarks_from(const PointCloud& p, int count, int first);

// Lazy witness complex on the landmark subset: an edge [a,b] appears at the
// smallest r with max(d(a,w), d(b,w)) <= r + m_nu(w) for some witness w,
// where m_nu(w) is the distance from w to its nu-th nearest landmark
// (m_0 = 0).  Higher simplices by clique expansion up to max_dim.
SimplicialComplex lazy_witness(const PointCloud& p, const std::vector<int>& landmarks, int nu,
                               double r_max, int max_dim);

}  // namespace chainmap
