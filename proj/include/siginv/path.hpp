#ifndef SIGINV_PATH_HPP
#define SIGINV_PATH_HPP

#include "siginv/matrix.hpp"

#include <stdexcept>
#include <vector>

namespace siginv {

// piecewise-linear curve through an ordered list of points; consecutive
// duplicates are allowed (zero segments contribute nothing)
struct PiecewisePath {
    std::vector<std::vector<double>> points;

    PiecewisePath() = default;
    explicit PiecewisePath(std::vector<std::vector<double>> pts) : points(std::move(pts)) { validate(); }

    int dimension() const { return points.empty() ? 0 : static_cast<int>(points.front().size()); }
    size_t point_count() const { return points.size(); }

    void validate() const {
        for (const auto& p : points)
            if (p.size() != points.front().size())
                throw std::invalid_argument("all path points must share one dimension");
    }
};

// pointwise matrix application
PiecewisePath transform_path(const MatrixD& a, const PiecewisePath& path);

// prepend a 0-th coordinate with normalized index time i/m
PiecewisePath time_augment_path(const PiecewisePath& path);

// prepend a 0-th coordinate with user-supplied values (one per point)
PiecewisePath time_augment_path(const PiecewisePath& path, const std::vector<double>& times);

}  // namespace siginv

#endif
