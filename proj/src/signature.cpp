#include "siginv/signature.hpp"

#include <stdexcept>

namespace siginv {

PiecewisePath transform_path(const MatrixD& a, const PiecewisePath& path) {
    if (!path.points.empty() && a.dimension() != path.dimension())
        throw std::invalid_argument("matrix/path dimension mismatch");
    PiecewisePath out;
    out.points.reserve(path.points.size());
    for (const auto& p : path.points) {
        std::vector<double> q(p.size(), 0.0);
        for (size_t i = 0; i < p.size(); ++i)
            for (size_t j = 0; j < p.size(); ++j) q[i] += a.at(static_cast<int>(i), static_cast<int>(j)) * p[j];
        out.points.push_back(std::move(q));
    }
    return out;
}

PiecewisePath time_augment_path(const PiecewisePath& path) {
    std::vector<double> times(path.points.size(), 0.0);
    const double m = path.points.size() > 1 ? static_cast<double>(path.points.size() - 1) : 1.0;
    for (size_t i = 0; i < times.size(); ++i) times[i] = static_cast<double>(i) / m;
    return time_augment_path(path, times);
}

PiecewisePath time_augment_path(const PiecewisePath& path, const std::vector<double>& times) {
    if (times.size() != path.points.size())
        throw std::invalid_argument("one time value per point required");
    PiecewisePath out;
    out.points.reserve(path.points.size());
    for (size_t i = 0; i < path.points.size(); ++i) {
        std::vector<double> q;
        q.reserve(path.points[i].size() + 1);
        q.push_back(times[i]);
        q.insert(q.end(), path.points[i].begin(), path.points[i].end());
        out.points.push_back(std::move(q));
    }
    return out;
}

TensorSeries signature(const PiecewisePath& path, int truncation_level, Letter first_letter) {
    path.validate();
    const int d = path.points.empty() ? 1 : path.dimension();
    TensorSeries s(d, truncation_level, first_letter);
    if (path.points.size() < 2) return s;
    std::vector<double> delta(d);
    for (size_t i = 0; i + 1 < path.points.size(); ++i) {
        bool moved = false;
        for (int j = 0; j < d; ++j) {
            delta[j] = path.points[i + 1][j] - path.points[i][j];
            moved = moved || delta[j] != 0.0;
        }
        if (!moved) continue;  // zero segments contribute the identity
        s.concat_with(segment_signature(delta, truncation_level, first_letter));
    }
    return s;
}

}  // namespace siginv
