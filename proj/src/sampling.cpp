#include "siginv/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace siginv {

double Rng::uniform() {
    // top 53 bits of the engine output scale to [0,1)
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u, v, s;
    do {
        u = uniform(-1.0, 1.0);
        v = uniform(-1.0, 1.0);
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    have_spare_ = true;
    return u * f;
}

int Rng::integer(int lo, int hi) {
    if (lo > hi) throw std::invalid_argument("empty integer range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - lo + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / span * span;
    std::uint64_t r;
    do {
        r = engine_();
    } while (r >= limit);
    return lo + static_cast<int>(r % span);
}

PiecewisePath random_path(Rng& rng, int d, int num_points) {
    PiecewisePath path;
    path.points.reserve(num_points);
    for (int i = 0; i < num_points; ++i) {
        std::vector<double> p(d);
        for (int j = 0; j < d; ++j) p[j] = rng.uniform(-1.0, 1.0);
        path.points.push_back(std::move(p));
    }
    return path;
}

PiecewisePath random_closed_path(Rng& rng, int d, int num_points) {
    PiecewisePath path = random_path(rng, d, num_points);
    path.points.push_back(path.points.front());
    return path;
}

MatrixR random_integer_matrix(Rng& rng, int d, int lo, int hi) {
    for (;;) {
        MatrixR a(d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) a.at(i, j) = Rational(rng.integer(lo, hi));
        if (a.det() != 0) return a;
    }
}

MatrixD random_invertible(Rng& rng, int d) {
    for (;;) {
        MatrixD a(d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) a.at(i, j) = rng.uniform(-1.0, 1.0);
        if (std::abs(a.det()) >= 0.1) return a;
    }
}

MatrixD random_rotation(Rng& rng, int d) {
    for (;;) {
        MatrixD g(d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) g.at(i, j) = rng.normal();
        // orthonormalize the columns in place
        MatrixD q = g;
        bool degenerate = false;
        for (int c = 0; c < d && !degenerate; ++c) {
            for (int prev = 0; prev < c; ++prev) {
                double dot = 0.0;
                for (int r = 0; r < d; ++r) dot += q.at(r, c) * q.at(r, prev);
                for (int r = 0; r < d; ++r) q.at(r, c) -= dot * q.at(r, prev);
            }
            double norm = 0.0;
            for (int r = 0; r < d; ++r) norm += q.at(r, c) * q.at(r, c);
            norm = std::sqrt(norm);
            if (norm < 1e-8) {
                degenerate = true;
                break;
            }
            for (int r = 0; r < d; ++r) q.at(r, c) /= norm;
        }
        if (degenerate) continue;
        if (q.det() < 0)
            for (int r = 0; r < d; ++r) q.at(r, d - 1) = -q.at(r, d - 1);
        return q;
    }
}

MatrixR permutation_matrix(const std::vector<int>& perm) {
    const int d = static_cast<int>(perm.size());
    MatrixR a(d);
    for (int i = 0; i < d; ++i) {
        if (perm[i] < 0 || perm[i] >= d) throw std::invalid_argument("permutation entry out of range");
        a.at(i, perm[i]) = Rational(1);
    }
    if (a.det() == 0) throw std::invalid_argument("not a permutation");
    return a;
}

std::vector<std::vector<int>> all_permutations(int d) {
    std::vector<int> perm(d);
    for (int i = 0; i < d; ++i) perm[i] = i;
    std::vector<std::vector<int>> out;
    do {
        out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::vector<MatrixR> signed_permutation_rotations(int d) {
    std::vector<MatrixR> out;
    for (const auto& perm : all_permutations(d)) {
        for (unsigned mask = 0; mask < (1u << d); ++mask) {
            MatrixR a(d);
            for (int i = 0; i < d; ++i)
                a.at(i, perm[i]) = (mask >> i) & 1 ? Rational(-1) : Rational(1);
            if (a.det() == 1) out.push_back(a);
        }
    }
    return out;
}

}  // namespace siginv
