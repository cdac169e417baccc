#ifndef SIGINV_MATRIX_HPP
#define SIGINV_MATRIX_HPP

#include "siginv/rational.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <type_traits>
#include <vector>

namespace siginv {

template <class T>
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, T(0)) {
        if (n < 1) throw std::invalid_argument("matrix dimension must be positive");
    }

    static SquareMatrix identity(int n) {
        SquareMatrix m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
        return m;
    }

    int dimension() const { return n_; }
    T& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const T& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    SquareMatrix transposed() const {
        SquareMatrix m(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) m.at(j, i) = at(i, j);
        return m;
    }

    friend SquareMatrix operator*(const SquareMatrix& lhs, const SquareMatrix& rhs) {
        if (lhs.n_ != rhs.n_) throw std::invalid_argument("matrix dimension mismatch");
        SquareMatrix out(lhs.n_);
        for (int i = 0; i < lhs.n_; ++i)
            for (int k = 0; k < lhs.n_; ++k) {
                const T& lik = lhs.at(i, k);
                if (lik == T(0)) continue;
                for (int j = 0; j < lhs.n_; ++j) out.at(i, j) += lik * rhs.at(k, j);
            }
        return out;
    }

    friend bool operator==(const SquareMatrix& lhs, const SquareMatrix& rhs) {
        return lhs.n_ == rhs.n_ && lhs.a_ == rhs.a_;
    }

    // gaussian elimination on a copy; exact for rational T, partial pivoting for floats
    T det() const {
        SquareMatrix m = *this;
        T result(1);
        for (int c = 0; c < n_; ++c) {
            int pivot = -1;
            if constexpr (std::is_floating_point_v<T>) {
                T best = 0;
                for (int r = c; r < n_; ++r)
                    if (std::abs(m.at(r, c)) > best) { best = std::abs(m.at(r, c)); pivot = r; }
                if (pivot < 0 || best == T(0)) return T(0);
            } else {
                for (int r = c; r < n_; ++r)
                    if (m.at(r, c) != T(0)) { pivot = r; break; }
                if (pivot < 0) return T(0);
            }
            if (pivot != c) {
                for (int j = 0; j < n_; ++j) std::swap(m.at(c, j), m.at(pivot, j));
                result = -result;
            }
            result *= m.at(c, c);
            for (int r = c + 1; r < n_; ++r) {
                if (m.at(r, c) == T(0)) continue;
                T f = m.at(r, c) / m.at(c, c);
                for (int j = c; j < n_; ++j) m.at(r, j) -= f * m.at(c, j);
            }
        }
        return result;
    }

private:
    int n_ = 0;
    std::vector<T> a_;
};

using MatrixR = SquareMatrix<Rational>;
using MatrixD = SquareMatrix<double>;

inline MatrixD to_double(const MatrixR& m) {
    MatrixD out(m.dimension());
    for (int i = 0; i < m.dimension(); ++i)
        for (int j = 0; j < m.dimension(); ++j) out.at(i, j) = to_double(m.at(i, j));
    return out;
}

}  // namespace siginv

#endif
