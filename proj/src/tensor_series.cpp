#include "siginv/tensor_series.hpp"

#include <stdexcept>

namespace siginv {

TensorSeries::TensorSeries(int dim, int truncation_level, Letter first_letter)
    : dim_(dim), level_(truncation_level), lo_(first_letter) {
    if (dim < 1) throw std::invalid_argument("dimension must be positive");
    if (truncation_level < 0) throw std::invalid_argument("truncation level must be nonnegative");
    if (first_letter != 0 && first_letter != 1) throw std::invalid_argument("first letter must be 0 or 1");
    size_t size = 1;
    levels_.reserve(truncation_level + 1);
    for (int k = 0; k <= truncation_level; ++k) {
        levels_.emplace_back(size, 0.0);
        size *= dim;
    }
    levels_[0][0] = 1.0;  // group-like normalization
}

size_t TensorSeries::flat_index(const Word& w) const {
    size_t idx = 0;
    for (Letter l : w) {
        if (l < lo_ || l >= lo_ + dim_)
            throw std::invalid_argument("letter " + std::to_string(l) + " outside series alphabet");
        idx = idx * dim_ + static_cast<size_t>(l - lo_);
    }
    return idx;
}

double TensorSeries::coefficient(const Word& w) const {
    if (static_cast<int>(w.size()) > level_)
        throw std::invalid_argument("word length exceeds truncation level");
    return levels_[w.size()][flat_index(w)];
}

void TensorSeries::concat_with(const TensorSeries& rhs) {
    if (dim_ != rhs.dim_ || lo_ != rhs.lo_) throw std::invalid_argument("alphabet mismatch");
    if (level_ != rhs.level_) throw std::invalid_argument("truncation level mismatch");
    // work top level down: level m only reads self levels j < m, which are
    // still the pre-concatenation values
    for (int m = level_; m >= 1; --m) {
        std::vector<double>& out = levels_[m];
        // j = m term is out itself (rhs contributes its level-0 scalar 1)
        for (int j = m - 1; j >= 1; --j) {
            const std::vector<double>& left = levels_[j];
            const std::vector<double>& right = rhs.levels_[m - j];
            for (size_t a = 0; a < left.size(); ++a) {
                const double la = left[a];
                if (la == 0.0) continue;
                double* dst = out.data() + a * right.size();
                for (size_t b = 0; b < right.size(); ++b) dst[b] += la * right[b];
            }
        }
        const std::vector<double>& right = rhs.levels_[m];
        for (size_t b = 0; b < right.size(); ++b) out[b] += right[b];
    }
}

double TensorSeries::pair(const Polynomial& p) const {
    const int expected_alphabet = lo_ == 1 ? dim_ : dim_ - 1;
    if (p.alphabet_size() != expected_alphabet)
        throw std::invalid_argument("polynomial alphabet does not match series");
    if (p.degree() > level_)
        throw std::invalid_argument("polynomial degree exceeds truncation level");
    double total = 0.0;
    for (const auto& [w, c] : p.terms()) total += to_double(c) * levels_[w.size()][flat_index(w)];
    return total;
}

TensorSeries chen_concat(TensorSeries lhs, const TensorSeries& rhs) {
    lhs.concat_with(rhs);
    return lhs;
}

TensorSeries segment_signature(const std::vector<double>& delta, int truncation_level,
                               Letter first_letter) {
    TensorSeries s(static_cast<int>(delta.size()), truncation_level, first_letter);
    const size_t d = delta.size();
    // Horner accumulation: level k is level k-1 tensor delta / k
    for (int k = 1; k <= truncation_level; ++k) {
        const std::vector<double>& prev = s.level(k - 1);
        std::vector<double>& cur = s.level(k);
        const double inv_k = 1.0 / k;
        for (size_t a = 0; a < prev.size(); ++a) {
            const double pa = prev[a] * inv_k;
            double* dst = cur.data() + a * d;
            for (size_t b = 0; b < d; ++b) dst[b] = pa * delta[b];
        }
    }
    return s;
}

}  // namespace siginv
