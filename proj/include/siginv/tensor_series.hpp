#ifndef SIGINV_TENSOR_SERIES_HPP
#define SIGINV_TENSOR_SERIES_HPP

#include "siginv/polynomial.hpp"
#include "siginv/words.hpp"

#include <vector>

namespace siginv {

// Level-truncated tensor series with float coefficients, holding a path's
// signature. Storage is dense per level: level k is a flat array of dim^k
// coefficients, first letter varying slowest. first_letter is 1 for plain
// paths and 0 for time-augmented ones (letters then run 0..dim-1).
class TensorSeries {
public:
    TensorSeries(int dim, int truncation_level, Letter first_letter = 1);

    static TensorSeries identity(int dim, int truncation_level, Letter first_letter = 1) {
        return TensorSeries(dim, truncation_level, first_letter);
    }

    int dimension() const { return dim_; }
    int truncation_level() const { return level_; }
    Letter first_letter() const { return lo_; }

    std::vector<double>& level(int k) { return levels_[k]; }
    const std::vector<double>& level(int k) const { return levels_[k]; }

    // coefficient of one word; throws when the word is too long or uses
    // letters outside the series alphabet
    double coefficient(const Word& w) const;

    // Chen: replace this series by the concatenation product this * rhs
    void concat_with(const TensorSeries& rhs);

    // dual pairing against an exact polynomial; requires a matching alphabet
    // and deg(p) <= truncation level
    double pair(const Polynomial& p) const;

private:
    size_t flat_index(const Word& w) const;

    int dim_;
    int level_;
    Letter lo_;
    std::vector<std::vector<double>> levels_;
};

TensorSeries chen_concat(TensorSeries lhs, const TensorSeries& rhs);

// truncated tensor exponential of one linear segment: the coefficient of
// i_1..i_k is delta_{i_1}..delta_{i_k} / k!
TensorSeries segment_signature(const std::vector<double>& delta, int truncation_level,
                               Letter first_letter = 1);

}  // namespace siginv

#endif
