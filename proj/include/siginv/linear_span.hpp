#ifndef SIGINV_LINEAR_SPAN_HPP
#define SIGINV_LINEAR_SPAN_HPP

#include "siginv/polynomial.hpp"

#include <optional>
#include <vector>

namespace siginv {

// Incremental exact row echelon over the word coordinates of polynomials.
// Tracks how each echelon row combines the inserted generators, so span
// membership comes with exact coordinates.
class LinearSpan {
public:
    explicit LinearSpan(int alphabet_size) : alphabet_size_(alphabet_size) {}

    // returns true when p increased the rank (p independent of prior inserts)
    bool insert(const Polynomial& p);

    int rank() const { return static_cast<int>(rows_.size()); }
    int generator_count() const { return generators_inserted_; }

    bool contains(const Polynomial& p) const;

    // coefficients over the inserted generators reproducing target, if any
    std::optional<std::vector<Rational>> coordinates(const Polynomial& target) const;

private:
    struct Row {
        Polynomial poly;                // echelon form, leading coefficient 1
        std::vector<Rational> combo;    // poly as combination of generators
    };

    // reduce p in place by the echelon rows, tracking the combination
    void reduce(Polynomial& p, std::vector<Rational>& combo) const;

    int alphabet_size_;
    int generators_inserted_ = 0;
    std::vector<Row> rows_;
};

}  // namespace siginv

#endif
