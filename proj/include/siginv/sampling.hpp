#ifndef SIGINV_SAMPLING_HPP
#define SIGINV_SAMPLING_HPP

#include "siginv/matrix.hpp"
#include "siginv/path.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace siginv {

// Seeded generator for test paths and transforms. Floating draws go through
// fixed bit manipulation of the raw engine output, so a seed reproduces the
// same stream on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t raw() { return engine_(); }
    // uniform in [0,1)
    double uniform();
    // uniform in [lo,hi)
    double uniform(double lo, double hi);
    // standard normal via the polar method
    double normal();
    // uniform integer in {lo..hi}
    int integer(int lo, int hi);

private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// num_points points drawn uniformly from [-1,1]^d
PiecewisePath random_path(Rng& rng, int d, int num_points);

// closed polyline: random points with the first one repeated at the end
PiecewisePath random_closed_path(Rng& rng, int d, int num_points);

// integer entries in {lo..hi}, redrawn until the determinant is nonzero
MatrixR random_integer_matrix(Rng& rng, int d, int lo = -3, int hi = 3);

// real matrix with |det| >= 0.1, entries from [-1,1]
MatrixD random_invertible(Rng& rng, int d);

// Gram-Schmidt on a Gaussian matrix, last column flipped when needed so the
// determinant is +1
MatrixD random_rotation(Rng& rng, int d);

// 0/1 matrix with row i carrying a 1 in column perm[i]
MatrixR permutation_matrix(const std::vector<int>& perm);

// all d! permutations of {0..d-1} in lexicographic order
std::vector<std::vector<int>> all_permutations(int d);

// every +-1 signed permutation matrix of determinant +1 (d=2: the four
// quarter-turn rotations); exact rotation representatives for integer tests
std::vector<MatrixR> signed_permutation_rotations(int d);

}  // namespace siginv

#endif
