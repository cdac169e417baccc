#ifndef SIGINV_GEOMETRY_HPP
#define SIGINV_GEOMETRY_HPP

#include "siginv/descriptor.hpp"
#include "siginv/path.hpp"

#include <vector>

namespace siginv {

// signed sum over all orderings of the given letters (alphabet d); the
// classic alternating polynomial when the letters are 1..d
Polynomial alternating_sum(const std::vector<Letter>& letters, int d);

// the weight-one invariant: alternating sum over all of 1..d
Polynomial inv_d(int d);

// pairing of the path's signature with inv_d, divided by d!; recovers the
// volume of the convex hull for suitable curves
double signed_volume(const PiecewisePath& path);

// index subsequences i_0 < .. < i_d into points p_0..p_{point_count-1}:
// i_0 = 0, consecutive entries paired off from i_1 onward, and for odd d the
// last index pinned to the final point; lexicographic order
std::vector<std::vector<int>> triangulation_indices(int d, int point_count);

// sum of bordered (d+1)x(d+1) determinants det[1 .. 1; p_{i_0} .. p_{i_d}]
// over the triangulation; equals d! times signed_volume of the polyline
double signed_volume_determinant_sum(const std::vector<std::vector<double>>& points);

// exact recursion checks: expansion of inv_d by inserting one letter at a
// fixed position into the one-dimension-lower invariant, for every position,
// plus the shuffle expansion when d is odd
VerifyReport check_recursion(int d);

// exact identity between inv_d and the shuffle Pfaffian of the matrix of
// two-letter area polynomials; even d only
VerifyReport check_pfaffian(int d);

// appending the chord back to the start must not change the inv_d pairing
// when d is even
VerifyReport closing_invariance(const PiecewisePath& path);

// planar identity: the area pairing equals the antisymmetrized lag-one
// cross-correlation of the start-subtracted coordinate sequences
VerifyReport lag_one_correlation_identity(const PiecewisePath& path);

// integral of (X^1)^alpha_1 .. (X^d)^alpha_d dX^target along the polyline,
// each segment integrated in closed form; target is 1-based
double integral_moment(const PiecewisePath& path, const std::vector<int>& alpha, int target);

// figure-eight curve (+-cos t, sin 2t) sampled at k+1 points over one period
PiecewisePath lemniscate_path(int orientation, int samples);

// (t, t^2, .., t^d) on [0,1] sampled at k+1 points
PiecewisePath moment_curve_path(int d, int samples);

// the two planar moment-derived shuffle combinations of degree 4 and 6 (the
// degree-2 one degenerates to zero and is kept for completeness)
Polynomial moment_invariant_phi(int which);

// exact rational solve placing the degree-4 or degree-6 combination inside
// the matching weight-graded basis; records the coordinates in the witness
VerifyReport check_moment_invariant_span(int level);

}  // namespace siginv

#endif
