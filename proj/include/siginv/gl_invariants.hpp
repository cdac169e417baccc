#ifndef SIGINV_GL_INVARIANTS_HPP
#define SIGINV_GL_INVARIANTS_HPP

#include "siginv/descriptor.hpp"
#include "siginv/tableaux.hpp"

#include <cstdint>
#include <vector>

namespace siginv {

// sign of a d-tuple of letters read as a permutation of {1..d}; 0 when some
// letter repeats or falls outside the range
int det_indicator(const std::vector<Letter>& tuple, int d);

// invariant attached to one tableau: the coefficient of a word is the product
// over columns of det_indicator on the letters at that column's positions
Polynomial tableau_polynomial(const RectTableau& t, int d);

// weight-w basis in d dimensions, one element per standard d x w tableau, in
// tableau enumeration order; every element is homogeneous of degree d*w
std::vector<InvariantDescriptor> gl_basis(int d, int w);

// equivariance check, exact and sampled: apply_matrix(A^T, phi) must equal
// (det A)^w phi for integer A, and pairing against transformed paths must
// scale by (det A)^w
VerifyReport verify_gl_invariance(const InvariantDescriptor& desc, int trials,
                                  std::uint64_t seed = 20240901);

}  // namespace siginv

#endif
