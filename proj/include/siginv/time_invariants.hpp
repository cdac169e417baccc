#ifndef SIGINV_TIME_INVARIANTS_HPP
#define SIGINV_TIME_INVARIANTS_HPP

#include "siginv/descriptor.hpp"

#include <cstdint>
#include <vector>

namespace siginv {

// weak composition: slot counts of inserted time letters, one slot per gap
using Composition = std::vector<int>;

// all length-`slots` sequences of nonnegative integers summing to `total`,
// lexicographically; there are C(total+slots-1, slots-1) of them
std::vector<Composition> enumerate_compositions(int total, int slots);

// weight-w basis lifted to total level m over the alphabet {0..d}: every
// base element (degree w*d) with every admissible zero insertion
std::vector<InvariantDescriptor> augmented_gl_basis(int d, int w, int m);

// rotation invariants of every degree n <= m, zero-inserted up to level m;
// includes the pure-time word from the degree-0 constant
std::vector<InvariantDescriptor> augmented_so_basis(int d, int m);

// permutation invariants of every degree n <= m, zero-inserted up to level m
std::vector<InvariantDescriptor> augmented_perm_basis(int d, int m);

// dispatcher: param is the weight for GL and ignored otherwise
std::vector<InvariantDescriptor> augmented_basis(Group group, int d, int param, int m);

// exact equivariance under block matrices fixing the time letter, plus
// sampled pairing checks on time-augmented paths; the scale factor is
// (det A)^w for GL and 1 for the others
VerifyReport verify_gl0_invariance(const InvariantDescriptor& desc, int trials,
                                   std::uint64_t seed = 20240904);

}  // namespace siginv

#endif
