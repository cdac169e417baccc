#ifndef SIGINV_SO_INVARIANTS_HPP
#define SIGINV_SO_INVARIANTS_HPP

#include "siginv/descriptor.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace siginv {

// Index data for one rotation invariant: inner-product pairs (a,b) of equal
// length 1..d-1 and determinant index sets c of length exactly d. The
// sequences are strictly increasing, chained downward in the componentwise
// prefix order, and together cover {1..n} disjointly.
struct IndexFamily {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs;
    std::vector<std::vector<int>> dets;

    // "pairs=[(4|3),(2|1)] dets=[(1,2)]"
    std::string to_string() const;
};

// determinant of the 0/1 matrix [word[a_i] == word[b_j]] (positions 1-based)
int gram_minor(const std::vector<int>& a, const std::vector<int>& b, const Word& word);

// all admissible families for dimension d at homogeneity n, sorted
std::vector<IndexFamily> enumerate_index_families(int d, int n);

// coefficient of a word: product of the family's Gram minors and determinant
// indicators evaluated on that word
Polynomial family_polynomial(const IndexFamily& fam, int d, int n);

// d=2 basis at level n: expand balanced words in z1 = x1 + i x2,
// z2 = x1 - i x2 that start with z1, emitting real then imaginary parts;
// free of rank C(n, n/2), empty for odd n
std::vector<InvariantDescriptor> so2_basis(int n);

// general-d spanning family, reduced to a maximal linearly independent
// subset in enumeration order; generators dropped by the rank filter are
// reported through `discarded` when given
std::vector<InvariantDescriptor> so_basis_general(int d, int n,
                                                  std::vector<std::string>* discarded = nullptr);

// exact fixed-point check under every determinant +1 signed permutation
// matrix plus sampled pairing equality under random rotations
VerifyReport verify_so_invariance(const InvariantDescriptor& desc, int trials,
                                  std::uint64_t seed = 20240902);

}  // namespace siginv

#endif
