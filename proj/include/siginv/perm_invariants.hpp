#ifndef SIGINV_PERM_INVARIANTS_HPP
#define SIGINV_PERM_INVARIANTS_HPP

#include "siginv/descriptor.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace siginv {

// partition of {1..n}: disjoint nonempty blocks covering the set, each block
// sorted, blocks ordered by their minimum
struct SetPartition {
    std::vector<std::vector<int>> blocks;

    size_t block_count() const { return blocks.size(); }
    // "{{1,3,4},{2},{5}}"
    std::string to_string() const;

    friend bool operator==(const SetPartition& a, const SetPartition& b) {
        return a.blocks == b.blocks;
    }
};

// word positions grouped by letter; throws on an empty word
SetPartition nabla(const Word& word);

// all partitions of {1..n} with at most max_blocks blocks, in restricted
// growth string order
std::vector<SetPartition> enumerate_partitions(int n, int max_blocks);

// independent count oracle: sum over k <= max_blocks of the Stirling
// partition numbers S(n,k) via their recurrence
std::uint64_t stirling_partition_count(int n, int max_blocks);

// level-n basis in d dimensions: for each admissible partition, the 0/1 sum
// of all words whose positions group exactly into it; n = 0 yields the
// constant invariant
std::vector<InvariantDescriptor> perm_basis(int d, int n);

// exact fixed-point check under all d! coordinate permutations (sampled for
// d > 6) plus sampled pairing equality on random paths
VerifyReport verify_perm_invariance(const InvariantDescriptor& desc, int trials,
                                    std::uint64_t seed = 20240903);

}  // namespace siginv

#endif
