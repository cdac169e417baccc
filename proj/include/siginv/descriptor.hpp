#ifndef SIGINV_DESCRIPTOR_HPP
#define SIGINV_DESCRIPTOR_HPP

#include "siginv/polynomial.hpp"

#include <stdexcept>
#include <string>

namespace siginv {

enum class Group { GL, SO, PERM };

inline const char* group_name(Group g) {
    switch (g) {
        case Group::GL: return "gl";
        case Group::SO: return "so";
        case Group::PERM: return "perm";
    }
    throw std::logic_error("unknown group tag");
}

// One basis element together with the combinatorial object that produced it.
// level is the homogeneity of poly (after time augmentation, when applied);
// weight is meaningful for GL only and stays 0 otherwise.
struct InvariantDescriptor {
    Group group = Group::GL;
    bool time_augmented = false;
    int dimension = 0;
    int level = 0;
    int weight = 0;
    std::string generator;
    Polynomial poly;
};

// outcome of a randomized or exact invariance check; witness names the first
// failing configuration
struct VerifyReport {
    bool passed = true;
    int trials_run = 0;
    std::string witness;
};

}  // namespace siginv

#endif
