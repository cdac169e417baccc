#include "siginv/time_invariants.hpp"

#include "siginv/gl_invariants.hpp"
#include "siginv/perm_invariants.hpp"
#include "siginv/sampling.hpp"
#include "siginv/signature.hpp"
#include "siginv/so_invariants.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace siginv {

std::vector<Composition> enumerate_compositions(int total, int slots) {
    if (total < 0 || slots < 1) throw std::invalid_argument("need total >= 0 and slots >= 1");
    std::vector<Composition> out;
    Composition comp(slots, 0);
    std::function<void(int, int)> rec = [&](int slot, int remaining) {
        if (slot == slots - 1) {
            comp[slot] = remaining;
            out.push_back(comp);
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            comp[slot] = v;
            rec(slot + 1, remaining - v);
        }
    };
    rec(0, total);
    return out;
}

namespace {

std::string composition_to_string(const Composition& z) {
    std::string out = "(";
    for (size_t i = 0; i < z.size(); ++i) out += (i ? "," : "") + std::to_string(z[i]);
    return out + ")";
}

std::vector<InvariantDescriptor> lift(const std::vector<InvariantDescriptor>& base, int m) {
    std::vector<InvariantDescriptor> out;
    for (const auto& desc : base) {
        const int n = desc.level;
        if (n > m) continue;
        for (const auto& z : enumerate_compositions(m - n, n + 1)) {
            InvariantDescriptor lifted = desc;
            lifted.time_augmented = true;
            lifted.level = m;
            lifted.generator += " z=" + composition_to_string(z);
            lifted.poly = insert_zeros(desc.poly, z);
            out.push_back(std::move(lifted));
        }
    }
    return out;
}

}  // namespace

std::vector<InvariantDescriptor> augmented_gl_basis(int d, int w, int m) {
    if (w < 1) throw std::invalid_argument("weight must be positive");
    if (d * w > m) return {};
    return lift(gl_basis(d, w), m);
}

std::vector<InvariantDescriptor> augmented_so_basis(int d, int m) {
    std::vector<InvariantDescriptor> base;
    for (int n = 0; n <= m; ++n) {
        std::vector<InvariantDescriptor> level = d == 2 ? so2_basis(n) : so_basis_general(d, n);
        base.insert(base.end(), std::make_move_iterator(level.begin()),
                    std::make_move_iterator(level.end()));
    }
    return lift(base, m);
}

std::vector<InvariantDescriptor> augmented_perm_basis(int d, int m) {
    std::vector<InvariantDescriptor> base;
    for (int n = 0; n <= m; ++n) {
        auto level = perm_basis(d, n);
        base.insert(base.end(), std::make_move_iterator(level.begin()),
                    std::make_move_iterator(level.end()));
    }
    return lift(base, m);
}

std::vector<InvariantDescriptor> augmented_basis(Group group, int d, int param, int m) {
    switch (group) {
        case Group::GL: return augmented_gl_basis(d, param, m);
        case Group::SO: return augmented_so_basis(d, m);
        case Group::PERM: return augmented_perm_basis(d, m);
    }
    throw std::logic_error("unknown group tag");
}

VerifyReport verify_gl0_invariance(const InvariantDescriptor& desc, int trials, std::uint64_t seed) {
    VerifyReport report;
    Rng rng(seed);
    const int d = desc.dimension;
    const int w = desc.weight;
    const int level = std::max(desc.poly.degree(), 1);
    std::vector<MatrixR> rotations;
    if (desc.group == Group::SO) rotations = signed_permutation_rotations(d);
    auto random_perm = [&] {
        std::vector<int> perm(d);
        for (int i = 0; i < d; ++i) perm[i] = i;
        for (int i = d - 1; i > 0; --i) std::swap(perm[i], perm[rng.integer(0, i)]);
        return perm;
    };

    for (int trial = 0; trial < trials; ++trial) {
        ++report.trials_run;

        // exact action on the space letters only; letter 0 stays put
        MatrixR a = desc.group == Group::GL ? random_integer_matrix(rng, d)
                    : desc.group == Group::SO
                        ? rotations[rng.integer(0, static_cast<int>(rotations.size()) - 1)]
                        : permutation_matrix(random_perm());
        Rational factor(1);
        for (int i = 0; i < w; ++i) factor *= a.det();
        if (!(apply_matrix(a.transposed(), desc.poly) == desc.poly * factor)) {
            report.passed = false;
            report.witness = "exact action mismatch on the augmented polynomial";
            return report;
        }

        // sampled pairing on a time-augmented path: transform space
        // coordinates, keep the time channel
        PiecewisePath path = random_path(rng, d, 6);
        MatrixD b(d + 1);
        b.at(0, 0) = 1.0;
        MatrixD space = desc.group == Group::GL ? random_invertible(rng, d)
                        : desc.group == Group::SO ? random_rotation(rng, d)
                                                  : to_double(a);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) b.at(i + 1, j + 1) = space.at(i, j);
        PiecewisePath lifted = time_augment_path(path);
        const double lhs = signature(transform_path(b, lifted), level, 0).pair(desc.poly);
        const double scale = desc.group == Group::GL ? std::pow(space.det(), w) : 1.0;
        const double rhs = scale * signature(lifted, level, 0).pair(desc.poly);
        if (std::abs(lhs - rhs) > 1e-9 * (1.0 + std::max(std::abs(lhs), std::abs(rhs)))) {
            report.passed = false;
            std::ostringstream os;
            os << "pairing mismatch at trial " << trial << ": " << lhs << " vs " << rhs;
            report.witness = os.str();
            return report;
        }
    }
    return report;
}

}  // namespace siginv
