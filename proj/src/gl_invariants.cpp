#include "siginv/gl_invariants.hpp"

#include "siginv/sampling.hpp"
#include "siginv/signature.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace siginv {

int det_indicator(const std::vector<Letter>& tuple, int d) {
    if (static_cast<int>(tuple.size()) != d)
        throw std::invalid_argument("tuple length must equal the dimension");
    std::vector<bool> seen(d + 1, false);
    for (Letter x : tuple) {
        if (x < 1 || x > d || seen[x]) return 0;
        seen[x] = true;
    }
    // count inversions for the sign
    int inversions = 0;
    for (size_t i = 0; i < tuple.size(); ++i)
        for (size_t j = i + 1; j < tuple.size(); ++j)
            if (tuple[i] > tuple[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

Polynomial tableau_polynomial(const RectTableau& t, int d) {
    if (t.rows != d) throw std::invalid_argument("tableau row count must equal the dimension");
    const int w = t.cols;
    const int n = d * w;
    const auto cols = columns(t);
    const auto perms = all_permutations(d);
    std::vector<int> perm_sign(perms.size());
    for (size_t p = 0; p < perms.size(); ++p) {
        std::vector<Letter> tuple(d);
        for (int k = 0; k < d; ++k) tuple[k] = perms[p][k] + 1;
        perm_sign[p] = det_indicator(tuple, d);
    }

    // build words column by column: scatter a permutation of 1..d onto each
    // column's positions, multiplying the signs; this touches exactly the
    // (d!)^w words with nonzero coefficient
    Polynomial out(d);
    Word word(n, 0);
    std::vector<size_t> choice(w, 0);
    for (;;) {
        int coeff = 1;
        for (int j = 0; j < w; ++j) {
            const auto& perm = perms[choice[j]];
            coeff *= perm_sign[choice[j]];
            for (int k = 0; k < d; ++k) word[cols[j][k] - 1] = perm[k] + 1;
        }
        out.add_term(word, Rational(coeff));
        // odometer over per-column permutation choices
        int j = 0;
        while (j < w && ++choice[j] == perms.size()) choice[j++] = 0;
        if (j == w) break;
    }
    return out;
}

std::vector<InvariantDescriptor> gl_basis(int d, int w) {
    if (d < 1 || w < 1) throw std::invalid_argument("dimension and weight must be positive");
    std::vector<InvariantDescriptor> out;
    for (const auto& t : enumerate_standard(d, w)) {
        InvariantDescriptor desc;
        desc.group = Group::GL;
        desc.dimension = d;
        desc.level = d * w;
        desc.weight = w;
        desc.generator = "tableau " + t.to_string();
        desc.poly = tableau_polynomial(t, d);
        out.push_back(std::move(desc));
    }
    return out;
}

namespace {

std::string matrix_witness(const MatrixR& a) {
    std::ostringstream os;
    os << "A=[";
    for (int i = 0; i < a.dimension(); ++i) {
        os << (i ? ";" : "");
        for (int j = 0; j < a.dimension(); ++j) os << (j ? "," : "") << rational_to_string(a.at(i, j));
    }
    os << "]";
    return os.str();
}

Rational rational_pow(const Rational& base, int exp) {
    Rational out(1);
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

}  // namespace

VerifyReport verify_gl_invariance(const InvariantDescriptor& desc, int trials, std::uint64_t seed) {
    VerifyReport report;
    Rng rng(seed);
    const int d = desc.dimension;
    const int w = desc.weight;
    const int level = desc.poly.degree();

    for (int trial = 0; trial < trials; ++trial) {
        ++report.trials_run;

        // exact polynomial-level equivariance under an integer matrix
        MatrixR a = random_integer_matrix(rng, d);
        Polynomial moved = apply_matrix(a.transposed(), desc.poly);
        Polynomial scaled = desc.poly * rational_pow(a.det(), w);
        if (!(moved == scaled)) {
            report.passed = false;
            report.witness = "exact action mismatch, " + matrix_witness(a);
            return report;
        }

        // sampled pairing equivariance on a random path
        PiecewisePath path = random_path(rng, d, 6);
        MatrixD b = random_invertible(rng, d);
        const double lhs = signature(transform_path(b, path), level).pair(desc.poly);
        const double rhs = std::pow(b.det(), w) * signature(path, level).pair(desc.poly);
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
