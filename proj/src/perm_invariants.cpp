#include "siginv/perm_invariants.hpp"

#include "siginv/sampling.hpp"
#include "siginv/signature.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace siginv {

std::string SetPartition::to_string() const {
    std::string out = "{";
    for (size_t b = 0; b < blocks.size(); ++b) {
        out += b ? ",{" : "{";
        for (size_t i = 0; i < blocks[b].size(); ++i)
            out += (i ? "," : "") + std::to_string(blocks[b][i]);
        out += '}';
    }
    return out + "}";
}

SetPartition nabla(const Word& word) {
    if (word.empty()) throw std::invalid_argument("empty word has no letter partition");
    std::map<Letter, std::vector<int>> groups;
    for (size_t pos = 0; pos < word.size(); ++pos) groups[word[pos]].push_back(static_cast<int>(pos) + 1);
    SetPartition part;
    for (auto& entry : groups) part.blocks.push_back(std::move(entry.second));
    std::sort(part.blocks.begin(), part.blocks.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return a.front() < b.front(); });
    return part;
}

std::vector<SetPartition> enumerate_partitions(int n, int max_blocks) {
    if (n < 1 || max_blocks < 1) throw std::invalid_argument("level and block cap must be positive");
    std::vector<SetPartition> out;
    // restricted growth strings: rgs[0] = 0, rgs[i] <= 1 + max of the prefix,
    // all values below the block cap; lexicographic generation
    std::vector<int> rgs(n, 0);
    std::function<void(int, int)> rec = [&](int pos, int max_used) {
        if (pos == n) {
            SetPartition part;
            part.blocks.assign(max_used + 1, {});
            for (int i = 0; i < n; ++i) part.blocks[rgs[i]].push_back(i + 1);
            out.push_back(std::move(part));
            return;
        }
        const int limit = std::min(max_used + 1, max_blocks - 1);
        for (int v = 0; v <= limit; ++v) {
            rgs[pos] = v;
            rec(pos + 1, std::max(max_used, v));
        }
    };
    rgs[0] = 0;
    rec(1, 0);
    return out;
}

std::uint64_t stirling_partition_count(int n, int max_blocks) {
    if (n < 0 || max_blocks < 0) throw std::invalid_argument("arguments must be nonnegative");
    // S(n,k) = k*S(n-1,k) + S(n-1,k-1)
    std::vector<std::vector<std::uint64_t>> s(n + 1, std::vector<std::uint64_t>(n + 1, 0));
    s[0][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= i; ++k) s[i][k] = static_cast<std::uint64_t>(k) * s[i - 1][k] + s[i - 1][k - 1];
    std::uint64_t total = 0;
    for (int k = 0; k <= std::min(n, max_blocks); ++k) total += s[n][k];
    return total;
}

std::vector<InvariantDescriptor> perm_basis(int d, int n) {
    if (d < 1 || n < 0) throw std::invalid_argument("dimension must be positive and level nonnegative");
    std::vector<InvariantDescriptor> out;
    if (n == 0) {
        InvariantDescriptor desc;
        desc.group = Group::PERM;
        desc.dimension = d;
        desc.level = 0;
        desc.generator = "partition {}";
        desc.poly = Polynomial::one(d);
        out.push_back(std::move(desc));
        return out;
    }
    for (const auto& part : enumerate_partitions(n, d)) {
        // assign distinct letters to blocks in every injective way
        Polynomial p(d);
        Word word(n, 0);
        std::vector<bool> letter_used(d + 1, false);
        std::function<void(size_t)> assign = [&](size_t b) {
            if (b == part.blocks.size()) {
                p.add_term(word, Rational(1));
                return;
            }
            for (Letter x = 1; x <= d; ++x) {
                if (letter_used[x]) continue;
                letter_used[x] = true;
                for (int pos : part.blocks[b]) word[pos - 1] = x;
                assign(b + 1);
                letter_used[x] = false;
            }
        };
        assign(0);
        InvariantDescriptor desc;
        desc.group = Group::PERM;
        desc.dimension = d;
        desc.level = n;
        desc.generator = "partition " + part.to_string();
        desc.poly = std::move(p);
        out.push_back(std::move(desc));
    }
    return out;
}

VerifyReport verify_perm_invariance(const InvariantDescriptor& desc, int trials, std::uint64_t seed) {
    VerifyReport report;
    Rng rng(seed);
    const int d = desc.dimension;
    const int level = std::max(desc.poly.degree(), 1);

    // exact fixed-point check; exhaustive while d! is small
    std::vector<std::vector<int>> perms = all_permutations(std::min(d, 6));
    if (d <= 6) {
        for (const auto& perm : perms) {
            MatrixR m = permutation_matrix(perm);
            if (apply_matrix(m.transposed(), desc.poly) == desc.poly) continue;
            report.passed = false;
            report.witness = "not fixed by a coordinate permutation";
            return report;
        }
    }

    for (int trial = 0; trial < trials; ++trial) {
        ++report.trials_run;
        std::vector<int> perm(d);
        for (int i = 0; i < d; ++i) perm[i] = i;
        for (int i = d - 1; i > 0; --i) std::swap(perm[i], perm[rng.integer(0, i)]);
        if (d > 6) {
            MatrixR m = permutation_matrix(perm);
            if (!(apply_matrix(m.transposed(), desc.poly) == desc.poly)) {
                report.passed = false;
                report.witness = "not fixed by a sampled coordinate permutation";
                return report;
            }
        }
        PiecewisePath path = random_path(rng, d, 6);
        const double lhs =
            signature(transform_path(to_double(permutation_matrix(perm)), path), level).pair(desc.poly);
        const double rhs = signature(path, level).pair(desc.poly);
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
