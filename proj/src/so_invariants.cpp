#include "siginv/so_invariants.hpp"

#include "siginv/gl_invariants.hpp"
#include "siginv/linear_span.hpp"
#include "siginv/sampling.hpp"
#include "siginv/signature.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace siginv {

namespace {

std::string seq_to_string(const std::vector<int>& s) {
    std::string out = "(";
    for (size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + ")";
}

// the chain order: a precedes b when a is no longer than b and dominates it
// componentwise on the shared prefix
bool seq_ge(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() > b.size()) return false;
    for (size_t j = 0; j < a.size(); ++j)
        if (a[j] < b[j]) return false;
    return true;
}

// strictly increasing r-subsets of the sorted pool, in lexicographic order
void subsets_of(const std::vector<int>& pool, int r,
                const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> pick(r);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == r) {
            fn(pick);
            return;
        }
        for (int i = start; i <= static_cast<int>(pool.size()) - (r - depth); ++i) {
            pick[depth] = pool[i];
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
}

}  // namespace

std::string IndexFamily::to_string() const {
    std::string out = "pairs=[";
    for (size_t i = 0; i < pairs.size(); ++i) {
        if (i) out += ',';
        std::string a = seq_to_string(pairs[i].first);
        std::string b = seq_to_string(pairs[i].second);
        out += "(" + a.substr(1, a.size() - 2) + "|" + b.substr(1, b.size() - 2) + ")";
    }
    out += "] dets=[";
    for (size_t i = 0; i < dets.size(); ++i) out += (i ? "," : "") + seq_to_string(dets[i]);
    return out + "]";
}

int gram_minor(const std::vector<int>& a, const std::vector<int>& b, const Word& word) {
    if (a.size() != b.size()) throw std::invalid_argument("pair sequences must share one length");
    const int r = static_cast<int>(a.size());
    for (int i = 0; i < r; ++i)
        if (a[i] < 1 || a[i] > static_cast<int>(word.size()) || b[i] < 1 ||
            b[i] > static_cast<int>(word.size()))
            throw std::invalid_argument("pair position outside the word");
    // expand the r x r determinant over permutations; r <= d-1 stays tiny
    std::vector<int> perm(r);
    for (int i = 0; i < r; ++i) perm[i] = i;
    int total = 0;
    do {
        int sign = 1;
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j)
                if (perm[i] > perm[j]) sign = -sign;
        int prod = sign;
        for (int i = 0; i < r && prod != 0; ++i)
            if (word[a[i] - 1] != word[b[perm[i]] - 1]) prod = 0;
        total += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

namespace {

struct FamilySearch {
    int d;
    int n;
    std::vector<IndexFamily> out;
    std::vector<bool> used;

    std::vector<int> remaining() const {
        std::vector<int> rem;
        for (int x = 1; x <= n; ++x)
            if (!used[x]) rem.push_back(x);
        return rem;
    }

    void mark(const std::vector<int>& s, bool value) {
        for (int x : s) used[x] = value;
    }

    void dets_step(const std::vector<int>* chain_prev, IndexFamily& fam) {
        const auto rem = remaining();
        if (rem.empty()) {
            out.push_back(fam);
            return;
        }
        if (static_cast<int>(rem.size()) < d) return;
        subsets_of(rem, d, [&](const std::vector<int>& c) {
            if (chain_prev && !seq_ge(*chain_prev, c)) return;
            fam.dets.push_back(c);
            mark(c, true);
            dets_step(&c, fam);
            mark(c, false);
            fam.dets.pop_back();
        });
    }

    void pairs_step(const std::vector<int>* chain_prev, IndexFamily& fam) {
        dets_step(chain_prev, fam);
        const auto rem = remaining();
        for (int r = 1; r <= d - 1; ++r) {
            if (static_cast<int>(rem.size()) < 2 * r) continue;
            subsets_of(rem, r, [&](const std::vector<int>& a) {
                if (chain_prev && !seq_ge(*chain_prev, a)) return;
                mark(a, true);
                const auto rem2 = remaining();
                std::vector<int> a_copy = a;
                subsets_of(rem2, r, [&](const std::vector<int>& b) {
                    if (!seq_ge(a_copy, b)) return;
                    fam.pairs.emplace_back(a_copy, b);
                    mark(b, true);
                    pairs_step(&b, fam);
                    mark(b, false);
                    fam.pairs.pop_back();
                });
                mark(a, false);
            });
        }
    }
};

}  // namespace

std::vector<IndexFamily> enumerate_index_families(int d, int n) {
    if (d < 2) throw std::invalid_argument("dimension must be at least 2");
    if (n < 0) throw std::invalid_argument("level must be nonnegative");
    FamilySearch search{d, n, {}, std::vector<bool>(n + 1, false)};
    IndexFamily fam;
    search.pairs_step(nullptr, fam);
    auto key = [](const IndexFamily& f) { return std::make_pair(f.pairs, f.dets); };
    std::sort(search.out.begin(), search.out.end(),
              [&](const IndexFamily& x, const IndexFamily& y) { return key(x) < key(y); });
    search.out.erase(std::unique(search.out.begin(), search.out.end(),
                                 [&](const IndexFamily& x, const IndexFamily& y) {
                                     return key(x) == key(y);
                                 }),
                     search.out.end());
    return search.out;
}

Polynomial family_polynomial(const IndexFamily& fam, int d, int n) {
    Polynomial out(d);
    Word word(n, 1);
    // scan all d^n words with early exit on a zero factor
    for (;;) {
        int coeff = 1;
        for (const auto& [a, b] : fam.pairs) {
            coeff *= gram_minor(a, b, word);
            if (coeff == 0) break;
        }
        if (coeff != 0) {
            for (const auto& c : fam.dets) {
                std::vector<Letter> tuple(c.size());
                for (size_t i = 0; i < c.size(); ++i) tuple[i] = word[c[i] - 1];
                coeff *= det_indicator(tuple, d);
                if (coeff == 0) break;
            }
        }
        if (coeff != 0) out.add_term(word, Rational(coeff));
        int pos = n - 1;
        while (pos >= 0 && word[pos] == d) word[pos--] = 1;
        if (pos < 0) break;
        ++word[pos];
    }
    return out;
}

std::vector<InvariantDescriptor> so2_basis(int n) {
    if (n < 0) throw std::invalid_argument("level must be nonnegative");
    std::vector<InvariantDescriptor> out;
    if (n % 2 != 0) return out;

    // expand one balanced z-word into its real and imaginary parts; the
    // letter-1 branch contributes x1 with weight 1, the letter-2 branch x2
    // with weight +-i depending on the z letter
    struct Expander {
        int n;
        Polynomial re{2};
        Polynomial im{2};
        const Word* zword = nullptr;

        void rec(int pos, long long re_c, long long im_c, Word& word) {
            if (pos == n) {
                if (re_c != 0) re.add_term(word, Rational(re_c));
                if (im_c != 0) im.add_term(word, Rational(im_c));
                return;
            }
            word.push_back(1);
            rec(pos + 1, re_c, im_c, word);
            word.back() = 2;
            const long long s = (*zword)[pos] == 1 ? 1 : -1;
            rec(pos + 1, -s * im_c, s * re_c, word);
            word.pop_back();
        }
    };

    // balanced z-words starting with z1, in lexicographic order
    std::vector<Word> zwords;
    Word zw;
    std::function<void(int, int)> build = [&](int ones, int twos) {
        if (static_cast<int>(zw.size()) == n) {
            zwords.push_back(zw);
            return;
        }
        if (zw.empty()) {
            zw.push_back(1);
            build(1, 0);
            zw.pop_back();
            return;
        }
        if (ones < n / 2) {
            zw.push_back(1);
            build(ones + 1, twos);
            zw.pop_back();
        }
        if (twos < n / 2) {
            zw.push_back(2);
            build(ones, twos + 1);
            zw.pop_back();
        }
    };
    if (n == 0)
        zwords.push_back({});
    else
        build(0, 0);

    for (const auto& z : zwords) {
        Expander ex{n, Polynomial(2), Polynomial(2), &z};
        Word word;
        ex.rec(0, 1, 0, word);
        for (int part = 0; part < 2; ++part) {
            const Polynomial& p = part == 0 ? ex.re : ex.im;
            if (p.is_zero()) continue;
            InvariantDescriptor desc;
            desc.group = Group::SO;
            desc.dimension = 2;
            desc.level = n;
            desc.generator = "z-word " + word_to_string(z) + (part == 0 ? " re" : " im");
            desc.poly = p;
            out.push_back(std::move(desc));
        }
    }
    return out;
}

std::vector<InvariantDescriptor> so_basis_general(int d, int n,
                                                  std::vector<std::string>* discarded) {
    std::vector<InvariantDescriptor> out;
    LinearSpan span(d);
    for (const auto& fam : enumerate_index_families(d, n)) {
        Polynomial p = family_polynomial(fam, d, n);
        if (p.is_zero() || !span.insert(p)) {
            if (discarded) discarded->push_back(fam.to_string());
            continue;
        }
        InvariantDescriptor desc;
        desc.group = Group::SO;
        desc.dimension = d;
        desc.level = n;
        desc.generator = "family " + fam.to_string();
        desc.poly = std::move(p);
        out.push_back(std::move(desc));
    }
    return out;
}

VerifyReport verify_so_invariance(const InvariantDescriptor& desc, int trials, std::uint64_t seed) {
    VerifyReport report;
    Rng rng(seed);
    const int d = desc.dimension;
    const int level = std::max(desc.poly.degree(), 1);

    // exact part: the finite rotation subgroup of signed permutations
    for (const auto& r : signed_permutation_rotations(d)) {
        if (apply_matrix(r.transposed(), desc.poly) == desc.poly) continue;
        report.passed = false;
        report.witness = "not fixed by a signed permutation rotation";
        return report;
    }

    for (int trial = 0; trial < trials; ++trial) {
        ++report.trials_run;
        PiecewisePath path = random_path(rng, d, 6);
        MatrixD rot = random_rotation(rng, d);
        const double lhs = signature(transform_path(rot, path), level).pair(desc.poly);
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
