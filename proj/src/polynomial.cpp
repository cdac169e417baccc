#include "siginv/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace siginv {

Polynomial::Polynomial(int alphabet_size) : alphabet_size_(alphabet_size) {
    if (alphabet_size < 1) throw std::invalid_argument("alphabet size must be positive");
}

Polynomial Polynomial::one(int alphabet_size) {
    Polynomial p(alphabet_size);
    p.add_term(Word{}, Rational(1));
    return p;
}

Polynomial Polynomial::monomial(int alphabet_size, const Word& w, const Rational& c) {
    Polynomial p(alphabet_size);
    p.add_term(w, c);
    return p;
}

int Polynomial::degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(terms_.rbegin()->first.size());
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    return terms_.begin()->first.size() == terms_.rbegin()->first.size();
}

Rational Polynomial::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Word& w, const Rational& c) {
    for (Letter l : w)
        if (l < 0 || l > alphabet_size_)
            throw std::invalid_argument("letter " + std::to_string(l) + " outside alphabet {0.." +
                                        std::to_string(alphabet_size_) + "}");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (alphabet_size_ != rhs.alphabet_size_) throw std::invalid_argument("alphabet mismatch");
    for (const auto& [w, c] : rhs.terms_) add_term(w, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (alphabet_size_ != rhs.alphabet_size_) throw std::invalid_argument("alphabet mismatch");
    for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
    } else {
        for (auto& [w, coeff] : terms_) coeff *= c;
    }
    return *this;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : terms_) {
        if (!out.empty()) out += ' ';
        if (c > 0) out += '+';
        out += rational_to_string(c);
        out += '*';
        out += word_to_string(w);
    }
    return out;
}

Polynomial Polynomial::parse(std::string_view text, int alphabet_size) {
    Polynomial p(alphabet_size);
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
        if (tok == "0" && p.is_zero()) continue;
        Rational sign(1);
        std::string_view t = tok;
        if (t.front() == '+') {
            t.remove_prefix(1);
        } else if (t.front() == '-') {
            sign = -1;
            t.remove_prefix(1);
        }
        size_t star = t.find('*');
        Rational coeff(1);
        std::string_view word_part = t;
        if (star != std::string_view::npos) {
            coeff = rational_from_string(t.substr(0, star));
            word_part = t.substr(star + 1);
        }
        p.add_term(word_from_string(word_part), sign * coeff);
    }
    return p;
}

Polynomial concat_product(const Polynomial& p, const Polynomial& q) {
    if (p.alphabet_size() != q.alphabet_size()) throw std::invalid_argument("alphabet mismatch");
    Polynomial out(p.alphabet_size());
    for (const auto& [u, cu] : p.terms())
        for (const auto& [v, cv] : q.terms()) {
            Word w = u;
            w.insert(w.end(), v.begin(), v.end());
            out.add_term(w, cu * cv);
        }
    return out;
}

namespace {

// all interleavings of u and v with multiplicity, each collected once
void shuffle_words(const Word& u, size_t iu, const Word& v, size_t iv, Word& prefix,
                   const Rational& coeff, Polynomial& out) {
    if (iu == u.size() && iv == v.size()) {
        out.add_term(prefix, coeff);
        return;
    }
    if (iu < u.size()) {
        prefix.push_back(u[iu]);
        shuffle_words(u, iu + 1, v, iv, prefix, coeff, out);
        prefix.pop_back();
    }
    if (iv < v.size()) {
        prefix.push_back(v[iv]);
        shuffle_words(u, iu, v, iv + 1, prefix, coeff, out);
        prefix.pop_back();
    }
}

}  // namespace

Polynomial shuffle_product(const Polynomial& p, const Polynomial& q) {
    if (p.alphabet_size() != q.alphabet_size()) throw std::invalid_argument("alphabet mismatch");
    Polynomial out(p.alphabet_size());
    Word prefix;
    for (const auto& [u, cu] : p.terms())
        for (const auto& [v, cv] : q.terms()) {
            prefix.clear();
            prefix.reserve(u.size() + v.size());
            shuffle_words(u, 0, v, 0, prefix, cu * cv, out);
        }
    return out;
}

Polynomial project_level(const Polynomial& p, int n) {
    if (n < 0) throw std::invalid_argument("level must be nonnegative");
    Polynomial out(p.alphabet_size());
    for (const auto& [w, c] : p.terms())
        if (static_cast<int>(w.size()) == n) out.add_term(w, c);
    return out;
}

namespace {

// expand one source word under the action; depth-first over target letters,
// pruning zero products early
void expand_action(const MatrixR& a, const Word& src, size_t pos, Word& dst,
                   const Rational& running, Polynomial& out) {
    if (pos == src.size()) {
        out.add_term(dst, running);
        return;
    }
    Letter s = src[pos];
    if (s == 0) {
        dst.push_back(0);
        expand_action(a, src, pos + 1, dst, running, out);
        dst.pop_back();
        return;
    }
    for (int j = 1; j <= a.dimension(); ++j) {
        const Rational& entry = a.at(j - 1, s - 1);
        if (entry == 0) continue;
        dst.push_back(j);
        expand_action(a, src, pos + 1, dst, running * entry, out);
        dst.pop_back();
    }
}

}  // namespace

Polynomial apply_matrix(const MatrixR& a, const Polynomial& p) {
    if (a.dimension() != p.alphabet_size()) throw std::invalid_argument("matrix/alphabet dimension mismatch");
    Polynomial out(p.alphabet_size());
    Word dst;
    for (const auto& [w, c] : p.terms()) {
        dst.clear();
        dst.reserve(w.size());
        expand_action(a, w, 0, dst, c, out);
    }
    return out;
}

Polynomial insert_after(const Polynomial& p, Letter x, int r) {
    if (r < 0) throw std::invalid_argument("insertion position must be nonnegative");
    Polynomial out(p.alphabet_size());
    for (const auto& [w, c] : p.terms()) {
        if (static_cast<int>(w.size()) < r)
            throw std::invalid_argument("word shorter than insertion position " + std::to_string(r));
        Word v = w;
        v.insert(v.begin() + r, x);
        out.add_term(v, c);
    }
    return out;
}

Polynomial insert_zeros(const Polynomial& p, const std::vector<int>& z) {
    if (z.empty()) throw std::invalid_argument("gap vector must have at least one entry");
    const size_t n = z.size() - 1;
    for (int g : z)
        if (g < 0) throw std::invalid_argument("gap counts must be nonnegative");
    Polynomial out(p.alphabet_size());
    for (const auto& [w, c] : p.terms()) {
        if (w.size() != n)
            throw std::invalid_argument("gap vector of size " + std::to_string(z.size()) +
                                        " requires words of length " + std::to_string(n));
        Word v;
        for (size_t k = 0; k < n; ++k) {
            v.insert(v.end(), z[k], Letter(0));
            v.push_back(w[k]);
        }
        v.insert(v.end(), z[n], Letter(0));
        out.add_term(v, c);
    }
    return out;
}

Polynomial remove_zero(const Polynomial& p) {
    Polynomial out(p.alphabet_size());
    for (const auto& [w, c] : p.terms()) {
        Word v;
        for (Letter l : w)
            if (l != 0) v.push_back(l);
        out.add_term(v, c);
    }
    return out;
}

}  // namespace siginv
