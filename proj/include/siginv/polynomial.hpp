#ifndef SIGINV_POLYNOMIAL_HPP
#define SIGINV_POLYNOMIAL_HPP

#include "siginv/matrix.hpp"
#include "siginv/rational.hpp"
#include "siginv/words.hpp"

#include <map>
#include <string>
#include <string_view>

namespace siginv {

// An element of the dual polynomial space: finitely many words with exact
// rational coefficients. Letters range over {0..alphabet_size}; 0 is the
// reserved time letter and does not count toward alphabet_size.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(int alphabet_size);

    static Polynomial zero(int alphabet_size) { return Polynomial(alphabet_size); }
    static Polynomial one(int alphabet_size);
    static Polynomial monomial(int alphabet_size, const Word& w, const Rational& c = Rational(1));

    int alphabet_size() const { return alphabet_size_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    // length of the longest word; -1 for the zero polynomial
    int degree() const;
    // true when all words share one length (vacuously true for zero)
    bool is_homogeneous() const;

    const std::map<Word, Rational, WordOrder>& terms() const { return terms_; }
    Rational coefficient(const Word& w) const;

    // collects like terms, drops zeros, validates letters against the alphabet
    void add_term(const Word& w, const Rational& c);

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(Polynomial lhs, const Rational& c) { return lhs *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial rhs) { return rhs *= c; }
    friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) {
        return lhs.alphabet_size_ == rhs.alphabet_size_ && lhs.terms_ == rhs.terms_;
    }

    // canonical text form: "+1*[1,2] -1*[2,1]"; the zero polynomial prints "0"
    std::string to_string() const;
    // inverse of to_string; tolerates omitted "1*" and a sign-less first term
    static Polynomial parse(std::string_view text, int alphabet_size);

private:
    int alphabet_size_ = 0;
    std::map<Word, Rational, WordOrder> terms_;
};

// bilinear extension of word concatenation
Polynomial concat_product(const Polynomial& p, const Polynomial& q);

// interleaves words in all order-preserving ways; commutative and associative
Polynomial shuffle_product(const Polynomial& p, const Polynomial& q);

// keeps exactly the words of length n
Polynomial project_level(const Polynomial& p, int n);

// the linear group action, letter by letter: a word i_1..i_n maps to
// sum over j of A[j_1,i_1]..A[j_n,i_n] j_1..j_n. The matrix covers letters
// 1..d; letter 0 is fixed (the action extends as diag(1, A)).
Polynomial apply_matrix(const MatrixR& a, const Polynomial& p);

// inserts one letter after position r in every word (r = 0 prepends)
Polynomial insert_after(const Polynomial& p, Letter x, int r);

// inserts z[k] copies of letter 0 into the k-th gap of every word; every word
// must have length z.size()-1
Polynomial insert_zeros(const Polynomial& p, const std::vector<int>& z);

// deletes every letter 0, collecting like terms
Polynomial remove_zero(const Polynomial& p);

}  // namespace siginv

#endif
