#include "doctest.h"
#include "test_helpers.hpp"

#include "siginv/linear_span.hpp"
#include "siginv/matrix.hpp"
#include "siginv/polynomial.hpp"
#include "siginv/words.hpp"

#include <stdexcept>

using namespace siginv;
using siginv::testing::from_compact;

TEST_SUITE("free_algebra") {

TEST_CASE("word text form round trips") {
    CHECK(word_to_string({1, 2, 1}) == "[1,2,1]");
    CHECK(word_to_string({}) == "[]");
    CHECK(word_from_string("[1,2,1]") == Word{1, 2, 1});
    CHECK(word_from_string("[]") == Word{});
    CHECK(word_from_string("[0,3]") == Word{0, 3});
    CHECK_THROWS_AS(word_from_string("1,2"), std::invalid_argument);
    CHECK_THROWS_AS(word_from_string("[1,]"), std::invalid_argument);
}

TEST_CASE("word order is length first, then lexicographic") {
    WordOrder lt;
    CHECK(lt({2}, {1, 1}));
    CHECK(lt({1, 2}, {2, 1}));
    CHECK(!lt({2, 1}, {1, 2}));
    CHECK(!lt({1}, {1}));
}

TEST_CASE("polynomial terms collect and drop zeros") {
    Polynomial p(2);
    p.add_term({1, 2}, Rational(1) / 3);
    p.add_term({1, 2}, Rational(2) / 3);
    p.add_term({2, 1}, -1);
    p.add_term({2, 1}, 1);
    CHECK(p.term_count() == 1);
    CHECK(p.coefficient({1, 2}) == 1);
    CHECK(p.coefficient({2, 1}) == 0);
    CHECK(p.degree() == 2);
    CHECK(p.is_homogeneous());
    p.add_term({1}, 1);
    CHECK(!p.is_homogeneous());
}

TEST_CASE("letters outside the alphabet are rejected, letter 0 is allowed") {
    Polynomial p(2);
    CHECK_THROWS_AS(p.add_term({3}, 1), std::invalid_argument);
    CHECK_THROWS_AS(p.add_term({-1}, 1), std::invalid_argument);
    CHECK_NOTHROW(p.add_term({0, 1}, 1));
}

TEST_CASE("polynomial text form round trips") {
    Polynomial p(2);
    p.add_term({1, 2}, Rational(3) / 2);
    p.add_term({2, 1}, -1);
    p.add_term({}, 2);
    CHECK(p.to_string() == "+2*[] +3/2*[1,2] -1*[2,1]");
    CHECK(Polynomial::parse(p.to_string(), 2) == p);
    CHECK(Polynomial::zero(2).to_string() == "0");
    CHECK(Polynomial::parse("0", 2) == Polynomial::zero(2));
    CHECK(Polynomial::parse("[1,2] -[2,1]", 2) == from_compact("+12 -21", 2));
    CHECK_THROWS_AS(Polynomial::parse("+1*", 2), std::invalid_argument);
}

TEST_CASE("concatenation product") {
    const auto p = Polynomial::monomial(3, {1});
    const auto q = from_compact("+23 -32", 3);
    CHECK(concat_product(p, q) == from_compact("+123 -132", 3));
    CHECK(concat_product(Polynomial::one(3), q) == q);
    CHECK(concat_product(q, Polynomial::zero(3)).is_zero());
}

TEST_CASE("shuffle of a letter into a two-letter word") {
    const auto p = Polynomial::monomial(3, {1});
    const auto q = Polynomial::monomial(3, {2, 3});
    CHECK(shuffle_product(p, q) == from_compact("+123 +213 +231", 3));
}

TEST_CASE("shuffle square of the area polynomial") {
    const auto area = from_compact("+12 -21", 2);
    const auto sq = shuffle_product(area, area);
    CHECK(sq == from_compact("+4*1122 -4*1221 -4*2112 +4*2211", 2));
}

TEST_CASE("shuffle is commutative and associative") {
    const auto a = from_compact("+12 -21", 2);
    const auto b = from_compact("+1 +2*2", 2);
    const auto c = from_compact("+11", 2);
    CHECK(shuffle_product(a, b) == shuffle_product(b, a));
    CHECK(shuffle_product(shuffle_product(a, b), c) ==
          shuffle_product(a, shuffle_product(b, c)));
    CHECK(shuffle_product(Polynomial::one(2), a) == a);
}

TEST_CASE("level projection") {
    const auto p = from_compact("+12 -21 +1 +3*112", 2);
    CHECK(project_level(p, 2) == from_compact("+12 -21", 2));
    CHECK(project_level(p, 1) == from_compact("+1", 2));
    CHECK(project_level(p, 5).is_zero());
}

TEST_CASE("matrix action expands letters into rows") {
    MatrixR a(2);
    a.at(0, 0) = 1;
    a.at(0, 1) = 2;
    a.at(1, 0) = 3;
    a.at(1, 1) = 4;
    // letter i picks column i-1: x1 -> a11 x1 + a21 x2
    CHECK(apply_matrix(a, Polynomial::monomial(2, {1})) == from_compact("+1 +3*2", 2));
    CHECK(apply_matrix(a, Polynomial::monomial(2, {2})) == from_compact("+2*1 +4*2", 2));
    // multiplicative over positions
    const auto p12 = apply_matrix(a, Polynomial::monomial(2, {1, 2}));
    CHECK(p12 == from_compact("+2*11 +4*12 +6*21 +12*22", 2));
    // letter 0 stays fixed
    Polynomial q(2);
    q.add_term({0, 1}, 1);
    const auto moved = apply_matrix(a, q);
    CHECK(moved.coefficient({0, 1}) == 1);
    CHECK(moved.coefficient({0, 2}) == 3);
}

TEST_CASE("matrix action is compatible with composition") {
    MatrixR a(2), b(2);
    a.at(0, 0) = 1; a.at(0, 1) = 2; a.at(1, 0) = 0; a.at(1, 1) = 1;
    b.at(0, 0) = 2; b.at(0, 1) = 1; b.at(1, 0) = 1; b.at(1, 1) = 1;
    const auto p = from_compact("+12 -21 +11", 2);
    CHECK(apply_matrix(a * b, p) == apply_matrix(a, apply_matrix(b, p)));
}

TEST_CASE("single letter insertion") {
    const auto p = from_compact("+23 -32", 3);
    CHECK(insert_after(p, 1, 1) == from_compact("+213 -312", 3));
    CHECK(insert_after(p, 1, 0) == from_compact("+123 -132", 3));
    CHECK(insert_after(p, 1, 2) == from_compact("+231 -321", 3));
    CHECK_THROWS_AS(insert_after(p, 1, 3), std::invalid_argument);
}

TEST_CASE("zero insertion and removal") {
    const auto p = from_compact("+12 -21", 2);
    auto lifted = insert_zeros(p, {0, 1, 0});
    Polynomial expect(2);
    expect.add_term({1, 0, 2}, 1);
    expect.add_term({2, 0, 1}, -1);
    CHECK(lifted == expect);
    CHECK(remove_zero(lifted) == p);

    lifted = insert_zeros(p, {1, 0, 0});
    CHECK(lifted.coefficient({0, 1, 2}) == 1);
    CHECK(lifted.coefficient({0, 2, 1}) == -1);
    CHECK(remove_zero(lifted) == p);

    CHECK_THROWS_AS(insert_zeros(p, {1, 0}), std::invalid_argument);
}

TEST_CASE("zero removal collects like terms") {
    Polynomial p(1);
    p.add_term({0, 1}, 1);
    p.add_term({1, 0}, 1);
    const auto reduced = remove_zero(p);
    CHECK(reduced.term_count() == 1);
    CHECK(reduced.coefficient({1}) == 2);
}

TEST_CASE("rational matrix determinants") {
    CHECK(MatrixR::identity(3).det() == 1);
    MatrixR a(2);
    a.at(0, 0) = 1; a.at(0, 1) = 2; a.at(1, 0) = 3; a.at(1, 1) = 4;
    CHECK(a.det() == -2);
    CHECK(a.transposed().det() == -2);
    MatrixR b(3);
    // permutation matrix for the cycle 1 -> 2 -> 3 -> 1: sign +1
    b.at(0, 1) = 1; b.at(1, 2) = 1; b.at(2, 0) = 1;
    CHECK(b.det() == 1);
    CHECK((a * MatrixR::identity(2)) == a);
}

TEST_CASE("linear span tracks rank and exact coordinates") {
    LinearSpan span(2);
    CHECK(span.insert(from_compact("+12 -21", 2)));
    CHECK(span.insert(from_compact("+12 +21", 2)));
    CHECK(!span.insert(from_compact("+2*12", 2)));  // dependent
    CHECK(span.rank() == 2);
    CHECK(span.generator_count() == 3);
    CHECK(span.contains(from_compact("+21", 2)));
    CHECK(!span.contains(from_compact("+11", 2)));

    const auto coords = span.coordinates(from_compact("+3*12 -1*21", 2));
    REQUIRE(coords.has_value());
    REQUIRE(coords->size() == 3);
    // 3*12 - 21 = 2*(12-21) + 1*(12+21)
    CHECK((*coords)[0] == 2);
    CHECK((*coords)[1] == 1);
    CHECK((*coords)[2] == 0);
    CHECK(!span.coordinates(from_compact("+11", 2)).has_value());
}

TEST_CASE("rational text helpers") {
    CHECK(rational_to_string(Rational(3) / 2) == "3/2");
    CHECK(rational_to_string(Rational(-4)) == "-4");
    CHECK(rational_from_string("3/2") == Rational(3) / 2);
    CHECK(rational_from_string("-7") == Rational(-7));
}

}  // TEST_SUITE
