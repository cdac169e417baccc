#include "doctest.h"
#include "test_helpers.hpp"

#include "siginv/sampling.hpp"
#include "siginv/signature.hpp"

#include <cmath>
#include <stdexcept>

using namespace siginv;
using siginv::testing::from_compact;

namespace {

double max_coeff_diff(const TensorSeries& a, const TensorSeries& b) {
    double worst = 0.0;
    for (int k = 1; k <= a.truncation_level(); ++k)
        for (size_t i = 0; i < a.level(k).size(); ++i)
            worst = std::max(worst, std::abs(a.level(k)[i] - b.level(k)[i]));
    return worst;
}

}  // namespace

TEST_SUITE("signature") {

TEST_CASE("segment exponential coefficients") {
    const auto s = segment_signature({1.0, 2.0}, 3);
    CHECK(s.coefficient({}) == doctest::Approx(1.0));
    CHECK(s.coefficient({1}) == doctest::Approx(1.0));
    CHECK(s.coefficient({2}) == doctest::Approx(2.0));
    CHECK(s.coefficient({1, 1}) == doctest::Approx(0.5));
    CHECK(s.coefficient({1, 2}) == doctest::Approx(1.0));
    CHECK(s.coefficient({2, 1}) == doctest::Approx(1.0));
    CHECK(s.coefficient({2, 2}) == doctest::Approx(2.0));
    CHECK(s.coefficient({1, 1, 1}) == doctest::Approx(1.0 / 6.0));
    CHECK(s.coefficient({2, 2, 2}) == doctest::Approx(8.0 / 6.0));
    CHECK(s.coefficient({1, 2, 1}) == doctest::Approx(2.0 / 6.0));
}

TEST_CASE("a straight two-point path is one segment") {
    const PiecewisePath path({{0.5, -1.0, 2.0}, {1.5, 1.0, 2.5}});
    const auto s = signature(path, 4);
    const auto seg = segment_signature({1.0, 2.0, 0.5}, 4);
    CHECK(max_coeff_diff(s, seg) == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("right-angle path has unit area in one order only") {
    const PiecewisePath path({{0, 0}, {1, 0}, {1, 1}});
    const auto s = signature(path, 2);
    CHECK(s.coefficient({1}) == doctest::Approx(1.0));
    CHECK(s.coefficient({2}) == doctest::Approx(1.0));
    CHECK(s.coefficient({1, 2}) == doctest::Approx(1.0));
    CHECK(s.coefficient({2, 1}) == doctest::Approx(0.0));
    CHECK(s.coefficient({1, 1}) == doctest::Approx(0.5));
    CHECK(s.coefficient({2, 2}) == doctest::Approx(0.5));
    // area enclosed against the chord
    CHECK(s.pair(from_compact("+12 -21", 2)) == doctest::Approx(1.0));
}

TEST_CASE("concatenation rule composes subpath signatures") {
    Rng rng(101);
    for (int trial = 0; trial < 10; ++trial) {
        const auto whole = random_path(rng, 3, 7);
        PiecewisePath left, right;
        left.points.assign(whole.points.begin(), whole.points.begin() + 4);
        right.points.assign(whole.points.begin() + 3, whole.points.end());
        const auto combined = chen_concat(signature(left, 4), signature(right, 4));
        CHECK(max_coeff_diff(combined, signature(whole, 4)) < 1e-12);
    }
}

TEST_CASE("products of coefficients satisfy the shuffle rule") {
    Rng rng(202);
    const auto path = random_path(rng, 2, 6);
    const auto s = signature(path, 4);
    const auto p = from_compact("+12 -21", 2);
    const auto q = from_compact("+1 +2*2", 2);
    CHECK(s.pair(shuffle_product(p, q)) == doctest::Approx(s.pair(p) * s.pair(q)).epsilon(1e-12));
    CHECK(s.pair(shuffle_product(q, q)) == doctest::Approx(s.pair(q) * s.pair(q)).epsilon(1e-12));
}

TEST_CASE("duplicate points contribute nothing") {
    const PiecewisePath plain({{0, 0}, {1, 0}, {1, 1}});
    const PiecewisePath padded({{0, 0}, {0, 0}, {1, 0}, {1, 0}, {1, 1}});
    CHECK(max_coeff_diff(signature(plain, 3), signature(padded, 3)) == doctest::Approx(0.0));
}

TEST_CASE("signature is translation invariant") {
    Rng rng(303);
    const auto path = random_path(rng, 2, 5);
    PiecewisePath shifted = path;
    for (auto& pt : shifted.points) {
        pt[0] += 17.0;
        pt[1] -= 4.0;
    }
    CHECK(max_coeff_diff(signature(path, 3), signature(shifted, 3)) < 1e-12);
}

TEST_CASE("pairing moves across the matrix action by transposition") {
    Rng rng(404);
    for (int trial = 0; trial < 5; ++trial) {
        const auto path = random_path(rng, 2, 6);
        const auto a = random_integer_matrix(rng, 2);
        const auto moved = transform_path(to_double(a), path);
        const auto phi = from_compact("+12 -21 +2*11 +112", 2);
        const double lhs = signature(moved, 3).pair(phi);
        const double rhs = signature(path, 3).pair(apply_matrix(a.transposed(), phi));
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
    }
}

TEST_CASE("index time augmentation prepends i over m") {
    const PiecewisePath path({{5, 5}, {6, 5}, {6, 6}, {7, 7}});
    const auto lifted = time_augment_path(path);
    CHECK(lifted.dimension() == 3);
    CHECK(lifted.points[0][0] == doctest::Approx(0.0));
    CHECK(lifted.points[1][0] == doctest::Approx(1.0 / 3.0));
    CHECK(lifted.points[2][0] == doctest::Approx(2.0 / 3.0));
    CHECK(lifted.points[3][0] == doctest::Approx(1.0));
    CHECK(lifted.points[2][1] == doctest::Approx(6.0));
    // a single point gets time zero
    PiecewisePath single;
    single.points = {{1.0}};
    const auto lone = time_augment_path(single);
    CHECK(lone.points[0][0] == doctest::Approx(0.0));
}

TEST_CASE("explicit time stamps are prepended verbatim") {
    const PiecewisePath path({{1, 2}, {3, 4}});
    const auto lifted = time_augment_path(path, {0.25, 0.75});
    CHECK(lifted.points[0] == std::vector<double>{0.25, 1, 2});
    CHECK(lifted.points[1] == std::vector<double>{0.75, 3, 4});
    CHECK_THROWS_AS(time_augment_path(path, {0.25}), std::invalid_argument);
}

TEST_CASE("time-augmented signatures use letter zero") {
    // diagonal path (t, t) on [0,1]: every order-2 word has weight 1/2
    const PiecewisePath path({{0, 0}, {1, 1}});
    const auto lifted = time_augment_path(path);
    const auto s = signature(lifted, 2, 0);
    CHECK(s.coefficient({0}) == doctest::Approx(1.0));
    CHECK(s.coefficient({1}) == doctest::Approx(1.0));
    CHECK(s.coefficient({0, 1}) == doctest::Approx(0.5));
    CHECK(s.coefficient({1, 0}) == doctest::Approx(0.5));
    Polynomial p(2);
    p.add_term({0, 1}, 2);
    CHECK(s.pair(p) == doctest::Approx(1.0));
}

TEST_CASE("pairing validates alphabet and degree") {
    const auto s = signature(PiecewisePath({{0, 0}, {1, 1}}), 2);
    CHECK_THROWS_AS(s.pair(from_compact("+123", 3)), std::invalid_argument);
    CHECK_THROWS_AS(s.pair(from_compact("+111", 2)), std::invalid_argument);
    const auto s0 = signature(time_augment_path(PiecewisePath({{0.0}, {1.0}})), 2, 0);
    CHECK_THROWS_AS(s0.pair(from_compact("+12", 2)), std::invalid_argument);
}

TEST_CASE("path transforms validate dimensions") {
    const PiecewisePath path({{0, 0}, {1, 1}});
    CHECK_THROWS_AS(transform_path(MatrixD::identity(3), path), std::invalid_argument);
    PiecewisePath ragged;
    ragged.points = {{0, 0}, {1}};
    CHECK_THROWS_AS(ragged.validate(), std::invalid_argument);
}

TEST_CASE("deterministic sampling helpers") {
    Rng a(7), b(7);
    for (int i = 0; i < 100; ++i) {
        CHECK(a.uniform() == b.uniform());
        CHECK(a.integer(-3, 3) == b.integer(-3, 3));
    }
    Rng rng(9);
    const auto m = random_rotation(rng, 3);
    const auto mt = m.transposed();
    const auto prod = m * mt;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(prod.at(i, j) == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-10));
    const auto closed = random_closed_path(rng, 2, 6);
    CHECK(closed.points.front() == closed.points.back());
    const auto perms = all_permutations(3);
    CHECK(perms.size() == 6);
    CHECK(signed_permutation_rotations(2).size() == 4);
    CHECK(signed_permutation_rotations(3).size() == 24);
}

}  // TEST_SUITE
