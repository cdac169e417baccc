#include "doctest.h"
#include "fixtures.hpp"
#include "test_helpers.hpp"

#include "siginv/gl_invariants.hpp"
#include "siginv/linear_span.hpp"
#include "siginv/sampling.hpp"
#include "siginv/signature.hpp"
#include "siginv/so_invariants.hpp"

#include <stdexcept>
#include <string>
#include <vector>

using namespace siginv;
using siginv::testing::from_compact;
using siginv::testing::kSo2Level4;

namespace {

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST_SUITE("so_invariants") {

TEST_CASE("gram minors on small examples") {
    // both positions carry the same letter: 1x1 match
    CHECK(gram_minor({2}, {1}, {1, 1}) == 1);
    CHECK(gram_minor({2}, {1}, {1, 2}) == 0);
    // word 1221: positions (1,2) vs (3,4) match as an anti-diagonal
    CHECK(gram_minor({1, 2}, {3, 4}, {1, 2, 2, 1}) == -1);
    // word 1212: diagonal matches only
    CHECK(gram_minor({1, 2}, {3, 4}, {1, 2, 1, 2}) == 1);
    // word 1111: all ones, singular
    CHECK(gram_minor({1, 2}, {3, 4}, {1, 1, 1, 1}) == 0);
    CHECK_THROWS_AS(gram_minor({1, 2}, {3}, {1, 1, 1}), std::invalid_argument);
}

TEST_CASE("index families for two dimensions at level two") {
    const auto fams = enumerate_index_families(2, 2);
    REQUIRE(fams.size() == 2);
    CHECK(fams[0].to_string() == "pairs=[] dets=[(1,2)]");
    CHECK(fams[1].to_string() == "pairs=[(2|1)] dets=[]");
    CHECK(family_polynomial(fams[0], 2, 2) == from_compact("+12 -21", 2));
    CHECK(family_polynomial(fams[1], 2, 2) == from_compact("+11 +22", 2));
}

TEST_CASE("index families for two dimensions at level four") {
    const auto fams = enumerate_index_families(2, 4);
    REQUIRE(fams.size() == 6);
    CHECK(fams[0].to_string() == "pairs=[] dets=[(2,4),(1,3)]");
    CHECK(fams[1].to_string() == "pairs=[] dets=[(3,4),(1,2)]");
    CHECK(fams[2].to_string() == "pairs=[(3|2)] dets=[(1,4)]");
    CHECK(fams[3].to_string() == "pairs=[(4|2)] dets=[(1,3)]");
    CHECK(fams[4].to_string() == "pairs=[(4|3)] dets=[(1,2)]");
    CHECK(fams[5].to_string() == "pairs=[(4|3),(2|1)] dets=[]");
}

TEST_CASE("chained sequences respect the componentwise order") {
    // (1) >= (2,3) fails on the first entry, so no family may chain that way
    for (const auto& fam : enumerate_index_families(2, 4)) {
        if (fam.pairs.size() == 1 && !fam.dets.empty()) {
            const auto& b = fam.pairs[0].second;
            const auto& c = fam.dets[0];
            CHECK(b[0] >= c[0]);
        }
    }
}

TEST_CASE("complex pair basis at level two matches the reference") {
    const auto basis = so2_basis(2);
    REQUIRE(basis.size() == 2);
    CHECK(basis[0].poly == from_compact("+11 +22", 2));
    CHECK(basis[1].poly == from_compact("-12 +21", 2));
    CHECK(basis[0].generator == "z-word [1,2] re");
    CHECK(basis[1].generator == "z-word [1,2] im");
    CHECK(basis[0].group == Group::SO);
    CHECK(basis[0].level == 2);
}

TEST_CASE("complex pair basis at level four matches the reference in order") {
    const auto basis = so2_basis(4);
    REQUIRE(basis.size() == 6);
    for (size_t i = 0; i < basis.size(); ++i)
        CHECK(basis[i].poly == from_compact(kSo2Level4[i], 2));
}

TEST_CASE("complex pair basis sizes and degenerate cases") {
    CHECK(so2_basis(1).empty());
    CHECK(so2_basis(3).empty());
    CHECK(so2_basis(0).size() == 1);
    CHECK(so2_basis(0)[0].poly == Polynomial::one(2));
    for (int n = 2; n <= 8; n += 2) CHECK(so2_basis(n).size() == binomial(n, n / 2));
}

TEST_CASE("complex pair basis is linearly independent") {
    for (int n = 2; n <= 6; n += 2) {
        LinearSpan span(2);
        for (const auto& desc : so2_basis(n)) CHECK(span.insert(desc.poly));
        CHECK(span.rank() == static_cast<int>(binomial(n, n / 2)));
    }
}

TEST_CASE("family construction spans the same space in two dimensions") {
    for (int n = 2; n <= 8; n += 2) {
        LinearSpan z_span(2), fam_span(2);
        for (const auto& desc : so2_basis(n)) z_span.insert(desc.poly);
        std::vector<std::string> discarded;
        const auto general = so_basis_general(2, n, &discarded);
        for (const auto& desc : general) fam_span.insert(desc.poly);
        CHECK(fam_span.rank() == z_span.rank());
        CHECK(discarded.empty());  // every admissible family is independent here
        for (const auto& desc : general) CHECK(z_span.contains(desc.poly));
        for (const auto& desc : so2_basis(n)) CHECK(fam_span.contains(desc.poly));
    }
}

TEST_CASE("three dimensions at level three reduce to the alternating sum") {
    const auto basis = so_basis_general(3, 3);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0].poly == from_compact("+123 -132 -213 +231 +312 -321", 3));
    CHECK(basis[0].generator == "family pairs=[] dets=[(1,2,3)]");
}

TEST_CASE("four dimensions at level two give the quadratic trace") {
    const auto basis = so_basis_general(4, 2);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0].poly == from_compact("+11 +22 +33 +44", 4));
}

TEST_CASE("four dimensions at level four have rank four") {
    const auto basis = so_basis_general(4, 4);
    CHECK(basis.size() == 4);
    LinearSpan span(4);
    for (const auto& desc : basis) CHECK(span.insert(desc.poly));
    // the three letter-repetition patterns plus the alternating sum span it
    Polynomial ppqq(4), pqpq(4), pqqp(4);
    for (Letter p = 1; p <= 4; ++p)
        for (Letter q = 1; q <= 4; ++q) {
            ppqq.add_term({p, p, q, q}, 1);
            pqpq.add_term({p, q, p, q}, 1);
            pqqp.add_term({p, q, q, p}, 1);
        }
    LinearSpan reference(4);
    reference.insert(ppqq);
    reference.insert(pqpq);
    reference.insert(pqqp);
    reference.insert(from_compact(
        "+1234 -1243 -1324 +1342 +1423 -1432 -2134 +2143 +2314 -2341 -2413 +2431 +3124 -3142 "
        "-3214 +3241 +3412 -3421 -4123 +4132 +4213 -4231 -4312 +4321",
        4));
    CHECK(reference.rank() == 4);
    for (const auto& desc : basis) CHECK(reference.contains(desc.poly));
    CHECK(span.contains(ppqq));
    CHECK(span.contains(pqpq));
    CHECK(span.contains(pqqp));
}

TEST_CASE("determinant-weight elements sit inside the rotation span") {
    for (const auto [d, w] : {std::pair{2, 1}, {2, 2}, {3, 1}}) {
        LinearSpan span(d);
        for (const auto& desc : so_basis_general(d, d * w)) span.insert(desc.poly);
        for (const auto& desc : gl_basis(d, w)) CHECK(span.contains(desc.poly));
    }
}

TEST_CASE("rotation invariance holds exactly under signed permutations") {
    for (const auto& desc : so2_basis(4)) {
        for (const auto& rot : signed_permutation_rotations(2))
            CHECK(apply_matrix(rot.transposed(), desc.poly) == desc.poly);
    }
    for (const auto& desc : so_basis_general(3, 3)) {
        for (const auto& rot : signed_permutation_rotations(3))
            CHECK(apply_matrix(rot.transposed(), desc.poly) == desc.poly);
    }
}

TEST_CASE("a reflection flips the orientation-sensitive element") {
    MatrixR reflect(2);
    reflect.at(0, 0) = -1;
    reflect.at(1, 1) = 1;  // determinant -1, not a rotation
    const auto im = so2_basis(2)[1].poly;  // -12 +21
    CHECK(apply_matrix(reflect.transposed(), im) == im * Rational(-1));
    const auto re = so2_basis(2)[0].poly;  // 11 + 22 survives the full orthogonal group
    CHECK(apply_matrix(reflect.transposed(), re) == re);
}

TEST_CASE("randomized rotation verification passes for real elements") {
    for (const auto& desc : so2_basis(2)) {
        const auto report = verify_so_invariance(desc, 5);
        CHECK(report.passed);
        CHECK(report.witness.empty());
    }
    const auto report = verify_so_invariance(so_basis_general(3, 3)[0], 5);
    CHECK(report.passed);
}

TEST_CASE("randomized rotation verification rejects a non-invariant") {
    InvariantDescriptor fake;
    fake.group = Group::SO;
    fake.dimension = 2;
    fake.level = 1;
    fake.generator = "planted counterexample";
    fake.poly = from_compact("+1", 2);
    const auto report = verify_so_invariance(fake, 5);
    CHECK(!report.passed);
    CHECK(!report.witness.empty());
}

}  // TEST_SUITE
