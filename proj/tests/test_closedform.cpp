#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "filbert/closedform.hpp"

using namespace filbert;

namespace {

IntPoly poly(std::initializer_list<long> coeffs) {
    std::vector<Integer> c;
    for (long v : coeffs) c.emplace_back(v);
    return IntPoly(std::move(c));
}

RationalMatrix oracle(const FamilySpec& fam, int n) {
    return bareiss_inverse(build_reciprocal_hankel(fam, n));
}

}  // namespace

TEST_CASE("sign exponent") {
    CHECK(sign_exponent_e(1, 1, 1) == 4);
    CHECK(sign_exponent_e(2, 1, 2) == 10);
    CHECK(sign_exponent_e(2, 2, 2) == 13);
    CHECK_THROWS_AS(sign_exponent_e(-1, 1, 1), DomainError);
}

TEST_CASE("hilbert inverse entries match the elimination oracle") {
    CHECK(hilbert_inverse_entry(1, 1, 1) == Integer(1));
    CHECK(hilbert_inverse_entry(2, 1, 2) == Integer(-6));
    CHECK(hilbert_inverse_entry(2, 2, 2) == Integer(12));
    for (int n = 1; n <= 6; ++n) {
        const RationalMatrix inv = oracle(FamilySpec{Family::hilbert, 1}, n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                CHECK(Rational(hilbert_inverse_entry(n, i, j)) == inv(i, j));
    }
}

TEST_CASE("filbert inverse entries match the elimination oracle") {
    CHECK(filbert_inverse_entry(1, 1, 1) == Integer(1));
    CHECK(filbert_inverse_entry(2, 1, 2) == Integer(2));
    CHECK(filbert_inverse_entry(2, 2, 2) == Integer(-2));
    for (int n = 1; n <= 7; ++n) {
        const RationalMatrix inv = oracle(FamilySpec{Family::fibonacci, 1}, n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                CHECK(Rational(filbert_inverse_entry(n, i, j)) == inv(i, j));
    }
}

TEST_CASE("polynomial inverse entries") {
    CHECK(filbert_poly_inverse_entry(2, 1, 1) == -poly({0, 0, 1}));
    CHECK(filbert_poly_inverse_entry(2, 1, 2) == poly({0, 1, 0, 1}));
    CHECK(filbert_poly_inverse_entry(2, 2, 2) == -poly({0, 0, 1, 0, 1}));
    CHECK(filbert_poly_inverse_entry(3, 2, 2).eval(Integer(1)) == filbert_inverse_entry(3, 2, 2));
    const PolyMatrix v2 = assemble_poly_inverse(2);
    CHECK(v2(1, 1) == -poly({0, 0, 1}));
    CHECK(v2(1, 2) == poly({0, 1, 0, 1}));
    CHECK(v2(2, 1) == poly({0, 1, 0, 1}));
    CHECK(v2(2, 2) == -poly({0, 0, 1, 0, 1}));
    for (int n = 1; n <= 8; ++n)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                CHECK(filbert_poly_inverse_entry(n, i, j).eval(Integer(1)) ==
                      filbert_inverse_entry(n, i, j));
}

TEST_CASE("A entries match the elimination oracle") {
    CHECK(a_inverse_entry(1, 1, 1) == Integer(1));
    CHECK(a_inverse_entry(2, 1, 1) == Integer(3));
    CHECK(a_inverse_entry(2, 1, 2) == Integer(-6));
    const RationalMatrix inv2 = oracle(FamilySpec{Family::a, 1}, 2);
    CHECK(inv2(1, 1) == Rational(3));
    CHECK(inv2(1, 2) == Rational(-6));
    CHECK(inv2(2, 2) == Rational(18));
    for (int n = 1; n <= 7; ++n) {
        const RationalMatrix inv = oracle(FamilySpec{Family::a, 1}, n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) CHECK(Rational(a_inverse_entry(n, i, j)) == inv(i, j));
    }
}

TEST_CASE("B entries: the r = 1 case needs the ratio extension") {
    CHECK(b_inverse_entry(2, 1, 2, 1) == Rational(-6));
    CHECK(b_inverse_entry(2, 1, 2, 1) == Rational(hilbert_inverse_entry(2, 1, 2)));
    CHECK(b_inverse_entry(2, 1, 1, 2) == Rational(3));
    CHECK(b_inverse_entry(2, 1, 1, 2) == Rational(a_inverse_entry(2, 1, 1)));
    CHECK(b_inverse_entry(2, 2, 2, 3) == Rational(80, 3));
    CHECK_THROWS_AS(b_inverse_entry(2, 1, 1, 0), DomainError);
}

TEST_CASE("B oracle agreement and collapses to Hilbert and A") {
    const RationalMatrix inv_b3 = oracle(FamilySpec{Family::b, 3}, 2);
    CHECK(inv_b3(1, 1) == Rational(8, 3));
    CHECK(inv_b3(1, 2) == Rational(-20, 3));
    CHECK(inv_b3(2, 2) == Rational(80, 3));
    for (int r = 1; r <= 5; ++r) {
        for (int n = 1; n <= 6; ++n) {
            const RationalMatrix inv = oracle(FamilySpec{Family::b, r}, n);
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) {
                    CAPTURE(r);
                    CAPTURE(n);
                    CHECK(b_inverse_entry(n, i, j, r) == inv(i, j));
                }
        }
    }
    for (int n = 1; n <= 8; ++n)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                CHECK(b_inverse_entry(n, i, j, 1) == Rational(hilbert_inverse_entry(n, i, j)));
                CHECK(b_inverse_entry(n, i, j, 2) == Rational(a_inverse_entry(n, i, j)));
            }
}

TEST_CASE("C entries match the elimination oracle and are summand-integral") {
    CHECK(c_inverse_entry(1, 1, 1) == Integer(4));
    CHECK(c_inverse_entry(2, 1, 1) == Integer(20));
    CHECK(c_inverse_entry(2, 2, 2) == Integer(100));
    const RationalMatrix inv2 = oracle(FamilySpec{Family::c, 1}, 2);
    CHECK(inv2(1, 1) == Rational(20));
    CHECK(inv2(1, 2) == Rational(-40));
    CHECK(inv2(2, 2) == Rational(100));
    for (int n = 1; n <= 7; ++n) {
        const RationalMatrix inv = oracle(FamilySpec{Family::c, 1}, n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) CHECK(Rational(c_inverse_entry(n, i, j)) == inv(i, j));
    }
}

TEST_CASE("D entries under the three sign readings") {
    CHECK(d_inverse_entry(2, 1, 1, 2, SignVariant::variant_j) == Rational(-2));
    CHECK(d_inverse_entry(2, 1, 2, 2, SignVariant::variant_j) == Rational(6));
    CHECK(d_inverse_entry(2, 1, 2, 2, SignVariant::printed_k) == Rational(-6));
    CHECK(d_inverse_entry(2, 2, 2, 2, SignVariant::variant_j) == Rational(-12));
    CHECK_THROWS_AS(d_inverse_entry(2, 1, 1, 1, SignVariant::variant_j), DomainError);

    const RationalMatrix inv_d2 = oracle(FamilySpec{Family::d, 2}, 2);
    CHECK(inv_d2(1, 1) == Rational(-2));
    CHECK(inv_d2(1, 2) == Rational(6));
    CHECK(inv_d2(2, 2) == Rational(-12));

    // variant_j coincides with corrected for n <= 2, where C(k,2) = 0 kills
    // the difference, and stops matching the oracle at n = 3
    for (int n = 1; n <= 2; ++n)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                CHECK(d_inverse_entry(n, i, j, 2, SignVariant::variant_j) ==
                      d_inverse_entry(n, i, j, 2, SignVariant::corrected));
    CHECK(d_inverse_entry(3, 1, 2, 2, SignVariant::variant_j) == Rational(42));
    CHECK(d_inverse_entry(3, 1, 2, 2, SignVariant::corrected) == Rational(30));
    CHECK(oracle(FamilySpec{Family::d, 2}, 3)(1, 2) == Rational(30));

    // the corrected reading matches the elimination oracle entrywise
    for (int r = 2; r <= 4; ++r) {
        for (int n = 1; n <= 6; ++n) {
            const RationalMatrix inv = oracle(FamilySpec{Family::d, r}, n);
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) {
                    CAPTURE(r);
                    CAPTURE(n);
                    CHECK(d_inverse_entry(n, i, j, r, SignVariant::corrected) == inv(i, j));
                }
        }
    }
}

TEST_CASE("assembled inverses match the elimination oracle") {
    CHECK(assemble_inverse(MatrixSpec{FamilySpec{Family::fibonacci, 1}, 2}) ==
          oracle(FamilySpec{Family::fibonacci, 1}, 2));
    CHECK(assemble_inverse(MatrixSpec{FamilySpec{Family::hilbert, 1}, 3}) ==
          oracle(FamilySpec{Family::hilbert, 1}, 3));
    CHECK_THROWS_AS(assemble_inverse(MatrixSpec{FamilySpec{Family::fibpoly, 1}, 2}),
                    UnsupportedElementKindError);

    const std::vector<FamilySpec> specs = {
        {Family::fibonacci, 1}, {Family::hilbert, 1}, {Family::a, 1},
        {Family::b, 3},         {Family::c, 1},       {Family::d, 3}};
    for (const auto& fam : specs) {
        for (int n = 1; n <= 6; ++n) {
            CAPTURE(family_name(fam.family));
            CAPTURE(n);
            CHECK(assemble_inverse(MatrixSpec{fam, n, SignVariant::corrected}) == oracle(fam, n));
        }
    }
}

TEST_CASE("W is an integer matrix and B is symmetric") {
    for (int n = 1; n <= 12; ++n) {
        const RationalMatrix w = assemble_inverse(MatrixSpec{FamilySpec{Family::fibonacci, 1}, n});
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) CHECK(w(i, j).is_integer());
    }
    for (int r = 1; r <= 4; ++r)
        for (int n = 1; n <= 8; ++n)
            CHECK(assemble_inverse(MatrixSpec{FamilySpec{Family::b, r}, n}).is_symmetric());
}
