#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "filbert/closedform.hpp"
#include "filbert/matrix.hpp"

using namespace filbert;

namespace {

RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
    RationalMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j)
            m(static_cast<int>(i + 1), static_cast<int>(j + 1)) = rows[i][j];
    return m;
}

}  // namespace

TEST_CASE("reciprocal Hankel construction") {
    const RationalMatrix filbert2 = build_reciprocal_hankel(FamilySpec{Family::fibonacci, 1}, 2);
    CHECK(filbert2 == from_rows({{Rational(1), Rational(1)}, {Rational(1), Rational(1, 2)}}));

    const RationalMatrix hilbert2 = build_reciprocal_hankel(FamilySpec{Family::hilbert, 1}, 2);
    CHECK(hilbert2 == from_rows({{Rational(1), Rational(1, 2)}, {Rational(1, 2), Rational(1, 3)}}));

    const RationalMatrix c2 = build_reciprocal_hankel(FamilySpec{Family::c, 1}, 2);
    CHECK(c2 == from_rows({{Rational(1, 4), Rational(1, 10)}, {Rational(1, 10), Rational(1, 20)}}));

    CHECK_THROWS_AS(build_reciprocal_hankel(FamilySpec{Family::fibpoly, 1}, 2),
                    UnsupportedElementKindError);
    CHECK_THROWS_AS(build_reciprocal_hankel(FamilySpec{Family::hilbert, 1}, 0), DimensionError);
}

TEST_CASE("reciprocal Hankel matrices are symmetric") {
    const std::vector<FamilySpec> specs = {
        {Family::fibonacci, 1}, {Family::hilbert, 1}, {Family::a, 1},
        {Family::b, 3},         {Family::c, 1},       {Family::d, 3}};
    for (const auto& spec : specs) {
        for (int n = 1; n <= 12; ++n) {
            CAPTURE(family_name(spec.family));
            CAPTURE(n);
            CHECK(build_reciprocal_hankel(spec, n).is_symmetric());
        }
    }
}

TEST_CASE("fibpoly Hankel evaluated at integer points") {
    CHECK(build_fibpoly_hankel_at(4, Integer(1)) ==
          build_reciprocal_hankel(FamilySpec{Family::fibonacci, 1}, 4));
    const RationalMatrix m = build_fibpoly_hankel_at(2, Integer(2));
    // f_1=1, f_2=2, f_3=5 at x=2
    CHECK(m == from_rows({{Rational(1), Rational(1, 2)}, {Rational(1, 2), Rational(1, 5)}}));
    CHECK_THROWS_AS(build_fibpoly_hankel_at(2, Integer(0)), DomainError);
}

TEST_CASE("matrix multiplication") {
    const RationalMatrix w = from_rows({{Rational(-1), Rational(2)}, {Rational(2), Rational(-2)}});
    const RationalMatrix h = from_rows({{Rational(1), Rational(1)}, {Rational(1), Rational(1, 2)}});
    CHECK(is_identity(mat_mul(w, h)));
    CHECK(is_identity(mat_mul(h, w)));

    std::mt19937_64 rng(5150);
    std::uniform_int_distribution<long> v(-9, 9);
    RationalMatrix any(3, 3);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) any(i, j) = Rational(v(rng), 1 + (i + j) % 3);
    CHECK(mat_mul(RationalMatrix::identity(3), any) == any);
    CHECK(mat_mul(any, RationalMatrix::identity(3)) == any);

    const RationalMatrix a(1, 1);
    RationalMatrix x(1, 1), y(1, 1);
    x(1, 1) = Rational(3, 2);
    y(1, 1) = Rational(2, 3);
    CHECK(mat_mul(x, y) == RationalMatrix::identity(1));

    CHECK_THROWS_AS(mat_mul(RationalMatrix(2, 3), RationalMatrix(2, 3)), DimensionError);
}

TEST_CASE("bareiss inverse on known matrices") {
    const RationalMatrix h = from_rows({{Rational(1), Rational(1)}, {Rational(1), Rational(1, 2)}});
    CHECK(bareiss_inverse(h) ==
          from_rows({{Rational(-1), Rational(2)}, {Rational(2), Rational(-2)}}));

    const RationalMatrix hilbert3 = build_reciprocal_hankel(FamilySpec{Family::hilbert, 1}, 3);
    const RationalMatrix expected = from_rows({
        {Rational(9), Rational(-36), Rational(30)},
        {Rational(-36), Rational(192), Rational(-180)},
        {Rational(30), Rational(-180), Rational(180)},
    });
    CHECK(bareiss_inverse(hilbert3) == expected);

    const RationalMatrix singular = from_rows({{Rational(1), Rational(1)}, {Rational(1), Rational(1)}});
    CHECK_THROWS_AS(bareiss_inverse(singular), SingularError);
    CHECK_THROWS_AS(bareiss_inverse(RationalMatrix(2, 3)), DimensionError);
}

TEST_CASE("bareiss elimination pivots past zeros by row swaps") {
    const RationalMatrix swap2 = from_rows({{Rational(0), Rational(1)}, {Rational(1), Rational(0)}});
    CHECK(bareiss_inverse(swap2) == swap2);

    // elimination produces a zero pivot in the second column and must swap
    const RationalMatrix m = from_rows({
        {Rational(1), Rational(1), Rational(1)},
        {Rational(1), Rational(1), Rational(2)},
        {Rational(1), Rational(2), Rational(3)},
    });
    const RationalMatrix inv = bareiss_inverse(m);
    CHECK(is_identity(mat_mul(inv, m)));
    CHECK(is_identity(mat_mul(m, inv)));
}

TEST_CASE("bareiss inverse of random matrices satisfies both product identities") {
    std::mt19937_64 rng(777111);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    int inverted = 0;
    for (int trial = 0; trial < 60 && inverted < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 8);
        RationalMatrix m(n, n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) m(i, j) = Rational(num(rng), den(rng));
        try {
            const RationalMatrix inv = bareiss_inverse(m);
            ++inverted;
            CHECK(is_identity(mat_mul(inv, m)));
            CHECK(is_identity(mat_mul(m, inv)));
        } catch (const SingularError&) {
            continue;
        }
    }
    CHECK(inverted >= 30);
}

TEST_CASE("cleared identity check accepts the polynomial inverse formula") {
    auto v_entries = [](int n) {
        return [n](int i, int j) { return filbert_poly_inverse_entry(n, i, j); };
    };
    for (int n = 1; n <= 5; ++n) {
        const VerificationReport rep = cleared_identity_check(v_entries(n), n);
        CAPTURE(n);
        CHECK(rep.identity_holds);
        CHECK(!rep.first_failure.has_value());
    }
}

TEST_CASE("cleared identity check pinpoints a corrupted entry") {
    const int n = 2;
    auto corrupted = [n](int i, int j) {
        IntPoly e = filbert_poly_inverse_entry(n, i, j);
        if (i == 1 && j == 1) e = e + IntPoly((long)1);
        return e;
    };
    const VerificationReport rep = cleared_identity_check(corrupted, n);
    CHECK(!rep.identity_holds);
    REQUIRE(rep.first_failure.has_value());
    CHECK(rep.first_failure->i == 1);
    CHECK(rep.first_failure->m == 1);
}

TEST_CASE("cleared identity check rejects every single-entry perturbation") {
    const int n = 3;
    for (int bad_i = 1; bad_i <= n; ++bad_i) {
        for (int bad_j = 1; bad_j <= n; ++bad_j) {
            auto corrupted = [=](int i, int j) {
                IntPoly e = filbert_poly_inverse_entry(n, i, j);
                if (i == bad_i && j == bad_j) e = e + IntPoly::x();
                return e;
            };
            CAPTURE(bad_i);
            CAPTURE(bad_j);
            CHECK(!cleared_identity_check(corrupted, n).identity_holds);
        }
    }
}

TEST_CASE("evaluating the polynomial system at x = 1 reproduces the fibonacci verdict") {
    for (int n = 1; n <= 8; ++n) {
        const PolyMatrix v = assemble_poly_inverse(n);
        RationalMatrix evaluated(n, n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) evaluated(i, j) = Rational(v(i, j).eval(Integer(1)));
        const RationalMatrix hankel = build_reciprocal_hankel(FamilySpec{Family::fibonacci, 1}, n);
        CAPTURE(n);
        CHECK(is_identity(mat_mul(evaluated, hankel)));
        CHECK(evaluated == assemble_inverse(MatrixSpec{FamilySpec{Family::fibonacci, 1}, n}));
    }
}
