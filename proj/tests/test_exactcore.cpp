#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "filbert/intpoly.hpp"
#include "filbert/rational.hpp"
#include "filbert/sequences.hpp"

using namespace filbert;

namespace {

IntPoly poly(std::initializer_list<long> coeffs) {
    std::vector<Integer> c;
    for (long v : coeffs) c.emplace_back(v);
    return IntPoly(std::move(c));
}

Integer random_big(std::mt19937_64& rng) {
    // ~30 digit values, well past 64 bits
    std::uniform_int_distribution<int> digit(0, 9);
    std::string s = rng() % 2 ? "-" : "";
    s += std::to_string(digit(rng) + 1);
    for (int i = 0; i < 29; ++i) s += std::to_string(digit(rng));
    return Integer(s);
}

}  // namespace

TEST_CASE("integer arithmetic is exact beyond 64 bits") {
    std::mt19937_64 rng(20240817);
    for (int trial = 0; trial < 200; ++trial) {
        const Integer a = random_big(rng);
        const Integer b = random_big(rng);
        CHECK(a + b - b == a);
        CHECK((a * b).to_string() == (b * a).to_string());
    }
    const Integer big("123456789012345678901234567890");
    CHECK(Integer(big.to_string()) == big);
    CHECK(big > Integer("99999999999999999999"));
}

TEST_CASE("integer parsing rejects junk") {
    CHECK_THROWS_AS(Integer("12x"), ParseError);
    CHECK_THROWS_AS(Integer(""), ParseError);
    CHECK(Integer("-17") == Integer(-17));
}

TEST_CASE("integer division helpers") {
    auto [q, r] = Integer::div_rem(Integer(17), Integer(5));
    CHECK(q == Integer(3));
    CHECK(r == Integer(2));
    CHECK_THROWS_AS(Integer::div_rem(Integer(1), Integer(0)), DivisionByZeroError);
    CHECK(Integer::exact_div(Integer(21), Integer(7)) == Integer(3));
    CHECK_THROWS_AS(Integer::exact_div(Integer(22), Integer(7)), InternalError);
    CHECK(Integer::gcd(Integer(12), Integer(18)) == Integer(6));
    CHECK(Integer::lcm(Integer(4), Integer(6)) == Integer(12));
    CHECK(Integer::divides(Integer(3), Integer(12)));
    CHECK(!Integer::divides(Integer(5), Integer(12)));
}

TEST_CASE("rational arithmetic canonical examples") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(-2, 4).inv() == Rational(-2, 1));
    CHECK(Rational(1, 6) * Rational(18, 1) == Rational(3, 1));
    CHECK((Rational(1, 6) * Rational(18, 1)).to_string() == "3/1");
}

TEST_CASE("rational canonical form") {
    const Rational r(Integer(2), Integer(-4));
    CHECK(r.num() == Integer(-1));
    CHECK(r.den() == Integer(2));
    CHECK(r == Rational(-1, 2));
    CHECK(r.to_string() == "-1/2");
    CHECK(Rational(0, 5).to_string() == "0/1");
    CHECK(Rational(7).is_integer());
    CHECK(Rational(7).to_integer() == Integer(7));
    CHECK_THROWS_AS(Rational(1, 2).to_integer(), IntegralityViolationError);
}

TEST_CASE("rational division by zero is an error, never a value") {
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), DivisionByZeroError);
    CHECK_THROWS_AS(Rational(0).inv(), DivisionByZeroError);
    CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), DivisionByZeroError);
    CHECK_THROWS_AS(Rational::from_string("3/0"), DivisionByZeroError);
}

TEST_CASE("rational rendering round-trips") {
    std::mt19937_64 rng(987654321);
    std::uniform_int_distribution<long> num(-10000, 10000);
    std::uniform_int_distribution<long> den(1, 10000);
    for (int trial = 0; trial < 500; ++trial) {
        const Rational r(num(rng), den(rng));
        const Rational back = Rational::from_string(r.to_string());
        CHECK(back == r);
        CHECK(back.to_string() == r.to_string());
    }
    CHECK(Rational::from_string("-6") == Rational(-6, 1));
}

TEST_CASE("polynomial arithmetic canonical examples") {
    const IntPoly x = IntPoly::x();
    CHECK(x * poly({1, 0, 1}) == poly({0, 1, 0, 1}));            // x*(x^2+1) = x^3+x
    CHECK((poly({1, 0, 1}) + (-poly({1, 0, 1}))).is_zero());
    CHECK((poly({1, 0, 1}) + (-poly({1, 0, 1}))).coeffs().empty());
    CHECK(poly({2, 0, 1}) * poly({1, 0, 1}) == poly({2, 0, 3, 0, 1}));
    CHECK(poly({1, 2}).scaled(Integer(3)) == poly({3, 6}));
    CHECK(poly({1, 2}).scaled(Integer(0)).is_zero());
}

TEST_CASE("polynomial canonical form and rendering") {
    CHECK(poly({1, 0, 0}).degree() == 0);
    CHECK(IntPoly().degree() == -1);
    CHECK(poly({2, 0, 3, 0, 1}).to_string() == "x^4+3x^2+2");
    CHECK((-poly({0, 0, 1})).to_string() == "-x^2");
    CHECK(IntPoly().to_string() == "0");
    CHECK(poly({0, 1}).to_string() == "x");
    const auto strings = poly({2, 0, 3, 0, 1}).coeff_strings();
    CHECK(strings == std::vector<std::string>{"2", "0", "3", "0", "1"});
    CHECK(IntPoly::from_coeff_strings(strings) == poly({2, 0, 3, 0, 1}));
}

TEST_CASE("polynomial exact division") {
    CHECK(exact_div(poly({2, 0, 3, 0, 1}), poly({1, 0, 1})) == poly({2, 0, 1}));
    // f_6 / f_3 = x^3+3x
    CHECK(exact_div(poly({0, 3, 0, 4, 0, 1}), poly({1, 0, 1})) == poly({0, 3, 0, 1}));
    CHECK_THROWS_AS(exact_div(poly({1, 0, 1}), IntPoly::x()), InexactDivisionError);
    try {
        exact_div(poly({1, 0, 1}), IntPoly::x());
        FAIL("expected InexactDivisionError");
    } catch (const InexactDivisionError& e) {
        CHECK(e.remainder() == poly({1}));
    }
    CHECK_THROWS_AS(exact_div(poly({1}), IntPoly()), DivisionByZeroError);
}

TEST_CASE("polynomial multiplication round-trips through exact division") {
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<long> coeff(-9, 9);
    std::uniform_int_distribution<int> deg(0, 6);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<Integer> qc, bc;
        for (int d = 0; d <= deg(rng); ++d) qc.emplace_back(coeff(rng));
        for (int d = 0; d <= deg(rng); ++d) bc.emplace_back(coeff(rng));
        const IntPoly q(std::move(qc)), b(std::move(bc));
        if (b.is_zero()) continue;
        CHECK(exact_div(q * b, b) == q);
    }
}

TEST_CASE("polynomial evaluation distributes over multiplication") {
    std::mt19937_64 rng(13131313);
    std::uniform_int_distribution<long> coeff(-5, 5);
    std::uniform_int_distribution<int> deg(0, 5);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Integer> ac, bc;
        for (int d = 0; d <= deg(rng); ++d) ac.emplace_back(coeff(rng));
        for (int d = 0; d <= deg(rng); ++d) bc.emplace_back(coeff(rng));
        const IntPoly a(std::move(ac)), b(std::move(bc));
        for (long x = -3; x <= 3; ++x) {
            CHECK((a * b).eval(Integer(x)) == a.eval(Integer(x)) * b.eval(Integer(x)));
            CHECK((a + b).eval(Integer(x)) == a.eval(Integer(x)) + b.eval(Integer(x)));
        }
    }
}

TEST_CASE("rising factorial with the ratio extension") {
    CHECK(rising_factorial_ext(Integer(3), 2) == Rational(12, 1));
    CHECK(rising_factorial_ext(Integer(5), 0) == Rational(1, 1));
    CHECK(rising_factorial_ext(Integer(3), -1) == Rational(1, 2));
    CHECK(rising_factorial_ext(Integer(5), -3) == Rational(1, 24));  // 1/(4*3*2)
    CHECK_THROWS_AS(rising_factorial_ext(Integer(0), 2), DomainError);
    CHECK_THROWS_AS(rising_factorial_ext(Integer(2), -2), DomainError);  // hits factor 0
    CHECK_THROWS_AS(rising_factorial_ext(Integer(1), -1), DomainError);
}

TEST_CASE("rising factorial ratio consistency") {
    for (long a = 2; a <= 9; ++a) {
        for (long m = -(a - 1); m <= -1; ++m) {
            const Rational down = rising_factorial_ext(Integer(a), m);
            const Rational up = rising_factorial_ext(Integer(a + m), -m);
            CHECK(down * up == Rational(1));
        }
    }
}

TEST_CASE("fibonacci rising factorial") {
    CHECK(fib_rising_ext(3, 2) == Rational(6, 1));   // F_3*F_4 = 2*3
    CHECK(fib_rising_ext(4, 0) == Rational(1, 1));
    CHECK(fib_rising_ext(3, -1) == Rational(1, 1));  // 1/F_2
    CHECK(fib_rising_ext(5, -2) == Rational(1, 6));  // 1/(F_4*F_3)
    CHECK_THROWS_AS(fib_rising_ext(0, 1), DomainError);
    CHECK_THROWS_AS(fib_rising_ext(2, -2), DomainError);  // would need F_0
    for (long a = 2; a <= 9; ++a) {
        for (long m = -(a - 1); m <= -1; ++m) {
            CHECK(fib_rising_ext(a, m) * fib_rising_ext(a + m, -m) == Rational(1));
        }
    }
}
