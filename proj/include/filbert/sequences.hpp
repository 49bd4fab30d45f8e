#pragma once

#include <string>

#include "filbert/intpoly.hpp"
#include "filbert/rational.hpp"

namespace filbert {

// F_0 = 0, F_1 = 1, F_n = F_{n-1} + F_{n-2}.
Integer fibonacci(long n);

// f_0 = 0, f_1 = 1, f_n = x*f_{n-1} + f_{n-2}; f_n(1) = F_n.
IntPoly fibonacci_poly(long n);

// Standard binomial coefficient; 0 when k < 0 or k > n (the closed-form sums
// rely on that convention).
Integer binomial(long n, long k);

// Fibonomial coefficient: prod_{i=1..k} F_{n-i+1} / F_i, evaluated as one
// numerator product divided by one denominator product. The division is
// checked exact; a failure would falsify the integrality of Fibonomials.
Integer fibonomial(long n, long k);

// Fibonacci-polynomial analog of the Fibonomial; an integer polynomial.
IntPoly x_fibonomial(long n, long k);

// Rising factorial a(a+1)...(a+m-1), extended to negative m as the ratio
// Gamma(a+m)/Gamma(a), i.e. 1/((a-1)(a-2)...(a+m)). An empty product (m = 0)
// is 1; a zero or negative factor in the denominator is a domain error.
Rational rising_factorial_ext(const Integer& a, long m);

// Fibonacci analog: F_a F_{a+1} ... F_{a+m-1} for m >= 0, and
// 1/(F_{a-1} ... F_{a+m}) for m < 0. Any index reaching 0 under m < 0 is a
// domain error (F_0 = 0).
Rational fib_rising_ext(long a, long m);

enum class Family { fibonacci, fibpoly, hilbert, a, b, c, d };

std::string family_name(Family f);
Family family_from_name(const std::string& name);
bool family_uses_r(Family f);

// Identifies one term sequence {a_k}. r is meaningful for families b and d
// only; it is fixed implicitly for the others.
struct FamilySpec {
    Family family = Family::fibonacci;
    int r = 1;
};

// k-th term of the sequence, k >= 1:
//   fibonacci -> F_k          hilbert -> k
//   a -> C(k+1,2)             b -> C(k+r-1,r)
//   c -> C(k+3,3)             d -> Fibonomial(k+r-1, r)
// The fibpoly family has polynomial terms; see family_term_poly.
Integer family_term(const FamilySpec& spec, long k);

// f_k(x) for the fibpoly family.
IntPoly family_term_poly(const FamilySpec& spec, long k);

}  // namespace filbert
