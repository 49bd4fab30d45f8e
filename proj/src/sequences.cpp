#include "filbert/sequences.hpp"

#include <gmp.h>

namespace filbert {

Integer fibonacci(long n) {
    if (n < 0) throw DomainError("fibonacci index must be nonnegative");
    Integer r;
    mpz_fib_ui(r.raw(), static_cast<unsigned long>(n));
    return r;
}

IntPoly fibonacci_poly(long n) {
    if (n < 0) throw DomainError("fibonacci polynomial index must be nonnegative");
    if (n == 0) return IntPoly();
    IntPoly prev;            // f_0
    IntPoly cur((long)1);    // f_1
    const IntPoly x = IntPoly::x();
    for (long k = 2; k <= n; ++k) {
        IntPoly next = x * cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Integer binomial(long n, long k) {
    if (n < 0) throw DomainError("binomial upper index must be nonnegative");
    if (k < 0 || k > n) return Integer(0);
    Integer r;
    mpz_bin_uiui(r.raw(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer fibonomial(long n, long k) {
    if (n < 0) throw DomainError("fibonomial upper index must be nonnegative");
    if (k < 0 || k > n) return Integer(0);
    Integer num(1), den(1);
    for (long i = 1; i <= k; ++i) {
        num *= fibonacci(n - i + 1);
        den *= fibonacci(i);
    }
    auto [q, rem] = Integer::div_rem(num, den);
    if (!rem.is_zero()) {
        throw InternalError("fibonomial(" + std::to_string(n) + "," + std::to_string(k) +
                            ") is not an integer; integrality of Fibonomials is violated");
    }
    return q;
}

IntPoly x_fibonomial(long n, long k) {
    if (n < 0) throw DomainError("x-fibonomial upper index must be nonnegative");
    if (k < 0 || k > n) return IntPoly();
    IntPoly num((long)1), den((long)1);
    for (long i = 1; i <= k; ++i) {
        num = num * fibonacci_poly(n - i + 1);
        den = den * fibonacci_poly(i);
    }
    try {
        return exact_div(num, den);
    } catch (const InexactDivisionError&) {
        throw InternalError("x_fibonomial(" + std::to_string(n) + "," + std::to_string(k) +
                            ") is not an integer polynomial; x-Fibonomial integrality is violated");
    }
}

Rational rising_factorial_ext(const Integer& a, long m) {
    if (a < Integer(1)) throw DomainError("rising factorial base must be >= 1");
    if (m >= 0) {
        Integer p(1);
        for (long l = 0; l < m; ++l) p *= a + Integer(l);
        return Rational(p);
    }
    // Gamma(a+m)/Gamma(a) = 1 / ((a-1)(a-2)...(a+m)).
    Integer p(1);
    for (long l = -1; l >= m; --l) {
        Integer factor = a + Integer(l);
        if (factor.sign() <= 0) {
            throw DomainError("rising factorial extension hit a nonpositive factor: (" +
                              a.to_string() + ")_" + std::to_string(m));
        }
        p *= factor;
    }
    return Rational(Integer(1), p);
}

Rational fib_rising_ext(long a, long m) {
    if (a < 1) throw DomainError("fibonacci rising factorial base must be >= 1");
    if (m >= 0) {
        Integer p(1);
        for (long l = 0; l < m; ++l) p *= fibonacci(a + l);
        return Rational(p);
    }
    Integer p(1);
    for (long l = -1; l >= m; --l) {
        const long idx = a + l;
        if (idx < 1) {
            throw DomainError("fibonacci rising factorial extension hit index " +
                              std::to_string(idx) + " (F_0 = 0)");
        }
        p *= fibonacci(idx);
    }
    return Rational(Integer(1), p);
}

std::string family_name(Family f) {
    switch (f) {
        case Family::fibonacci: return "fibonacci";
        case Family::fibpoly: return "fibpoly";
        case Family::hilbert: return "hilbert";
        case Family::a: return "a";
        case Family::b: return "b";
        case Family::c: return "c";
        case Family::d: return "d";
    }
    throw InternalError("unknown family enum value");
}

Family family_from_name(const std::string& name) {
    if (name == "fibonacci") return Family::fibonacci;
    if (name == "fibpoly") return Family::fibpoly;
    if (name == "hilbert") return Family::hilbert;
    if (name == "a") return Family::a;
    if (name == "b") return Family::b;
    if (name == "c") return Family::c;
    if (name == "d") return Family::d;
    throw ParseError("unknown family \"" + name + "\"");
}

bool family_uses_r(Family f) { return f == Family::b || f == Family::d; }

Integer family_term(const FamilySpec& spec, long k) {
    if (k < 1) throw DomainError("sequence terms are indexed from k = 1");
    if (family_uses_r(spec.family) && spec.r < 1) {
        throw DomainError("family " + family_name(spec.family) + " requires r >= 1");
    }
    switch (spec.family) {
        case Family::fibonacci: return fibonacci(k);
        case Family::hilbert: return Integer(k);
        case Family::a: return binomial(k + 1, 2);
        case Family::b: return binomial(k + spec.r - 1, spec.r);
        case Family::c: return binomial(k + 3, 3);
        case Family::d: return fibonomial(k + spec.r - 1, spec.r);
        case Family::fibpoly:
            throw UnsupportedElementKindError(
                "fibpoly terms are polynomials; use family_term_poly");
    }
    throw InternalError("unknown family enum value");
}

IntPoly family_term_poly(const FamilySpec& spec, long k) {
    if (k < 1) throw DomainError("sequence terms are indexed from k = 1");
    if (spec.family != Family::fibpoly) {
        throw UnsupportedElementKindError("family_term_poly supports the fibpoly family only");
    }
    return fibonacci_poly(k);
}

}  // namespace filbert
