#include "filbert/closedform.hpp"

namespace filbert {

namespace {

void require_entry_indices(int n, int i, int j) {
    if (n < 1 || i < 1 || i > n || j < 1 || j > n) {
        throw DomainError("entry indices must satisfy 1 <= i,j <= n");
    }
}

int parity_sign(long long e) { return (e % 2 == 0) ? 1 : -1; }

Integer apply_sign(Integer v, int sign) { return sign < 0 ? -std::move(v) : std::move(v); }

}  // namespace

long long sign_exponent_e(long n, long i, long j) {
    if (n < 0 || i < 0 || j < 0) throw DomainError("sign exponent arguments must be nonnegative");
    return n * (i + j + 1) + i * (i - 1) / 2 + j * (j - 1) / 2 + 1;
}

Integer hilbert_inverse_entry(int n, int i, int j) {
    require_entry_indices(n, i, j);
    Integer v = Integer(i + j - 1) * binomial(n + i - 1, n - j) * binomial(n + j - 1, n - i);
    const Integer c = binomial(i + j - 2, i - 1);
    v *= c * c;
    return apply_sign(std::move(v), (i + j) % 2 == 0 ? 1 : -1);
}

Integer filbert_inverse_entry(int n, int i, int j) {
    require_entry_indices(n, i, j);
    Integer v = fibonacci(i + j - 1) * fibonomial(n + i - 1, n - j) * fibonomial(n + j - 1, n - i);
    const Integer c = fibonomial(i + j - 2, i - 1);
    v *= c * c;
    return apply_sign(std::move(v), parity_sign(sign_exponent_e(n, i, j)));
}

IntPoly filbert_poly_inverse_entry(int n, int i, int j) {
    require_entry_indices(n, i, j);
    IntPoly v = fibonacci_poly(i + j - 1) * x_fibonomial(n + i - 1, n - j) *
                x_fibonomial(n + j - 1, n - i);
    const IntPoly c = x_fibonomial(i + j - 2, i - 1);
    v = v * c * c;
    return parity_sign(sign_exponent_e(n, i, j)) < 0 ? -v : v;
}

Integer a_inverse_entry(int n, int i, int j) {
    require_entry_indices(n, i, j);
    Rational sum(0);
    const Rational half_i(Integer(i), Integer(2));
    for (int k = 0; k <= j - 1; ++k) {
        Rational term{binomial(n + i, n - k) * binomial(n + k, n - i) * binomial(i + k - 1, k) *
                      binomial(i + k, k)};
        term *= half_i;
        if ((i + k + 1) % 2 != 0) term = -term;
        sum += term;
    }
    if (!sum.is_integer()) {
        throw IntegralityViolationError("A_" + std::to_string(i) + std::to_string(j) + "(" +
                                        std::to_string(n) + ") = " + sum.to_string() +
                                        " is not an integer");
    }
    return sum.num();
}

Rational b_inverse_entry(int n, int i, int j, int r) {
    require_entry_indices(n, i, j);
    if (r < 1) throw DomainError("B entries require r >= 1");
    const Rational numerator_rise = rising_factorial_ext(Integer(i + j), r - 2);
    const Rational i_sq{Integer(static_cast<long>(i) * i)};
    Rational sum(0);
    for (int k = 0; k <= j - 1; ++k) {
        Rational term{binomial(n + i + r - 2, i) * binomial(n, i) * binomial(n + k + r - 2, k) *
                      binomial(n, k)};
        term *= i_sq * numerator_rise;
        term = term / (Rational(r) * rising_factorial_ext(Integer(i + k), r - 1));
        if ((i + k + 1) % 2 != 0) term = -term;
        sum += term;
    }
    return sum;
}

Integer c_inverse_entry(int n, int i, int j) {
    require_entry_indices(n, i, j);
    Integer sum(0);
    for (int k = 0; k <= j - 1; ++k) {
        Rational term{binomial(n + i + 2, i + k + 1) * binomial(n + k + 1, i + k + 1) *
                      binomial(i + k + 1, i) * binomial(i + k, i)};
        term *= Rational(Integer(static_cast<long>(i) * (j - k)), Integer(3));
        if (!term.is_integer()) {
            throw IntegralityViolationError("summand k=" + std::to_string(k) + " of C_" +
                                            std::to_string(i) + std::to_string(j) + "(" +
                                            std::to_string(n) + ") = " + term.to_string() +
                                            " is not an integer");
        }
        sum += apply_sign(term.num(), (i + k + 1) % 2 == 0 ? 1 : -1);
    }
    return sum;
}

Rational d_inverse_entry(int n, int i, int j, int r, SignVariant sign_variant) {
    require_entry_indices(n, i, j);
    if (r < 2) throw DomainError("D entries are defined for r >= 2 only");
    const Rational numerator_rise = fib_rising_ext(i + j, r - 2);
    const Integer f_i = fibonacci(i);
    const Rational f_i_sq{f_i * f_i};
    const Rational f_r{fibonacci(r)};
    const int j_sign = parity_sign(sign_exponent_e(n, i, j));
    Rational sum(0);
    for (int k = 0; k <= j - 1; ++k) {
        Rational term{fibonomial(n + i + r - 2, i) * fibonomial(n, i) *
                      fibonomial(n + k + r - 2, k) * fibonomial(n, k)};
        term *= f_i_sq * numerator_rise;
        term = term / (f_r * fib_rising_ext(i + k, r - 1));
        int sign = j_sign;
        switch (sign_variant) {
            case SignVariant::printed_k: sign = parity_sign(sign_exponent_e(n, i, k)); break;
            case SignVariant::variant_j: sign = j_sign; break;
            case SignVariant::corrected:
                sign = parity_sign(sign_exponent_e(n, i, k) + n + j + 1);
                break;
        }
        if (sign < 0) term = -term;
        sum += term;
    }
    return sum;
}

RationalMatrix assemble_inverse(const MatrixSpec& spec) {
    const int n = spec.n;
    if (n < 1) throw DimensionError("matrix size must be >= 1");
    const int r = spec.family.r;
    RationalMatrix out(n, n);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            Rational e;
            switch (spec.family.family) {
                case Family::fibonacci: e = Rational(filbert_inverse_entry(n, i, j)); break;
                case Family::hilbert: e = Rational(hilbert_inverse_entry(n, i, j)); break;
                case Family::a: e = Rational(a_inverse_entry(n, i, j)); break;
                case Family::b: e = b_inverse_entry(n, i, j, r); break;
                case Family::c: e = Rational(c_inverse_entry(n, i, j)); break;
                case Family::d: e = d_inverse_entry(n, i, j, r, spec.sign_variant); break;
                case Family::fibpoly:
                    throw UnsupportedElementKindError(
                        "fibpoly inverse entries are polynomials; use assemble_poly_inverse");
            }
            out(i, j) = std::move(e);
        }
    }
    return out;
}

PolyMatrix assemble_poly_inverse(int n) {
    if (n < 1) throw DimensionError("matrix size must be >= 1");
    PolyMatrix out(n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) out(i, j) = filbert_poly_inverse_entry(n, i, j);
    return out;
}

}  // namespace filbert
