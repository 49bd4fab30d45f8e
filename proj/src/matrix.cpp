#include "filbert/matrix.hpp"

namespace filbert {

bool is_identity(const RationalMatrix& m) {
    if (m.rows() != m.cols()) return false;
    const Rational one(1), zero(0);
    for (int i = 1; i <= m.rows(); ++i)
        for (int j = 1; j <= m.cols(); ++j)
            if (m(i, j) != (i == j ? one : zero)) return false;
    return true;
}

RationalMatrix build_reciprocal_hankel(const FamilySpec& spec, int n) {
    if (n < 1) throw DimensionError("Hankel size must be >= 1");
    if (spec.family == Family::fibpoly) {
        throw UnsupportedElementKindError(
            "reciprocal Hankel over Fibonacci polynomials has rational-function entries; "
            "use cleared_identity_check or build_fibpoly_hankel_at");
    }
    RationalMatrix m(n, n);
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
            Integer term = family_term(spec, i + j - 1);
            if (term.is_zero()) {
                throw DomainError("sequence term a_" + std::to_string(i + j - 1) + " is zero");
            }
            Rational e(Integer(1), term);
            m(i, j) = e;
            m(j, i) = std::move(e);
        }
    }
    return m;
}

RationalMatrix build_fibpoly_hankel_at(int n, const Integer& x) {
    if (n < 1) throw DimensionError("Hankel size must be >= 1");
    if (x < Integer(1)) throw DomainError("fibpoly evaluation point must satisfy x >= 1");
    std::vector<Integer> fib(static_cast<size_t>(2 * n), Integer(0));
    fib[1] = Integer(1);
    for (size_t k = 2; k < fib.size(); ++k) fib[k] = fib[k - 1] * x + fib[k - 2];
    RationalMatrix m(n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            Rational e(Integer(1), fib[static_cast<size_t>(i + j - 1)]);
            m(i, j) = e;
            m(j, i) = std::move(e);
        }
    return m;
}

RationalMatrix bareiss_inverse(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("only square matrices can be inverted");
    const int n = m.rows();

    // Scale each row by the lcm of its denominators; the augmented right-hand
    // side (identity) picks up the same factor.
    std::vector<std::vector<Integer>> a(static_cast<size_t>(n),
                                        std::vector<Integer>(static_cast<size_t>(2 * n), Integer(0)));
    for (int i = 0; i < n; ++i) {
        Integer scale(1);
        for (int j = 0; j < n; ++j) scale = Integer::lcm(scale, m(i + 1, j + 1).den());
        for (int j = 0; j < n; ++j) {
            const Rational& e = m(i + 1, j + 1);
            a[i][j] = e.num() * Integer::exact_div(scale, e.den());
        }
        a[i][static_cast<size_t>(n + i)] = scale;
    }

    // Fraction-free forward elimination. Every division by the previous pivot
    // is exact (entries are minors of the scaled matrix).
    Integer prev(1);
    for (int k = 0; k < n; ++k) {
        int p = k;
        while (p < n && a[p][k].is_zero()) ++p;
        if (p == n) throw SingularError("matrix is singular");
        if (p != k) std::swap(a[p], a[k]);
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < 2 * n; ++j) {
                a[i][j] = Integer::exact_div(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
            }
            a[i][k] = Integer(0);
        }
        prev = a[k][k];
    }

    // Back substitution over rationals, one right-hand column at a time.
    RationalMatrix inv(n, n);
    for (int c = 0; c < n; ++c) {
        for (int i = n - 1; i >= 0; --i) {
            Rational s{a[i][static_cast<size_t>(n + c)]};
            for (int j = i + 1; j < n; ++j) s -= Rational(a[i][j]) * inv(j + 1, c + 1);
            inv(i + 1, c + 1) = s / Rational(a[i][i]);
        }
    }

    if (!is_identity(mat_mul(m, inv))) {
        throw InternalError("computed inverse failed the m * inv = I assertion");
    }
    return inv;
}

std::string sign_variant_name(SignVariant v) {
    switch (v) {
        case SignVariant::printed_k: return "printed_k";
        case SignVariant::variant_j: return "variant_j";
        case SignVariant::corrected: return "corrected";
    }
    throw InternalError("unknown sign variant enum value");
}

SignVariant sign_variant_from_name(const std::string& name) {
    if (name == "printed_k") return SignVariant::printed_k;
    if (name == "variant_j") return SignVariant::variant_j;
    if (name == "corrected") return SignVariant::corrected;
    throw ParseError("unknown sign variant \"" + name + "\"");
}

VerificationReport cleared_identity_check(const std::function<IntPoly(int, int)>& inv_entries,
                                          int n) {
    if (n < 1) throw DimensionError("Hankel size must be >= 1");
    const auto start = std::chrono::steady_clock::now();

    VerificationReport report;
    report.spec = MatrixSpec{FamilySpec{Family::fibpoly, 1}, n};
    report.n = n;
    report.identity_holds = true;

    std::vector<IntPoly> fib(static_cast<size_t>(2 * n), IntPoly());
    fib[1] = IntPoly((long)1);
    const IntPoly x = IntPoly::x();
    for (size_t k = 2; k < fib.size(); ++k) fib[k] = x * fib[k - 1] + fib[k - 2];

    std::vector<IntPoly> inv(static_cast<size_t>(n) * n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            inv[static_cast<size_t>(i - 1) * n + (j - 1)] = inv_entries(i, j);

    // Per column index m: the cleared denominator P_m and its quotients by
    // each single factor.
    std::vector<IntPoly> column_product(static_cast<size_t>(n) + 1);
    std::vector<std::vector<IntPoly>> quotient(static_cast<size_t>(n) + 1);
    for (int m = 1; m <= n; ++m) {
        IntPoly p((long)1);
        for (int j = 1; j <= n; ++j) p = p * fib[static_cast<size_t>(j + m - 1)];
        column_product[static_cast<size_t>(m)] = p;
        quotient[static_cast<size_t>(m)].resize(static_cast<size_t>(n) + 1);
        for (int j = 1; j <= n; ++j) {
            quotient[static_cast<size_t>(m)][static_cast<size_t>(j)] =
                exact_div(p, fib[static_cast<size_t>(j + m - 1)]);
        }
    }

    for (int i = 1; i <= n && report.identity_holds; ++i) {
        for (int m = 1; m <= n; ++m) {
            IntPoly sum;
            for (int j = 1; j <= n; ++j) {
                sum = sum + inv[static_cast<size_t>(i - 1) * n + (j - 1)] *
                                quotient[static_cast<size_t>(m)][static_cast<size_t>(j)];
            }
            const IntPoly expected = (i == m) ? column_product[static_cast<size_t>(m)] : IntPoly();
            if (sum != expected) {
                report.identity_holds = false;
                report.first_failure = FirstFailure{i, m, sum.to_string()};
                break;
            }
        }
    }

    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return report;
}

}  // namespace filbert
