#pragma once

#include <string>
#include <vector>

#include "filbert/errors.hpp"
#include "filbert/integer.hpp"

namespace filbert {

// Dense polynomial with integer coefficients, stored ascending by degree.
// Canonical form: the highest stored coefficient is nonzero; the zero
// polynomial stores no coefficients at all.
class IntPoly {
public:
    IntPoly() = default;  // the zero polynomial
    explicit IntPoly(long c) : IntPoly(Integer(c)) {}
    explicit IntPoly(const Integer& c) {
        if (!c.is_zero()) coeffs_.push_back(c);
    }
    // Takes coefficients ascending by degree and trims trailing zeros.
    explicit IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static IntPoly x() { return monomial(1, Integer(1)); }
    static IntPoly monomial(int degree, const Integer& coeff);

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is -1 by convention.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    // Coefficient of x^d; zero outside the stored range.
    const Integer& coeff(int d) const;
    const std::vector<Integer>& coeffs() const { return coeffs_; }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    IntPoly operator-() const;
    IntPoly scaled(const Integer& c) const;

    Integer eval(const Integer& x) const;

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

    // Human-readable form, e.g. "x^4+3x^2+2", "-x^2", "0".
    std::string to_string() const;
    // Decimal coefficient strings ascending by degree; empty for zero.
    std::vector<std::string> coeff_strings() const;
    static IntPoly from_coeff_strings(const std::vector<std::string>& coeffs);

private:
    void trim();
    std::vector<Integer> coeffs_;
};

// Division with a nonzero remainder. Carries the residual polynomial left
// when integer long division could not continue or finished inexactly.
class InexactDivisionError : public Error {
public:
    InexactDivisionError(const std::string& what, IntPoly remainder)
        : Error(what), remainder_(std::move(remainder)) {}
    const IntPoly& remainder() const { return remainder_; }

private:
    IntPoly remainder_;
};

// Exact polynomial quotient over the integers. The result is verified by
// multiplying back; b = 0 violates the precondition.
IntPoly exact_div(const IntPoly& a, const IntPoly& b);

}  // namespace filbert
