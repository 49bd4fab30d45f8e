#pragma once

#include <gmp.h>

#include <string>
#include <utility>

#include "filbert/errors.hpp"
#include "filbert/integer.hpp"

namespace filbert {

// Exact rational number, always stored in canonical form: denominator > 0,
// gcd(|num|, den) = 1. Wraps GMP's mpq_t with value semantics.
class Rational {
public:
    Rational() noexcept { mpq_init(v_); }
    Rational(int n) : Rational(static_cast<long>(n)) {}
    Rational(long n) noexcept {
        mpq_init(v_);
        mpq_set_si(v_, n, 1);
    }
    Rational(const Integer& n) {
        mpq_init(v_);
        mpq_set_z(v_, n.raw());
    }
    Rational(const Integer& num, const Integer& den) {
        if (den.is_zero()) throw DivisionByZeroError("rational with zero denominator");
        mpq_init(v_);
        mpq_set_num(v_, num.raw());
        mpq_set_den(v_, den.raw());
        mpq_canonicalize(v_);
    }
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    Rational(const Rational& o) {
        mpq_init(v_);
        mpq_set(v_, o.v_);
    }
    Rational(Rational&& o) noexcept {
        mpq_init(v_);
        mpq_swap(v_, o.v_);
    }
    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(v_, o.v_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        mpq_swap(v_, o.v_);
        return *this;
    }
    ~Rational() { mpq_clear(v_); }

    Integer num() const {
        Integer n;
        mpz_set(n.raw(), mpq_numref(v_));
        return n;
    }
    Integer den() const {
        Integer d;
        mpz_set(d.raw(), mpq_denref(v_));
        return d;
    }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(v_), 1) == 0; }

    // Exact integer value; the caller must know the denominator is 1.
    Integer to_integer() const {
        if (!is_integer()) {
            throw IntegralityViolationError("value " + to_string() + " is not an integer");
        }
        return num();
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        Rational r;
        mpq_add(r.v_, a.v_, b.v_);
        return r;
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        Rational r;
        mpq_sub(r.v_, a.v_, b.v_);
        return r;
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        Rational r;
        mpq_mul(r.v_, a.v_, b.v_);
        return r;
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.sign() == 0) throw DivisionByZeroError("rational division by zero");
        Rational r;
        mpq_div(r.v_, a.v_, b.v_);
        return r;
    }
    Rational operator-() const {
        Rational r;
        mpq_neg(r.v_, v_);
        return r;
    }
    Rational& operator+=(const Rational& b) {
        mpq_add(v_, v_, b.v_);
        return *this;
    }
    Rational& operator-=(const Rational& b) {
        mpq_sub(v_, v_, b.v_);
        return *this;
    }
    Rational& operator*=(const Rational& b) {
        mpq_mul(v_, v_, b.v_);
        return *this;
    }

    Rational inv() const {
        if (sign() == 0) throw DivisionByZeroError("inverse of zero");
        Rational r;
        mpq_inv(r.v_, v_);
        return r;
    }

    int sign() const { return mpq_sgn(v_); }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_, b.v_) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return mpq_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return mpq_cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return mpq_cmp(a.v_, b.v_) >= 0; }

    // Canonical rendering, always "num/den" (e.g. "3/1", "-1/2").
    std::string to_string() const { return num().to_string() + "/" + den().to_string(); }

    // Parses "p/q" or a bare integer "p".
    static Rational from_string(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den.is_zero()) throw DivisionByZeroError("parsed rational with zero denominator");
        return Rational(num, den);
    }

    mpq_srcptr raw() const { return v_; }

private:
    mpq_t v_;
};

}  // namespace filbert
