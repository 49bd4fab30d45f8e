#pragma once

#include <gmp.h>

#include <cstring>
#include <string>
#include <utility>

#include "filbert/errors.hpp"

namespace filbert {

// Signed integer of unbounded magnitude. Thin value-semantics wrapper around
// GMP's mpz_t; all arithmetic is exact.
class Integer {
public:
    Integer() noexcept { mpz_init(v_); }
    Integer(int n) : Integer(static_cast<long>(n)) {}
    Integer(long n) noexcept { mpz_init_set_si(v_, n); }

    // Parses a base-10 integer, optional leading '-'.
    explicit Integer(const std::string& s) {
        if (s.empty() || mpz_init_set_str(v_, s.c_str(), 10) != 0) {
            mpz_init(v_);
            mpz_clear(v_);
            throw ParseError("not a decimal integer: \"" + s + "\"");
        }
    }

    Integer(const Integer& o) { mpz_init_set(v_, o.v_); }
    Integer(Integer&& o) noexcept {
        mpz_init(v_);
        mpz_swap(v_, o.v_);
    }
    Integer& operator=(const Integer& o) {
        if (this != &o) mpz_set(v_, o.v_);
        return *this;
    }
    Integer& operator=(Integer&& o) noexcept {
        mpz_swap(v_, o.v_);
        return *this;
    }
    ~Integer() { mpz_clear(v_); }

    friend Integer operator+(const Integer& a, const Integer& b) {
        Integer r;
        mpz_add(r.v_, a.v_, b.v_);
        return r;
    }
    friend Integer operator-(const Integer& a, const Integer& b) {
        Integer r;
        mpz_sub(r.v_, a.v_, b.v_);
        return r;
    }
    friend Integer operator*(const Integer& a, const Integer& b) {
        Integer r;
        mpz_mul(r.v_, a.v_, b.v_);
        return r;
    }
    Integer operator-() const {
        Integer r;
        mpz_neg(r.v_, v_);
        return r;
    }
    Integer& operator+=(const Integer& b) {
        mpz_add(v_, v_, b.v_);
        return *this;
    }
    Integer& operator-=(const Integer& b) {
        mpz_sub(v_, v_, b.v_);
        return *this;
    }
    Integer& operator*=(const Integer& b) {
        mpz_mul(v_, v_, b.v_);
        return *this;
    }

    // Truncated division: a = q*b + r with |r| < |b| and sign(r) = sign(a).
    static std::pair<Integer, Integer> div_rem(const Integer& a, const Integer& b) {
        if (b.is_zero()) throw DivisionByZeroError("integer division by zero");
        Integer q, r;
        mpz_tdiv_qr(q.v_, r.v_, a.v_, b.v_);
        return {std::move(q), std::move(r)};
    }

    // Quotient of an exact division; a nonzero remainder is a logic error here,
    // not bad input.
    static Integer exact_div(const Integer& a, const Integer& b) {
        auto [q, r] = div_rem(a, b);
        if (!r.is_zero()) {
            throw InternalError("division " + a.to_string() + " / " + b.to_string() +
                                " expected to be exact, remainder " + r.to_string());
        }
        return q;
    }

    static bool divides(const Integer& d, const Integer& a) {
        if (d.is_zero()) return a.is_zero();
        return mpz_divisible_p(a.v_, d.v_) != 0;
    }

    static Integer gcd(const Integer& a, const Integer& b) {
        Integer r;
        mpz_gcd(r.v_, a.v_, b.v_);
        return r;
    }
    static Integer lcm(const Integer& a, const Integer& b) {
        Integer r;
        mpz_lcm(r.v_, a.v_, b.v_);
        return r;
    }

    Integer abs() const {
        Integer r;
        mpz_abs(r.v_, v_);
        return r;
    }

    int sign() const { return mpz_sgn(v_); }
    bool is_zero() const { return mpz_sgn(v_) == 0; }
    bool is_one() const { return mpz_cmp_ui(v_, 1) == 0; }
    bool odd() const { return mpz_odd_p(v_) != 0; }

    friend bool operator==(const Integer& a, const Integer& b) { return mpz_cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Integer& a, const Integer& b) { return !(a == b); }
    friend bool operator<(const Integer& a, const Integer& b) { return mpz_cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Integer& a, const Integer& b) { return mpz_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Integer& a, const Integer& b) { return mpz_cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Integer& a, const Integer& b) { return mpz_cmp(a.v_, b.v_) >= 0; }

    std::string to_string() const {
        char* s = mpz_get_str(nullptr, 10, v_);
        std::string out(s);
        void (*freefn)(void*, size_t) = nullptr;
        mp_get_memory_functions(nullptr, nullptr, &freefn);
        freefn(s, std::strlen(s) + 1);
        return out;
    }

    mpz_srcptr raw() const { return v_; }
    mpz_ptr raw() { return v_; }

private:
    mpz_t v_;
};

}  // namespace filbert
