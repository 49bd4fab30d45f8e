#include "filbert/intpoly.hpp"

#include <algorithm>

namespace filbert {

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

IntPoly IntPoly::monomial(int degree, const Integer& coeff) {
    if (degree < 0) throw DomainError("monomial degree must be nonnegative");
    if (coeff.is_zero()) return IntPoly();
    IntPoly p;
    p.coeffs_.assign(static_cast<size_t>(degree) + 1, Integer(0));
    p.coeffs_.back() = coeff;
    return p;
}

const Integer& IntPoly::coeff(int d) const {
    static const Integer zero(0);
    if (d < 0 || d >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[static_cast<size_t>(d)];
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    IntPoly out;
    const size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
    out.coeffs_.reserve(n);
    for (size_t d = 0; d < n; ++d) {
        out.coeffs_.push_back(a.coeff(static_cast<int>(d)) + b.coeff(static_cast<int>(d)));
    }
    out.trim();
    return out;
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    IntPoly out;
    const size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
    out.coeffs_.reserve(n);
    for (size_t d = 0; d < n; ++d) {
        out.coeffs_.push_back(a.coeff(static_cast<int>(d)) - b.coeff(static_cast<int>(d)));
    }
    out.trim();
    return out;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    IntPoly out;
    out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) {
            out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    out.trim();
    return out;
}

IntPoly IntPoly::operator-() const {
    IntPoly out;
    out.coeffs_.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.coeffs_.push_back(-c);
    return out;
}

IntPoly IntPoly::scaled(const Integer& c) const {
    if (c.is_zero()) return IntPoly();
    IntPoly out;
    out.coeffs_.reserve(coeffs_.size());
    for (const auto& k : coeffs_) out.coeffs_.push_back(k * c);
    return out;
}

Integer IntPoly::eval(const Integer& x) const {
    Integer acc(0);
    for (size_t d = coeffs_.size(); d-- > 0;) {
        acc = acc * x + coeffs_[d];
    }
    return acc;
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int d = degree(); d >= 0; --d) {
        const Integer& c = coeff(d);
        if (c.is_zero()) continue;
        const bool neg = c.sign() < 0;
        if (!out.empty()) out += neg ? "-" : "+";
        else if (neg) out += "-";
        const Integer mag = c.abs();
        if (d == 0 || !mag.is_one()) out += mag.to_string();
        if (d >= 1) out += "x";
        if (d >= 2) out += "^" + std::to_string(d);
    }
    return out;
}

std::vector<std::string> IntPoly::coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.to_string());
    return out;
}

IntPoly IntPoly::from_coeff_strings(const std::vector<std::string>& coeffs) {
    std::vector<Integer> c;
    c.reserve(coeffs.size());
    for (const auto& s : coeffs) c.emplace_back(s);
    return IntPoly(std::move(c));
}

IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw DivisionByZeroError("polynomial division by zero");
    if (a.is_zero()) return IntPoly();

    const Integer& lead_b = b.coeff(b.degree());
    std::vector<Integer> quot;
    if (a.degree() >= b.degree()) {
        quot.assign(static_cast<size_t>(a.degree() - b.degree()) + 1, Integer(0));
    }
    IntPoly rem = a;
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        const int d = rem.degree() - b.degree();
        auto [q, r] = Integer::div_rem(rem.coeff(rem.degree()), lead_b);
        if (!r.is_zero()) {
            throw InexactDivisionError(
                "polynomial division is not exact over the integers; residual " + rem.to_string(),
                rem);
        }
        quot[static_cast<size_t>(d)] = q;
        rem = rem - b * IntPoly::monomial(d, q);
    }
    if (!rem.is_zero()) {
        throw InexactDivisionError("polynomial division left remainder " + rem.to_string(), rem);
    }
    IntPoly out{std::move(quot)};
    if (out * b != a) {
        throw InternalError("polynomial exact division failed its multiplication check");
    }
    return out;
}

}  // namespace filbert
