#include "filbert/verifier.hpp"

#include <algorithm>

#include "filbert/parallel.hpp"

namespace filbert {

namespace {

constexpr size_t kMaxStoredViolations = 25;

int parity_sign(long long e) { return ((e % 2) + 2) % 2 == 0 ? 1 : -1; }

void add_violation(CertReport& rep, std::string identity,
                   std::vector<std::pair<std::string, long>> point, std::string residual) {
    ++rep.violation_count;
    if (rep.violations.size() < kMaxStoredViolations) {
        rep.violations.push_back({std::move(identity), std::move(point), std::move(residual)});
    }
}

// --- Fibonacci-polynomial side -------------------------------------------
//
// Certificates over Fibonacci polynomials are checked pointwise at integer
// x >= 1, where every f_k(x) with k >= 1 is a positive integer, so all the
// denominators below are nonzero and everything stays in exact rationals.

class FibContext {
public:
    FibContext(long x, long max_index) : x_(x) {
        if (x < 1) throw DomainError("certificate evaluation points must satisfy x >= 1");
        fib_.reserve(static_cast<size_t>(max_index) + 1);
        fib_.emplace_back(0);
        fib_.emplace_back(1);
        const Integer xv(x);
        for (long k = 2; k <= max_index; ++k) {
            fib_.push_back(fib_[static_cast<size_t>(k - 1)] * xv + fib_[static_cast<size_t>(k - 2)]);
        }
    }

    long x() const { return x_; }

    const Integer& f(long k) const {
        if (k < 0) throw DomainError("Fibonacci polynomial index below 0");
        if (k >= static_cast<long>(fib_.size())) {
            throw InternalError("Fibonacci table too small for index " + std::to_string(k));
        }
        return fib_[static_cast<size_t>(k)];
    }

    // x-Fibonomial value at this x; 0 outside 0 <= k <= n.
    Rational fibo(long n, long k) const {
        if (k < 0 || k > n) return Rational(0);
        Rational out(1);
        for (long t = 1; t <= k; ++t) out *= Rational(f(n - t + 1), f(t));
        return out;
    }

    // Summand of the (i,m)-entry of V(n) R_n(f_k(x)).
    Rational P(long n, long i, long m, long j) const {
        const Integer& den = f(j + m - 1);
        if (den.is_zero()) throw DomainError("P(n,i,m,j) needs j + m >= 2");
        Rational v = fibo(n + i - 1, n - j);
        if (v.sign() == 0) return v;
        v *= fibo(n + j - 1, n - i);
        if (v.sign() == 0) return v;
        const Rational c = fibo(i + j - 2, i - 1);
        v *= c * c;
        v *= Rational(f(i + j - 1), den);
        return parity_sign(sign_exponent_e(n, i, j)) < 0 ? -v : v;
    }

    Rational p_sum(long n, long i, long m) const {
        Rational s(0);
        for (long j = 1; j <= n; ++j) s += P(n, i, m, j);
        return s;
    }

private:
    long x_;
    std::vector<Integer> fib_;
};

// --- binomial side ---------------------------------------------------------

// Summand of B_ij(n,r), also the core of H, T, U and Y.
Rational S_term(long n, long i, long j, long k, long r) {
    Rational v{binomial(n + i + r - 2, i) * binomial(n, i) * binomial(n + k + r - 2, k) *
               binomial(n, k)};
    if (v.sign() == 0) return v;
    v *= Rational(Integer(i * i)) * rising_factorial_ext(Integer(i + j), r - 2);
    v = v / (Rational(r) * rising_factorial_ext(Integer(i + k), r - 1));
    return parity_sign(i + k + 1) < 0 ? -v : v;
}

// Certificate multiplier produced for the n-telescoping of B's summand.
Rational T_term(long n, long i, long j, long k, long r, bool mutated) {
    const long d1 = n - i + 1, d2 = n - k + 1, d0 = n + r - 1;
    if (d0 == 0 || d1 == 0 || d2 == 0) throw DomainError("T(n,i,j,k) outside validity domain");
    long num = (2 * n + r) * k * k * (i + k + r - 2);
    if (!mutated) num = -num;
    return Rational(Integer(num), Integer(d0 * d0 * d1 * d2)) * S_term(n, i, j, k, r);
}

Rational U_term(long n, long i, long j, long k, long r) {
    Integer den = binomial(j + r - 1, r);
    if (den.is_zero()) throw DomainError("U(n,i,j,k) outside validity domain");
    return S_term(n, j, i, k, r) / Rational(den);
}

Rational Y_term(long n, long i, long j, long k, long r, bool mutated) {
    const long d1 = n - j + 1, d2 = n - k + 1, d0 = n + r - 1;
    if (d0 == 0 || d1 == 0 || d2 == 0) throw DomainError("Y(n,i,j,k) outside validity domain");
    long num = (2 * n + r) * k * k * (j + k + r - 2);
    if (!mutated) num = -num;
    return Rational(Integer(num), Integer(d0 * d0 * d1 * d2)) * U_term(n, i, j, k, r);
}

// Summand of the (i,m)-entry of B(n,r) R_n(b_k(r)).
Rational H_term(long n, long i, long m, long j, long k, long r) {
    Integer den = binomial(j + m + r - 2, r);
    if (den.is_zero()) throw DomainError("H(n,i,m,j,k) outside validity domain");
    return S_term(n, i, j, k, r) / Rational(den);
}

// Summand of the (i,m)-entry of C(n) R_n(c_k).
Rational Z_term(long n, long i, long m, long j, long k) {
    Rational v{binomial(n + i + 2, i + k + 1) * binomial(n + k + 1, i + k + 1) *
               binomial(i + k + 1, i) * binomial(i + k, i)};
    v *= Rational(Integer(i * (j - k)), Integer(3) * binomial(j + m + 2, 3));
    return parity_sign(i + k + 1) < 0 ? -v : v;
}

void require_grid(const CertGrid& g, bool needs_r) {
    if (g.n_min < 1 || g.n_max < g.n_min) throw DomainError("certificate grid needs 1 <= n_min <= n_max");
    if (needs_r && (g.r_min < 1 || g.r_max < g.r_min)) {
        throw DomainError("certificate grid needs 1 <= r_min <= r_max");
    }
}

void require_x_values(const std::vector<long>& xs) {
    if (xs.empty()) throw DomainError("this certificate needs at least one x value");
    for (long x : xs) {
        if (x < 1) throw DomainError("certificate evaluation points must satisfy x >= 1");
    }
}

using Point = std::vector<std::pair<std::string, long>>;

void run_m_zero(CertReport& rep, bool mutated) {
    for (long x : rep.x_values) {
        FibContext ctx(x, 2 * rep.grid.n_max + 2);
        for (long n = rep.grid.n_min; n <= rep.grid.n_max; ++n) {
            for (long i = 1; i <= n; ++i) {
                for (long j = 1; j <= n; ++j) {
                    const int s1 = parity_sign(i + j);
                    Integer m = Integer(s1) * ctx.f(n + i - 1) * ctx.f(n + j - 1) * ctx.f(i + j - 2);
                    m += ctx.f(n - i) * ctx.f(n - j) * ctx.f(i + j - 2);
                    m += Integer(-s1) * ctx.f(n + i - 2) * ctx.f(n + j - 1) * ctx.f(i + j - 1);
                    Integer last = ctx.f(n - i + 1) * ctx.f(n - j) * ctx.f(i + j - 1);
                    m += mutated ? -last : last;
                    ++rep.evaluations;
                    if (!m.is_zero()) {
                        add_violation(rep, "M(n,i,j)=0", {{"x", x}, {"n", n}, {"i", i}, {"j", j}},
                                      m.to_string());
                    }
                }
            }
        }
    }
}

// The recurrence coefficients below differ from their printed source by one
// overall sign on the first difference: as printed, the two-term combination
// is off by the sign of its first half and fails already at n = 2; with the
// sign used here it is algebraically equivalent to M(n,i,j) = 0 (the M_zero
// certificate) and holds on the whole grid, boundaries included.
void run_filrec(CertReport& rep, bool mutated) {
    for (long x : rep.x_values) {
        FibContext ctx(x, 2 * rep.grid.n_max + 2);
        for (long n = std::max<long>(2, rep.grid.n_min); n <= rep.grid.n_max; ++n) {
            for (long i = 2; i <= n; ++i) {
                for (long m = 1; m <= n; ++m) {
                    for (long j = 1; j <= n; ++j) {
                        Rational first = Rational(ctx.f(n - i + 1) * ctx.f(n + i - 2)) *
                                         (ctx.P(n, i - 1, m, j) - ctx.P(n - 1, i - 1, m, j));
                        if (mutated) first = -first;
                        const Rational second =
                            Rational(Integer(parity_sign(n + i)) * ctx.f(i - 1) * ctx.f(i - 1)) *
                            (ctx.P(n, i, m, j) - ctx.P(n - 1, i, m, j));
                        rep.evaluations += 4;
                        const Rational res = first + second;
                        if (res.sign() != 0) {
                            add_violation(rep, "summand recurrence",
                                          {{"x", x}, {"n", n}, {"i", i}, {"m", m}, {"j", j}},
                                          res.to_string());
                        }
                    }
                }
            }
        }
    }
}

void run_filsum(CertReport& rep, bool mutated) {
    for (long x : rep.x_values) {
        FibContext ctx(x, 2 * rep.grid.n_max + 2);
        for (long n = std::max<long>(2, rep.grid.n_min); n <= rep.grid.n_max; ++n) {
            for (long i = 2; i <= n; ++i) {
                for (long m = 1; m <= n; ++m) {
                    Rational first = Rational(ctx.f(n - i + 1) * ctx.f(n + i - 2)) *
                                     (ctx.p_sum(n, i - 1, m) - ctx.p_sum(n - 1, i - 1, m));
                    if (mutated) first = -first;
                    const Rational second =
                        Rational(Integer(parity_sign(n + i)) * ctx.f(i - 1) * ctx.f(i - 1)) *
                        (ctx.p_sum(n, i, m) - ctx.p_sum(n - 1, i, m));
                    rep.evaluations += 2 * (2 * n - 1);
                    const Rational res = first + second;
                    if (res.sign() != 0) {
                        add_violation(rep, "sum recurrence",
                                      {{"x", x}, {"n", n}, {"i", i}, {"m", m}}, res.to_string());
                    }
                }
            }
        }
    }
}

// The four-term recurrence for P(n,1,m,j) is checked in several readings,
// because its source is ambiguous twice over: the last term is printed as
// P(n-1,i,m,j) with an i that occurs nowhere else (free-i reading vs i -> 1),
// and the printed sign of the P(n-1,1,m-1,j) term makes every reading fail.
// The checker adjudicates: violations are recorded for the sign-corrected
// i -> 1 reading (the one that is actually an identity), and the notes report
// how every other reading fared. Nothing is corrected silently.
void run_pn1m(CertReport& rep, bool mutated) {
    long reading_i_violations = 0, reading_i_points = 0;
    long printed_violations = 0, printed_points = 0;
    std::string first_reading_i;
    for (long x : rep.x_values) {
        FibContext ctx(x, 2 * rep.grid.n_max + 2);
        for (long n = std::max<long>(2, rep.grid.n_min); n <= rep.grid.n_max; ++n) {
            for (long m = 2; m <= n; ++m) {
                for (long j = 1; j <= n; ++j) {
                    Rational t1 = Rational(Integer(parity_sign(m + 1)) * ctx.f(n - 1) *
                                           ctx.f(n + m - 2)) *
                                  ctx.P(n, 1, m - 1, j);
                    if (mutated) t1 = -t1;
                    const Rational t2 =
                        Rational(ctx.f(n) * ctx.f(n - m + 1)) * ctx.P(n - 1, 1, m - 1, j);
                    const Rational t3 =
                        Rational(Integer(parity_sign(m)) * ctx.f(n - 1) * ctx.f(n + m - 1)) *
                        ctx.P(n, 1, m, j);
                    const Rational tail_coeff{ctx.f(n) * ctx.f(n - m)};
                    const Rational tail_1 = tail_coeff * ctx.P(n - 1, 1, m, j);
                    rep.evaluations += 4;

                    const Rational res_corrected = t1 + t2 + t3 + tail_1;
                    if (res_corrected.sign() != 0) {
                        add_violation(rep, "sign-corrected, last term P(n-1,1,m,j)",
                                      {{"x", x}, {"n", n}, {"m", m}, {"j", j}},
                                      res_corrected.to_string());
                    }
                    ++printed_points;
                    if ((t1 - t2 + t3 + tail_1).sign() != 0) ++printed_violations;
                    for (long i = 2; i <= n; ++i) {
                        ++rep.evaluations;
                        ++reading_i_points;
                        const Rational resi = t1 + t2 + t3 + tail_coeff * ctx.P(n - 1, i, m, j);
                        if (resi.sign() != 0) {
                            ++reading_i_violations;
                            if (first_reading_i.empty()) {
                                first_reading_i = "x=" + std::to_string(x) + " n=" + std::to_string(n) +
                                                  " m=" + std::to_string(m) + " j=" + std::to_string(j) +
                                                  " i=" + std::to_string(i) + " residual " +
                                                  resi.to_string();
                            }
                        }
                    }
                }
            }
        }
    }
    rep.notes.push_back(rep.violation_count == 0
                            ? "sign-corrected recurrence, last term P(n-1,1,m,j): holds on the whole grid"
                            : "sign-corrected recurrence, last term P(n-1,1,m,j): FAILS");
    rep.notes.push_back("as printed (second term negative): fails at " +
                        std::to_string(printed_violations) + " of " +
                        std::to_string(printed_points) + " points");
    if (reading_i_violations == 0) {
        rep.notes.push_back("last term read as P(n-1,i,m,j) with free i: holds on the whole grid");
    } else {
        rep.notes.push_back("last term read as P(n-1,i,m,j) with free i: fails at " +
                            std::to_string(reading_i_violations) + " of " +
                            std::to_string(reading_i_points) + " points (first: " + first_reading_i +
                            ")");
    }
}

void run_g1(CertReport& rep, bool mutated) {
    for (long x : rep.x_values) {
        FibContext ctx(x, 2 * rep.grid.n_max + 2);
        for (long m = std::max<long>(2, rep.grid.n_min); m <= rep.grid.n_max; ++m) {
            auto g1 = [&](long j) {
                return Rational(Integer(parity_sign(j - 1)) * ctx.f(j) * ctx.f(j - 1)) *
                       ctx.P(m, 1, m, j);
            };
            for (long j = 1; j <= m; ++j) {
                const Rational lhs =
                    Rational(Integer(parity_sign(m)) * ctx.f(m) * ctx.f(m - 1)) * ctx.P(m, 1, m, j);
                Rational up = g1(j + 1);
                if (mutated) up = -up;
                rep.evaluations += 3;
                const Rational res = lhs - (up - g1(j));
                if (res.sign() != 0) {
                    add_violation(rep, "telescoping", {{"x", x}, {"m", m}, {"j", j}},
                                  res.to_string());
                }
            }
            rep.evaluations += m;
            const Rational p = ctx.p_sum(m, 1, m);
            if (p.sign() != 0) {
                add_violation(rep, "p(m,1,m)=0", {{"x", x}, {"m", m}}, p.to_string());
            }
        }
    }
}

void run_g2(CertReport& rep, bool mutated) {
    for (long x : rep.x_values) {
        FibContext ctx(x, 2 * rep.grid.n_max + 2);
        for (long n = rep.grid.n_min; n <= rep.grid.n_max; ++n) {
            auto g2 = [&](long j) {
                return Rational(Integer(parity_sign(j - 1)) * ctx.f(j) * ctx.f(j)) *
                       ctx.P(n, 1, 1, j);
            };
            for (long j = 1; j <= n; ++j) {
                const Rational lhs =
                    Rational(Integer(parity_sign(n)) * ctx.f(n) * ctx.f(n)) * ctx.P(n, 1, 1, j);
                Rational up = g2(j + 1);
                if (mutated) up = -up;
                rep.evaluations += 3;
                const Rational res = lhs - (up - g2(j));
                if (res.sign() != 0) {
                    add_violation(rep, "telescoping", {{"x", x}, {"n", n}, {"j", j}},
                                  res.to_string());
                }
            }
            rep.evaluations += n;
            const Rational p = ctx.p_sum(n, 1, 1);
            if (p != Rational(1)) {
                add_violation(rep, "p(n,1,1)=1", {{"x", x}, {"n", n}}, (p - Rational(1)).to_string());
            }
        }
    }
}

void run_g3(CertReport& rep, bool mutated) {
    for (long x : rep.x_values) {
        FibContext ctx(x, 4 * rep.grid.n_max + 6);
        for (long n = rep.grid.n_min; n <= rep.grid.n_max; ++n) {
            auto g3 = [&](long j) {
                const Rational ratio{ctx.f(3 * n + j - 1), ctx.f(n + j - 1)};
                const Rational bracket = ratio + Rational(2 * parity_sign(n));
                const Rational c = ctx.fibo(n + j - 2, j - 2);
                Rational v = bracket * ctx.fibo(2 * n - 1, n - j + 1) * c * c;
                return parity_sign(sign_exponent_e(n, n, j)) < 0 ? -v : v;
            };
            for (long j = 1; j <= n + 1; ++j) {
                const Rational lhs = ctx.P(n + 1, n + 1, n + 1, j) - ctx.P(n, n, n, j);
                Rational up = g3(j + 1);
                if (mutated) up = -up;
                rep.evaluations += 4;
                const Rational res = lhs - (up - g3(j));
                if (res.sign() != 0) {
                    add_violation(rep, "telescoping", {{"x", x}, {"n", n}, {"j", j}},
                                  res.to_string());
                }
            }
        }
    }
}

void run_h_rec(CertReport& rep, bool mutated) {
    for (long r = rep.grid.r_min; r <= rep.grid.r_max; ++r) {
        for (long n = std::max<long>(2, rep.grid.n_min); n <= rep.grid.n_max; ++n) {
            for (long i = 2; i <= n; ++i) {
                const long i1 = (i - 1) * (i - 1);
                for (long m = 2; m <= n; ++m) {
                    for (long j = 1; j <= n; ++j) {
                        for (long k = 0; k <= j - 1; ++k) {
                            const long nn = n * n;
                            const long nr = (n + r - 2) * (n + r - 2);
                            Rational acc = Rational(Integer(nn * (i - m + r - 1) * (n - i + r - 1) *
                                                            (n + i + r - 3))) *
                                           H_term(n - 1, i - 1, m - 1, j, k, r);
                            if (mutated) acc = -acc;
                            acc -= Rational(Integer(nn * (i - m - 1) * (n - i + r - 1) *
                                                    (n + i + r - 3))) *
                                   H_term(n - 1, i - 1, m, j, k, r);
                            acc += Rational(Integer(nn * i1 * (i - m + 1))) *
                                   H_term(n - 1, i, m - 1, j, k, r);
                            acc -= Rational(Integer(nn * i1 * (i - m - r + 1))) *
                                   H_term(n - 1, i, m, j, k, r);
                            acc -= Rational(Integer(nr * (i - m + r - 1) * (n - i + 1) *
                                                    (n + i - 1))) *
                                   H_term(n, i - 1, m - 1, j, k, r);
                            acc += Rational(Integer(nr * (i - m - 1) * (n - i + 1) * (n + i - 1))) *
                                   H_term(n, i - 1, m, j, k, r);
                            acc -= Rational(Integer(nr * i1 * (i - m + 1))) *
                                   H_term(n, i, m - 1, j, k, r);
                            acc += Rational(Integer(nr * i1 * (i - m - r + 1))) *
                                   H_term(n, i, m, j, k, r);
                            rep.evaluations += 8;
                            if (acc.sign() != 0) {
                                add_violation(rep, "8-term recurrence",
                                              {{"r", r}, {"n", n}, {"i", i}, {"m", m}, {"j", j}, {"k", k}},
                                              acc.to_string());
                            }
                        }
                    }
                }
            }
        }
    }
}

void run_z_rec(CertReport& rep, bool mutated) {
    for (long n = std::max<long>(2, rep.grid.n_min); n <= rep.grid.n_max; ++n) {
        for (long i = 1; i <= n; ++i) {
            for (long m = 1; m <= n; ++m) {
                for (long j = 1; j <= n; ++j) {
                    for (long k = 0; k <= j - 1; ++k) {
                        const Rational first =
                            Rational(Integer((n - i + 1) * (n + i + 1))) *
                            (Z_term(n - 1, i - 1, m, j, k) - Z_term(n, i - 1, m, j, k));
                        Rational second = Rational(Integer(i * (i - 1))) *
                                          (Z_term(n - 1, i, m, j, k) - Z_term(n, i, m, j, k));
                        if (mutated) second = -second;
                        rep.evaluations += 4;
                        const Rational res = first + second;
                        if (res.sign() != 0) {
                            add_violation(rep, "recurrence",
                                          {{"n", n}, {"i", i}, {"m", m}, {"j", j}, {"k", k}},
                                          res.to_string());
                        }
                    }
                }
            }
        }
    }
}

void run_t_symm(CertReport& rep, bool mutated) {
    for (long r = rep.grid.r_min; r <= rep.grid.r_max; ++r) {
        for (long n = rep.grid.n_min; n <= rep.grid.n_max; ++n) {
            for (long i = 1; i <= n; ++i) {
                for (long j = 1; j <= n; ++j) {
                    for (long k = 0; k <= j - 1; ++k) {
                        const Rational lhs = S_term(n + 1, i, j, k, r) - S_term(n, i, j, k, r);
                        const Rational rhs =
                            T_term(n, i, j, k + 1, r, mutated) - T_term(n, i, j, k, r, mutated);
                        rep.evaluations += 4;
                        const Rational res = lhs - rhs;
                        if (res.sign() != 0) {
                            add_violation(rep, "telescoping",
                                          {{"r", r}, {"n", n}, {"i", i}, {"j", j}, {"k", k}},
                                          res.to_string());
                        }
                    }
                    // Symmetry combination driving B_ij(n+1) - B_ji(n+1) =
                    // B_ij(n) - B_ji(n).
                    const Rational combo = T_term(n, i, j, j, r, false) - T_term(n, i, j, 0, r, false) -
                                           T_term(n, j, i, i, r, false) + T_term(n, j, i, 0, r, false);
                    rep.evaluations += 4;
                    if (combo.sign() != 0) {
                        add_violation(rep, "symmetry combination", {{"r", r}, {"n", n}, {"i", i}, {"j", j}},
                                      combo.to_string());
                    }
                }
            }
        }
    }
}

void run_y_tel(CertReport& rep, bool mutated) {
    for (long r = rep.grid.r_min; r <= rep.grid.r_max; ++r) {
        for (long n = rep.grid.n_min; n <= rep.grid.n_max; ++n) {
            for (long i = 1; i <= n; ++i) {
                for (long j = 1; j <= n; ++j) {
                    for (long k = 0; k <= i - 1; ++k) {
                        const Rational lhs = U_term(n + 1, i, j, k, r) - U_term(n, i, j, k, r);
                        const Rational rhs =
                            Y_term(n, i, j, k + 1, r, mutated) - Y_term(n, i, j, k, r, mutated);
                        rep.evaluations += 4;
                        const Rational res = lhs - rhs;
                        if (res.sign() != 0) {
                            add_violation(rep, "telescoping",
                                          {{"r", r}, {"n", n}, {"i", i}, {"j", j}, {"k", k}},
                                          res.to_string());
                        }
                    }
                }
            }
        }
        // Initial value of the h(n,i,1) induction: the (1,i) entry of
        // R_n(b_k) B(n,r) at n = i, which is the U double sum over the full
        // summand range k = 0..i-1, vanishes for i > 1. (With the sum started
        // at k = 1 it does not vanish; k = 0 carries nonzero summands.)
        for (long i = std::max<long>(2, rep.grid.n_min); i <= rep.grid.n_max; ++i) {
            Rational total(0);
            for (long j = 1; j <= i; ++j) {
                for (long k = 0; k <= i - 1; ++k) {
                    total += U_term(i, i, j, k, r);
                    ++rep.evaluations;
                }
            }
            if (total.sign() != 0) {
                add_violation(rep, "initial double sum", {{"r", r}, {"i", i}}, total.to_string());
            }
        }
    }
}

}  // namespace

std::string certificate_name(CertificateId id) {
    switch (id) {
        case CertificateId::M_zero: return "M_zero";
        case CertificateId::filrec: return "filrec";
        case CertificateId::filsum: return "filsum";
        case CertificateId::pn1m: return "pn1m";
        case CertificateId::G1: return "G1";
        case CertificateId::G2: return "G2";
        case CertificateId::G3: return "G3";
        case CertificateId::H_rec: return "H_rec";
        case CertificateId::Z_rec: return "Z_rec";
        case CertificateId::T_symm: return "T_symm";
        case CertificateId::Y_tel: return "Y_tel";
    }
    throw InternalError("unknown certificate id");
}

CertificateId certificate_from_name(const std::string& name) {
    for (CertificateId id : all_certificates()) {
        if (certificate_name(id) == name) return id;
    }
    throw ParseError("unknown certificate \"" + name + "\"");
}

std::vector<CertificateId> all_certificates() {
    return {CertificateId::M_zero, CertificateId::filrec, CertificateId::filsum,
            CertificateId::pn1m,   CertificateId::G1,     CertificateId::G2,
            CertificateId::G3,     CertificateId::H_rec,  CertificateId::Z_rec,
            CertificateId::T_symm, CertificateId::Y_tel};
}

CertGrid default_grid(CertificateId id) {
    switch (id) {
        case CertificateId::M_zero:
        case CertificateId::filrec:
        case CertificateId::filsum:
        case CertificateId::pn1m:
        case CertificateId::G1:
        case CertificateId::G2:
        case CertificateId::G3: return CertGrid{1, 8, 1, 1};
        case CertificateId::H_rec: return CertGrid{2, 6, 1, 4};
        case CertificateId::Z_rec: return CertGrid{2, 8, 1, 1};
        case CertificateId::T_symm: return CertGrid{1, 6, 1, 4};
        case CertificateId::Y_tel: return CertGrid{1, 6, 1, 4};
    }
    throw InternalError("unknown certificate id");
}

CertReport check_certificate(CertificateId id, const CertGrid& grid,
                             const std::vector<long>& x_values, bool mutated) {
    CertReport rep;
    rep.id = id;
    rep.grid = grid;

    const bool fib_side = id == CertificateId::M_zero || id == CertificateId::filrec ||
                          id == CertificateId::filsum || id == CertificateId::pn1m ||
                          id == CertificateId::G1 || id == CertificateId::G2 ||
                          id == CertificateId::G3;
    require_grid(grid, !fib_side && id != CertificateId::Z_rec);
    if (fib_side) {
        require_x_values(x_values);
        rep.x_values = x_values;
    }

    switch (id) {
        case CertificateId::M_zero: run_m_zero(rep, mutated); break;
        case CertificateId::filrec: run_filrec(rep, mutated); break;
        case CertificateId::filsum: run_filsum(rep, mutated); break;
        case CertificateId::pn1m: run_pn1m(rep, mutated); break;
        case CertificateId::G1: run_g1(rep, mutated); break;
        case CertificateId::G2: run_g2(rep, mutated); break;
        case CertificateId::G3: run_g3(rep, mutated); break;
        case CertificateId::H_rec: run_h_rec(rep, mutated); break;
        case CertificateId::Z_rec: run_z_rec(rep, mutated); break;
        case CertificateId::T_symm: run_t_symm(rep, mutated); break;
        case CertificateId::Y_tel: run_y_tel(rep, mutated); break;
    }
    return rep;
}

VerificationReport verify_inverse(const MatrixSpec& spec) {
    if (spec.family.family == Family::fibpoly) {
        const int n = spec.n;
        auto rep = cleared_identity_check(
            [n](int i, int j) { return filbert_poly_inverse_entry(n, i, j); }, n);
        rep.spec = spec;
        return rep;
    }

    const auto start = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.spec = spec;
    rep.n = spec.n;
    rep.identity_holds = true;

    const RationalMatrix inv = assemble_inverse(spec);
    const RationalMatrix hankel = build_reciprocal_hankel(spec.family, spec.n);
    const Rational one(1), zero(0);

    auto scan_product = [&](const RationalMatrix& a, const RationalMatrix& b) {
        for (int i = 1; i <= spec.n; ++i) {
            for (int m = 1; m <= spec.n; ++m) {
                Rational acc(0);
                for (int k = 1; k <= spec.n; ++k) acc += a(i, k) * b(k, m);
                if (acc != (i == m ? one : zero)) {
                    rep.identity_holds = false;
                    rep.first_failure = FirstFailure{i, m, acc.to_string()};
                    return;
                }
            }
        }
    };
    scan_product(inv, hankel);
    if (rep.identity_holds) scan_product(hankel, inv);

    rep.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return rep;
}

bool integrality_predicate(int n, int r) {
    if (n < 1 || r < 1) throw DomainError("integrality predicate needs n >= 1 and r >= 1");
    int rest = r;
    for (int p = 2; p <= rest; ++p) {
        if (rest % p != 0) continue;
        long q = 1;
        while (rest % p == 0) {
            q *= p;
            rest /= p;
        }
        const long residue = n % q;
        if (residue != 0 && residue != 1) return false;
    }
    return true;
}

std::vector<ScanRow> integrality_scan(int n_max, int r_max) {
    if (n_max < 1 || r_max < 1) throw DomainError("scan bounds must be >= 1");
    std::vector<ScanRow> rows(static_cast<size_t>(n_max) * r_max);
    parallel_for(rows.size(), [&](size_t idx) {
        const int r = static_cast<int>(idx) / n_max + 1;
        const int n = static_cast<int>(idx) % n_max + 1;
        ScanRow row;
        row.n = n;
        row.r = r;
        const RationalMatrix inv =
            bareiss_inverse(build_reciprocal_hankel(FamilySpec{Family::b, r}, n));
        Integer max_den(1);
        bool divides = true;
        const Integer r_value(r);
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                Integer den = inv(i, j).den();
                if (!Integer::divides(den, r_value)) divides = false;
                if (den > max_den) max_den = std::move(den);
            }
        }
        row.is_integral = max_den.is_one();
        row.max_denominator = std::move(max_den);
        row.predicted_integral = integrality_predicate(n, r);
        row.agrees = row.is_integral == row.predicted_integral;
        row.denominators_divide_r = divides;
        rows[idx] = std::move(row);
    });
    return rows;  // index order is already (r, n)-sorted
}

std::vector<FibScanRow> fibonomial_scan(int n_max, int r_max, SignVariant sign_variant) {
    if (n_max < 1) throw DomainError("scan bounds must be >= 1");
    if (r_max < 2) throw DomainError("the Fibonomial scan needs r_max >= 2");
    std::vector<FibScanRow> rows(static_cast<size_t>(n_max) * (r_max - 1));
    parallel_for(rows.size(), [&](size_t idx) {
        const int r = static_cast<int>(idx) / n_max + 2;
        const int n = static_cast<int>(idx) % n_max + 1;
        FibScanRow row;
        row.n = n;
        row.r = r;
        row.sign_variant = sign_variant;
        const RationalMatrix formula =
            assemble_inverse(MatrixSpec{FamilySpec{Family::d, r}, n, sign_variant});
        const RationalMatrix oracle =
            bareiss_inverse(build_reciprocal_hankel(FamilySpec{Family::d, r}, n));
        row.formula_matches = true;
        for (int i = 1; i <= n && row.formula_matches; ++i) {
            for (int j = 1; j <= n; ++j) {
                if (formula(i, j) != oracle(i, j)) {
                    row.formula_matches = false;
                    row.first_mismatch = std::make_pair(i, j);
                    break;
                }
            }
        }
        row.d_integral = true;
        for (int i = 1; i <= n && row.d_integral; ++i)
            for (int j = 1; j <= n; ++j)
                if (!oracle(i, j).is_integer()) {
                    row.d_integral = false;
                    break;
                }
        const RationalMatrix b_oracle =
            bareiss_inverse(build_reciprocal_hankel(FamilySpec{Family::b, r}, n));
        row.b_integral = true;
        for (int i = 1; i <= n && row.b_integral; ++i)
            for (int j = 1; j <= n; ++j)
                if (!b_oracle(i, j).is_integer()) {
                    row.b_integral = false;
                    break;
                }
        row.integrality_agrees = row.d_integral == row.b_integral;
        rows[idx] = std::move(row);
    });
    return rows;
}

namespace {

// Signs of W(n) factor as sigma * u_i * u_j; on top of that, u must be
// constant exactly on a 2x2 tiling (aligned to row 1 or to row 2, which one
// depends on n) and flip between consecutive tiles.
bool sign_blocks_hold(const RationalMatrix& m) {
    const int n = m.rows();
    std::vector<int> sign(static_cast<size_t>(n) * n);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            const int s = m(i, j).sign();
            if (s == 0) return false;
            sign[static_cast<size_t>(i - 1) * n + (j - 1)] = s;
        }
    }
    auto s = [&](int i, int j) { return sign[static_cast<size_t>(i - 1) * n + (j - 1)]; };
    std::vector<int> u(static_cast<size_t>(n) + 1);
    for (int i = 1; i <= n; ++i) u[static_cast<size_t>(i)] = s(i, 1) * s(1, 1);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (s(i, j) != s(1, 1) * u[static_cast<size_t>(i)] * u[static_cast<size_t>(j)]) return false;
    bool aligned = true, offset = true;
    for (int i = 1; i < n; ++i) {
        const bool change = u[static_cast<size_t>(i)] != u[static_cast<size_t>(i + 1)];
        if (change != (i % 2 == 0)) aligned = false;
        if (change != (i % 2 == 1)) offset = false;
    }
    return aligned || offset;
}

}  // namespace

StructuralReport structural_checks(const MatrixSpec& spec) {
    StructuralReport rep;
    rep.spec = spec;
    if (spec.family.family == Family::fibpoly) {
        rep.symmetric = assemble_poly_inverse(spec.n).is_symmetric();
        return rep;
    }
    const RationalMatrix m = assemble_inverse(spec);
    rep.symmetric = m.is_symmetric();
    if (spec.family.family == Family::fibonacci) {
        rep.sign_blocks_checked = true;
        rep.sign_blocks = sign_blocks_hold(m);
    }
    return rep;
}

}  // namespace filbert
