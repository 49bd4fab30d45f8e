#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "filbert/intpoly.hpp"
#include "filbert/rational.hpp"
#include "filbert/sequences.hpp"

namespace filbert {

// Dense matrix over one exact element kind, 1-based in every math-facing
// interface (all the inverse formulas are 1-based), row-major inside.
template <typename T>
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
        if (rows < 1 || cols < 1) throw DimensionError("matrix dimensions must be positive");
        entries_.assign(static_cast<size_t>(rows) * cols, T());
    }

    static ExactMatrix identity(int n) {
        ExactMatrix m(n, n);
        for (int i = 1; i <= n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const T& operator()(int i, int j) const { return entries_[index(i, j)]; }
    T& operator()(int i, int j) { return entries_[index(i, j)]; }

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (int i = 1; i <= rows_; ++i)
            for (int j = i + 1; j <= cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

private:
    size_t index(int i, int j) const {
        if (i < 1 || i > rows_ || j < 1 || j > cols_) {
            throw DimensionError("matrix index (" + std::to_string(i) + "," + std::to_string(j) +
                                 ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
        }
        return static_cast<size_t>(i - 1) * cols_ + (j - 1);
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<T> entries_;
};

using RationalMatrix = ExactMatrix<Rational>;
using PolyMatrix = ExactMatrix<IntPoly>;

template <typename T>
ExactMatrix<T> mat_mul(const ExactMatrix<T>& a, const ExactMatrix<T>& b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("cannot multiply " + std::to_string(a.rows()) + "x" +
                             std::to_string(a.cols()) + " by " + std::to_string(b.rows()) + "x" +
                             std::to_string(b.cols()));
    }
    ExactMatrix<T> out(a.rows(), b.cols());
    for (int i = 1; i <= a.rows(); ++i) {
        for (int j = 1; j <= b.cols(); ++j) {
            T acc{};
            for (int k = 1; k <= a.cols(); ++k) acc = acc + a(i, k) * b(k, j);
            out(i, j) = acc;
        }
    }
    return out;
}

bool is_identity(const RationalMatrix& m);

// n x n matrix with (i,j)-entry 1/a_{i+j-1} for the given term sequence.
// The fibpoly family has rational-function entries which this matrix type
// cannot hold; polynomial identities go through cleared_identity_check.
RationalMatrix build_reciprocal_hankel(const FamilySpec& spec, int n);

// Reciprocal Hankel matrix of the fibpoly family evaluated at an integer
// x >= 1 (every f_k(x) is then a positive integer).
RationalMatrix build_fibpoly_hankel_at(int n, const Integer& x);

// Exact inverse by fraction-free (Bareiss) elimination: each row is scaled to
// a common integer row, the augmented system is eliminated without fractions,
// and the result is divided back. The elimination itself is not trusted; the
// returned matrix is asserted to satisfy m * inv = I.
RationalMatrix bareiss_inverse(const RationalMatrix& m);

// Sign readings for the family-d inverse formula, whose source is ambiguous.
//   printed_k: summand sign (-1)^{e(n,i,k)}, k the summation index, as printed.
//   variant_j: summand sign (-1)^{e(n,i,j)}, constant over the k-sum. Matches
//              the elimination oracle for n <= 2 only.
//   corrected: summand sign (-1)^{e(n,i,k)+n+j+1}, the unique reading found to
//              match the elimination oracle on every cell tested.
enum class SignVariant { printed_k, variant_j, corrected };

std::string sign_variant_name(SignVariant v);
SignVariant sign_variant_from_name(const std::string& name);

// One reciprocal Hankel matrix together with its claimed inverse formula.
// sign_variant is meaningful for family d only.
struct MatrixSpec {
    FamilySpec family;
    int n = 1;
    SignVariant sign_variant = SignVariant::variant_j;
};

struct FirstFailure {
    int i = 0;
    int m = 0;
    std::string value;  // canonical rendering of the offending product entry
};

struct VerificationReport {
    MatrixSpec spec;
    int n = 0;
    bool identity_holds = false;
    std::optional<FirstFailure> first_failure;
    std::chrono::milliseconds elapsed{0};
};

// Verifies sum_j inv(i,j)/f_{j+m-1} = delta_im as a polynomial identity with
// denominators cleared: with P_m = prod_{j=1..n} f_{j+m-1}, checks
// sum_j inv(i,j) * (P_m / f_{j+m-1}) = delta_im * P_m in integer-polynomial
// arithmetic. Every P_m / f_{j+m-1} is an exact polynomial by construction.
VerificationReport cleared_identity_check(const std::function<IntPoly(int, int)>& inv_entries,
                                          int n);

}  // namespace filbert
