#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "filbert/closedform.hpp"
#include "filbert/matrix.hpp"

namespace filbert {

// Checks the closed-form inverse against the reciprocal Hankel matrix:
// numeric families multiply out assemble_inverse and the Hankel matrix and
// compare with the identity (both orders); fibpoly runs the cleared
// polynomial identity check. Failure is data, not an error.
VerificationReport verify_inverse(const MatrixSpec& spec);

// Conjectured integrality criterion for the inverse of R_n(C(k+r-1, r)):
// n = 0 or 1 (mod q) for every maximal prime power q dividing r. (Requiring
// every prime power divisor instead changes nothing: n = 0 or 1 mod p^a
// forces the same residue mod p^b for b < a.)
bool integrality_predicate(int n, int r);

// One (n, r) cell of the binomial-family integrality scan.
struct ScanRow {
    int n = 0;
    int r = 0;
    bool is_integral = false;
    Integer max_denominator{1};
    bool predicted_integral = false;
    bool agrees = false;
    // Every denominator of the inverse must divide r; a violation is recorded
    // here rather than thrown.
    bool denominators_divide_r = true;
};

// Inverts R_n(C(k+r-1, r)) by Bareiss elimination for every cell of
// [1, n_max] x [1, r_max] and compares actual integrality against the
// predicate. Rows come back sorted by (r, n); cells run in parallel.
std::vector<ScanRow> integrality_scan(int n_max, int r_max);

// One (n, r) cell of the Fibonomial-family scan under one sign variant.
struct FibScanRow {
    int n = 0;
    int r = 0;
    SignVariant sign_variant = SignVariant::variant_j;
    bool formula_matches = false;
    std::optional<std::pair<int, int>> first_mismatch;
    bool d_integral = false;  // integrality of the true (Bareiss) inverse
    bool b_integral = false;  // integrality of the binomial counterpart
    bool integrality_agrees = false;
};

// Compares the closed-form D(n,r) under the given sign variant against the
// Bareiss oracle for 1 <= n <= n_max, 2 <= r <= r_max, and records whether
// Fibonomial-based integrality coincides with binomial-based integrality.
std::vector<FibScanRow> fibonomial_scan(int n_max, int r_max, SignVariant sign_variant);

// Proof-certificate identities, checked by exact evaluation on integer grids.
// Fibonacci-polynomial certificates are evaluated pointwise at each x >= 1.
enum class CertificateId { M_zero, filrec, filsum, pn1m, G1, G2, G3, H_rec, Z_rec, T_symm, Y_tel };

std::string certificate_name(CertificateId id);
CertificateId certificate_from_name(const std::string& name);
std::vector<CertificateId> all_certificates();

// Parameter ranges for a certificate run. n bounds apply to every
// certificate; r bounds apply to the binomial-side certificates
// (H_rec, Z_rec, T_symm, Y_tel) and are ignored elsewhere.
struct CertGrid {
    int n_min = 1;
    int n_max = 8;
    int r_min = 2;
    int r_max = 4;
};

struct CertViolation {
    std::string identity;                              // which sub-identity failed
    std::vector<std::pair<std::string, long>> point;   // named grid coordinates
    std::string residual;                              // nonzero difference, rendered
};

struct CertReport {
    CertificateId id = CertificateId::M_zero;
    CertGrid grid;
    std::vector<long> x_values;
    long evaluations = 0;      // summand evaluations performed
    long violation_count = 0;  // violations.size() is capped; this is not
    std::vector<CertViolation> violations;
    std::vector<std::string> notes;
    bool holds() const { return violation_count == 0; }
};

// Evaluates both sides of the certificate's identity at every valid grid
// point and reports nonzero residuals. A grid point outside the validity
// domain (vanishing denominator) raises DomainError before evaluation.
// `mutated` flips one designated sign inside the formula; a clean run of the
// checker must turn into a failing one, which is how the checkers test their
// own sensitivity.
CertReport check_certificate(CertificateId id, const CertGrid& grid,
                             const std::vector<long>& x_values, bool mutated = false);

CertGrid default_grid(CertificateId id);

struct StructuralReport {
    MatrixSpec spec;
    bool symmetric = false;
    bool sign_blocks_checked = false;  // the 2x2 block test applies to family fibonacci
    bool sign_blocks = false;
};

// Symmetry of the assembled inverse; for the fibonacci family, additionally
// the 2x2 sign-block pattern: signs constant on 2x2 blocks (aligned to row 1
// or row 2, depending on n) and opposite on adjacent blocks.
StructuralReport structural_checks(const MatrixSpec& spec);

}  // namespace filbert
