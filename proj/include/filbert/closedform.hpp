#pragma once

#include "filbert/matrix.hpp"

namespace filbert {

// e(n,i,j) = n(i+j+1) + C(i,2) + C(j,2) + 1. Only its parity matters to the
// callers; the exact value is exposed for testing.
long long sign_exponent_e(long n, long i, long j);

// (i,j)-entry of the inverse of the n x n Hilbert matrix:
// (-1)^{i+j} (i+j-1) C(n+i-1,n-j) C(n+j-1,n-i) C(i+j-2,i-1)^2.
Integer hilbert_inverse_entry(int n, int i, int j);

// W_ij(n): the Fibonomial analog of the Hilbert entry, with sign
// (-1)^{e(n,i,j)} and magnitude F_{i+j-1} times three Fibonomial factors.
Integer filbert_inverse_entry(int n, int i, int j);

// V_ij(n): W with Fibonacci polynomials and x-Fibonomials; an integer
// polynomial whose value at x = 1 is W_ij(n).
IntPoly filbert_poly_inverse_entry(int n, int i, int j);

// A_ij(n), inverse of R_n(C(k+1,2)). The k-sum runs over half-integers; the
// total is asserted integral (that assertion is the theorem's claim).
Integer a_inverse_entry(int n, int i, int j);

// B_ij(n,r), inverse of R_n(C(k+r-1,r)); entries may be non-integral.
// B(n,1) reproduces the Hilbert inverse entries and B(n,2) equals A(n);
// the r = 1 case rides on the Gamma-ratio extension of the rising factorial.
Rational b_inverse_entry(int n, int i, int j, int r);

// C_ij(n), inverse of R_n(C(k+3,3)); every summand is individually asserted
// integral, matching the granularity at which that is known.
Integer c_inverse_entry(int n, int i, int j);

// D_ij(n,r), conjectured inverse of R_n(Fibonomial(k+r-1,r)), r >= 2, under
// the chosen sign reading (see SignVariant). printed_k fails the oracle
// already at n = 2, variant_j beyond n = 2; corrected is the reading the
// scans single out as inverting the matrix on every cell tested.
Rational d_inverse_entry(int n, int i, int j, int r, SignVariant sign_variant);

// n x n closed-form inverse for any numeric family. fibpoly is polynomial;
// use assemble_poly_inverse.
RationalMatrix assemble_inverse(const MatrixSpec& spec);

// V(n), the polynomial inverse of the Fibonacci-polynomial Hankel matrix.
PolyMatrix assemble_poly_inverse(int n);

}  // namespace filbert
