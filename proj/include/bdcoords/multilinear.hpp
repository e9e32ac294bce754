#pragma once

#include <vector>

#include "bdcoords/matrix.hpp"

namespace bdcoords {

/// Determinant of a square matrix. Exact matrices use fraction-free (Bareiss)
/// elimination, float matrices partial-pivot LU.
Scalar det(const Matrix& m);

/// Rank of an exact matrix (fraction-free elimination).
std::size_t rank(const Matrix& m);

/// Binomial coefficient extended by zero: n!/(p!(n-p)!) when 0 <= p <= n, else 0.
Scalar ext_binomial(long n, long p);

/// Exact factorial; throws DomainError for negative arguments.
Integer factorial(long k);

/// The scalar c with v_1 ^ ... ^ v_n = c (b_1 ^ ... ^ b_n), i.e. the
/// determinant of the change of coordinates from `basis` to `vectors`.
Scalar wedge_coeff(const std::vector<Vector>& vectors, const std::vector<Vector>& basis);

// Binomial determinants. All indexing is 0-based:
//
//   rhombus (n,k,l): (l+1)x(l+1), entry (i,j) = C(n+i+j, k+j)
//   band    (p,q,r): q x q,       entry (i,j) = C(p+r, p+i-j)
//
// The *_formula functions evaluate the closed forms literally, sign factor
// included; see compare_signs for how they relate to the determinants.

Matrix rhombus_matrix(long n, long k, long l);
Scalar rhombus_det_bruteforce(long n, long k, long l);
/// (-1)^{l(l+1)/2} 1!...l! * n!(n+1)!...(n+l)! / (k!...(k+l)! (n-k)!...(n-k+l)!)
Scalar rhombus_det_formula(long n, long k, long l);

Matrix band_matrix(long p, long q, long r);
Scalar band_det_bruteforce(long p, long q, long r);
/// (-1)^{(q-1)q/2} (n-q)!...(n-1)! 1!...(q-1)! / ((n-r-q)!...(n-r-1)! r!...(r+q-1)!), p+q+r = n.
Scalar band_det_formula(long n, long p, long q, long r);

/// Result of checking a literal closed form against a brute-force determinant.
struct SignComparison {
  Scalar formula;
  Scalar bruteforce;
  bool abs_equal = false;
  bool sign_equal = false;
};

SignComparison compare_signs(const Scalar& formula, const Scalar& bruteforce);

}  // namespace bdcoords
