#pragma once

#include <optional>
#include <vector>

#include "bdcoords/flags.hpp"
#include "bdcoords/hyperbolic.hpp"

namespace bdcoords {

// Polynomials of degree n-1 in X, Y are written in the monomial basis
// b_i = X^{n-i} Y^{i-1}, i = 1..n (0-based index = power of Y).

/// Image of a 2x2 matrix under the (n-1)-st symmetric power, remembering the
/// source element when there is one.
struct SymPowerMatrix {
  int n = 0;
  Matrix entries;
  std::optional<Mobius> source;
};

/// Sym^{n-1}(A): column j holds (a11 X + a21 Y)^{n-j} (a12 X + a22 Y)^{j-1}.
SymPowerMatrix irrep_n(const Mobius& a, int n);

/// Osculating flag of the Veronese curve at [a : b] with basis
/// v_d = (aX + bY)^{n-d} (-bX + aY)^{d-1}, d = 1..n.
Flag veronese_flag(const ProjPoint& p, int n);

/// Coefficients of (aX + bY)^e (cX + dY)^f in the monomial basis of degree e+f.
Vector binary_product_power(const Scalar& a, const Scalar& b, int e, const Scalar& c, const Scalar& d, int f);

/// log(|lambda_k| / |lambda_{k+1}|), k = 1..n-1, with the eigenvalues of the
/// matrix sorted by decreasing modulus. QR estimates are refined against the
/// exact characteristic polynomial of the entries. Throws DomainError for
/// complex or coincident moduli.
std::vector<double> length_spectrum(const SymPowerMatrix& m);

}  // namespace bdcoords
