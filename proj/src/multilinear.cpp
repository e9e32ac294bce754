#include "bdcoords/multilinear.hpp"

#include <cmath>
#include <utility>

namespace bdcoords {

namespace {

Scalar det_bareiss(Matrix a) {
  const std::size_t n = a.rows();
  int sign = 1;
  Scalar previous = Scalar::exact(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a(swap_row, k).is_zero()) ++swap_row;
      if (swap_row == n) return Scalar::exact(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / previous;
      }
    }
    previous = a(k, k);
  }
  Scalar d = a(n - 1, n - 1);
  return sign < 0 ? -d : d;
}

Scalar det_lu(Matrix a) {
  const std::size_t n = a.rows();
  double d = 1.0;
  std::vector<double> m(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i * n + j] = a(i, j).to_double();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(m[i * n + k]) > std::abs(m[pivot * n + k])) pivot = i;
    if (m[pivot * n + k] == 0.0) return Scalar::real(0.0);
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m[k * n + j], m[pivot * n + j]);
      d = -d;
    }
    const double piv = m[k * n + k];
    d *= piv;
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = m[i * n + k] / piv;
      if (f == 0.0) continue;
      for (std::size_t j = k + 1; j < n; ++j) m[i * n + j] -= f * m[k * n + j];
    }
  }
  return Scalar::real(d);
}

Integer superfactorial_range(long first, long count) {
  Integer out = 1;
  for (long i = 0; i < count; ++i) out *= factorial(first + i);
  return out;
}

}  // namespace

Scalar det(const Matrix& m) {
  if (!m.square()) throw DimensionError("determinant of a non-square matrix");
  return m.uniform_mode() == Mode::Exact ? det_bareiss(m) : det_lu(m);
}

std::size_t rank(const Matrix& m) {
  if (m.uniform_mode() != Mode::Exact) throw ModeError("rank is only defined for exact matrices");
  Matrix a = m;
  std::size_t r = 0;
  for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
    std::size_t pivot = r;
    while (pivot < a.rows() && a(pivot, col).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(pivot, j));
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, col).is_zero()) continue;
      const Scalar f = a(i, col) / a(r, col);
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

Integer factorial(long k) {
  if (k < 0) throw DomainError("factorial of a negative integer");
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(k));
  return out;
}

Scalar ext_binomial(long n, long p) {
  if (n < 0 || p < 0 || p > n) return Scalar::exact(0);
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(p));
  return Scalar::exact(Rational(out));
}

Scalar wedge_coeff(const std::vector<Vector>& vectors, const std::vector<Vector>& basis) {
  const std::size_t n = basis.size();
  if (vectors.size() != n) throw DimensionError("wedge_coeff needs as many vectors as basis elements");
  for (const auto& v : vectors)
    if (v.size() != n) throw DimensionError("wedge_coeff vector of wrong dimension");
  for (const auto& b : basis)
    if (b.size() != n) throw DimensionError("wedge_coeff basis vector of wrong dimension");
  const Scalar basis_det = det(Matrix::from_columns(basis));
  if (basis_det.is_zero()) throw DegenerateError("wedge_coeff basis is singular");
  return det(Matrix::from_columns(vectors)) / basis_det;
}

Matrix rhombus_matrix(long n, long k, long l) {
  if (n < 0 || l < 0 || k < 0 || k > n) throw DomainError("rhombus needs n >= 0, 0 <= k <= n, l >= 0");
  const auto size = static_cast<std::size_t>(l + 1);
  Matrix m(size, size);
  for (long i = 0; i <= l; ++i)
    for (long j = 0; j <= l; ++j) m(i, j) = ext_binomial(n + i + j, k + j);
  return m;
}

Scalar rhombus_det_bruteforce(long n, long k, long l) { return det(rhombus_matrix(n, k, l)); }

Scalar rhombus_det_formula(long n, long k, long l) {
  if (n < 0 || l < 0 || k < 0 || k > n) throw DomainError("rhombus needs n >= 0, 0 <= k <= n, l >= 0");
  const Integer numerator = superfactorial_range(n, l + 1) * superfactorial_range(1, l);
  const Integer denominator = superfactorial_range(k, l + 1) * superfactorial_range(n - k, l + 1);
  Rational value(numerator, denominator);
  if (((l * (l + 1)) / 2) % 2 != 0) value = -value;
  return Scalar::exact(value);
}

Matrix band_matrix(long p, long q, long r) {
  if (p < 0 || q < 1 || r < 0) throw DomainError("band needs p >= 0, q >= 1, r >= 0");
  const auto size = static_cast<std::size_t>(q);
  Matrix m(size, size);
  for (long i = 0; i < q; ++i)
    for (long j = 0; j < q; ++j) m(i, j) = ext_binomial(p + r, p + i - j);
  return m;
}

Scalar band_det_bruteforce(long p, long q, long r) { return det(band_matrix(p, q, r)); }

Scalar band_det_formula(long n, long p, long q, long r) {
  if (p < 0 || q < 1 || r < 0) throw DomainError("band needs p >= 0, q >= 1, r >= 0");
  if (p + q + r != n) throw DomainError("band formula needs p + q + r = n");
  // factorial() rejects negative arguments on its own.
  const Integer numerator = superfactorial_range(n - q, q) * superfactorial_range(1, q - 1);
  const Integer denominator = superfactorial_range(n - r - q, q) * superfactorial_range(r, q);
  Rational value(numerator, denominator);
  if ((((q - 1) * q) / 2) % 2 != 0) value = -value;
  return Scalar::exact(value);
}

SignComparison compare_signs(const Scalar& formula, const Scalar& bruteforce) {
  SignComparison c{formula, bruteforce};
  c.abs_equal = abs(formula) == abs(bruteforce);
  c.sign_equal = formula.sign() == bruteforce.sign();
  return c;
}

}  // namespace bdcoords
