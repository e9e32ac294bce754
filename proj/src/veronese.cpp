#include "bdcoords/veronese.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

#include "bdcoords/multilinear.hpp"

namespace bdcoords {

namespace {

// Coefficients of (aX + bY)^e, indexed by the power of Y.
Vector linear_power(const Scalar& a, const Scalar& b, int e) {
  Vector out(e + 1, Scalar::zero(a.mode()));
  for (int i = 0; i <= e; ++i) {
    Scalar binom = ext_binomial(e, i);
    if (a.mode() == Mode::Float) binom = as_float(binom);
    out[i] = binom * pow(a, e - i) * pow(b, i);
  }
  return out;
}

}  // namespace

Vector binary_product_power(const Scalar& a, const Scalar& b, int e, const Scalar& c, const Scalar& d, int f) {
  const Vector u = linear_power(a, b, e);
  const Vector w = linear_power(c, d, f);
  Vector out(e + f + 1, Scalar::zero(a.mode()));
  for (int i = 0; i <= e; ++i)
    for (int j = 0; j <= f; ++j) out[i + j] += u[i] * w[j];
  return out;
}

SymPowerMatrix irrep_n(const Mobius& a, int n) {
  if (n < 2) throw DomainError("irrep_n needs n >= 2");
  std::vector<Vector> columns;
  columns.reserve(n);
  for (int j = 1; j <= n; ++j) columns.push_back(binary_product_power(a.a(), a.c(), n - j, a.b(), a.d(), j - 1));
  return SymPowerMatrix{n, Matrix::from_columns(columns), a};
}

Flag veronese_flag(const ProjPoint& p, int n) {
  if (n < 1) throw DomainError("veronese_flag needs n >= 1");
  std::vector<Vector> basis;
  basis.reserve(n);
  for (int d = 1; d <= n; ++d) basis.push_back(binary_product_power(p.a(), p.b(), n - d, -p.b(), p.a(), d - 1));
  return Flag(std::move(basis));
}

std::vector<double> length_spectrum(const SymPowerMatrix& m) {
  const int n = m.n;
  // Exact characteristic polynomial (Faddeev-LeVerrier) of the matrix read
  // as rationals; coef[k] multiplies x^k. A float source is re-powered
  // exactly, since rounding the powered entries perturbs ill-conditioned
  // eigenvalues far more than rounding the 2x2 source does.
  auto exact = [](const Scalar& x) { return x.is_exact() ? x : Scalar::exact(Rational(x.to_double())); };
  const Matrix entries = m.source && m.source->mode() == Mode::Float
                             ? irrep_n(Mobius(exact(m.source->a()), exact(m.source->b()), exact(m.source->c()),
                                              exact(m.source->d())),
                                       n)
                                   .entries
                             : m.entries;
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Scalar& x = entries(i, j);
      a[i][j] = x.is_exact() ? x.rational() : Rational(x.to_double());
    }
  std::vector<Rational> coef(n + 1);
  coef[n] = 1;
  std::vector<std::vector<Rational>> mk(n, std::vector<Rational>(n)), next(n, std::vector<Rational>(n));
  for (int k = 1; k <= n; ++k) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Rational acc = i == j ? coef[n - k + 1] : Rational(0);
        for (int l = 0; l < n; ++l) acc += a[i][l] * mk[l][j];
        next[i][j] = acc;
      }
    std::swap(mk, next);
    Rational tr = 0;
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) tr += a[i][l] * mk[l][i];
    coef[n - k] = -tr / k;
  }
  auto sign_at = [&](double x) {
    const Rational q(x);
    Rational v = 0;
    for (int k = n; k >= 0; --k) v = v * q + coef[k];
    return sgn(v);
  };

  // Eigen's estimates only seed the brackets; bisection on the exact sign
  // does the rest.
  using Mat = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  Mat f(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) f(i, j) = m.entries(i, j).to_double();
  Eigen::EigenSolver<Mat> solver(f, false);
  if (solver.info() != Eigen::Success) throw DegenerateError("eigenvalue iteration did not converge");
  std::vector<double> roots;
  for (int i = 0; i < n; ++i) {
    const auto lambda = solver.eigenvalues()(i);
    if (std::abs(lambda.imag()) > 1e-6L * std::abs(lambda)) throw DomainError("length_spectrum: non-real eigenvalue");
    const double guess = static_cast<double>(lambda.real());
    double delta = 1e-9 * std::max(std::abs(guess), 1e-300);
    double lo = guess - delta, hi = guess + delta;
    int slo = sign_at(lo), shi = sign_at(hi);
    for (int grow = 0; slo * shi > 0 && grow < 40; ++grow) {
      delta *= 4;
      lo = guess - delta;
      hi = guess + delta;
      slo = sign_at(lo);
      shi = sign_at(hi);
    }
    if (slo == 0) {
      roots.push_back(lo);
      continue;
    }
    if (shi == 0) {
      roots.push_back(hi);
      continue;
    }
    if (slo * shi > 0) throw DomainError("length_spectrum: could not isolate an eigenvalue");
    for (;;) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      const int sm = sign_at(mid);
      if (sm == 0) {
        lo = hi = mid;
        break;
      }
      (sm == slo ? lo : hi) = mid;
    }
    roots.push_back(0.5 * (lo + hi));
  }
  std::vector<double> mags;
  for (double r : roots) mags.push_back(std::abs(r));
  std::sort(mags.begin(), mags.end(), std::greater<>());
  std::vector<double> out;
  for (int k = 0; k + 1 < n; ++k) {
    if (mags[k + 1] == 0) throw DegenerateError("length_spectrum: singular matrix");
    const double l = std::log(mags[k] / mags[k + 1]);
    if (!(l > 1e-7)) throw DomainError("length_spectrum: eigenvalue moduli are not distinct");
    out.push_back(l);
  }
  return out;
}

}  // namespace bdcoords
