#pragma once

#include "bdcoords/matrix.hpp"

namespace bdcoords {

/// Point [a : b] of RP^1, the boundary of the upper half-plane. Infinity is
/// [1 : 0] and a finite x is [x : 1].
class ProjPoint {
 public:
  /// Exact infinity.
  ProjPoint() : a_(Scalar::exact(1)), b_(Scalar::exact(0)) {}
  /// Throws DegenerateError for (0, 0) and ModeError for mixed modes.
  ProjPoint(Scalar a, Scalar b);

  static ProjPoint infinity(Mode m) { return ProjPoint(Scalar::one(m), Scalar::zero(m)); }
  static ProjPoint finite(const Scalar& x) { return ProjPoint(x, Scalar::one(x.mode())); }
  static ProjPoint exact(long num, long den = 1) { return finite(Scalar::exact(num, den)); }
  static ProjPoint real(double x) { return finite(Scalar::real(x)); }

  const Scalar& a() const { return a_; }
  const Scalar& b() const { return b_; }
  Mode mode() const { return a_.mode(); }
  bool is_infinity() const { return b_.is_zero(); }

  /// Affine coordinate a/b as a double (+inf for infinity).
  double value() const;

  ProjPoint to_float() const { return ProjPoint(as_float(a_), as_float(b_)); }

  /// Exact projective equality; float points compare up to `tol` relative to
  /// the representatives' norms.
  bool same_as(const ProjPoint& o, double tol = 1e-12) const;

 private:
  Scalar a_;
  Scalar b_;
};

/// Float representative of unit Euclidean norm.
ProjPoint unit(const ProjPoint& p);

/// p ^ q = a_p b_q - b_p a_q.
Scalar wedge(const ProjPoint& p, const ProjPoint& q);

/// +1 when (a, b, c) occur in increasing (counterclockwise) order along
/// RP^1 = R u {inf}, -1 for the reverse order. Points must be distinct.
int orientation(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c);

/// Invertible 2x2 matrix acting on RP^1 by linear fractional transformations.
/// Float matrices are rescaled to |det| = 1; exact matrices keep their scale
/// since square roots leave the rationals.
class Mobius {
 public:
  /// Exact identity.
  Mobius() : m_{Scalar::exact(1), Scalar::exact(0), Scalar::exact(0), Scalar::exact(1)} {}
  Mobius(Scalar a, Scalar b, Scalar c, Scalar d);

  static Mobius identity(Mode m);
  static Mobius diagonal(const Scalar& a, const Scalar& d);

  const Scalar& a() const { return m_[0]; }
  const Scalar& b() const { return m_[1]; }
  const Scalar& c() const { return m_[2]; }
  const Scalar& d() const { return m_[3]; }
  Mode mode() const { return m_[0].mode(); }

  Scalar det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }
  Scalar trace() const { return m_[0] + m_[3]; }
  Matrix matrix() const;

  Mobius inverse() const;
  Mobius to_float() const;

  /// Equality in PGL_2: proportional matrices are equal. Float comparison is
  /// relative to the entry scale.
  bool same_as(const Mobius& o, double tol = 1e-9) const;

  friend Mobius operator*(const Mobius& x, const Mobius& y);

 private:
  Scalar m_[4];
};

/// z(a,b,c,d) = (d^a)(b^c) / ((d^c)(b^a)), so z(0, 1, inf, d) = d.
Scalar cross_ratio(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c, const ProjPoint& d);

ProjPoint mobius_apply(const Mobius& m, const ProjPoint& p);

/// The map sending a -> inf, b -> 1, c -> 0.
Mobius mobius_to_standard(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c);

/// log(-1 / z(y, zr, x, zl)); throws DomainError unless the cross ratio is negative.
Scalar shear_from_quadruple(const ProjPoint& y, const ProjPoint& zr, const ProjPoint& x, const ProjPoint& zl);

struct AxisData {
  ProjPoint attracting;
  ProjPoint repelling;
  Scalar length;
};

/// Fixed points and translation length 2 arccosh(|tr| / (2 sqrt(det))) of a
/// hyperbolic element. Results are in float mode.
AxisData axis_data(const Mobius& m);

/// True iff m is orientation preserving with |tr| > 2 sqrt(det) (+1e-12 in float mode).
bool is_hyperbolic(const Mobius& m);

/// Conjugate of diag(e^t, e^-t) by the map sending attracting -> inf and
/// repelling -> 0. Translation length 2|t|, toward `attracting` when t > 0.
Mobius twist_map(const ProjPoint& attracting, const ProjPoint& repelling, const Scalar& t);

}  // namespace bdcoords
