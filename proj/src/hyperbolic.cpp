#include "bdcoords/hyperbolic.hpp"

#include <algorithm>
#include <cmath>

namespace bdcoords {

namespace {

constexpr double kHyperbolicSlack = 1e-12;

void require_mode(const Scalar& x, const Scalar& y) {
  if (x.mode() != y.mode()) throw ModeError("mixed exact/float coordinates");
}

// Eigenvector of [[a,b],[c,d]] for eigenvalue lambda, picking the better
// conditioned of the two row-derived candidates.
ProjPoint eigenvector(double a, double b, double c, double d, double lambda) {
  const double u0 = b, u1 = lambda - a;
  const double w0 = lambda - d, w1 = c;
  if (std::hypot(u0, u1) >= std::hypot(w0, w1)) return ProjPoint(Scalar::real(u0), Scalar::real(u1));
  return ProjPoint(Scalar::real(w0), Scalar::real(w1));
}

}  // namespace

ProjPoint::ProjPoint(Scalar a, Scalar b) : a_(std::move(a)), b_(std::move(b)) {
  require_mode(a_, b_);
  if (a_.is_zero() && b_.is_zero()) throw DegenerateError("[0 : 0] is not a point of RP^1");
}

double ProjPoint::value() const {
  if (is_infinity()) return HUGE_VAL;
  return a_.to_double() / b_.to_double();
}

bool ProjPoint::same_as(const ProjPoint& o, double tol) const {
  const Scalar w = wedge(*this, o);
  if (w.is_exact()) return w.is_zero();
  const double scale = std::hypot(a_.to_double(), b_.to_double()) * std::hypot(o.a_.to_double(), o.b_.to_double());
  return std::abs(w.to_double()) <= tol * scale;
}

ProjPoint unit(const ProjPoint& p) {
  const double a = p.a().to_double(), b = p.b().to_double();
  const double r = std::hypot(a, b);
  return ProjPoint(Scalar::real(a / r), Scalar::real(b / r));
}

Scalar wedge(const ProjPoint& p, const ProjPoint& q) { return p.a() * q.b() - p.b() * q.a(); }

int orientation(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
  const Scalar s = wedge(a, b) * wedge(b, c) * wedge(c, a);
  if (s.is_zero()) throw DegenerateError("orientation of coincident points");
  return s.sign();
}

Mobius::Mobius(Scalar a, Scalar b, Scalar c, Scalar d) : m_{std::move(a), std::move(b), std::move(c), std::move(d)} {
  require_mode(m_[0], m_[1]);
  require_mode(m_[0], m_[2]);
  require_mode(m_[0], m_[3]);
  const Scalar dt = det();
  if (dt.is_zero()) throw DegenerateError("singular Mobius matrix");
  if (!dt.is_exact()) {
    const Scalar s = Scalar::real(1.0 / std::sqrt(std::abs(dt.to_double())));
    for (auto& x : m_) x *= s;
  }
}

Mobius Mobius::identity(Mode m) { return Mobius(Scalar::one(m), Scalar::zero(m), Scalar::zero(m), Scalar::one(m)); }

Mobius Mobius::diagonal(const Scalar& a, const Scalar& d) {
  return Mobius(a, Scalar::zero(a.mode()), Scalar::zero(a.mode()), d);
}

Matrix Mobius::matrix() const {
  Matrix out(2, 2, mode());
  out(0, 0) = m_[0];
  out(0, 1) = m_[1];
  out(1, 0) = m_[2];
  out(1, 1) = m_[3];
  return out;
}

Mobius Mobius::inverse() const { return Mobius(m_[3], -m_[1], -m_[2], m_[0]); }

Mobius Mobius::to_float() const { return Mobius(as_float(m_[0]), as_float(m_[1]), as_float(m_[2]), as_float(m_[3])); }

bool Mobius::same_as(const Mobius& o, double tol) const {
  // Proportional iff every 2x2 minor of the stacked entry vectors vanishes.
  if (mode() == Mode::Exact && o.mode() == Mode::Exact) {
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (!(m_[i] * o.m_[j] - m_[j] * o.m_[i]).is_zero()) return false;
    return true;
  }
  double x[4], y[4], nx = 0.0, ny = 0.0;
  for (int i = 0; i < 4; ++i) {
    x[i] = m_[i].to_double();
    y[i] = o.m_[i].to_double();
    nx = std::max(nx, std::abs(x[i]));
    ny = std::max(ny, std::abs(y[i]));
  }
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (std::abs(x[i] * y[j] - x[j] * y[i]) > tol * nx * ny) return false;
  return true;
}

Mobius operator*(const Mobius& x, const Mobius& y) {
  return Mobius(x.m_[0] * y.m_[0] + x.m_[1] * y.m_[2], x.m_[0] * y.m_[1] + x.m_[1] * y.m_[3],
                x.m_[2] * y.m_[0] + x.m_[3] * y.m_[2], x.m_[2] * y.m_[1] + x.m_[3] * y.m_[3]);
}

Scalar cross_ratio(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c, const ProjPoint& d) {
  const Scalar den = wedge(d, c) * wedge(b, a);
  if (den.is_zero()) throw DegenerateError("cross ratio of a degenerate quadruple");
  return wedge(d, a) * wedge(b, c) / den;
}

ProjPoint mobius_apply(const Mobius& m, const ProjPoint& p) {
  return ProjPoint(m.a() * p.a() + m.b() * p.b(), m.c() * p.a() + m.d() * p.b());
}

Mobius mobius_to_standard(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
  const Scalar ba = wedge(b, a);
  const Scalar bc = wedge(b, c);
  if (ba.is_zero() || bc.is_zero() || wedge(a, c).is_zero())
    throw DegenerateError("mobius_to_standard needs three distinct points");
  // Row 1 is (b^a)(z^c), row 2 is (b^c)(z^a).
  return Mobius(ba * c.b(), -(ba * c.a()), bc * a.b(), -(bc * a.a()));
}

Scalar shear_from_quadruple(const ProjPoint& y, const ProjPoint& zr, const ProjPoint& x, const ProjPoint& zl) {
  const double z = cross_ratio(y, zr, x, zl).to_double();
  if (!(z < 0.0)) throw DomainError("shear needs a negative cross ratio (adjacent ideal triangles)");
  return Scalar::real(std::log(-1.0 / z));
}

bool is_hyperbolic(const Mobius& m) {
  const Scalar dt = m.det();
  if (dt.sign() <= 0) return false;
  const Scalar tr = m.trace();
  if (dt.is_exact()) return tr * tr > Scalar::from_int(4, Mode::Exact) * dt;
  return std::abs(tr.to_double()) / std::sqrt(dt.to_double()) > 2.0 + kHyperbolicSlack;
}

AxisData axis_data(const Mobius& m) {
  if (!is_hyperbolic(m)) throw DomainError("axis_data: element is not hyperbolic");
  const double s = std::sqrt(m.det().to_double());
  double a = m.a().to_double() / s, b = m.b().to_double() / s;
  double c = m.c().to_double() / s, d = m.d().to_double() / s;
  if (a + d < 0.0) {
    a = -a, b = -b, c = -c, d = -d;
  }
  const double tr = a + d;
  const double big = 0.5 * (tr + std::sqrt((tr - 2.0) * (tr + 2.0)));
  const double small = 1.0 / big;
  return AxisData{eigenvector(a, b, c, d, big), eigenvector(a, b, c, d, small), Scalar::real(2.0 * std::log(big))};
}

Mobius twist_map(const ProjPoint& attracting, const ProjPoint& repelling, const Scalar& t) {
  const ProjPoint att = attracting.to_float();
  const ProjPoint rep = repelling.to_float();
  if (att.same_as(rep)) throw DegenerateError("twist axis endpoints coincide");
  // n(z) = [z^rep : z^att] sends rep -> 0 and att -> inf.
  const Mobius n(rep.b(), -rep.a(), att.b(), -att.a());
  const double tt = t.to_double();
  return n.inverse() * Mobius::diagonal(Scalar::real(std::exp(tt)), Scalar::real(std::exp(-tt))) * n;
}

}  // namespace bdcoords
