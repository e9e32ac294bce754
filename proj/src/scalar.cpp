#include "bdcoords/scalar.hpp"

#include <cmath>
#include <cstdio>

namespace bdcoords {

namespace {

void require_same_mode(const Scalar& a, const Scalar& b, const char* op) {
  if (a.mode() != b.mode()) {
    throw ModeError(std::string("mixed exact/float operands in ") + op);
  }
}

}  // namespace

Scalar::Scalar(Rational q) : value_(std::move(q)) {
  std::get<Rational>(value_).canonicalize();
}

Scalar Scalar::exact(const Rational& q) { return Scalar(Rational(q)); }

Scalar Scalar::exact(long numerator, long denominator) {
  if (denominator == 0) throw DegenerateError("zero denominator");
  return Scalar(Rational(numerator, denominator));
}

const Rational& Scalar::rational() const {
  if (!is_exact()) throw ModeError("rational() requested from a float scalar");
  return std::get<Rational>(value_);
}

double Scalar::to_double() const {
  if (is_exact()) return std::get<Rational>(value_).get_d();
  return std::get<double>(value_);
}

bool Scalar::is_zero() const { return sign() == 0; }

int Scalar::sign() const {
  if (is_exact()) return sgn(std::get<Rational>(value_));
  const double x = std::get<double>(value_);
  return (x > 0.0) - (x < 0.0);
}

Scalar Scalar::operator-() const {
  if (is_exact()) return Scalar(Rational(-std::get<Rational>(value_)));
  return Scalar(-std::get<double>(value_));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_mode(*this, o, "+");
  if (is_exact()) {
    std::get<Rational>(value_) += std::get<Rational>(o.value_);
  } else {
    std::get<double>(value_) += std::get<double>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same_mode(*this, o, "-");
  if (is_exact()) {
    std::get<Rational>(value_) -= std::get<Rational>(o.value_);
  } else {
    std::get<double>(value_) -= std::get<double>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_mode(*this, o, "*");
  if (is_exact()) {
    std::get<Rational>(value_) *= std::get<Rational>(o.value_);
  } else {
    std::get<double>(value_) *= std::get<double>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same_mode(*this, o, "/");
  if (o.is_zero()) throw DegenerateError("division by zero");
  if (is_exact()) {
    std::get<Rational>(value_) /= std::get<Rational>(o.value_);
  } else {
    std::get<double>(value_) /= std::get<double>(o.value_);
  }
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  require_same_mode(a, b, "==");
  if (a.is_exact()) return std::get<Rational>(a.value_) == std::get<Rational>(b.value_);
  return std::get<double>(a.value_) == std::get<double>(b.value_);
}

bool operator<(const Scalar& a, const Scalar& b) {
  require_same_mode(a, b, "<");
  if (a.is_exact()) return std::get<Rational>(a.value_) < std::get<Rational>(b.value_);
  return std::get<double>(a.value_) < std::get<double>(b.value_);
}

std::string Scalar::str() const {
  if (is_exact()) return std::get<Rational>(value_).get_str();
  return format_double(std::get<double>(value_));
}

Scalar abs(const Scalar& s) { return s.sign() < 0 ? -s : s; }

Scalar pow(const Scalar& base, int exponent) {
  Scalar result = Scalar::one(base.mode());
  Scalar factor = base;
  if (exponent < 0) {
    factor = Scalar::one(base.mode()) / base;
    exponent = -exponent;
  }
  while (exponent > 0) {
    if (exponent & 1) result *= factor;
    factor *= factor;
    exponent >>= 1;
  }
  return result;
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace bdcoords
