#pragma once

#include <gmpxx.h>

#include <string>
#include <variant>

#include "bdcoords/errors.hpp"

namespace bdcoords {

using Rational = mpq_class;
using Integer = mpz_class;

enum class Mode { Exact, Float };

/// A real number carried either as an exact big rational or as a double.
///
/// The two modes never mix: any binary operation whose operands disagree on
/// the mode throws ModeError. Exact values are kept canonical (positive
/// denominator, lowest terms).
class Scalar {
 public:
  /// Exact zero.
  Scalar() : value_(Rational(0)) {}

  static Scalar exact(const Rational& q);
  static Scalar exact(long numerator, long denominator = 1);
  static Scalar real(double x) { return Scalar(x); }
  static Scalar zero(Mode m) { return m == Mode::Exact ? exact(0) : real(0.0); }
  static Scalar one(Mode m) { return m == Mode::Exact ? exact(1) : real(1.0); }
  static Scalar from_int(long k, Mode m) { return m == Mode::Exact ? exact(k) : real(static_cast<double>(k)); }

  Mode mode() const { return std::holds_alternative<Rational>(value_) ? Mode::Exact : Mode::Float; }
  bool is_exact() const { return mode() == Mode::Exact; }

  /// Throws ModeError when called on a float scalar.
  const Rational& rational() const;
  double to_double() const;

  bool is_zero() const;
  /// -1, 0 or +1.
  int sign() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  /// Throws DegenerateError on division by an exact or floating zero.
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Value equality; comparing different modes is a ModeError.
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator<(const Scalar& a, const Scalar& b);
  friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }

  /// "p/q" (or "p" for integers) in exact mode, 17 significant digits in float mode.
  std::string str() const;

 private:
  explicit Scalar(double x) : value_(x) {}
  explicit Scalar(Rational q);

  std::variant<Rational, double> value_;
};

Scalar abs(const Scalar& s);
/// The same value in float mode.
inline Scalar as_float(const Scalar& s) { return Scalar::real(s.to_double()); }
/// Integer power, negative exponents allowed for nonzero bases.
Scalar pow(const Scalar& base, int exponent);

/// Formats a double with 17 significant digits.
std::string format_double(double x);

}  // namespace bdcoords
