#pragma once

#include <cstdint>
#include <random>

#include "bdcoords/hyperbolic.hpp"

namespace bdcoords {

/// Seeded std::mt19937_64. Everything is derived from the raw 64-bit outputs
/// (no std:: distributions), so a seed reproduces across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi] (modulo reduction; the bias is irrelevant here).
  long integer(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }

  /// Uniform double in [lo, hi) from the top 53 bits.
  double real(double lo, double hi) { return lo + (hi - lo) * static_cast<double>(next() >> 11) * 0x1.0p-53; }

  int sign() { return (next() >> 63) ? -1 : 1; }

  /// num/den with |num| <= max_num, 1 <= den <= max_den.
  Rational rational(long max_num = 50, long max_den = 20) {
    const long num = integer(-max_num, max_num);
    const long den = integer(1, max_den);
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  /// Exact point of RP^1; infinity with probability about 1/8.
  ProjPoint point() {
    if (integer(0, 7) == 0) return ProjPoint::infinity(Mode::Exact);
    return ProjPoint::finite(Scalar::exact(rational()));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace bdcoords
