#include "bdcoords/verify.hpp"

#include <algorithm>
#include <cmath>

#include "bdcoords/multilinear.hpp"
#include "bdcoords/random.hpp"
#include "bdcoords/veronese.hpp"

namespace bdcoords {

namespace {

ProjPoint in_mode(const ProjPoint& p, Mode mode) { return mode == Mode::Exact ? p : p.to_float(); }

// Records one comparison; exact values must agree exactly, floats relatively.
void compare(SuiteResult& r, const Scalar& got, const Scalar& want, double tol) {
  ++r.cases;
  double dev = 0.0;
  bool ok = false;
  if (got.is_exact()) {
    ok = got == want;
    dev = std::abs((got - want).to_double());
  } else {
    const double g = got.to_double(), w = want.to_double();
    dev = std::abs(g - w) / std::max(1.0, std::abs(w));
    ok = dev <= tol;
  }
  r.worst_deviation = std::max(r.worst_deviation, dev);
  if (!ok) {
    ++r.failures;
    r.pass = false;
  }
}

std::vector<ProjPoint> distinct_points(Rng& rng, std::size_t count) {
  std::vector<ProjPoint> out;
  while (out.size() < count) {
    ProjPoint p = rng.point();
    bool fresh = true;
    for (const auto& q : out) fresh = fresh && !p.same_as(q);
    if (fresh) out.push_back(p);
  }
  return out;
}

Flag random_flag(Rng& rng, int n, Mode mode) {
  for (;;) {
    std::vector<Vector> basis(n, Vector(n));
    for (auto& v : basis)
      for (auto& x : v) x = Scalar::exact(rng.integer(-9, 9));
    const Matrix m = Matrix::from_columns(basis);
    if (det(m).is_zero()) continue;
    if (mode == Mode::Float)
      for (auto& v : basis)
        for (auto& x : v) x = as_float(x);
    return Flag(std::move(basis));
  }
}

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"triple-ratio", "double-ratio", "rhombus",
                                              "band",         "permutation",  "wedge-factor"};
  return names;
}

SuiteResult verify_triple_ratio(int n, int samples, std::uint64_t seed, Mode mode, double tol) {
  require(n >= 3, "triple-ratio needs n >= 3");
  SuiteResult r;
  r.name = "triple-ratio";
  Rng rng(seed);
  const Scalar one = Scalar::one(mode);
  for (int s = 0; s < samples; ++s) {
    auto pts = distinct_points(rng, 3);
    if (orientation(pts[0], pts[1], pts[2]) > 0) std::swap(pts[1], pts[2]);  // clockwise
    const Flag e = veronese_flag(in_mode(pts[0], mode), n);
    const Flag f = veronese_flag(in_mode(pts[1], mode), n);
    const Flag g = veronese_flag(in_mode(pts[2], mode), n);
    for (int p = 1; p <= n - 2; ++p)
      for (int q = 1; p + q <= n - 1; ++q) compare(r, triple_ratio(e, f, g, p, q, n - p - q), one, tol);
  }
  r.note = "T_pqr(nu(x), nu(y), nu(z)) = 1";
  return r;
}

SuiteResult verify_double_ratio(int n, int samples, std::uint64_t seed, Mode mode, double tol) {
  require(n >= 2, "double-ratio needs n >= 2");
  SuiteResult r;
  r.name = "double-ratio";
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    const auto pts = distinct_points(rng, 4);
    const ProjPoint a = in_mode(pts[0], mode), b = in_mode(pts[1], mode);
    const ProjPoint c = in_mode(pts[2], mode), d = in_mode(pts[3], mode);
    const Flag fa = veronese_flag(a, n), fb = veronese_flag(b, n);
    const Flag fc = veronese_flag(c, n), fd = veronese_flag(d, n);
    const Scalar want = -(Scalar::one(mode) / cross_ratio(c, d, a, b));
    for (int p = 1; p < n; ++p) compare(r, double_ratio(fa, fc, fb, fd, p), want, tol);
  }
  r.note = "D_p(nu(a), nu(c), nu(b), nu(d)) = -1/z(c, d, a, b)";
  return r;
}

SuiteResult verify_rhombus(int max) {
  require(max >= 0, "rhombus needs max >= 0");
  SuiteResult r;
  r.name = "rhombus";
  for (long n = 0; n <= max; ++n)
    for (long k = 0; k <= n; ++k)
      for (long l = 0; l <= max; ++l) {
        const SignComparison c = compare_signs(rhombus_det_formula(n, k, l), rhombus_det_bruteforce(n, k, l));
        ++r.cases;
        if (!c.abs_equal) {
          ++r.failures;
          r.pass = false;
          r.worst_deviation = std::max(r.worst_deviation, std::abs((abs(c.formula) - abs(c.bruteforce)).to_double()));
        }
        if (!c.sign_equal) ++r.sign_mismatches;
      }
  r.note = "|closed form| = |det|; sign mismatches are informational";
  return r;
}

SuiteResult verify_band(int max) {
  require(max >= 1, "band needs max >= 1");
  SuiteResult r;
  r.name = "band";
  for (long n = 1; n <= max; ++n)
    for (long q = 1; q <= n; ++q)
      for (long p = 0; p + q <= n; ++p) {
        const long rr = n - p - q;
        const SignComparison c = compare_signs(band_det_formula(n, p, q, rr), band_det_bruteforce(p, q, rr));
        ++r.cases;
        if (!c.abs_equal) {
          ++r.failures;
          r.pass = false;
          r.worst_deviation = std::max(r.worst_deviation, std::abs((abs(c.formula) - abs(c.bruteforce)).to_double()));
        }
        if (!c.sign_equal) ++r.sign_mismatches;
      }
  r.note = "|closed form| = |det|; sign mismatches are informational";
  return r;
}

SuiteResult verify_permutation(int n, int samples, std::uint64_t seed, Mode mode, double tol) {
  require(n >= 3, "permutation needs n >= 3");
  SuiteResult r;
  r.name = "permutation";
  Rng rng(seed);
  for (int s = 0; s < samples;) {
    const Flag e = random_flag(rng, n, mode), f = random_flag(rng, n, mode), g = random_flag(rng, n, mode);
    if (!is_generic({e, f, g})) continue;
    ++s;
    for (int p = 1; p <= n - 2; ++p)
      for (int q = 1; p + q <= n - 1; ++q) {
        const int rr = n - p - q;
        const Scalar t = triple_ratio(e, f, g, p, q, rr);
        compare(r, triple_ratio(f, g, e, q, rr, p), t, tol);
        compare(r, Scalar::one(mode) / triple_ratio(f, e, g, q, p, rr), t, tol);
      }
  }
  r.note = "T_pqr(E,F,G) = T_qrp(F,G,E) = T_qpr(F,E,G)^-1";
  return r;
}

SuiteResult verify_wedge_factor(int n, int samples, std::uint64_t seed) {
  require(n >= 2, "wedge-factor needs n >= 2");
  SuiteResult r;
  r.name = "wedge-factor";
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    const Scalar z = Scalar::exact(rng.rational());
    // s_z^1 = (zX + Y)^{n-1} in the monomial basis.
    const Vector sz = veronese_flag(ProjPoint::finite(z), n).vector(0);
    for (int p = 0; p < n; ++p) {
      std::vector<Vector> cols;
      for (int i = 0; i < n; ++i) {
        if (i == p) continue;  // e_1..e_p then e_{p+2}..e_n
        Vector e(n, Scalar::exact(0));
        e[i] = Scalar::exact(1);
        cols.push_back(e);
      }
      cols.push_back(sz);
      const Scalar want = Scalar::from_int(((n - p - 1) % 2) ? -1 : 1, Mode::Exact) * ext_binomial(n - 1, p) *
                          pow(z, n - p - 1);
      compare(r, det(Matrix::from_columns(cols)), want, 0.0);
    }
  }
  r.note = "s_inf^p ^ s_0^{n-p-1} ^ s_z^1 = (-1)^{n-p-1} C(n-1,p) z^{n-p-1}";
  return r;
}

std::vector<SuiteResult> run_verify(const VerifyConfig& cfg) {
  if (cfg.samples < 1) throw DomainError("samples must be at least 1");
  const bool all = cfg.suite == "all";
  if (!all && std::find(suite_names().begin(), suite_names().end(), cfg.suite) == suite_names().end())
    throw DomainError("unknown suite '" + cfg.suite + "'");
  std::vector<SuiteResult> out;
  auto wants = [&](const char* name) { return all || cfg.suite == name; };
  if (wants("triple-ratio") && (!all || cfg.n >= 3))
    out.push_back(verify_triple_ratio(cfg.n, cfg.samples, cfg.seed, cfg.mode, cfg.tolerance));
  if (wants("double-ratio")) out.push_back(verify_double_ratio(cfg.n, cfg.samples, cfg.seed, cfg.mode, cfg.tolerance));
  if (wants("rhombus")) out.push_back(verify_rhombus(cfg.max));
  if (wants("band")) out.push_back(verify_band(cfg.max));
  if (wants("permutation") && (!all || cfg.n >= 3))
    out.push_back(verify_permutation(cfg.n, cfg.samples, cfg.seed, cfg.mode, cfg.tolerance));
  if (wants("wedge-factor")) out.push_back(verify_wedge_factor(cfg.n, cfg.samples, cfg.seed));
  return out;
}

}  // namespace bdcoords
