#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bdcoords/flags.hpp"
#include "bdcoords/multilinear.hpp"
#include "bdcoords/random.hpp"
#include "bdcoords/veronese.hpp"

using namespace bdcoords;

namespace {

Scalar cofactor_det(const std::vector<Vector>& cols) {
  const std::size_t n = cols.size();
  if (n == 1) return cols[0][0];
  Scalar total = Scalar::zero(cols[0][0].mode());
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Vector> minor;
    for (std::size_t c = 0; c < n; ++c) {
      if (c == j) continue;
      minor.emplace_back(cols[c].begin() + 1, cols[c].end());
    }
    const Scalar term = cols[j][0] * cofactor_det(minor);
    total = j % 2 ? total - term : total + term;
  }
  return total;
}

// Wedge of leading basis vectors, assembled by hand and expanded by minors.
Scalar oracle_wedge(const std::vector<const Flag*>& flags, const std::vector<int>& levels) {
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < flags.size(); ++i)
    for (int d = 0; d < levels[i]; ++d) cols.push_back(flags[i]->vector(d));
  return cofactor_det(cols);
}

Scalar oracle_triple(const Flag& e, const Flag& f, const Flag& g, int p, int q, int r) {
  auto w = [&](int a, int b, int c) { return oracle_wedge({&e, &f, &g}, {a, b, c}); };
  return w(p + 1, q, r - 1) * w(p, q - 1, r + 1) * w(p - 1, q + 1, r) /
         (w(p - 1, q, r + 1) * w(p, q + 1, r - 1) * w(p + 1, q - 1, r));
}

Scalar oracle_double(const Flag& e, const Flag& f, const Flag& g, const Flag& gp, int p) {
  const int n = static_cast<int>(e.dim());
  auto w = [&](const Flag& h, int a, int b) { return oracle_wedge({&e, &f, &h}, {a, b, 1}); };
  return -(w(g, p, n - p - 1) * w(gp, p - 1, n - p)) / (w(gp, p, n - p - 1) * w(g, p - 1, n - p));
}

Flag coordinate_flag(int n, bool reversed, Mode mode = Mode::Exact) {
  std::vector<Vector> basis;
  for (int i = 0; i < n; ++i) {
    Vector v(n, Scalar::zero(mode));
    v[reversed ? n - 1 - i : i] = Scalar::one(mode);
    basis.push_back(v);
  }
  return Flag(basis);
}

Flag random_flag(Rng& rng, int n) {
  for (;;) {
    std::vector<Vector> basis(n, Vector(n));
    for (auto& v : basis)
      for (auto& x : v) x = Scalar::exact(rng.integer(-6, 6));
    if (!det(Matrix::from_columns(basis)).is_zero()) return Flag(basis);
  }
}

// Unimodular integer matrix: product of elementary shears.
Matrix random_sl(Rng& rng, int n) {
  Matrix m = Matrix::identity(n);
  for (int s = 0; s < 6; ++s) {
    Matrix e = Matrix::identity(n);
    const long i = rng.integer(0, n - 1);
    long j = rng.integer(0, n - 2);
    if (j >= i) ++j;
    e(i, j) = Scalar::exact(rng.integer(-3, 3));
    m = m * e;
  }
  return m;
}

}  // namespace

TEST_CASE("flag basis must be independent") {
  const Vector v{Scalar::exact(1), Scalar::exact(2)};
  CHECK_THROWS_AS(Flag({v, v}), DegenerateError);
}

TEST_CASE("genericity examples") {
  CHECK(is_generic({coordinate_flag(3, false), coordinate_flag(3, true)}));
  CHECK_FALSE(is_generic({coordinate_flag(3, false), coordinate_flag(3, false)}));
  const auto nu = [](long x) { return veronese_flag(ProjPoint::exact(x), 4); };
  CHECK(is_generic({nu(0), nu(1), nu(-2)}));
  CHECK(is_generic({veronese_flag(ProjPoint(), 4), nu(3), nu(5)}));
}

TEST_CASE("wedge levels must sum to n") {
  const Flag f = coordinate_flag(3, false);
  CHECK_THROWS((void)wedge_levels({f, f}, {1, 1}));
}

TEST_CASE("triple ratio of Veronese flags at inf, 1, 0") {
  const Flag a = veronese_flag(ProjPoint(), 3), b = veronese_flag(ProjPoint::exact(1), 3),
             c = veronese_flag(ProjPoint::exact(0), 3);
  CHECK(triple_ratio(a, b, c, 1, 1, 1) == Scalar::exact(1));
}

TEST_CASE("double ratio examples") {
  // Lines in R^2 at inf, 0, 2, 1.
  auto line = [](long a, long b) { return Flag({{Scalar::exact(a), Scalar::exact(b)}, {Scalar::exact(-b), Scalar::exact(a)}}); };
  CHECK(double_ratio(line(1, 0), line(0, 1), line(2, 1), line(1, 1), 1) == Scalar::exact(-1, 2));
  const auto nu = [](const ProjPoint& p) { return veronese_flag(p, 3); };
  CHECK(double_ratio(nu(ProjPoint()), nu(ProjPoint::exact(0)), nu(ProjPoint::exact(3)), nu(ProjPoint::exact(1)), 1) ==
        Scalar::exact(-1, 3));
}

TEST_CASE("triple and double ratios agree with the minor-expansion oracle") {
  Rng rng(21);
  int seen = 0;
  while (seen < 15) {
    const Flag e = random_flag(rng, 4), f = random_flag(rng, 4), g = random_flag(rng, 4), h = random_flag(rng, 4);
    if (!is_generic({e, f, g}) || !is_generic({e, f, h})) continue;
    ++seen;
    for (auto [p, q, r] : {std::array{1, 1, 2}, std::array{1, 2, 1}, std::array{2, 1, 1}})
      CHECK(triple_ratio(e, f, g, p, q, r) == oracle_triple(e, f, g, p, q, r));
    for (int p = 1; p < 4; ++p) CHECK(double_ratio(e, f, g, h, p) == oracle_double(e, f, g, h, p));
  }
  seen = 0;
  while (seen < 10) {
    const Flag e = random_flag(rng, 3), f = random_flag(rng, 3), g = random_flag(rng, 3), h = random_flag(rng, 3);
    if (!is_generic({e, f, g}) || !is_generic({e, f, h})) continue;
    ++seen;
    CHECK(double_ratio(e, f, g, h, 2) == oracle_double(e, f, g, h, 2));
  }
}

TEST_CASE("projective invariance, rescaling and permutation law") {
  Rng rng(22);
  int seen = 0;
  while (seen < 10) {
    const int n = 3 + seen % 3;
    const Flag e = random_flag(rng, n), f = random_flag(rng, n), g = random_flag(rng, n), h = random_flag(rng, n);
    if (!is_generic({e, f, g}) || !is_generic({e, f, h})) continue;
    ++seen;
    const Matrix a = random_sl(rng, n);
    // GL action: scale by a diagonal as well, the ratios are homogeneous.
    Matrix d = Matrix::identity(n);
    d(0, 0) = Scalar::exact(-5, 3);
    const Matrix ad = a * d;
    // Rescaling individual basis vectors leaves each level unchanged.
    std::vector<Vector> scaled = e.basis();
    for (auto& x : scaled[0]) x = x * Scalar::exact(7, 2);
    const Flag es(scaled);
    for (int p = 1; p <= n - 2; ++p)
      for (int q = 1; p + q <= n - 1; ++q) {
        const int r = n - p - q;
        const Scalar t = triple_ratio(e, f, g, p, q, r);
        CHECK(triple_ratio(e.transformed(ad), f.transformed(ad), g.transformed(ad), p, q, r) == t);
        CHECK(triple_ratio(es, f, g, p, q, r) == t);
        CHECK(triple_ratio(f, g, e, q, r, p) == t);
        CHECK(Scalar::exact(1) / triple_ratio(f, e, g, q, p, r) == t);
      }
    for (int p = 1; p < n; ++p)
      CHECK(double_ratio(e.transformed(ad), f.transformed(ad), g.transformed(ad), h.transformed(ad), p) ==
            double_ratio(e, f, g, h, p));
  }
}

TEST_CASE("float mode tracks exact mode") {
  Rng rng(23);
  int seen = 0;
  while (seen < 10) {
    const Flag e = random_flag(rng, 4), f = random_flag(rng, 4), g = random_flag(rng, 4);
    if (!is_generic({e, f, g})) continue;
    ++seen;
    auto to_float = [](const Flag& fl) {
      std::vector<Vector> b = fl.basis();
      for (auto& v : b)
        for (auto& x : v) x = as_float(x);
      return Flag(b);
    };
    const double want = triple_ratio(e, f, g, 1, 2, 1).to_double();
    CHECK(triple_ratio(to_float(e), to_float(f), to_float(g), 1, 2, 1).to_double() ==
          doctest::Approx(want).epsilon(1e-9));
  }
}

TEST_CASE("degenerate triple ratio is reported") {
  const Flag a = coordinate_flag(3, false);
  CHECK_THROWS_AS((void)triple_ratio(a, a, coordinate_flag(3, true), 1, 1, 1), DegenerateError);
}
