#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "../support/genus2.hpp"
#include "bdcoords/bd.hpp"
#include "bdcoords/surface.hpp"

using namespace bdcoords;
using support::genus2_spec;

namespace {

SurfaceParameters equal_shears(double s, std::vector<double> twists = {0, 0, 0}) {
  return {{PantsShearing{{s, s, s}}, PantsShearing{{s, s, s}}}, twists};
}

bool throws_schema_with(const SurfaceSpec& spec, const std::string& needle) {
  try {
    validate_spec(spec);
  } catch (const SchemaError& e) {
    const bool found = std::string(e.what()).find(needle) != std::string::npos;
    if (!found) MESSAGE(e.what());
    return found;
  }
  return false;
}

}  // namespace

TEST_CASE("genus-2 assembly with equal shears") {
  const SurfaceSpec spec = genus2_spec({}, {});
  const DevelopedSurface ds = assemble_surface(spec, equal_shears(1.0, {0.3, -0.2, 0.5}));
  for (int c = 0; c < 3; ++c) {
    CHECK(ds.curves()[c].length == doctest::Approx(2.0));
    CHECK(support::trace_length(ds.curve_holonomy(c)) == doctest::Approx(2.0));
    CHECK(ds.curve_holonomy(c).same_as(ds.curve_holonomy_from_right(c), 1e-7));
    const LeafQuadruple q = ds.gluing_quadruple(c);
    const AxisData ax = axis_data(ds.curve_holonomy(c));
    CHECK(q.x.same_as(ax.repelling, 1e-8));
    CHECK(q.y.same_as(ax.attracting, 1e-8));
  }
  int tree = 0;
  for (const auto& g : ds.curves()) tree += g.tree_edge;
  CHECK(tree == 1);
  CHECK(ds.stable_letters().size() == 2);
}

TEST_CASE("mismatched lengths are rejected") {
  const SurfaceSpec spec = genus2_spec({}, {});
  SurfaceParameters p = equal_shears(1.0);
  p.shears[1] = PantsShearing{{2, 2, 2}};
  CHECK_THROWS_AS(assemble_surface(spec, p), DomainError);
  p.shears[1] = PantsShearing{{1, -2, 1}};
  CHECK_THROWS_AS(assemble_surface(spec, p), DomainError);
}

TEST_CASE("random assemblies are consistent") {
  Rng rng(61);
  for (int s = 0; s < 40; ++s) {
    const support::Sample sm = support::random_genus2(rng);
    const DevelopedSurface ds = assemble_surface(sm.spec, sm.params);
    for (int c = 0; c < 3; ++c) {
      CHECK(support::trace_length(ds.curve_holonomy(c)) == doctest::Approx(sm.lengths[c]).epsilon(1e-9));
      CHECK(ds.curve_holonomy(c).same_as(ds.curve_holonomy_from_right(c), 1e-7));
      const auto& e = sm.spec.curves[c].ends;
      // Both pants see conjugates of the curve's holonomy.
      const Mobius hl = ds.boundary_holonomy(0, e[0].slot), hr = ds.boundary_holonomy(1, e[1].slot);
      CHECK(support::trace_length(hl) == doctest::Approx(sm.lengths[c]).epsilon(1e-9));
      CHECK(support::trace_length(hr) == doctest::Approx(sm.lengths[c]).epsilon(1e-9));
    }
    for (int pi = 0; pi < 2; ++pi)
      for (int leaf = 0; leaf < 3; ++leaf)
        CHECK(leaf_shear(ds.leaf(pi, leaf)) == doctest::Approx(sm.params.shears[pi].x[leaf]).epsilon(1e-9));
  }
}

TEST_CASE("twisting moves only the left far vertex, by e^{2t}") {
  Rng rng(62);
  for (int s = 0; s < 20; ++s) {
    support::Sample sm = support::random_genus2(rng);
    sm.params.twists = {0, 0, 0};
    const DevelopedSurface ds = assemble_surface(sm.spec, sm.params);
    const int c = static_cast<int>(rng.integer(0, 2));
    const double t = rng.real(-1.5, 1.5);
    const DevelopedSurface tw = twist_deform(ds, sm.spec.curves[c].id, t);
    const LeafQuadruple q = ds.gluing_quadruple(c);
    const ProjPoint moved = mobius_apply(twist_map(q.y, q.x, Scalar::real(t)), q.zl);
    CHECK(gluing_cross_ratio(tw, c) == doctest::Approx(cross_ratio(q.y, q.zr, q.x, moved).to_double()).epsilon(1e-9));
    CHECK(gluing_log(tw, c) - gluing_log(ds, c) == doctest::Approx(2 * t).epsilon(1e-9));
    // The other curves keep their gluing values.
    for (int o = 0; o < 3; ++o)
      if (o != c) CHECK(gluing_log(tw, o) == doctest::Approx(gluing_log(ds, o)).epsilon(1e-9));
    CHECK(support::trace_length(tw.curve_holonomy(c)) == doctest::Approx(sm.lengths[c]).epsilon(1e-9));
  }
}

TEST_CASE("twist by zero changes nothing") {
  Rng rng(63);
  const support::Sample sm = support::random_genus2(rng);
  const DevelopedSurface ds = assemble_surface(sm.spec, sm.params);
  const BDVector a = bd_vector(ds, 3), b = bd_vector(twist_deform(ds, "C2", 0.0), 3);
  for (std::size_t i = 0; i < a.values.size(); ++i) CHECK(a.values[i] == doctest::Approx(b.values[i]).epsilon(1e-12));
  CHECK_THROWS_AS(twist_deform(ds, "C9", 0.1), SchemaError);
}

TEST_CASE("solve_twist") {
  Rng rng(64);
  for (int s = 0; s < 20; ++s) {
    const support::Sample sm = support::random_genus2(rng);
    const DevelopedSurface ds = assemble_surface(sm.spec, sm.params);
    const std::string id = sm.spec.curves[s % 3].id;
    const double w0 = gluing_log(ds, s % 3);
    CHECK(std::abs(solve_twist(ds, id, w0).t) < 1e-9);
    const double target = rng.real(-3, 3);
    const TwistSolution a = solve_twist(ds, id, target);
    CHECK(a.residual < 1e-9);
    CHECK(a.t == doctest::Approx((target - w0) / 2).epsilon(1e-9));
    const DevelopedSurface moved = twist_deform(ds, id, a.t);
    const TwistSolution back = solve_twist(moved, id, w0);
    CHECK(std::abs(a.t + back.t) < 1e-9);
  }
}

TEST_CASE("base chart equivariance") {
  Rng rng(65);
  const support::Sample sm = support::random_genus2(rng);
  const Mobius m(Scalar::real(1.5), Scalar::real(-2.0), Scalar::real(0.25), Scalar::real(1.0));
  const DevelopedSurface a = assemble_surface(sm.spec, sm.params);
  const DevelopedSurface b = assemble_surface(sm.spec, sm.params, m);
  for (int pi = 0; pi < 2; ++pi)
    for (int t = 0; t < 2; ++t)
      for (int k = 0; k < 3; ++k)
        CHECK(b.triangle(pi, t)[k].same_as(mobius_apply(m, a.triangle(pi, t)[k]), 1e-9));
  for (int c = 0; c < 3; ++c) CHECK(b.curve_holonomy(c).same_as(m * a.curve_holonomy(c) * m.inverse(), 1e-7));
  const BDVector va = bd_vector(a, 4), vb = bd_vector(b, 4);
  for (std::size_t i = 0; i < va.values.size(); ++i)
    CHECK(va.values[i] == doctest::Approx(vb.values[i]).epsilon(1e-9).scale(1.0));
}

TEST_CASE("spiral direction") {
  PantsLamination neg;
  neg.spiral_signs = {-1, 1, -1};
  const SurfaceSpec spec = genus2_spec({}, neg);
  // Positive spiraling on the left pants runs against the curve.
  CHECK_FALSE(spirals_along(spec, 0, 0));
  CHECK(spirals_along(spec, 0, 1) == false);
  CHECK(spirals_along(spec, 1, 1));
  CHECK(spirals_along(spec, 2, 1) == false);
}

TEST_CASE("schema errors") {
  SurfaceSpec spec = genus2_spec({}, {});
  CHECK_NOTHROW(validate_spec(spec));

  SurfaceSpec s1 = spec;
  s1.curves[1].ends[0].slot = 0;
  CHECK(throws_schema_with(s1, "slot P0:C1 is used by both C1 and C2"));

  SurfaceSpec s2 = spec;
  s2.pants.pop_back();
  CHECK(throws_schema_with(s2, "needs 2 pants"));

  SurfaceSpec s3 = spec;
  s3.curves[2].id = "C1";
  CHECK(throws_schema_with(s3, "duplicate curve id 'C1'"));

  SurfaceSpec s4 = spec;
  s4.curves[0].ends[1].pants = "P7";
  CHECK(throws_schema_with(s4, "unknown pants 'P7'"));

  SurfaceSpec s5 = spec;
  s5.curves[0].short_arc.left_triangle = "T2";
  CHECK(throws_schema_with(s5, "unknown left triangle"));

  SurfaceSpec s6 = spec;
  s6.curves[0].short_arc.right_corner = 1;  // T0 corner 1 sits at slot C2
  CHECK(throws_schema_with(s6, "corner 1 is not at the curve's slot"));

  // Genus 3 with two disconnected halves.
  SurfaceSpec g3;
  g3.genus = 3;
  for (int p = 0; p < 4; ++p) g3.pants.push_back({"P" + std::to_string(p), {}});
  for (int half = 0; half < 2; ++half)
    for (int s = 0; s < 3; ++s) {
      CurveSpec c;
      c.id = "C" + std::to_string(3 * half + s + 1);
      c.ends = {CurveEnd{"P" + std::to_string(2 * half), s}, CurveEnd{"P" + std::to_string(2 * half + 1), s}};
      g3.curves.push_back(c);
    }
  CHECK(throws_schema_with(g3, "not connected"));
}
