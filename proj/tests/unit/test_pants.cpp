#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "../support/genus2.hpp"
#include "bdcoords/pants.hpp"

using namespace bdcoords;

namespace {

PantsLamination type_i(std::array<int, 3> signs = {1, 1, 1}) {
  PantsLamination lam;
  lam.spiral_signs = signs;
  return lam;
}

PantsLamination type_ii(int i, std::array<int, 3> signs = {1, 1, 1}) {
  PantsLamination lam;
  lam.type = LaminationType::II;
  lam.distinguished = i;
  lam.spiral_signs = signs;
  return lam;
}

std::vector<PantsLamination> all_laminations() {
  std::vector<PantsLamination> out;
  for (int mask = 0; mask < 8; ++mask) {
    const std::array<int, 3> s{mask & 1 ? -1 : 1, mask & 2 ? -1 : 1, mask & 4 ? -1 : 1};
    out.push_back(type_i(s));
    for (int i = 0; i < 3; ++i) out.push_back(type_ii(i, s));
  }
  return out;
}

double z_of(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c, const ProjPoint& d) {
  return cross_ratio(a, b, c, d).to_double();
}

}  // namespace

TEST_CASE("validity examples") {
  CHECK(validate_shears(type_i(), {{1, 1, 1}}));
  CHECK_FALSE(validate_shears(type_i(), {{1, -2, 1}}));
  const auto v = shear_violations(type_i(), {{1, -2, 1}});
  CHECK(v.size() == 2);
  CHECK(v[0].find("C2") != std::string::npos);
  CHECK_FALSE(validate_shears(type_ii(0), {{3, -1, 1}}));
  CHECK(validate_shears(type_ii(0), {{3, 1, 1}}));
  CHECK(validate_shears(type_i({-1, -1, -1}), {{-1, -1, -1}}));
  CHECK_FALSE(validate_shears(type_i({-1, 1, 1}), {{1, 1, 1}}));
}

TEST_CASE("boundary length examples") {
  for (double s : {0.5, 1.0, 2.5}) {
    const auto l = boundary_lengths(type_i(), {{s, s, s}});
    for (double x : l) CHECK(x == doctest::Approx(2 * s));
  }
  const auto l = boundary_lengths(type_i(), {{1, 2, 3}});
  CHECK(l[0] == doctest::Approx(4));
  CHECK(l[1] == doctest::Approx(3));
  CHECK(l[2] == doctest::Approx(5));
  // B_11 has both ends at C1.
  const auto l2 = boundary_lengths(type_ii(0), {{1, 0.5, 0.25}});
  CHECK(l2[0] == doctest::Approx(2.75));
  CHECK(l2[1] == doctest::Approx(0.5));
  CHECK(l2[2] == doctest::Approx(0.25));
  CHECK_THROWS_AS((void)boundary_lengths(type_i(), {{1, -2, 1}}), DomainError);
}

TEST_CASE("combinatorics is a consistent gluing") {
  for (const auto& lam : all_laminations()) {
    const auto c = combinatorics(lam);
    std::array<int, 3> uses{};
    for (int t = 0; t < 2; ++t)
      for (int k = 0; k < 3; ++k) {
        ++uses[c.sides[t][k]];
        const SideRef p = c.partner[t][k];
        CHECK_FALSE(p == SideRef{t, k});
        CHECK(c.sides[p.triangle][p.side] == c.sides[t][k]);
        CHECK(c.partner[p.triangle][p.side] == SideRef{t, k});
        // The glued sides join the same two slots in opposite order.
        CHECK(c.corners[t][k] == c.corners[p.triangle][(p.side + 1) % 3]);
        CHECK(c.corners[t][(k + 1) % 3] == c.corners[p.triangle][p.side]);
      }
    for (int u : uses) CHECK(u == 2);
    for (int leaf = 0; leaf < 3; ++leaf) CHECK(c.ends[leaf][0] + c.ends[leaf][1] + c.ends[leaf][2] == 2);
    for (int slot = 0; slot < 3; ++slot) {
      int corners = 0;
      for (int t = 0; t < 2; ++t)
        for (int k = 0; k < 3; ++k) corners += c.corners[t][k] == slot;
      int ends = 0;
      for (int leaf = 0; leaf < 3; ++leaf) ends += c.ends[leaf][slot];
      CHECK(corners == ends);
    }
  }
  CHECK(combinatorics(type_i()).leaf_names == std::array<std::string, 3>{"B12", "B23", "B31"});
  CHECK(combinatorics(type_ii(1)).leaf_names == std::array<std::string, 3>{"B22", "B23", "B21"});
}

TEST_CASE("place_across realizes the shear") {
  const ProjPoint p = ProjPoint::real(0), q = ProjPoint::real(1), r = ProjPoint::infinity(Mode::Float);
  for (double s : {-2.0, -0.3, 0.0, 0.7, 3.0}) {
    const ProjPoint d = place_across(p, q, r, s);
    CHECK(orientation(q, p, d) == 1);
    CHECK(z_of(p, d, q, r) == doctest::Approx(-std::exp(-s)));
    CHECK(leaf_shear({q, p, r, d}) == doctest::Approx(s));
    CHECK(leaf_shear({p, q, d, r}) == doctest::Approx(s));
  }
}

TEST_CASE("developed pants: lengths, shears and frames") {
  Rng rng(51);
  for (auto lam : all_laminations()) {
    for (int s = 0; s < 6; ++s) {
      for (auto& o : lam.leaf_orientations) o = rng.sign();
      std::array<double, 3> sums{};
      for (int k = 0; k < 3; ++k) sums[k] = lam.spiral_signs[k] * rng.real(0.2, 4.0);
      const PantsShearing sh = support::shears_for_sums(lam, sums);
      REQUIRE(validate_shears(lam, sh));
      const DevelopedPants dp = develop_pants(lam, sh);
      CHECK(dp.triangles[0][0].same_as(ProjPoint::real(0)));
      CHECK(dp.triangles[0][1].same_as(ProjPoint::real(1)));
      CHECK(dp.triangles[0][2].is_infinity());
      for (int t = 0; t < 2; ++t) CHECK(orientation(dp.triangles[t][0], dp.triangles[t][1], dp.triangles[t][2]) == 1);
      for (int leaf = 0; leaf < 3; ++leaf) CHECK(leaf_shear(dp.leaves[leaf]) == doctest::Approx(sh.x[leaf]));
      const auto hand = support::hand_sums(lam, sh);
      for (int slot = 0; slot < 3; ++slot) {
        const CornerFrame& f = dp.boundary[slot];
        CHECK(f.slot == slot);
        CHECK(support::trace_length(f.holonomy) == doctest::Approx(std::abs(hand[slot])).epsilon(1e-9));
        CHECK(f.length == doctest::Approx(std::abs(hand[slot])).epsilon(1e-9));
        CHECK(mobius_apply(f.holonomy, f.vertex).same_as(f.vertex, 1e-8));
        CHECK(f.vertex.same_as(f.vertex_is_attracting ? f.attracting : f.repelling, 1e-8));
        // Positive spiraling means the leaves run into the repelling end.
        CHECK(f.vertex_is_attracting == (lam.spiral_signs[slot] < 0));
      }
      // Every corner at a slot sees a conjugate of the same holonomy.
      for (int t = 0; t < 2; ++t)
        for (int k = 0; k < 3; ++k) {
          const CornerFrame f = dp.corner_frame(t, k);
          CHECK(f.length == doctest::Approx(dp.boundary[f.slot].length).epsilon(1e-9));
          CHECK(f.vertex.same_as(dp.triangles[t][k], 1e-12));
        }
    }
  }
}

TEST_CASE("invalid shears are rejected") {
  CHECK_THROWS_AS(develop_pants(type_i(), {{1, -2, 1}}), DomainError);
  CHECK_THROWS_AS(develop_pants(type_ii(2, {1, -1, 1}), {{1, 1, 1}}), DomainError);
}
