#pragma once

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "bdcoords/bd.hpp"
#include "bdcoords/random.hpp"
#include "bdcoords/surface.hpp"

namespace support {

using namespace bdcoords;

// Signed sum of shears at each slot, counted by hand from the leaf list:
// type I leaves B12, B23, B31; type II leaves B_ii (both ends at i), B_ij, B_ik.
inline std::array<double, 3> hand_sums(const PantsLamination& lam, const PantsShearing& s) {
  const auto& x = s.x;
  if (lam.type == LaminationType::I) return {x[0] + x[2], x[0] + x[1], x[1] + x[2]};
  const int i = lam.distinguished, j = (i + 1) % 3, k = (i + 2) % 3;
  std::array<double, 3> out{};
  out[i] = 2 * x[0] + x[1] + x[2];
  out[j] = x[1];
  out[k] = x[2];
  return out;
}

// Shears whose slot sums are exactly `sums`.
inline PantsShearing shears_for_sums(const PantsLamination& lam, const std::array<double, 3>& s) {
  PantsShearing out;
  if (lam.type == LaminationType::I) {
    out.x = {(s[0] + s[1] - s[2]) / 2, (s[1] + s[2] - s[0]) / 2, (s[0] + s[2] - s[1]) / 2};
  } else {
    const int i = lam.distinguished, j = (i + 1) % 3, k = (i + 2) % 3;
    out.x = {(s[i] - s[j] - s[k]) / 2, s[j], s[k]};
  }
  return out;
}

inline PantsLamination random_lamination(Rng& rng, bool allow_type_ii = true) {
  PantsLamination lam;
  lam.type = allow_type_ii && rng.integer(0, 1) ? LaminationType::II : LaminationType::I;
  lam.distinguished = static_cast<int>(rng.integer(0, 2));
  for (auto& s : lam.spiral_signs) s = rng.sign();
  for (auto& o : lam.leaf_orientations) o = rng.sign();
  return lam;
}

// Two pants glued along C1, C2, C3. `right_slots[c]` is the slot of curve c
// on P1 (a permutation of 0, 1, 2).
inline SurfaceSpec genus2_spec(const PantsLamination& l0, const PantsLamination& l1,
                               std::array<int, 3> right_slots = {0, 1, 2},
                               std::array<std::array<std::string, 2>, 3> arcs = {{{"T0", "T0"}, {"T0", "T0"}, {"T0", "T0"}}}) {
  SurfaceSpec spec;
  spec.genus = 2;
  spec.pants = {{"P0", l0}, {"P1", l1}};
  for (int c = 0; c < 3; ++c) {
    CurveSpec cs;
    cs.id = "C" + std::to_string(c + 1);
    cs.ends = {CurveEnd{"P0", c}, CurveEnd{"P1", right_slots[c]}};
    cs.short_arc.left_triangle = arcs[c][0];
    cs.short_arc.right_triangle = arcs[c][1];
    spec.curves.push_back(cs);
  }
  return spec;
}

struct Sample {
  SurfaceSpec spec;
  SurfaceParameters params;
  std::array<double, 3> lengths{};
};

// Random laminations, slot permutation, short arcs, lengths in [0.3, 3] and
// twists in [-1, 1]; shears are solved from the lengths so both sides match.
inline Sample random_genus2(Rng& rng, bool allow_type_ii = true) {
  Sample out;
  const PantsLamination l0 = random_lamination(rng, allow_type_ii), l1 = random_lamination(rng, allow_type_ii);
  std::array<int, 3> perm{0, 1, 2};
  for (int i = 2; i > 0; --i) std::swap(perm[i], perm[rng.integer(0, i)]);
  // Short arcs end on a random triangle with a corner at the curve's slot.
  auto pick = [&](const PantsLamination& lam, int slot) {
    const auto comb = combinatorics(lam);
    std::vector<std::string> ok;
    for (int t = 0; t < 2; ++t)
      for (int k = 0; k < 3; ++k)
        if (comb.corners[t][k] == slot) {
          ok.push_back(triangle_names()[t]);
          break;
        }
    return ok[rng.integer(0, static_cast<long>(ok.size()) - 1)];
  };
  std::array<std::array<std::string, 2>, 3> arcs;
  for (int c = 0; c < 3; ++c) arcs[c] = {pick(l0, c), pick(l1, perm[c])};
  out.spec = genus2_spec(l0, l1, perm, arcs);
  for (auto& l : out.lengths) l = rng.real(0.3, 3.0);
  std::array<double, 3> s0{}, s1{};
  for (int c = 0; c < 3; ++c) {
    s0[c] = l0.spiral_signs[c] * out.lengths[c];
    s1[perm[c]] = l1.spiral_signs[perm[c]] * out.lengths[c];
  }
  out.params.shears = {shears_for_sums(l0, s0), shears_for_sums(l1, s1)};
  out.params.twists = {rng.real(-1, 1), rng.real(-1, 1), rng.real(-1, 1)};
  return out;
}

// Slice point with the shears of a random sample and random gluing values.
inline SlicePoint random_slice_point(Rng& rng, Sample& s) {
  SlicePoint sp;
  for (int pi = 0; pi < 2; ++pi) {
    const auto comb = combinatorics(s.spec.pants[pi].lamination);
    for (int leaf = 0; leaf < 3; ++leaf)
      sp.z[s.spec.pants[pi].id + "." + comb.leaf_names[leaf]] = s.params.shears[pi].x[leaf];
  }
  for (const auto& c : s.spec.curves) sp.w[c.id] = rng.real(-2, 2);
  return sp;
}

inline double trace_length(const Mobius& m) {
  const double a = m.a().to_double(), b = m.b().to_double(), c = m.c().to_double(), d = m.d().to_double();
  return 2 * std::acosh(std::abs(a + d) / (2 * std::sqrt(a * d - b * c)));
}

}  // namespace support
