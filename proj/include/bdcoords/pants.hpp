#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "bdcoords/hyperbolic.hpp"

namespace bdcoords {

// Boundary slots of a pair of pants are 0, 1, 2 internally and C1, C2, C3 in
// labels. The pants is cut into two ideal triangles T0, T1 whose corners sit
// at the boundary slots; corners are listed counterclockwise and side k of a
// triangle joins corner k to corner k+1.

enum class LaminationType { I, II };

struct PantsLamination {
  LaminationType type = LaminationType::I;
  /// Slot i of the leaf B_ii (type II only).
  int distinguished = 0;
  /// +1 positive, -1 negative spiraling, per slot.
  std::array<int, 3> spiral_signs{1, 1, 1};
  /// Per leaf: +1 runs along the leaf's reference side, -1 against it.
  std::array<int, 3> leaf_orientations{1, 1, 1};
};

/// Shear per biinfinite leaf, in the leaf order of leaf_names().
struct PantsShearing {
  std::array<double, 3> x{};
};

struct SideRef {
  int triangle = 0;
  int side = 0;
  bool operator==(const SideRef&) const = default;
};

/// Gluing pattern of the two triangles of a laminated pants.
struct PantsCombinatorics {
  std::array<std::string, 3> leaf_names;
  std::array<std::array<int, 3>, 2> corners;  // slot of each corner
  std::array<std::array<int, 3>, 2> sides;    // leaf on each side
  std::array<std::array<SideRef, 3>, 2> partner;
  /// First occurrence of each leaf, scanning T0 then T1.
  std::array<SideRef, 3> reference;
  /// Number of leaf ends at each slot, per leaf: ends[leaf][slot].
  std::array<std::array<int, 3>, 3> ends;
};

/// Type I leaves are B12, B23, B31. Type II with distinguished slot i (1-based
/// label i, j = i+1, k = i+2 mod 3) has B_ii, B_ij, B_ik.
PantsCombinatorics combinatorics(const PantsLamination& lam);

const std::array<std::string, 2>& triangle_names();

/// Signed sum of shears over the leaf ends at each slot.
std::array<double, 3> boundary_sums(const PantsLamination& lam, const PantsShearing& s);

/// One message per violated inequality sgn(C_s) * sum_s > 0; empty when valid.
std::vector<std::string> shear_violations(const PantsLamination& lam, const PantsShearing& s);

bool validate_shears(const PantsLamination& lam, const PantsShearing& s);

/// |sum_s| per slot; throws DomainError for invalid shears.
std::array<double, 3> boundary_lengths(const PantsLamination& lam, const PantsShearing& s);

/// Quadruple of a biinfinite leaf: x head, y tail, zl / zr the far vertices
/// of the triangles on its left / right.
struct LeafQuadruple {
  ProjPoint x, y, zl, zr;
};

/// Boundary data seen from one corner of a developed triangle.
struct CornerFrame {
  int triangle = 0;
  int corner = 0;
  int slot = 0;
  /// Deck transformation around the corner's puncture, oriented so the pants
  /// lies to the left of its axis (repelling -> attracting).
  Mobius holonomy;
  ProjPoint attracting;
  ProjPoint repelling;
  double length = 0.0;
  /// The corner vertex; it is one of the two fixed points.
  ProjPoint vertex;
  bool vertex_is_attracting = false;
  /// Third vertex of the triangle side through `vertex` that lies farther
  /// from the axis.
  ProjPoint far_vertex;
};

struct DevelopedPants {
  PantsLamination lamination;
  PantsShearing shears;
  PantsCombinatorics comb;
  /// Canonical lifts; T0 sits at (0, 1, inf).
  std::array<std::array<ProjPoint, 3>, 2> triangles;
  std::array<LeafQuadruple, 3> leaves;
  /// Frame at the first corner of each slot.
  std::array<CornerFrame, 3> boundary;

  /// Frame at an arbitrary corner of a canonical triangle.
  CornerFrame corner_frame(int triangle, int corner) const;
  /// First corner of `triangle` at `slot`, or nullopt.
  std::optional<int> corner_at(int triangle, int slot) const;
};

/// Places the triangles by the shear rule z(y, zr, x, zl) = -e^{-sigma}.
/// Throws DomainError for invalid shears and DegenerateError when a boundary
/// holonomy is numerically parabolic.
DevelopedPants develop_pants(const PantsLamination& lam, const PantsShearing& s);

/// Fourth vertex across side (p, q) of the counterclockwise triangle (p, q, r)
/// for shear sigma.
ProjPoint place_across(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r, double sigma);

/// Shear recomputed from a developed leaf quadruple.
double leaf_shear(const LeafQuadruple& q);

}  // namespace bdcoords
