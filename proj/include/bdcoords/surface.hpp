#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "bdcoords/pants.hpp"

namespace bdcoords {

struct PantsSpec {
  std::string id;
  PantsLamination lamination;
};

/// Boundary slot `slot` (0-based) of pants `pants`.
struct CurveEnd {
  std::string pants;
  int slot = 0;
};

/// Which triangle on each side carries an endpoint of the short arc, and
/// optionally which of its corners at the curve (0-based) is meant.
struct ShortArc {
  std::string left_triangle = "T0";
  std::string right_triangle = "T0";
  std::optional<int> left_corner;
  std::optional<int> right_corner;
};

/// Decomposing curve. ends[0] is the pants on its left, ends[1] on its right.
struct CurveSpec {
  std::string id;
  std::array<CurveEnd, 2> ends;
  ShortArc short_arc;
};

struct SurfaceSpec {
  int genus = 2;
  std::vector<PantsSpec> pants;
  std::vector<CurveSpec> curves;

  int pants_index(const std::string& id) const;
  int curve_index(const std::string& id) const;
};

/// Shears per pants (in spec order) and twist parameter t per curve.
struct SurfaceParameters {
  std::vector<PantsShearing> shears;
  std::vector<double> twists;
};

/// Throws SchemaError naming the first problem: counts, duplicate ids, an
/// unmatched or doubly used slot, disconnected gluing graph, bad short arc.
void validate_spec(const SurfaceSpec& spec);

/// True when the leaves on this side of the curve spiral in the direction of
/// its orientation (their spiral vertex is the attracting point).
bool spirals_along(const SurfaceSpec& spec, int curve, int side);

struct CurveGluing {
  int left = 0;
  int right = 0;
  /// Frames at the short-arc corners, in the pants charts.
  CornerFrame left_frame;
  CornerFrame right_frame;
  /// Right pants chart -> left pants chart.
  Mobius gluing;
  double length = 0.0;
  double twist = 0.0;
  bool tree_edge = false;
};

/// Closed hyperbolic surface assembled from developed pants.
class DevelopedSurface {
 public:
  const SurfaceSpec& spec() const { return spec_; }
  const SurfaceParameters& parameters() const { return params_; }
  const std::vector<DevelopedPants>& pants() const { return pants_; }
  const std::vector<CurveGluing>& curves() const { return curves_; }
  /// Pants chart -> global chart.
  const std::vector<Mobius>& placements() const { return placements_; }
  const Mobius& base_chart() const { return base_; }

  /// Canonical triangle lift in the global chart.
  std::array<ProjPoint, 3> triangle(int pants, int tri) const;
  /// Leaf quadruple (x head, y tail, zl, zr) in the global chart.
  LeafQuadruple leaf(int pants, int leaf) const;
  /// Short-arc quadruple of a curve in the global chart: x repelling,
  /// y attracting, zl and zr from the two sides.
  LeafQuadruple gluing_quadruple(int curve) const;
  /// Holonomy of the oriented curve, as seen from its left pants.
  Mobius curve_holonomy(int curve) const;
  /// The same holonomy computed through the right pants and the gluing map.
  Mobius curve_holonomy_from_right(int curve) const;
  /// Holonomy around a pants boundary slot in the global chart.
  Mobius boundary_holonomy(int pants, int slot) const;
  /// placement[L] * gluing * placement[R]^{-1} for curves off the spanning tree.
  std::vector<Mobius> stable_letters() const;

 private:
  friend DevelopedSurface assemble_surface(const SurfaceSpec&, const SurfaceParameters&, const Mobius&);
  SurfaceSpec spec_;
  SurfaceParameters params_;
  std::vector<DevelopedPants> pants_;
  std::vector<CurveGluing> curves_;
  std::vector<Mobius> placements_;
  Mobius base_;
};

/// Develops every pants and glues them, the left side of curve C twisted by
/// twist_map with parameter params.twists[C] relative to the short-arc
/// normalization. Throws DomainError on invalid shears or when the two sides
/// of a curve disagree in length (relative 1e-9).
DevelopedSurface assemble_surface(const SurfaceSpec& spec, const SurfaceParameters& params,
                                  const Mobius& base_chart = Mobius::identity(Mode::Float));

/// Reassembles with the twist of `curve` increased by t.
DevelopedSurface twist_deform(const DevelopedSurface& ds, const std::string& curve, double t);

/// z(y, zr, x, zl) of a curve's short-arc quadruple.
double gluing_cross_ratio(const DevelopedSurface& ds, int curve);

/// log(-1 / gluing_cross_ratio).
double gluing_log(const DevelopedSurface& ds, int curve);

struct TwistSolution {
  double t = 0.0;
  /// |gluing_log after the twist - target|.
  double residual = 0.0;
};

/// Twist increment that moves the curve's gluing cross ratio to -e^{-target_w}.
TwistSolution solve_twist(const DevelopedSurface& ds, const std::string& curve, double target_w);

}  // namespace bdcoords
