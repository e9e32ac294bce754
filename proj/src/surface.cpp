#include "bdcoords/surface.hpp"

#include <cmath>
#include <map>
#include <queue>
#include <set>

namespace bdcoords {

namespace {

constexpr double kLengthTolerance = 1e-9;

int triangle_index(const std::string& name) {
  const auto& names = triangle_names();
  for (int t = 0; t < 2; ++t)
    if (names[t] == name) return t;
  return -1;
}

// Corner of `tri` at `slot` chosen by the short arc, or the first one.
int short_arc_corner(const PantsCombinatorics& comb, int tri, int slot, const std::optional<int>& chosen,
                     const std::string& where) {
  if (chosen) {
    if (*chosen < 0 || *chosen > 2 || comb.corners[tri][*chosen] != slot)
      throw SchemaError(where + ": corner " + std::to_string(*chosen) + " is not at the curve's slot");
    return *chosen;
  }
  for (int c = 0; c < 3; ++c)
    if (comb.corners[tri][c] == slot) return c;
  throw SchemaError(where + ": triangle has no corner at the curve's slot");
}

Mobius flip() { return Mobius::diagonal(Scalar::real(-1.0), Scalar::real(1.0)); }

std::string slot_name(const CurveEnd& e) { return e.pants + ":C" + std::to_string(e.slot + 1); }

}  // namespace

int SurfaceSpec::pants_index(const std::string& id) const {
  for (std::size_t i = 0; i < pants.size(); ++i)
    if (pants[i].id == id) return static_cast<int>(i);
  throw SchemaError("unknown pants '" + id + "'");
}

int SurfaceSpec::curve_index(const std::string& id) const {
  for (std::size_t i = 0; i < curves.size(); ++i)
    if (curves[i].id == id) return static_cast<int>(i);
  throw SchemaError("unknown curve '" + id + "'");
}

void validate_spec(const SurfaceSpec& spec) {
  if (spec.genus < 2) throw SchemaError("genus must be at least 2");
  const std::size_t want_pants = 2 * spec.genus - 2;
  const std::size_t want_curves = 3 * spec.genus - 3;
  if (spec.pants.size() != want_pants)
    throw SchemaError("genus " + std::to_string(spec.genus) + " needs " + std::to_string(want_pants) + " pants, got " +
                      std::to_string(spec.pants.size()));
  if (spec.curves.size() != want_curves)
    throw SchemaError("genus " + std::to_string(spec.genus) + " needs " + std::to_string(want_curves) +
                      " curves, got " + std::to_string(spec.curves.size()));
  std::set<std::string> ids;
  for (const auto& p : spec.pants) {
    if (!ids.insert(p.id).second) throw SchemaError("duplicate pants id '" + p.id + "'");
    combinatorics(p.lamination);
  }
  ids.clear();
  for (const auto& c : spec.curves)
    if (!ids.insert(c.id).second) throw SchemaError("duplicate curve id '" + c.id + "'");

  std::map<std::pair<int, int>, std::string> used;
  for (const auto& c : spec.curves) {
    for (int side = 0; side < 2; ++side) {
      const CurveEnd& e = c.ends[side];
      int pi = -1;
      try {
        pi = spec.pants_index(e.pants);
      } catch (const SchemaError&) {
        throw SchemaError("curve " + c.id + " references unknown pants '" + e.pants + "'");
      }
      if (e.slot < 0 || e.slot > 2)
        throw SchemaError("curve " + c.id + " uses slot " + std::to_string(e.slot + 1) + " of " + e.pants +
                          "; slots are 1..3");
      auto [it, fresh] = used.emplace(std::make_pair(pi, e.slot), c.id);
      if (!fresh)
        throw SchemaError("slot " + slot_name(e) + " is used by both " + it->second + " and " + c.id);
    }
    const PantsCombinatorics lc = combinatorics(spec.pants[spec.pants_index(c.ends[0].pants)].lamination);
    const PantsCombinatorics rc = combinatorics(spec.pants[spec.pants_index(c.ends[1].pants)].lamination);
    const int lt = triangle_index(c.short_arc.left_triangle);
    const int rt = triangle_index(c.short_arc.right_triangle);
    if (lt < 0) throw SchemaError("curve " + c.id + ": unknown left triangle '" + c.short_arc.left_triangle + "'");
    if (rt < 0) throw SchemaError("curve " + c.id + ": unknown right triangle '" + c.short_arc.right_triangle + "'");
    short_arc_corner(lc, lt, c.ends[0].slot, c.short_arc.left_corner, "curve " + c.id + " left short arc");
    short_arc_corner(rc, rt, c.ends[1].slot, c.short_arc.right_corner, "curve " + c.id + " right short arc");
  }
  for (std::size_t p = 0; p < spec.pants.size(); ++p)
    for (int s = 0; s < 3; ++s)
      if (!used.count({static_cast<int>(p), s}))
        throw SchemaError("slot " + spec.pants[p].id + ":C" + std::to_string(s + 1) + " is not glued to any curve");

  std::vector<bool> seen(spec.pants.size(), false);
  std::queue<int> todo;
  todo.push(0);
  seen[0] = true;
  while (!todo.empty()) {
    const int p = todo.front();
    todo.pop();
    for (const auto& c : spec.curves) {
      const int l = spec.pants_index(c.ends[0].pants), r = spec.pants_index(c.ends[1].pants);
      for (auto [a, b] : {std::pair{l, r}, std::pair{r, l}})
        if (a == p && !seen[b]) {
          seen[b] = true;
          todo.push(b);
        }
    }
  }
  for (std::size_t p = 0; p < seen.size(); ++p)
    if (!seen[p]) throw SchemaError("pants " + spec.pants[p].id + " is not connected to " + spec.pants[0].id);
}

bool spirals_along(const SurfaceSpec& spec, int curve, int side) {
  const CurveEnd& e = spec.curves.at(curve).ends.at(side);
  const int sign = spec.pants[spec.pants_index(e.pants)].lamination.spiral_signs[e.slot];
  // Positive spiraling runs against the boundary orientation the pants
  // induces (pants on the left). The curve has its left pants on the left.
  const bool against_pants_boundary = sign > 0;
  return side == 0 ? !against_pants_boundary : against_pants_boundary;
}

std::array<ProjPoint, 3> DevelopedSurface::triangle(int pants, int tri) const {
  const Mobius& g = placements_.at(pants);
  const auto& t = pants_.at(pants).triangles.at(tri);
  return {unit(mobius_apply(g, t[0])), unit(mobius_apply(g, t[1])), unit(mobius_apply(g, t[2]))};
}

LeafQuadruple DevelopedSurface::leaf(int pants, int leaf) const {
  const Mobius& g = placements_.at(pants);
  const LeafQuadruple& q = pants_.at(pants).leaves.at(leaf);
  return {unit(mobius_apply(g, q.x)), unit(mobius_apply(g, q.y)), unit(mobius_apply(g, q.zl)),
          unit(mobius_apply(g, q.zr))};
}

LeafQuadruple DevelopedSurface::gluing_quadruple(int curve) const {
  const CurveGluing& c = curves_.at(curve);
  const Mobius& g = placements_.at(c.left);
  const ProjPoint zr = mobius_apply(c.gluing, c.right_frame.far_vertex);
  return {unit(mobius_apply(g, c.left_frame.repelling)), unit(mobius_apply(g, c.left_frame.attracting)),
          unit(mobius_apply(g, c.left_frame.far_vertex)), unit(mobius_apply(g, zr))};
}

Mobius DevelopedSurface::curve_holonomy(int curve) const {
  const CurveGluing& c = curves_.at(curve);
  const Mobius& g = placements_.at(c.left);
  return g * c.left_frame.holonomy * g.inverse();
}

Mobius DevelopedSurface::curve_holonomy_from_right(int curve) const {
  const CurveGluing& c = curves_.at(curve);
  const Mobius g = placements_.at(c.left) * c.gluing;
  return g * c.right_frame.holonomy.inverse() * g.inverse();
}

Mobius DevelopedSurface::boundary_holonomy(int pants, int slot) const {
  const Mobius& g = placements_.at(pants);
  return g * pants_.at(pants).boundary.at(slot).holonomy * g.inverse();
}

std::vector<Mobius> DevelopedSurface::stable_letters() const {
  std::vector<Mobius> out;
  for (const auto& c : curves_)
    if (!c.tree_edge) out.push_back(placements_[c.left] * c.gluing * placements_[c.right].inverse());
  return out;
}

DevelopedSurface assemble_surface(const SurfaceSpec& spec, const SurfaceParameters& params, const Mobius& base_chart) {
  validate_spec(spec);
  if (params.shears.size() != spec.pants.size()) throw SchemaError("one shear triple per pants required");
  if (params.twists.size() != spec.curves.size()) throw SchemaError("one twist per curve required");

  DevelopedSurface ds;
  ds.spec_ = spec;
  ds.params_ = params;
  ds.base_ = base_chart.to_float();
  for (std::size_t p = 0; p < spec.pants.size(); ++p) {
    try {
      ds.pants_.push_back(develop_pants(spec.pants[p].lamination, params.shears[p]));
    } catch (const DomainError& e) {
      throw DomainError("pants " + spec.pants[p].id + ": " + e.what());
    }
  }

  for (std::size_t ci = 0; ci < spec.curves.size(); ++ci) {
    const CurveSpec& cs = spec.curves[ci];
    CurveGluing g;
    g.left = spec.pants_index(cs.ends[0].pants);
    g.right = spec.pants_index(cs.ends[1].pants);
    const DevelopedPants& lp = ds.pants_[g.left];
    const DevelopedPants& rp = ds.pants_[g.right];
    const double l_left = boundary_lengths(lp.lamination, lp.shears)[cs.ends[0].slot];
    const double l_right = boundary_lengths(rp.lamination, rp.shears)[cs.ends[1].slot];
    if (std::abs(l_left - l_right) > kLengthTolerance * std::max(1.0, std::max(l_left, l_right)))
      throw DomainError("curve " + cs.id + ": boundary lengths differ across the curve (" + format_double(l_left) +
                        " on " + slot_name(cs.ends[0]) + ", " + format_double(l_right) + " on " +
                        slot_name(cs.ends[1]) + ")");
    const int lt = triangle_index(cs.short_arc.left_triangle);
    const int rt = triangle_index(cs.short_arc.right_triangle);
    g.left_frame = lp.corner_frame(lt, short_arc_corner(lp.comb, lt, cs.ends[0].slot, cs.short_arc.left_corner, cs.id));
    g.right_frame =
        rp.corner_frame(rt, short_arc_corner(rp.comb, rt, cs.ends[1].slot, cs.short_arc.right_corner, cs.id));
    g.length = l_left;
    g.twist = params.twists[ci];

    // Left frame: rep -> 0, att -> inf, zl -> -1. Right frame: the curve runs
    // against the right pants' own boundary orientation, so its repelling
    // point is the frame's attracting one; rep -> 0, att -> inf, zr -> +1.
    const CornerFrame& lf = g.left_frame;
    const CornerFrame& rf = g.right_frame;
    const Mobius a_left = flip() * mobius_to_standard(lf.attracting, lf.far_vertex, lf.repelling);
    const Mobius a_right = mobius_to_standard(rf.repelling, rf.far_vertex, rf.attracting);
    const Mobius twist = Mobius::diagonal(Scalar::real(std::exp(-g.twist)), Scalar::real(std::exp(g.twist)));
    g.gluing = a_left.inverse() * twist * a_right;
    ds.curves_.push_back(g);
  }

  ds.placements_.assign(spec.pants.size(), Mobius::identity(Mode::Float));
  std::vector<bool> placed(spec.pants.size(), false);
  placed[0] = true;
  ds.placements_[0] = ds.base_;
  std::queue<int> todo;
  todo.push(0);
  while (!todo.empty()) {
    const int p = todo.front();
    todo.pop();
    for (auto& c : ds.curves_) {
      if (c.left == p && !placed[c.right]) {
        ds.placements_[c.right] = ds.placements_[p] * c.gluing;
        placed[c.right] = true;
        c.tree_edge = true;
        todo.push(c.right);
      } else if (c.right == p && !placed[c.left]) {
        ds.placements_[c.left] = ds.placements_[p] * c.gluing.inverse();
        placed[c.left] = true;
        c.tree_edge = true;
        todo.push(c.left);
      }
    }
  }

  for (std::size_t ci = 0; ci < ds.curves_.size(); ++ci) {
    const Mobius from_left = ds.curve_holonomy(static_cast<int>(ci));
    const Mobius from_right = ds.curve_holonomy_from_right(static_cast<int>(ci));
    if (!from_left.same_as(from_right, 1e-7))
      throw DegenerateError("curve " + spec.curves[ci].id + ": holonomies from the two sides do not agree");
  }
  return ds;
}

DevelopedSurface twist_deform(const DevelopedSurface& ds, const std::string& curve, double t) {
  const int ci = ds.spec().curve_index(curve);
  SurfaceParameters params = ds.parameters();
  params.twists[ci] += t;
  return assemble_surface(ds.spec(), params, ds.base_chart());
}

double gluing_cross_ratio(const DevelopedSurface& ds, int curve) {
  const LeafQuadruple q = ds.gluing_quadruple(curve);
  return cross_ratio(q.y, q.zr, q.x, q.zl).to_double();
}

double gluing_log(const DevelopedSurface& ds, int curve) {
  const LeafQuadruple q = ds.gluing_quadruple(curve);
  return shear_from_quadruple(q.y, q.zr, q.x, q.zl).to_double();
}

TwistSolution solve_twist(const DevelopedSurface& ds, const std::string& curve, double target_w) {
  const int ci = ds.spec().curve_index(curve);
  const LeafQuadruple q = ds.gluing_quadruple(ci);
  // In the chart z -> (z - x)/(z - y) the axis is (0, inf) and a twist by s
  // multiplies zl by e^{2s}; the cross ratio becomes zr / (e^{2s} zl).
  auto chart = [&](const ProjPoint& z) { return wedge(z, q.x).to_double() / wedge(z, q.y).to_double(); };
  const double zl = chart(q.zl);
  const double zr = chart(q.zr);
  const double r = -std::exp(-target_w);
  const double s = zr / (r * zl);
  if (!(s > 0.0) || !std::isfinite(s))
    throw DegenerateError("curve " + curve + ": target cross ratio unreachable (malformed assembly)");
  TwistSolution out;
  out.t = 0.5 * std::log(s);
  out.residual = std::abs(gluing_log(twist_deform(ds, curve, out.t), ci) - target_w);
  return out;
}

}  // namespace bdcoords
