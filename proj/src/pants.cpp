#include "bdcoords/pants.hpp"

#include <cmath>
#include <sstream>

namespace bdcoords {

namespace {

int next(int k) { return (k + 1) % 3; }
int prev(int k) { return (k + 2) % 3; }

std::string slot_label(int s) { return "C" + std::to_string(s + 1); }

void fill_partners(PantsCombinatorics& c) {
  std::array<std::vector<SideRef>, 3> occurrences;
  for (int t = 0; t < 2; ++t)
    for (int k = 0; k < 3; ++k) occurrences[c.sides[t][k]].push_back({t, k});
  for (int leaf = 0; leaf < 3; ++leaf) {
    const auto& occ = occurrences[leaf];
    if (occ.size() != 2) throw SchemaError("leaf must bound exactly two triangle sides");
    c.partner[occ[0].triangle][occ[0].side] = occ[1];
    c.partner[occ[1].triangle][occ[1].side] = occ[0];
    c.reference[leaf] = occ[0];
    c.ends[leaf] = {0, 0, 0};
    const auto& corners = c.corners[occ[0].triangle];
    ++c.ends[leaf][corners[occ[0].side]];
    ++c.ends[leaf][corners[next(occ[0].side)]];
  }
}

std::array<ProjPoint, 3> place_partner(const std::array<ProjPoint, 3>& pos, int k, const SideRef& partner,
                                       double sigma) {
  std::array<ProjPoint, 3> out;
  out[partner.side] = pos[next(k)];
  out[next(partner.side)] = pos[k];
  out[prev(partner.side)] = place_across(pos[k], pos[next(k)], pos[prev(k)], sigma);
  return out;
}

Mobius frame_map(const std::array<ProjPoint, 3>& from, const std::array<ProjPoint, 3>& to) {
  return mobius_to_standard(to[0], to[1], to[2]).inverse() * mobius_to_standard(from[0], from[1], from[2]);
}

double unit_wedge(const ProjPoint& p, const ProjPoint& q) { return std::abs(wedge(unit(p), unit(q)).to_double()); }

}  // namespace

const std::array<std::string, 2>& triangle_names() {
  static const std::array<std::string, 2> names{"T0", "T1"};
  return names;
}

PantsCombinatorics combinatorics(const PantsLamination& lam) {
  PantsCombinatorics c;
  if (lam.type == LaminationType::I) {
    c.leaf_names = {"B12", "B23", "B31"};
    c.corners = {{{0, 1, 2}, {0, 2, 1}}};
    c.sides = {{{0, 1, 2}, {2, 1, 0}}};
  } else {
    const int i = lam.distinguished;
    if (i < 0 || i > 2) throw SchemaError("distinguished slot must be 1, 2 or 3");
    const int j = next(i), k = next(j);
    const std::string li = std::to_string(i + 1);
    c.leaf_names = {"B" + li + li, "B" + li + std::to_string(j + 1), "B" + li + std::to_string(k + 1)};
    // T0 = (i, j, i) folds B_ij onto itself around slot j; T1 = (i, i, k) does
    // the same for B_ik around slot k; B_ii joins them.
    c.corners = {{{i, j, i}, {i, i, k}}};
    c.sides = {{{1, 1, 0}, {0, 2, 2}}};
  }
  fill_partners(c);
  return c;
}

std::array<double, 3> boundary_sums(const PantsLamination& lam, const PantsShearing& s) {
  const PantsCombinatorics c = combinatorics(lam);
  std::array<double, 3> sum{0.0, 0.0, 0.0};
  for (int leaf = 0; leaf < 3; ++leaf)
    for (int slot = 0; slot < 3; ++slot) sum[slot] += c.ends[leaf][slot] * s.x[leaf];
  return sum;
}

std::vector<std::string> shear_violations(const PantsLamination& lam, const PantsShearing& s) {
  const PantsCombinatorics c = combinatorics(lam);
  const auto sum = boundary_sums(lam, s);
  std::vector<std::string> out;
  for (int slot = 0; slot < 3; ++slot) {
    const int sg = lam.spiral_signs[slot];
    if (sg != 1 && sg != -1) throw SchemaError("spiral sign must be +1 or -1");
    if (!std::isfinite(sum[slot]) || !(sg * sum[slot] > 0.0)) {
      std::ostringstream msg;
      msg << "sgn(" << slot_label(slot) << ") * (";
      bool first = true;
      for (int leaf = 0; leaf < 3; ++leaf) {
        for (int e = 0; e < c.ends[leaf][slot]; ++e) {
          msg << (first ? "" : " + ") << c.leaf_names[leaf];
          first = false;
        }
      }
      msg << ") > 0 fails: sign " << (sg > 0 ? "+1" : "-1") << ", sum " << format_double(sum[slot]);
      out.push_back(msg.str());
    }
  }
  return out;
}

bool validate_shears(const PantsLamination& lam, const PantsShearing& s) { return shear_violations(lam, s).empty(); }

std::array<double, 3> boundary_lengths(const PantsLamination& lam, const PantsShearing& s) {
  const auto violations = shear_violations(lam, s);
  if (!violations.empty()) throw DomainError("invalid shears: " + violations.front());
  auto sum = boundary_sums(lam, s);
  for (double& x : sum) x = std::abs(x);
  return sum;
}

ProjPoint place_across(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r, double sigma) {
  const ProjPoint pu = unit(p), qu = unit(q), ru = unit(r);
  // The fourth point b with z(p, b, q, r) = z satisfies b = q - K p,
  // K = z (r^q)/(r^p); scaled by (r^p) to stay homogeneous.
  const double z = -std::exp(-sigma);
  const double rp = wedge(ru, pu).to_double();
  const double rq = wedge(ru, qu).to_double();
  const double a = rp * qu.a().to_double() - z * rq * pu.a().to_double();
  const double b = rp * qu.b().to_double() - z * rq * pu.b().to_double();
  return unit(ProjPoint(Scalar::real(a), Scalar::real(b)));
}

double leaf_shear(const LeafQuadruple& q) { return shear_from_quadruple(q.y, q.zr, q.x, q.zl).to_double(); }

std::optional<int> DevelopedPants::corner_at(int triangle, int slot) const {
  for (int c = 0; c < 3; ++c)
    if (comb.corners[triangle][c] == slot) return c;
  return std::nullopt;
}

CornerFrame DevelopedPants::corner_frame(int triangle, int corner) const {
  if (triangle < 0 || triangle > 1 || corner < 0 || corner > 2) throw DomainError("no such corner");
  // Rotate around the corner's vertex, crossing one leaf end per step, until
  // the starting corner comes back.
  int t = triangle, c = corner;
  std::array<ProjPoint, 3> pos = triangles[t];
  for (int steps = 0;; ++steps) {
    if (steps > 6) throw DegenerateError("fan walk did not close");
    const SideRef across = comb.partner[t][c];
    pos = place_partner(pos, c, across, shears.x[comb.sides[t][c]]);
    t = across.triangle;
    c = next(across.side);
    if (t == triangle && c == corner) break;
  }
  CornerFrame f;
  f.triangle = triangle;
  f.corner = corner;
  f.slot = comb.corners[triangle][corner];
  f.holonomy = frame_map(triangles[triangle], pos);
  if (!is_hyperbolic(f.holonomy)) throw DegenerateError("boundary holonomy is numerically parabolic");
  AxisData ax = axis_data(f.holonomy);
  const ProjPoint& v = triangles[triangle][corner];
  if (orientation(ax.repelling, ax.attracting, triangles[triangle][next(corner)]) < 0) {
    f.holonomy = f.holonomy.inverse();
    std::swap(ax.attracting, ax.repelling);
  }
  f.attracting = unit(ax.attracting);
  f.repelling = unit(ax.repelling);
  f.length = ax.length.to_double();
  f.vertex = v;
  f.vertex_is_attracting = unit_wedge(v, f.attracting) < unit_wedge(v, f.repelling);
  const ProjPoint& other = f.vertex_is_attracting ? f.repelling : f.attracting;
  const ProjPoint& u1 = triangles[triangle][next(corner)];
  const ProjPoint& u2 = triangles[triangle][prev(corner)];
  // Distance from the axis in the frame v -> inf, other -> 0.
  auto spread = [&](const ProjPoint& u) { return unit_wedge(u, other) / unit_wedge(u, v); };
  f.far_vertex = spread(u1) > spread(u2) ? u1 : u2;
  return f;
}

DevelopedPants develop_pants(const PantsLamination& lam, const PantsShearing& s) {
  const auto violations = shear_violations(lam, s);
  if (!violations.empty()) throw DomainError("invalid shears: " + violations.front());
  DevelopedPants d;
  d.lamination = lam;
  d.shears = s;
  d.comb = combinatorics(lam);
  d.triangles[0] = {unit(ProjPoint::real(0.0)), unit(ProjPoint::real(1.0)), unit(ProjPoint::infinity(Mode::Float))};
  bool placed = false;
  for (int k = 0; k < 3 && !placed; ++k) {
    const SideRef across = d.comb.partner[0][k];
    if (across.triangle == 1) {
      d.triangles[1] = place_partner(d.triangles[0], k, across, s.x[d.comb.sides[0][k]]);
      placed = true;
    }
  }
  if (!placed) throw SchemaError("triangles T0 and T1 share no side");
  for (int leaf = 0; leaf < 3; ++leaf) {
    const SideRef ref = d.comb.reference[leaf];
    const auto& pos = d.triangles[ref.triangle];
    const ProjPoint& p = pos[ref.side];
    const ProjPoint& q = pos[next(ref.side)];
    const ProjPoint& r = pos[prev(ref.side)];
    const ProjPoint across = place_across(p, q, r, s.x[leaf]);
    const int o = lam.leaf_orientations[leaf];
    if (o != 1 && o != -1) throw SchemaError("leaf orientation must be +1 or -1");
    // The triangle on the reference side is to the left of p -> q.
    d.leaves[leaf] = o > 0 ? LeafQuadruple{q, p, r, across} : LeafQuadruple{p, q, across, r};
  }
  for (int slot = 0; slot < 3; ++slot) {
    for (int t = 0; t < 2; ++t) {
      if (auto c = d.corner_at(t, slot)) {
        d.boundary[slot] = d.corner_frame(t, *c);
        break;
      }
    }
  }
  return d;
}

}  // namespace bdcoords
