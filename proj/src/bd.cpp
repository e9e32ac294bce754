#include "bdcoords/bd.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "bdcoords/multilinear.hpp"
#include "bdcoords/veronese.hpp"

namespace bdcoords {

namespace {

std::string triangle_object(const SurfaceSpec& spec, int pants, int tri) {
  return spec.pants[pants].id + "." + triangle_names()[tri];
}

std::string leaf_object(const SurfaceSpec& spec, int pants, int leaf) {
  return spec.pants[pants].id + "." + combinatorics(spec.pants[pants].lamination).leaf_names[leaf];
}

// Developed points are doubles, hence exact rationals; evaluating the flag
// invariants exactly avoids cancellation when points cluster.
Flag flag_at(const ProjPoint& p, int n) {
  if (p.mode() == Mode::Exact) return veronese_flag(p, n);
  const ProjPoint u = unit(p);
  return veronese_flag(ProjPoint(Scalar::exact(Rational(u.a().to_double())), Scalar::exact(Rational(u.b().to_double()))), n);
}

double checked_log(const Scalar& x, const char* what) {
  const double v = x.to_double();
  if (!(v > 0.0)) throw DomainError(std::string(what) + ": ratio is not positive");
  return std::log(v);
}

void require_n(int n) {
  if (n < 2) throw DomainError("n must be at least 2");
}

// tau_{abc} read at `corner` equals tau_{a'b'c'} at corner 0: v0 = corner 0,
// v1 = corner 2, v2 = corner 1 (clockwise).
std::array<int, 3> to_corner0(int corner, int a, int b, int c) {
  switch (corner) {
    case 0:
      return {a, b, c};
    case 2:
      return {c, a, b};
    default:
      return {b, c, a};
  }
}

}  // namespace

const char* block_name(Block b) {
  switch (b) {
    case Block::Tau:
      return "tau";
    case Block::Sigma:
      return "sigma";
    default:
      return "theta";
  }
}

BDLayout::BDLayout(const SurfaceSpec& spec, int n) : n_(n), pants_count_(spec.pants.size()), leaf_count_(3) {
  require_n(n);
  for (int p = 1; p <= n - 2; ++p)
    for (int q = 1; p + q <= n - 1; ++q) lattice_.push_back({p, q, n - p - q});
  for (std::size_t pi = 0; pi < pants_count_; ++pi)
    for (int t = 0; t < 2; ++t)
      for (const auto& pqr : lattice_)
        entries_.push_back({Block::Tau, triangle_object(spec, static_cast<int>(pi), t), {pqr[0], pqr[1], pqr[2]}});
  tau_count_ = entries_.size();
  for (std::size_t pi = 0; pi < pants_count_; ++pi)
    for (int leaf = 0; leaf < 3; ++leaf)
      for (int p = 1; p < n; ++p) entries_.push_back({Block::Sigma, leaf_object(spec, static_cast<int>(pi), leaf), {p}});
  sigma_count_ = entries_.size() - tau_count_;
  for (const auto& c : spec.curves)
    for (int p = 1; p < n; ++p) entries_.push_back({Block::Theta, c.id, {p}});
  theta_count_ = entries_.size() - tau_count_ - sigma_count_;
}

std::size_t BDLayout::tau_index(int pants, int tri, int p, int q, int r) const {
  const auto it = std::find(lattice_.begin(), lattice_.end(), std::array<int, 3>{p, q, r});
  if (it == lattice_.end()) throw DomainError("no triangle coordinate with these (p,q,r)");
  return (static_cast<std::size_t>(pants) * 2 + tri) * lattice_.size() + (it - lattice_.begin());
}

std::size_t BDLayout::sigma_index(int pants, int leaf, int p) const {
  if (p < 1 || p >= n_) throw DomainError("p out of range");
  return tau_count_ + (static_cast<std::size_t>(pants) * leaf_count_ + leaf) * (n_ - 1) + (p - 1);
}

std::size_t BDLayout::theta_index(int curve, int p) const {
  if (p < 1 || p >= n_) throw DomainError("p out of range");
  return tau_count_ + sigma_count_ + static_cast<std::size_t>(curve) * (n_ - 1) + (p - 1);
}

std::size_t bd_dimension(int abs_chi, int n) {
  const std::size_t chi = abs_chi, m = n - 1;
  return 3 * chi / 2 * m + 3 * chi * m + 2 * chi * (m * (m - 1) / 2);
}

double triangle_invariant(const DevelopedSurface& ds, int pants, int tri, int vertex_corner, int p, int q, int r,
                          int n) {
  require_n(n);
  const auto t = ds.triangle(pants, tri);
  const int c = vertex_corner;
  // Corners are stored counterclockwise, so clockwise from c is c, c+2, c+1.
  return checked_log(triple_ratio(flag_at(t[c], n), flag_at(t[(c + 2) % 3], n), flag_at(t[(c + 1) % 3], n), p, q, r),
                     "triangle invariant");
}

double shearing_invariant(const DevelopedSurface& ds, int pants, int leaf, int p, int n) {
  require_n(n);
  const LeafQuadruple q = ds.leaf(pants, leaf);
  return checked_log(double_ratio(flag_at(q.x, n), flag_at(q.y, n), flag_at(q.zl, n), flag_at(q.zr, n), p),
                     "shearing invariant");
}

double gluing_invariant(const DevelopedSurface& ds, int curve, int p, int n) {
  require_n(n);
  const LeafQuadruple q = ds.gluing_quadruple(curve);
  return checked_log(double_ratio(flag_at(q.x, n), flag_at(q.y, n), flag_at(q.zl, n), flag_at(q.zr, n), p),
                     "gluing invariant");
}

BDVector bd_vector(const DevelopedSurface& ds, int n) {
  BDVector v{BDLayout(ds.spec(), n), {}};
  v.values.reserve(v.layout.size());
  const int pants = static_cast<int>(ds.pants().size());
  for (int pi = 0; pi < pants; ++pi)
    for (int t = 0; t < 2; ++t)
      for (int p = 1; p <= n - 2; ++p)
        for (int q = 1; p + q <= n - 1; ++q) v.values.push_back(triangle_invariant(ds, pi, t, 0, p, q, n - p - q, n));
  for (int pi = 0; pi < pants; ++pi)
    for (int leaf = 0; leaf < 3; ++leaf)
      for (int p = 1; p < n; ++p) v.values.push_back(shearing_invariant(ds, pi, leaf, p, n));
  for (std::size_t c = 0; c < ds.curves().size(); ++c)
    for (int p = 1; p < n; ++p) v.values.push_back(gluing_invariant(ds, static_cast<int>(c), p, n));
  return v;
}

std::vector<Rational> closed_leaf_functional(const BDLayout& layout, const SurfaceSpec& spec, int curve, int p,
                                             Side side, ClosedLeafVertex vertex) {
  const int n = layout.n();
  if (p < 1 || p >= n) throw DomainError("p out of range");
  const CurveEnd& end = spec.curves.at(curve).ends[static_cast<int>(side)];
  const int pi = spec.pants_index(end.pants);
  const PantsLamination& lam = spec.pants[pi].lamination;
  const PantsCombinatorics comb = combinatorics(lam);
  const bool along = spirals_along(spec, curve, static_cast<int>(side));
  // Right side: +(direction formula) or -(opposite formula); left side negated.
  const int sign = (side == Side::Right) == along ? 1 : -1;
  const int m = along ? p : n - p;

  std::vector<Rational> f(layout.size(), Rational(0));
  for (int leaf = 0; leaf < 3; ++leaf) {
    const SideRef ref = comb.reference[leaf];
    const int from = comb.corners[ref.triangle][ref.side];
    const int to = comb.corners[ref.triangle][(ref.side + 1) % 3];
    const int head = lam.leaf_orientations[leaf] > 0 ? to : from;
    const int tail = lam.leaf_orientations[leaf] > 0 ? from : to;
    // sigma-bar_m: sigma_m at an end oriented toward the curve, else sigma_{n-m}.
    if (head == end.slot) f[layout.sigma_index(pi, leaf, m)] += sign;
    if (tail == end.slot) f[layout.sigma_index(pi, leaf, n - m)] += sign;
  }
  for (int t = 0; t < 2; ++t) {
    for (int c = 0; c < 3; ++c) {
      if (comb.corners[t][c] != end.slot) continue;
      // direction: sum_{q+r=n-p} tau_{pqr}; opposite: sum_{q+r=p} tau_{(n-p)qr}.
      for (int q = 1; q < n - m; ++q) {
        const int r = n - m - q;
        const auto abc = vertex == ClosedLeafVertex::Spiral ? to_corner0(c, m, q, r) : to_corner0(c, m, r, q);
        f[layout.tau_index(pi, t, abc[0], abc[1], abc[2])] += sign;
      }
    }
  }
  return f;
}

double closed_leaf_sum(const BDVector& v, const SurfaceSpec& spec, int curve, int p, Side side,
                       ClosedLeafVertex vertex) {
  const auto f = closed_leaf_functional(v.layout, spec, curve, p, side, vertex);
  if (v.values.size() != f.size()) throw DimensionError("BD vector does not match its layout");
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i] != 0) s += f[i].get_d() * v.values[i];
  return s;
}

ClosedLeafReport closed_leaf_report(const BDVector& v, const SurfaceSpec& spec, const DevelopedSurface* ds) {
  ClosedLeafReport rep;
  const int n = v.layout.n();
  for (std::size_t c = 0; c < spec.curves.size(); ++c) {
    std::vector<double> spectrum;
    if (ds) spectrum = length_spectrum(irrep_n(ds->curve_holonomy(static_cast<int>(c)), n));
    for (int p = 1; p < n; ++p) {
      ClosedLeafEntry e;
      e.curve = spec.curves[c].id;
      e.p = p;
      e.R = closed_leaf_sum(v, spec, static_cast<int>(c), p, Side::Right);
      e.L = closed_leaf_sum(v, spec, static_cast<int>(c), p, Side::Left);
      e.l = ds ? spectrum[p - 1] : std::numeric_limits<double>::quiet_NaN();
      rep.max_gap = std::max(rep.max_gap, std::abs(e.R - e.L));
      if (ds) rep.max_gap = std::max({rep.max_gap, std::abs(e.R - e.l), std::abs(e.L - e.l)});
      rep.entries.push_back(e);
    }
  }
  return rep;
}

Membership polytope_membership(const BDVector& v, const SurfaceSpec& spec, double tol) {
  if (v.values.size() != v.layout.size()) throw DimensionError("BD vector does not match its layout");
  Membership m;
  const int n = v.layout.n();
  for (std::size_t c = 0; c < spec.curves.size(); ++c) {
    for (int p = 1; p < n; ++p) {
      const double r = closed_leaf_sum(v, spec, static_cast<int>(c), p, Side::Right);
      const double l = closed_leaf_sum(v, spec, static_cast<int>(c), p, Side::Left);
      const std::string tag = spec.curves[c].id + " p=" + std::to_string(p);
      if (std::abs(r - l) > tol)
        m.diagnostics.push_back(tag + ": R_p = " + format_double(r) + " differs from L_p = " + format_double(l));
      if (!(r > 0.0)) m.diagnostics.push_back(tag + ": R_p = " + format_double(r) + " is not positive");
    }
  }
  m.member = m.diagnostics.empty();
  return m;
}

Membership slice_membership(const BDVector& v, double tol) {
  Membership m;
  const auto& entries = v.layout.entries();
  std::map<std::string, std::pair<double, double>> range;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const BDEntry& e = entries[i];
    if (e.block == Block::Tau) {
      if (std::abs(v.values[i]) > tol)
        m.diagnostics.push_back("tau " + e.object + " (" + std::to_string(e.indices[0]) + "," +
                                std::to_string(e.indices[1]) + "," + std::to_string(e.indices[2]) +
                                ") = " + format_double(v.values[i]) + " is not 0");
      continue;
    }
    const std::string key = std::string(block_name(e.block)) + " " + e.object;
    auto [it, fresh] = range.emplace(key, std::make_pair(v.values[i], v.values[i]));
    if (!fresh) {
      it->second.first = std::min(it->second.first, v.values[i]);
      it->second.second = std::max(it->second.second, v.values[i]);
    }
  }
  for (const auto& [key, mm] : range)
    if (mm.second - mm.first > tol)
      m.diagnostics.push_back(key + " varies with p by " + format_double(mm.second - mm.first));
  m.member = m.diagnostics.empty();
  return m;
}

BDVector slice_vector(const SlicePoint& sp, const SurfaceSpec& spec, int n) {
  BDVector v{BDLayout(spec, n), {}};
  v.values.assign(v.layout.size(), 0.0);
  for (std::size_t i = 0; i < v.layout.size(); ++i) {
    const BDEntry& e = v.layout.entries()[i];
    if (e.block == Block::Sigma) {
      auto it = sp.z.find(e.object);
      if (it == sp.z.end()) throw SchemaError("slice point has no shear for leaf " + e.object);
      v.values[i] = it->second;
    } else if (e.block == Block::Theta) {
      auto it = sp.w.find(e.object);
      if (it == sp.w.end()) throw SchemaError("slice point has no gluing value for curve " + e.object);
      v.values[i] = it->second;
    }
  }
  return v;
}

SlicePoint read_slice_point(const BDVector& v) {
  SlicePoint sp;
  const auto& entries = v.layout.entries();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const BDEntry& e = entries[i];
    if (e.indices.size() != 1 || e.indices[0] != 1) continue;
    if (e.block == Block::Sigma) sp.z[e.object] = v.values[i];
    if (e.block == Block::Theta) sp.w[e.object] = v.values[i];
  }
  return sp;
}

Realization realize_slice(const SlicePoint& sp, const SurfaceSpec& spec, int n) {
  validate_spec(spec);
  SurfaceParameters params;
  for (std::size_t pi = 0; pi < spec.pants.size(); ++pi) {
    const PantsCombinatorics comb = combinatorics(spec.pants[pi].lamination);
    PantsShearing s;
    for (int leaf = 0; leaf < 3; ++leaf) {
      const std::string key = spec.pants[pi].id + "." + comb.leaf_names[leaf];
      auto it = sp.z.find(key);
      if (it == sp.z.end()) throw SchemaError("slice point has no shear for leaf " + key);
      s.x[leaf] = it->second;
    }
    const auto violations = shear_violations(spec.pants[pi].lamination, s);
    if (!violations.empty())
      throw DomainError("polytope violation in pants " + spec.pants[pi].id + ": " + violations.front());
    params.shears.push_back(s);
  }
  for (const auto& c : spec.curves)
    if (!sp.w.count(c.id)) throw SchemaError("slice point has no gluing value for curve " + c.id);
  params.twists.assign(spec.curves.size(), 0.0);

  Realization out;
  out.surface = assemble_surface(spec, params);
  for (const auto& c : spec.curves) {
    const TwistSolution sol = solve_twist(out.surface, c.id, sp.w.at(c.id));
    out.surface = twist_deform(out.surface, c.id, sol.t);
    out.twists.push_back(sol);
  }
  out.vector = bd_vector(out.surface, n);
  const BDVector target = slice_vector(sp, spec, n);
  for (std::size_t i = 0; i < target.values.size(); ++i)
    out.max_deviation = std::max(out.max_deviation, std::abs(out.vector.values[i] - target.values[i]));
  return out;
}

DimensionAudit dimension_audit(const SurfaceSpec& spec, int n) {
  validate_spec(spec);
  const BDLayout layout(spec, n);
  DimensionAudit a;
  a.coordinates = layout.size();
  a.coordinates_formula = bd_dimension(static_cast<int>(spec.pants.size()), n);
  a.hitchin_dimension = (2 * spec.genus - 2) * static_cast<std::size_t>(n * n - 1);

  const std::size_t rows = spec.curves.size() * (n - 1);
  Matrix k(rows, layout.size(), Mode::Exact);
  std::size_t row = 0;
  for (std::size_t c = 0; c < spec.curves.size(); ++c) {
    for (int p = 1; p < n; ++p, ++row) {
      const auto r = closed_leaf_functional(layout, spec, static_cast<int>(c), p, Side::Right);
      const auto l = closed_leaf_functional(layout, spec, static_cast<int>(c), p, Side::Left);
      for (std::size_t j = 0; j < layout.size(); ++j) k(row, j) = Scalar::exact(Rational(r[j] - l[j]));
    }
  }
  a.constraint_rank = rank(k);

  // Slice embedding: one column per leaf (sigma_p = z for all p) and per curve.
  a.slice_parameters = 3 * spec.pants.size() + spec.curves.size();
  Matrix e(layout.size(), a.slice_parameters, Mode::Exact);
  std::size_t col = 0;
  for (std::size_t pi = 0; pi < spec.pants.size(); ++pi)
    for (int leaf = 0; leaf < 3; ++leaf, ++col)
      for (int p = 1; p < n; ++p) e(layout.sigma_index(static_cast<int>(pi), leaf, p), col) = Scalar::exact(1);
  for (std::size_t c = 0; c < spec.curves.size(); ++c, ++col)
    for (int p = 1; p < n; ++p) e(layout.theta_index(static_cast<int>(c), p), col) = Scalar::exact(1);
  a.slice_constraint_rank = rank(k * e);
  a.slice_free = a.slice_parameters - a.slice_constraint_rank;
  return a;
}

}  // namespace bdcoords
