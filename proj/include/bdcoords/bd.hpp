#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "bdcoords/surface.hpp"

namespace bdcoords {

enum class Block { Tau, Sigma, Theta };

const char* block_name(Block b);

struct BDEntry {
  Block block = Block::Tau;
  /// "P0.T1", "P0.B12" or "C1".
  std::string object;
  /// (p, q, r) for tau, (p) otherwise.
  std::vector<int> indices;
};

/// Coordinate order: tau per triangle (pants order, T0 then T1, (p,q,r)
/// lexicographic, vertex v0 = corner 0), then sigma per leaf (pants order,
/// leaf order, p), then theta per curve (p).
class BDLayout {
 public:
  BDLayout() = default;
  BDLayout(const SurfaceSpec& spec, int n);

  int n() const { return n_; }
  std::size_t size() const { return entries_.size(); }
  const std::vector<BDEntry>& entries() const { return entries_; }
  std::size_t tau_count() const { return tau_count_; }
  std::size_t sigma_count() const { return sigma_count_; }
  std::size_t theta_count() const { return theta_count_; }

  std::size_t tau_index(int pants, int tri, int p, int q, int r) const;
  std::size_t sigma_index(int pants, int leaf, int p) const;
  std::size_t theta_index(int curve, int p) const;

 private:
  int n_ = 0;
  std::size_t pants_count_ = 0;
  std::size_t leaf_count_ = 0;
  std::vector<std::array<int, 3>> lattice_;
  std::size_t tau_count_ = 0, sigma_count_ = 0, theta_count_ = 0;
  std::vector<BDEntry> entries_;
};

/// (3|chi|/2)(n-1) + 3|chi|(n-1) + 2|chi| C(n-1, 2).
std::size_t bd_dimension(int abs_chi, int n);

struct BDVector {
  BDLayout layout;
  std::vector<double> values;
};

/// log T_pqr of the Veronese flags at the triangle's vertices, read from
/// `vertex_corner` with the other two in clockwise order.
double triangle_invariant(const DevelopedSurface& ds, int pants, int tri, int vertex_corner, int p, int q, int r,
                          int n);
/// log D_p(x, y, zl, zr) of Veronese flags at the leaf quadruple.
double shearing_invariant(const DevelopedSurface& ds, int pants, int leaf, int p, int n);
/// log D_p at the short-arc quadruple (x repelling, y attracting).
double gluing_invariant(const DevelopedSurface& ds, int curve, int p, int n);

BDVector bd_vector(const DevelopedSurface& ds, int n);

enum class Side { Left = 0, Right = 1 };

/// Vertex at which the triangle terms of a closed-leaf sum are read.
/// Spiral: the triangle's vertex on the lifted curve, others clockwise.
/// Mirrored: the same vertex with the other two taken counterclockwise.
enum class ClosedLeafVertex { Spiral, Mirrored };

/// Coefficients c with R_p(C) (side Right) or L_p(C) (side Left) = c . v.
std::vector<Rational> closed_leaf_functional(const BDLayout& layout, const SurfaceSpec& spec, int curve, int p,
                                             Side side, ClosedLeafVertex vertex = ClosedLeafVertex::Spiral);

double closed_leaf_sum(const BDVector& v, const SurfaceSpec& spec, int curve, int p, Side side,
                       ClosedLeafVertex vertex = ClosedLeafVertex::Spiral);

struct ClosedLeafEntry {
  std::string curve;
  int p = 0;
  double R = 0.0;
  double L = 0.0;
  /// l_p from the symmetric-power spectrum; NaN without a surface.
  double l = 0.0;
};

struct ClosedLeafReport {
  std::vector<ClosedLeafEntry> entries;
  double max_gap = 0.0;  // max over entries of |R-L|, |R-l|, |L-l|
};

/// When `ds` is given, l_p comes from length_spectrum(irrep_n(curve holonomy)).
ClosedLeafReport closed_leaf_report(const BDVector& v, const SurfaceSpec& spec,
                                    const DevelopedSurface* ds = nullptr);

struct Membership {
  bool member = false;
  std::vector<std::string> diagnostics;
};

/// R_p(C) = L_p(C) within tol and R_p(C) > 0, for every curve and p.
Membership polytope_membership(const BDVector& v, const SurfaceSpec& spec, double tol = 1e-9);

/// tau = 0 and sigma, theta constant in p, within tol.
Membership slice_membership(const BDVector& v, double tol = 1e-9);

/// One shear per leaf ("P0.B12") and one gluing value per curve ("C1").
struct SlicePoint {
  std::map<std::string, double> z;
  std::map<std::string, double> w;
};

/// The BD vector with tau = 0, sigma_p = z, theta_p = w.
BDVector slice_vector(const SlicePoint& sp, const SurfaceSpec& spec, int n);

/// z = sigma_1, w = theta_1.
SlicePoint read_slice_point(const BDVector& v);

struct Realization {
  DevelopedSurface surface;
  std::vector<TwistSolution> twists;
  BDVector vector;
  /// max |bd_vector(surface) - slice_vector(sp)| over all coordinates.
  double max_deviation = 0.0;
};

/// Per-pants shears z, zero twists, then one solve_twist per curve to reach w.
/// Throws DomainError naming the violated inequality or the mismatched curve.
Realization realize_slice(const SlicePoint& sp, const SurfaceSpec& spec, int n);

struct DimensionAudit {
  std::size_t coordinates = 0;        // layout size
  std::size_t coordinates_formula = 0;
  std::size_t constraint_rank = 0;    // rank of the R_p - L_p rows
  std::size_t hitchin_dimension = 0;  // (2g-2)(n^2-1)
  std::size_t slice_parameters = 0;   // leaves + curves
  std::size_t slice_constraint_rank = 0;
  std::size_t slice_free = 0;
};

/// Exact rank bookkeeping of the closed-leaf equalities.
DimensionAudit dimension_audit(const SurfaceSpec& spec, int n);

}  // namespace bdcoords
