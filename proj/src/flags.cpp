#include "bdcoords/flags.hpp"

#include <cmath>
#include <string>

#include "bdcoords/multilinear.hpp"

namespace bdcoords {

namespace {

constexpr double kFloatWedgeTolerance = 1e-12;

Matrix stacked(const FlagTuple& flags, const std::vector<int>& levels) {
  if (flags.empty()) throw DimensionError("empty flag tuple");
  if (levels.size() != flags.size()) throw DimensionError("one level per flag required");
  const std::size_t n = flags.front().dim();
  std::vector<Vector> columns;
  columns.reserve(n);
  int total = 0;
  for (std::size_t i = 0; i < flags.size(); ++i) {
    if (flags[i].dim() != n) throw DimensionError("flags of different dimensions");
    if (levels[i] < 0 || levels[i] > static_cast<int>(n)) throw DomainError("flag level out of range");
    total += levels[i];
    for (int d = 0; d < levels[i]; ++d) columns.push_back(flags[i].vector(d));
  }
  if (total != static_cast<int>(n)) throw DomainError("wedge levels must sum to n");
  return Matrix::from_columns(columns);
}

double column_norm_product(const Matrix& m) {
  double scale = 1.0;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      const double x = m(i, j).to_double();
      s += x * x;
    }
    scale *= std::sqrt(s);
  }
  return scale;
}

bool nonzero_det(const Matrix& m, const Scalar& d) {
  if (d.is_exact()) return !d.is_zero();
  return std::abs(d.to_double()) > kFloatWedgeTolerance * column_norm_product(m);
}

// Calls fn on every composition of `total` into `parts` nonnegative integers;
// stops early when fn returns false.
template <typename Fn>
bool for_each_composition(int total, std::size_t parts, std::vector<int>& current, Fn&& fn) {
  if (current.size() + 1 == parts) {
    current.push_back(total);
    const bool keep_going = fn(current);
    current.pop_back();
    return keep_going;
  }
  for (int first = 0; first <= total; ++first) {
    current.push_back(first);
    const bool keep_going = for_each_composition(total - first, parts, current, fn);
    current.pop_back();
    if (!keep_going) return false;
  }
  return true;
}

Scalar checked_wedge(const FlagTuple& flags, const std::vector<int>& levels, const char* what) {
  const Matrix m = stacked(flags, levels);
  const Scalar d = det(m);
  if (!nonzero_det(m, d)) throw DegenerateError(std::string(what) + ": vanishing wedge factor (flags not generic)");
  return d;
}

}  // namespace

Flag::Flag(std::vector<Vector> basis) : basis_(std::move(basis)) {
  const std::size_t n = basis_.size();
  if (n == 0) throw DimensionError("flag needs a basis");
  for (const auto& v : basis_)
    if (v.size() != n) throw DimensionError("flag basis vectors must have length n");
  const Matrix m = Matrix::from_columns(basis_);
  if (!nonzero_det(m, det(m))) throw DegenerateError("flag basis is linearly dependent");
}

Flag Flag::transformed(const Matrix& a) const {
  std::vector<Vector> out;
  out.reserve(basis_.size());
  for (const auto& v : basis_) out.push_back(a * v);
  return Flag(std::move(out));
}

Scalar wedge_levels(const FlagTuple& flags, const std::vector<int>& levels) {
  return det(stacked(flags, levels));
}

bool wedge_nonzero(const FlagTuple& flags, const std::vector<int>& levels) {
  const Matrix m = stacked(flags, levels);
  return nonzero_det(m, det(m));
}

bool is_generic(const FlagTuple& flags) {
  if (flags.empty()) throw DimensionError("empty flag tuple");
  const std::size_t n = flags.front().dim();
  for (const auto& f : flags)
    if (f.dim() != n) throw DimensionError("flags of different dimensions");
  std::vector<int> current;
  return for_each_composition(static_cast<int>(n), flags.size(), current,
                              [&](const std::vector<int>& levels) { return wedge_nonzero(flags, levels); });
}

Scalar triple_ratio(const Flag& e, const Flag& f, const Flag& g, int p, int q, int r) {
  const int n = static_cast<int>(e.dim());
  if (p < 1 || q < 1 || r < 1 || p + q + r != n) throw DomainError("triple ratio needs p,q,r >= 1 and p+q+r = n");
  const FlagTuple t{e, f, g};
  const char* what = "triple_ratio";
  const Scalar num = checked_wedge(t, {p + 1, q, r - 1}, what) * checked_wedge(t, {p, q - 1, r + 1}, what) *
                     checked_wedge(t, {p - 1, q + 1, r}, what);
  const Scalar den = checked_wedge(t, {p - 1, q, r + 1}, what) * checked_wedge(t, {p, q + 1, r - 1}, what) *
                     checked_wedge(t, {p + 1, q - 1, r}, what);
  return num / den;
}

Scalar double_ratio(const Flag& e, const Flag& f, const Flag& g, const Flag& gp, int p) {
  const int n = static_cast<int>(e.dim());
  if (p < 1 || p > n - 1) throw DomainError("double ratio needs 1 <= p <= n-1");
  const FlagTuple with_g{e, f, g};
  const FlagTuple with_gp{e, f, gp};
  const char* what = "double_ratio";
  const Scalar num = checked_wedge(with_g, {p, n - p - 1, 1}, what) * checked_wedge(with_gp, {p - 1, n - p, 1}, what);
  const Scalar den = checked_wedge(with_gp, {p, n - p - 1, 1}, what) * checked_wedge(with_g, {p - 1, n - p, 1}, what);
  return -(num / den);
}

}  // namespace bdcoords
