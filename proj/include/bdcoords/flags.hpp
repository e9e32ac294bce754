#pragma once

#include <vector>

#include "bdcoords/matrix.hpp"

namespace bdcoords {

/// Complete flag in R^n stored as an ordered basis v_1..v_n; level d is
/// span(v_1, ..., v_d).
class Flag {
 public:
  /// Throws DegenerateError unless the basis is linearly independent
  /// (exactly in rational mode, relative to 1e-12 in float mode).
  explicit Flag(std::vector<Vector> basis);

  std::size_t dim() const { return basis_.size(); }
  Mode mode() const { return basis_.front().front().mode(); }
  const std::vector<Vector>& basis() const { return basis_; }
  const Vector& vector(std::size_t i) const { return basis_[i]; }

  /// Flag with basis A v_1, ..., A v_n.
  Flag transformed(const Matrix& a) const;

 private:
  std::vector<Vector> basis_;
};

using FlagTuple = std::vector<Flag>;

/// Wedge of the first `levels[i]` basis vectors of each flag, identified with
/// a scalar through the standard-basis determinant. The levels must sum to n.
Scalar wedge_levels(const FlagTuple& flags, const std::vector<int>& levels);

/// Float-mode "nonzero" test for a wedge: |det| > 1e-12 * (product of column norms).
bool wedge_nonzero(const FlagTuple& flags, const std::vector<int>& levels);

/// True iff every composition (n_1, ..., n_k) of n gives a nonzero wedge.
bool is_generic(const FlagTuple& flags);

/// (p,q,r)-th triple ratio, p,q,r >= 1, p+q+r = n:
///
///   e^{p+1} f^q g^{r-1} * e^p f^{q-1} g^{r+1} * e^{p-1} f^{q+1} g^r
///   ---------------------------------------------------------------
///   e^{p-1} f^q g^{r+1} * e^p f^{q+1} g^{r-1} * e^{p+1} f^{q-1} g^r
Scalar triple_ratio(const Flag& e, const Flag& f, const Flag& g, int p, int q, int r);

/// p-th double ratio, 1 <= p <= n-1:
///
///   - (e^p f^{n-p-1} g^1 * e^{p-1} f^{n-p} g'^1) / (e^p f^{n-p-1} g'^1 * e^{p-1} f^{n-p} g^1)
Scalar double_ratio(const Flag& e, const Flag& f, const Flag& g, const Flag& gp, int p);

}  // namespace bdcoords
