#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bimodcat/echelon.hpp"
#include "bimodcat/matrix.hpp"

namespace bimodcat {

/// Linear subspace of ℚ^n carrying its unique reduced-echelon basis, so
/// equality of subspaces is structural equality.
class Subspace {
 public:
  /// Zero subspace.
  explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

  /// Span of the rows of m (canonicalized).
  static Subspace span_rows(const Matrix& m);
  static Subspace span_vectors(const std::vector<Vec>& vs, std::size_t ambient);
  static Subspace from_echelon(Echelon e);
  static Subspace full(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  /// Basis rows in reduced echelon form.
  const Matrix& basis() const { return basis_; }
  Vec basis_vector(std::size_t i) const { return basis_.row(i); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool is_zero() const { return dim() == 0; }
  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }

  /// Coordinates of a member vector in the echelon basis (values at pivot
  /// columns). Throws if v is not in the subspace.
  Vec coordinates(const Vec& v) const;

  /// Rows spanning the annihilator: v ∈ S iff K·v = 0.
  Matrix constraint_matrix() const;

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace intersect_all(std::span<const Subspace> spaces);
Subspace sum(const Subspace& a, const Subspace& b);
/// {v : f·v ∈ s}
Subspace preimage(const Matrix& f, const Subspace& s);
/// {f·v : v ∈ s} inside ℚ^rows(f)
Subspace image(const Matrix& f, const Subspace& s);
Subspace kernel_subspace(const Matrix& m);
Subspace column_space(const Matrix& m);

}  // namespace bimodcat
