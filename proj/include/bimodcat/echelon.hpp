#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "bimodcat/matrix.hpp"
#include "bimodcat/rational.hpp"

namespace bimodcat {

/// Sparse vector: (index, coefficient) pairs sorted by index, no zeros.
using SVec = std::vector<std::pair<std::size_t, Rat>>;

SVec to_sparse(const Vec& v);
Vec to_dense(const SVec& v, std::size_t n);
/// a - c·b
SVec sparse_axpy(const SVec& a, const Rat& c, const SVec& b);

/// Incremental row echelon form over ℚ with sparse rows. Rows are keyed by
/// their pivot (leftmost nonzero index, coefficient normalized to 1).
class Echelon {
 public:
  explicit Echelon(std::size_t ambient) : ambient_(ambient) {}

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }

  /// Inserts a vector; returns true when it was independent of the rows so
  /// far (rank grew).
  bool insert(SVec v);
  bool insert(const Vec& v) { return insert(to_sparse(v)); }

  /// Residue of v after eliminating every pivot coordinate.
  SVec reduce(SVec v) const;
  bool contains(const Vec& v) const { return reduce(to_sparse(v)).empty(); }

  std::vector<std::size_t> pivots() const;
  std::vector<std::size_t> free_indices() const;

  /// Inter-reduces rows so the span has its unique reduced echelon basis.
  void fully_reduce();

  /// Rows ordered by pivot. Call fully_reduce() first for the canonical
  /// (RREF) representative.
  Matrix to_matrix() const;

 private:
  std::size_t ambient_;
  std::map<std::size_t, SVec> rows_;
};

}  // namespace bimodcat
