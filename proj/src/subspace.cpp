#include "bimodcat/subspace.hpp"

#include <stdexcept>

namespace bimodcat {

Subspace Subspace::span_rows(const Matrix& m) {
  auto [red, pivots] = rref(m);
  Subspace s(m.cols());
  Matrix b(pivots.size(), m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) b.at(i, j) = red.at(i, j);
  s.basis_ = std::move(b);
  s.pivots_ = std::move(pivots);
  return s;
}

Subspace Subspace::span_vectors(const std::vector<Vec>& vs,
                                std::size_t ambient) {
  Echelon e(ambient);
  for (const auto& v : vs) e.insert(v);
  return from_echelon(std::move(e));
}

Subspace Subspace::from_echelon(Echelon e) {
  e.fully_reduce();
  Subspace s(e.ambient());
  s.basis_ = e.to_matrix();
  s.pivots_ = e.pivots();
  return s;
}

Subspace Subspace::full(std::size_t ambient) {
  return span_rows(Matrix::identity(ambient));
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("ambient mismatch");
  Vec w = v;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    const Rat& c = w[pivots_[i]];
    if (is_zero(c)) continue;
    Rat f = c;
    for (std::size_t j = 0; j < ambient_; ++j) w[j] -= f * basis_.at(i, j);
  }
  return is_zero_vec(w);
}

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_vector(i))) return false;
  return true;
}

Vec Subspace::coordinates(const Vec& v) const {
  if (!contains(v)) throw std::invalid_argument("vector not in subspace");
  Vec c(dim());
  for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Matrix Subspace::constraint_matrix() const { return kernel_matrix(basis_); }

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient())
    throw std::invalid_argument("ambient mismatch in intersect");
  return kernel_subspace(
      Matrix::vcat(a.constraint_matrix(), b.constraint_matrix()));
}

Subspace intersect_all(std::span<const Subspace> spaces) {
  if (spaces.empty()) throw std::invalid_argument("empty intersection");
  Subspace acc = spaces[0];
  for (std::size_t i = 1; i < spaces.size(); ++i) {
    if (acc.is_zero()) break;
    acc = intersect(acc, spaces[i]);
  }
  return acc;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient())
    throw std::invalid_argument("ambient mismatch in sum");
  return Subspace::span_rows(Matrix::vcat(a.basis(), b.basis()));
}

Subspace preimage(const Matrix& f, const Subspace& s) {
  if (f.rows() != s.ambient())
    throw std::invalid_argument("ambient mismatch in preimage");
  if (s.dim() == s.ambient()) return Subspace::full(f.cols());
  return kernel_subspace(s.constraint_matrix() * f);
}

Subspace image(const Matrix& f, const Subspace& s) {
  std::vector<Vec> vs;
  for (std::size_t i = 0; i < s.dim(); ++i)
    vs.push_back(f.apply(s.basis_vector(i)));
  return Subspace::span_vectors(vs, f.rows());
}

Subspace kernel_subspace(const Matrix& m) {
  return Subspace::span_rows(kernel_matrix(m));
}

Subspace column_space(const Matrix& m) {
  return Subspace::span_rows(m.transpose());
}

}  // namespace bimodcat
