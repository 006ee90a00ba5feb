#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bimodcat/rational.hpp"

namespace bimodcat {

/// Dense row-major matrix over the rationals. All operations are exact.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols, Rat(0)) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows);
  static Matrix row_vector(const Vec& v);
  static Matrix column_vector(const Vec& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const {
    return e_[i * cols_ + j];
  }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;

  Matrix transpose() const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator*(const Rat& s) const;
  Matrix operator-() const;
  bool operator==(const Matrix& o) const = default;

  /// Matrix-vector product m·v.
  Vec apply(const Vec& v) const;

  bool is_zero() const;
  bool is_identity() const;

  /// Horizontal / vertical concatenation.
  static Matrix hcat(const Matrix& a, const Matrix& b);
  static Matrix vcat(const Matrix& a, const Matrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> e_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Unique reduced row echelon form together with its pivot columns.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Kronecker product with the convention
/// (a⊗b)[(i·b.rows+k),(j·b.cols+l)] = a[i,j]·b[k,l].
Matrix kron(const Matrix& a, const Matrix& b);

/// Canonical basis of {v : m·v = 0}, one vector per row, in reduced
/// echelon form. May have zero rows (trivial kernel).
Matrix kernel_matrix(const Matrix& m);

/// One particular solution of m·x = b, free variables set to 0 in rref
/// coordinates. Empty optional when inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

/// Inverse, or empty optional when singular.
std::optional<Matrix> inverse(const Matrix& m);

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rat& s, const Vec& v);
bool is_zero_vec(const Vec& v);
Rat dot(const Vec& a, const Vec& b);
Vec unit_vec(std::size_t n, std::size_t i);

}  // namespace bimodcat
