#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bimodcat/echelon.hpp"
#include "bimodcat/errors.hpp"
#include "bimodcat/matrix.hpp"
#include "bimodcat/subspace.hpp"

namespace bimodcat {

/// Finite-dimensional associative unital ℚ-algebra given by structure
/// constants aᵢ·aⱼ = Σₖ c[i][j][k]·aₖ. The table is stored sparsely, one
/// vector per basis pair.
class Algebra {
 public:
  Algebra(std::size_t dim, std::vector<SVec> products, Vec unit);
  static Algebra from_dense_table(std::size_t dim, const std::vector<Rat>& c,
                                  Vec unit);
  static Algebra rationals();

  std::size_t dim() const { return dim_; }
  const SVec& product(std::size_t i, std::size_t j) const {
    return products_[i * dim_ + j];
  }
  Rat structure_constant(std::size_t i, std::size_t j, std::size_t k) const;
  const Vec& unit() const { return unit_; }

  Vec mul(const Vec& x, const Vec& y) const;
  /// Matrix of y ↦ x·y on the basis.
  Matrix left_mult(const Vec& x) const;
  /// Matrix of y ↦ y·x.
  Matrix right_mult(const Vec& x) const;
  Matrix basis_left_mult(std::size_t i) const;
  Matrix basis_right_mult(std::size_t i) const;

  Rat trace_left_mult(const Vec& x) const;
  bool is_idempotent(const Vec& e) const;
  bool is_commutative() const;

 private:
  std::size_t dim_;
  std::vector<SVec> products_;
  Vec unit_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

struct ValidationReport {
  bool ok = true;
  std::string detail;  // names the first failing witness
};

/// Exhaustive associativity + unit-law check.
ValidationReport validate_algebra(const Algebra& a);

Algebra opposite(const Algebra& a);
/// Tensor product algebra on the Kronecker basis (i·dim(b)+k), with
/// componentwise multiplication.
Algebra tensor_algebra(const Algebra& a, const Algebra& b);
/// A^op ⊗ A. A-A-bimodules are left modules over this algebra via
/// (aᵢ^op ⊗ aₖ)·m = aₖ·m·aᵢ.
Algebra enveloping(const Algebra& a);

/// Quotient by a two-sided ideal: structure constants on the complement
/// basis (non-pivot coordinates of the ideal's echelon basis).
/// projection·section = id on the quotient.
struct QuotientAlgebra {
  Algebra algebra;
  Matrix projection;  // q×n
  Matrix section;     // n×q, complement-coordinate embedding
};
QuotientAlgebra quotient_by_ideal(const Algebra& a, const Subspace& ideal);

bool is_two_sided_ideal(const Algebra& a, const Subspace& s);
/// span{u·v : u ∈ U, v ∈ V} over basis vectors.
Subspace subspace_product(const Algebra& a, const Subspace& u,
                          const Subspace& v);
/// Some power of the subspace vanishes (iterated up to dim(a) steps).
bool is_nilpotent_ideal(const Algebra& a, const Subspace& ideal);

struct RadicalData {
  Subspace radical;
  Algebra semisimple;  // A/Rad(A)
  Matrix projection;   // q×n
  Matrix section;      // n×q
};

/// Jacobson radical as the kernel of the trace bilinear form
/// (x,y) ↦ trace(L_{xy}); exact and valid in characteristic 0.
RadicalData jacobson_radical(const Algebra& a);

/// Corner algebra eAe with its embedding data; unit is e.
/// inclusion is n×q (basis vectors as columns), projection is q×n with
/// projection·inclusion = id and projection(x) = coordinates of e·x·e.
struct CornerAlgebra {
  Algebra algebra;
  Matrix inclusion;
  Matrix projection;
};
CornerAlgebra corner_algebra(const Algebra& a, const Vec& e);

/// The two-sided ideal AeA = span{aᵢ·e·aⱼ}.
Subspace idempotent_ideal(const Algebra& a, const Vec& e);
QuotientAlgebra quotient_by_idempotent_ideal(const Algebra& a, const Vec& e);

/// Complete set of primitive orthogonal idempotents summing to 1.
/// Discovery lifts from the semisimple quotient; every returned idempotent
/// is certified by a one-dimensional corner in the quotient. Throws
/// NonSplitError when that cannot be achieved.
std::vector<Vec> primitive_idempotents(
    const Algebra& a,
    const std::optional<std::vector<Vec>>& supplied = std::nullopt);

/// Algebra together with its cached analysis (radical, idempotents, block
/// structure). The single entry point the higher layers build on.
struct AlgebraAnalysis {
  AlgebraPtr alg;
  RadicalData rad;
  std::vector<Vec> idempotents;
  std::vector<std::size_t> block_of;  // block index per idempotent
  std::size_t num_blocks = 0;
  bool basic = false;
};
AlgebraAnalysis analyze_algebra(
    AlgebraPtr a,
    const std::optional<std::vector<Vec>>& supplied = std::nullopt);

bool is_basic(const AlgebraAnalysis& an);

/// Picks one primitive idempotent per block and passes to the corner; the
/// result is a basic algebra Morita equivalent to the input.
struct BasifyResult {
  CornerAlgebra corner;
  Vec idempotent;
  std::vector<std::size_t> chosen;  // indices of the kept idempotents
};
BasifyResult basify(const AlgebraAnalysis& an);

/// C[i][j] = dim eᵢAeⱼ.
std::vector<std::vector<std::size_t>> cartan_matrix(const AlgebraAnalysis& an);

Subspace corner_subspace(const Algebra& a, const Vec& e_left,
                         const Vec& e_right);

}  // namespace bimodcat
