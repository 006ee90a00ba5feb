#pragma once

#include <cstddef>
#include <vector>

#include "bimodcat/algebra.hpp"

namespace bimodcat {

/// Left module: action[i] is the matrix of basis element aᵢ, acting on
/// column vectors, with L(unit)=id and LᵢLⱼ = Σₖ c[i][j][k] Lₖ.
struct LeftModule {
  AlgebraPtr alg;
  std::size_t dim = 0;
  std::vector<Matrix> action;
};

/// Right module: action matrices reverse multiplication, RᵢRⱼ = Σ c[j][i][k] Rₖ.
struct RightModule {
  AlgebraPtr alg;
  std::size_t dim = 0;
  std::vector<Matrix> action;
};

/// Pair of commuting left/right actions over (possibly different) algebras.
struct Bimodule {
  AlgebraPtr left_alg, right_alg;
  std::size_t dim = 0;
  std::vector<Matrix> left_action, right_action;

  LeftModule left_restriction() const { return {left_alg, dim, left_action}; }
  RightModule right_restriction() const {
    return {right_alg, dim, right_action};
  }
};

ValidationReport validate_module(const LeftModule& m);
ValidationReport validate_module(const RightModule& m);
ValidationReport validate_module(const Bimodule& m);

/// Σ xᵢ·action[i]
Matrix action_of(const LeftModule& m, const Vec& x);
Matrix action_of(const RightModule& m, const Vec& x);
Matrix left_action_of(const Bimodule& m, const Vec& x);
Matrix right_action_of(const Bimodule& m, const Vec& x);

LeftModule regular_left_module(const AlgebraPtr& a);
/// A·e as a left module, with the inclusion into A.
struct SubmoduleData {
  LeftModule module;
  Matrix inclusion;  // ambient_dim × dim
};
SubmoduleData left_ideal_module(const AlgebraPtr& a, const Vec& e);
/// Restriction of the action to an invariant subspace.
LeftModule submodule(const LeftModule& m, const Subspace& u);
LeftModule direct_sum(const LeftModule& a, const LeftModule& b);
Bimodule direct_sum(const Bimodule& a, const Bimodule& b);

Bimodule regular_bimodule(const AlgebraPtr& a);
/// Aeᵢ ⊗ eⱼA with outer actions.
Bimodule free_bimodule(const AlgebraPtr& a, const Vec& e_i, const Vec& e_j);
/// A ⊗ A with outer actions (the free bimodule on the underlying space of A).
Bimodule tensor_square_bimodule(const AlgebraPtr& a);

/// Hom space of intertwiners, with a canonical ordered basis. Maps are
/// dst_dim × src_dim matrices; the vectorization is row-major.
struct HomSpace {
  std::size_t src_dim = 0, dst_dim = 0;
  std::vector<Matrix> basis;
  Subspace space;  // vectorized
};
HomSpace hom_space(const LeftModule& m, const LeftModule& n);
HomSpace hom_space(const RightModule& m, const RightModule& n);
HomSpace hom_space(const Bimodule& m, const Bimodule& n);
/// Coordinates of a map in the canonical basis; throws when f is not an
/// intertwiner in the span.
Vec hom_coordinates(const HomSpace& h, const Matrix& f);
Matrix hom_from_coordinates(const HomSpace& h, const Vec& c);

/// A-A-bimodule as a left module over enveloping(A) = A^op ⊗ A; tensor
/// basis element (i,k) acts by m ↦ aₖ·m·aᵢ.
LeftModule bimodule_as_left_env(const Bimodule& m, const AlgebraPtr& env);

/// One simple left module per block of A/Rad(A), pulled back to A, plus
/// dim End of each.
struct SimpleModules {
  std::vector<LeftModule> simples;        // indexed by block
  std::vector<std::size_t> end_dims;      // dim End(Sᵦ)
};
SimpleModules simple_modules(const AlgebraAnalysis& an);

/// m / Rad(A)·m with per-block multiplicities (normalized by dim End(S)).
struct TopData {
  LeftModule top;
  Matrix projection;  // top_dim × dim(m)
  std::vector<std::size_t> multiplicities;  // per block
};
TopData top(const AlgebraAnalysis& an, const LeftModule& m);

struct ProjectiveCover {
  LeftModule cover;
  Matrix map;  // dim(m) × dim(cover), surjective
  std::vector<std::size_t> multiplicities;
};
ProjectiveCover projective_cover(const AlgebraAnalysis& an,
                                 const LeftModule& m);

bool is_projective(const AlgebraAnalysis& an, const LeftModule& m);

/// Multiplicity of each indecomposable projective (indexed by block) in a
/// projective module; checks Σ mᵢ·dim(Pᵢ) = dim m. Throws
/// NotProjectiveError otherwise.
std::vector<std::size_t> decompose_projective(const AlgebraAnalysis& an,
                                              const LeftModule& m);

/// Multiset of composition factors via the radical filtration, indexed by
/// block; checks Σ against dim.
std::vector<std::size_t> composition_factors(const AlgebraAnalysis& an,
                                             const LeftModule& m);

}  // namespace bimodcat
