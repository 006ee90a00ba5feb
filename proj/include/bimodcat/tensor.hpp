#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bimodcat/module.hpp"
#include "bimodcat/zplus.hpp"

namespace bimodcat {

/// Relative tensor product M ⊗_A N: the cokernel of the balancing map
/// (m,a,n) ↦ ma⊗n − m⊗an, with the surjection from M⊗N and a section
/// (free coordinates of the balancing subspace set to the complement).
struct TensorResult {
  Bimodule object;
  Matrix surjection;  // dim(object) × (dim m · dim n)
  Matrix section;     // (dim m · dim n) × dim(object)
};
TensorResult tensor_objects(const Bimodule& m, const Bimodule& n);

/// Induced map on cokernels of f⊗g; the unique map making the square with
/// the surjections commute.
Matrix tensor_morphisms(const TensorResult& src, const TensorResult& dst,
                        const Matrix& f, const Matrix& g);

/// A ⊗_A N → N (multiplication); exact isomorphism.
Matrix left_unitor(const TensorResult& an, const Bimodule& n);
/// N ⊗_A A → N.
Matrix right_unitor(const TensorResult& na, const Bimodule& n);

/// Canonical associator on cokernels, (m⊗n)⊗p → m⊗(n⊗p), with all four
/// tensor results it passes through.
struct AssociatorData {
  TensorResult mn, mn_p, np, m_np;
  Matrix map;  // iso
};
AssociatorData associator(const Bimodule& m, const Bimodule& n,
                          const Bimodule& p);

enum class DualSide { left, right };

/// Dual object on the one-sided Hom into A, with evaluation/coevaluation
/// verified against the zigzag identities.
///   side=left  (needs the left restriction projective):
///     dual = Hom over left modules (V, A); ev: V⊗dual → A; coev: A → dual⊗V.
///   side=right (needs the right restriction projective):
///     dual = Hom over right modules (V, A); ev: dual⊗V → A; coev: A → V⊗dual.
struct DualityDatum {
  Bimodule dual;
  DualSide side;
  Matrix ev, coev;
  TensorResult ev_source;    // the tensor ev is defined on
  TensorResult coev_target;  // the tensor coev lands in
};
DualityDatum dual(const AlgebraAnalysis& an, const Bimodule& v, DualSide side);
/// Both triangle composites equal the identity, exactly.
bool verify_zigzags(const Bimodule& v, const DualityDatum& d);

struct EndAlgebra {
  HomSpace hom;
  AlgebraPtr alg;  // structure constants of composition, unit = id
};
EndAlgebra endomorphism_algebra(const Bimodule& m);

/// End(m)/Rad has dimension 1 (split local).
bool has_local_endomorphism_algebra(const Bimodule& m);

/// Summand of a direct sum decomposition with a split inclusion/projection
/// pair (projection·inclusion = id).
struct DecompSummand {
  Bimodule piece;
  Matrix inclusion;
  Matrix projection;
};
/// Splits m along lifted primitive orthogonal idempotents of End(m); each
/// summand is indecomposable. Throws NonSplitError when End(m) cannot be
/// split over ℚ.
std::vector<DecompSummand> decompose(const Bimodule& m);

struct GroupedSummand {
  Bimodule piece;
  std::size_t multiplicity = 0;
};
std::vector<GroupedSummand> decompose_grouped(const Bimodule& m);

/// Sound and complete for modules with local endomorphism algebras: true
/// iff some composite of Hom-basis elements is invertible.
bool iso_indecomposable(const Bimodule& x, const Bimodule& y);
/// Explicit isomorphism (h, h⁻¹) when one exists.
std::optional<std::pair<Matrix, Matrix>> find_iso(const Bimodule& x,
                                                  const Bimodule& y);

/// Split Grothendieck pseudoring of the projective bimodules, basis =
/// labels (i,j) of the free bimodules Aeᵢ⊗eⱼA, structure constants from
/// the generic tensor + decompose pipeline. Requires a basic algebra.
ZPlusRing grothendieck_pseudoring(const AlgebraAnalysis& an);

/// Closed form from the Cartan matrix only:
/// c_{(i,j),(k,l)}^{(p,q)} = δᵢₚ δ_lq · dim eⱼAeₖ.
ZPlusRing cartan_pseudoring(const AlgebraAnalysis& an);

/// Analysis of the enveloping algebra with the product idempotents
/// supplied, plus the label bookkeeping for free bimodules.
struct EnvelopingContext {
  AlgebraAnalysis env;
  std::size_t k = 0;  // number of idempotents of the base algebra
  /// env block index (p,q) ↔ free bimodule label (q,p).
  std::size_t free_label_of_env_block(std::size_t blk) const {
    return (blk % k) * k + (blk / k);
  }
};
EnvelopingContext enveloping_context(const AlgebraAnalysis& an);

/// Monoidal subcategory on a list of indecomposable generators, closed
/// under ⊗_A up to summands; carries the closure table and its pseudoring.
struct SemigroupModel {
  AlgebraPtr alg;
  std::vector<Bimodule> gens;
  std::vector<std::string> labels;
  struct PairDecomp {
    TensorResult tensor;
    std::vector<std::size_t> comp;  // generator index per summand
    std::vector<Matrix> incl;       // gens[comp[s]] → tensor.object
    std::vector<Matrix> proj;       // tensor.object → gens[comp[s]]
  };
  std::vector<PairDecomp> pairs;  // index a·g + b
  ZPlusRing ring;
  /// Hom spaces between generators.
  std::vector<HomSpace> homs;  // index a·g + b : Hom(gens[a], gens[b])
};
SemigroupModel semigroup_model(const AlgebraPtr& alg,
                               std::vector<Bimodule> gens,
                               std::vector<std::string> labels);

/// free(k,l) ⊗ v ⊗ free(i,j) is projective for all label pairs.
bool is_centrally_projective(const AlgebraAnalysis& an, const Bimodule& v);

}  // namespace bimodcat
