#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bimodcat/tensor.hpp"

namespace bimodcat {

/// Finite model of the projective objects of a bimodule monoidal category:
/// a list of pairwise non-isomorphic indecomposables with all Hom spaces,
/// composition (packaged as the endomorphism algebra of the direct sum),
/// and the decomposed left/right tensor action on Hom spaces.
///
/// Action data: for object R and a Hom pair (a,b), the linear map taking
/// f ∈ Hom(Pₐ,P_b) to the block components of id_R⊗f (resp. f⊗id_R) under
/// the chosen decompositions R⊗Pₐ ≅ ⊕ P_{src[t]} and R⊗P_b ≅ ⊕ P_{dst[s]}.
/// Output coordinates run over (s,t) pairs, s-major, block (s,t) being
/// Hom(P_{src[t]}, P_{dst[s]}) coordinates.
struct ActionComponent {
  std::vector<std::size_t> src_labels, dst_labels;
  std::vector<std::size_t> block_offset;  // size S·T+1
  Matrix map;
};

struct ProjModel {
  std::vector<std::string> labels;
  std::size_t num_objects = 0;
  std::vector<std::size_t> hom_dim;       // [pair(a,b)]
  std::vector<std::size_t> slice_offset;  // into endo coordinates
  AlgebraPtr endo;
  std::vector<Vec> object_idems;  // id_{Pₐ} in endo coordinates
  bool has_left_action = true, has_right_action = true;
  std::vector<ActionComponent> left_act, right_act;  // [R·n² + pair(a,b)]
  ZPlusRing ring;  // decomposition multiplicities of the tensor action

  // Concrete backing; empty for abstract quotient models.
  std::vector<Bimodule> objects;

  std::size_t pair(std::size_t a, std::size_t b) const {
    return a * num_objects + b;
  }
  const ActionComponent& left(std::size_t r, std::size_t a,
                              std::size_t b) const {
    return left_act[r * num_objects * num_objects + pair(a, b)];
  }
  const ActionComponent& right(std::size_t r, std::size_t a,
                               std::size_t b) const {
    return right_act[r * num_objects * num_objects + pair(a, b)];
  }
  /// Slice of an endo-coordinate vector at Hom(a,b).
  Vec slice_of(const Vec& endo_vec, std::size_t a, std::size_t b) const;
  /// Embed a Hom(a,b) coordinate vector into endo coordinates.
  Vec embed(const Vec& hom_vec, std::size_t a, std::size_t b) const;
};

/// One subspace per ordered object pair, inside Hom(Pₐ,P_b).
struct HomIdeal {
  std::vector<Subspace> slices;  // [pair(a,b)]
  std::size_t total_dim() const;
};

/// Model on all free bimodules of a basic algebra, built from corner
/// spaces (Hom(Aeᵢ⊗eⱼA, Aeₖ⊗e_lA) ≅ eᵢAeₖ ⊗ e_lAeⱼ).
ProjModel build_proj_model(const AlgebraAnalysis& an);
/// Model on the generators of a closed monoidal subcategory.
ProjModel build_proj_model(const SemigroupModel& sm);

/// Jacobson radical of the endomorphism algebra sliced into Hom
/// components. Slices between distinct objects are full Hom spaces
/// (verified).
HomIdeal category_radical(const ProjModel& pm);

enum class ActionSide { left, right, two_sided };

/// {f : id_R⊗f stays radical for every object R} (left), mirrored (right),
/// or with both sides tensored (two_sided); computed as intersections of
/// preimages of the radical slices under the action maps.
HomIdeal module_radical(const ProjModel& pm, ActionSide side);

struct StabilityReport {
  bool stable = true;
  std::string witness;
};
StabilityReport is_stable_ideal(const ProjModel& pm, const HomIdeal& ideal,
                                bool under_left, bool under_right);

/// Quotient Hom spaces with induced composition and action. Keeps an
/// action side only when the ideal is stable under it; throws
/// NotStableError when composition closure fails or no action side
/// survives being requested.
ProjModel quotient_model(const ProjModel& pm, const HomIdeal& ideal);

struct ExactnessReport {
  bool base_discrete = true;
  bool base_nearring = true;
  bool exact = false;
  std::size_t radical_total = 0;
  std::vector<std::size_t> radical_dims;  // per pair
  std::size_t quotient_endo_dim = 0;
  /// Re-check on the quotient model; run only over a discrete base.
  std::optional<bool> quotient_radical_zero;
};
ExactnessReport exactness_report(const ProjModel& pm);

struct NontrivialityReport {
  bool vacuous = true;
  std::size_t from = 0, to = 0;
  std::size_t hom_dim = 0, radical_dim = 0;
  bool proper = false;
};
/// On a model with at least two objects: the left module radical slice at
/// the first cross pair with nonzero Hom is a proper subspace.
NontrivialityReport radical_nontriviality_check(const ProjModel& pm);

struct HomVanishingReport {
  bool holds = true;
  IdealMembers complement;
  /// (q, p, dim Hom(P_q,P_p)) for the first failing pair.
  std::optional<std::tuple<std::size_t, std::size_t, std::size_t>> witness;
};
/// Checks dim Hom(P_q, P_p) = 0 for q ∈ Iᶜ∖I and p ∈ I, where Iᶜ is the
/// ideal generated by the complement of I in the model's pseudoring.
HomVanishingReport hom_vanishing(const ProjModel& pm, const IdealMembers& i);

/// Precomputed composition-factor tables for the Serre-subcategory
/// condition over bimod(A): factors[a][b][l'][l] is the multiplicity of
/// the simple bimodule l in rdual(Pₐ) ⊗ S_{l'} ⊗ ldual(P_b).
struct SerreContext {
  std::size_t k = 0;           // idempotents of the base algebra
  std::size_t num_simples = 0; // = k²
  std::vector<std::vector<std::size_t>> factors;  // [((a·m)+b)·m+l'][l]
  ZPlusRing projective_ring;   // cartan pseudoring, labels (i,j)
  std::size_t proj_label_of_simple(std::size_t t) const {
    return (t % k) * k + (t / k);
  }
};
SerreContext make_serre_context(const AlgebraAnalysis& an);

/// No simple in sigma occurs in rdual(P) ⊗ L' ⊗ ldual(Q) for L' outside
/// sigma; sigma is indexed by simple bimodule labels (enveloping blocks).
bool serre_condition(const SerreContext& ctx, const std::vector<bool>& sigma);
/// The projective covers of sigma span a two-sided ℤ₊-ideal.
bool serre_ideal_condition(const SerreContext& ctx,
                           const std::vector<bool>& sigma);

/// Simple bimodules over A (simple modules of the enveloping algebra with
/// the bimodule structure restored), indexed by enveloping block.
std::vector<Bimodule> simple_bimodules(const AlgebraAnalysis& an,
                                       const EnvelopingContext& ctx);

}  // namespace bimodcat
