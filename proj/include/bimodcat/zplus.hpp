#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bimodcat/errors.hpp"

namespace bimodcat {

/// Finite pseudoring with a distinguished basis whose structure constants
/// are nonnegative integers: bᵢbⱼ = Σₖ c[i][j][k] bₖ.
struct ZPlusRing {
  std::vector<std::string> names;
  std::vector<std::int64_t> table;  // c[(i*m+j)*m+k]

  std::size_t size() const { return names.size(); }
  std::int64_t c(std::size_t i, std::size_t j, std::size_t k) const {
    std::size_t m = size();
    return table[(i * m + j) * m + k];
  }
};

struct PseudoringReport {
  bool ok = true;
  std::string detail;
};
/// Nonnegativity and associativity over ℤ.
PseudoringReport validate_pseudoring(const ZPlusRing& r);

/// Coefficient of b_l in bᵢ·bⱼ·bₖ.
std::int64_t triple_coeff(const ZPlusRing& r, std::size_t i, std::size_t j,
                          std::size_t k, std::size_t l);

/// For each basis element, a witness pair (j,k) with bᵢ appearing in
/// bⱼbᵢbₖ; absent for failing elements.
struct NearringReport {
  bool is_nearring = true;
  std::vector<std::optional<std::pair<std::size_t, std::size_t>>> witnesses;
  std::optional<std::size_t> failing;
};
NearringReport nearring_report(const ZPlusRing& r);
bool is_nearring(const ZPlusRing& r);

using IdealMembers = std::set<std::size_t>;

/// Is the member set closed under one-sided positive products?
bool is_ideal(const ZPlusRing& r, const IdealMembers& k);

/// Smallest member set containing the seed and closed under one-sided
/// products, by fixpoint iteration.
IdealMembers ideal_closure(const ZPlusRing& r, const IdealMembers& seed);

/// Ideal generated by the complement of k. On nearrings this is
/// cross-checked against the direct triple-product membership
/// characterization (they agree by nonnegativity; disagreement is an
/// internal error).
IdealMembers complement_ideal(const ZPlusRing& r, const IdealMembers& k);

struct DiscretenessReport {
  bool discrete = true;
  std::optional<IdealMembers> counterexample;  // ideal with I ∩ Iᶜ ≠ ∅
};
/// Enumerates all 2^m subsets; throws TooLargeError past the cap.
DiscretenessReport is_discrete_bruteforce(const ZPlusRing& r,
                                          std::size_t max_basis = 15);

/// leq[i][j] = (bᵢ ≤LR bⱼ): bᵢ appears in some bₖbⱼb_l. Transitivity is
/// asserted; reflexivity holds iff nearring.
std::vector<std::vector<bool>> leq_lr(const ZPlusRing& r);

struct CellDecomposition {
  bool discrete = false;
  std::optional<std::pair<std::size_t, std::size_t>> asymmetric_pair;
  std::vector<std::vector<std::size_t>> cells;  // ≤LR equivalence classes
  std::vector<ZPlusRing> cell_rings;            // only when discrete
};
/// Requires a nearring (throws NotNearringError). Discrete iff ≤LR is
/// symmetric; then the cells are two-sided ideals with vanishing cross
/// products and each is indecomposable discrete (verified).
CellDecomposition cell_decomposition(const ZPlusRing& r);

/// No nontrivial two-sided ideal: closure of each singleton is everything.
bool is_indecomposable_discrete(const ZPlusRing& r);

ZPlusRing direct_sum(const ZPlusRing& a, const ZPlusRing& b);

}  // namespace bimodcat
