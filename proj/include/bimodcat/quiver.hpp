#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bimodcat/algebra.hpp"

namespace bimodcat {

struct Arrow {
  std::string name;
  std::size_t from = 0, to = 0;
};

/// One summand of a relation: coeff · (composable arrow path). Arrows are
/// listed in composition order, so {"b","a"} is b∘a (a applied first).
struct RelationTerm {
  Rat coeff;
  std::vector<std::string> path;
};
using Relation = std::vector<RelationTerm>;

/// Quiver with relations. Every relation must be a combination of paths of
/// length >= 2 sharing one source and one target.
struct BoundQuiver {
  std::size_t vertex_count = 0;
  std::vector<Arrow> arrows;
  std::vector<Relation> relations;
};

/// Path algebra modulo the relation ideal, built by increasing path length
/// with linear reduction. Arrows satisfy a = e_target·a·e_source and p·q is
/// defined when source(p) = target(q).
struct QuiverAlgebra {
  Algebra algebra;
  std::vector<Vec> vertex_idempotents;
  std::vector<std::string> basis_labels;
};

/// Throws NotFiniteDimensionalError when independent paths persist past
/// max_length, and std::invalid_argument on malformed relations.
QuiverAlgebra from_bound_quiver(const BoundQuiver& q,
                                std::size_t max_length = 32,
                                std::size_t max_dim = 4096);

}  // namespace bimodcat
