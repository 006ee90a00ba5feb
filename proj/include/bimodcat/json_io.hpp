#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "bimodcat/algebra.hpp"
#include "bimodcat/module.hpp"
#include "bimodcat/quiver.hpp"
#include "bimodcat/zplus.hpp"

namespace bimodcat {

using json = nlohmann::json;

/// Rationals travel as "p/q" strings ("p" when q = 1); integer JSON
/// numbers are accepted on input.
Rat json_to_rational(const json& j);
json rational_to_json(const Rat& r);

Vec json_to_vec(const json& j);
json vec_to_json(const Vec& v);
/// Matrices as row-major nested arrays.
Matrix json_to_matrix(const json& j);
json matrix_to_json(const Matrix& m);

struct AlgebraInput {
  AlgebraPtr algebra;
  std::optional<std::vector<Vec>> idempotents;
  std::vector<std::string> basis_labels;
};

/// {"type":"structure_constants","dim":n,"table":[[[..]]],"unit":[..],
///  "idempotents":[[..],..]?}  or
/// {"type":"bound_quiver","vertices":n,
///  "arrows":[{"name":..,"from":..,"to":..}],
///  "relations":[[{"coeff":..,"path":[names]},..],..]}
/// Vertices are 0-based; single-term relations may be given as bare
/// objects. Quiver input supplies the vertex idempotents.
AlgebraInput parse_algebra_json(const json& j);

/// {"basis":[names],"table":[[[n]]]}
ZPlusRing parse_pseudoring_json(const json& j);
json pseudoring_to_json(const ZPlusRing& r);

/// {"dim":d,"left_action":[matrix..]?,"right_action":[matrix..]?}
Bimodule parse_bimodule_json(const json& j, const AlgebraPtr& left,
                             const AlgebraPtr& right);
json bimodule_to_json(const Bimodule& m);

/// Generator spec for a monoidal subcategory:
/// {"generators":[{"kind":"regular"} | {"kind":"free","i":..,"j":..} |
///                {"kind":"explicit","label":..,"module":{..}}]}
struct GeneratorSpec {
  std::string kind;
  std::size_t i = 0, j = 0;
  std::optional<json> module;
  std::string label;
};
std::vector<GeneratorSpec> parse_generator_spec(const json& j);

/// FNV-1a 64-bit content digest, hex encoded.
std::string content_digest(const std::string& bytes);

}  // namespace bimodcat
