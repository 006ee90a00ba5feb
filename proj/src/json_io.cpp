#include "bimodcat/json_io.hpp"

#include <sstream>

namespace bimodcat {

Rat json_to_rational(const json& j) {
  if (j.is_number_integer())
    return Rat(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  throw std::invalid_argument("expected a rational (\"p/q\" string)");
}

json rational_to_json(const Rat& r) { return rat_to_string(r); }

Vec json_to_vec(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array");
  Vec v;
  for (const auto& x : j) v.push_back(json_to_rational(x));
  return v;
}

json vec_to_json(const Vec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(rational_to_json(x));
  return a;
}

Matrix json_to_matrix(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a matrix");
  std::vector<Vec> rows;
  for (const auto& r : j) rows.push_back(json_to_vec(r));
  return Matrix::from_rows(rows);
}

json matrix_to_json(const Matrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(vec_to_json(m.row(i)));
  return a;
}

AlgebraInput parse_algebra_json(const json& j) {
  if (!j.is_object() || !j.contains("type"))
    throw std::invalid_argument("algebra input must be an object with a type");
  std::string type = j.at("type").get<std::string>();
  if (type == "structure_constants") {
    std::size_t n = j.at("dim").get<std::size_t>();
    const json& table = j.at("table");
    if (table.size() != n)
      throw std::invalid_argument("table has wrong outer size");
    std::vector<Rat> c;
    c.reserve(n * n * n);
    for (const auto& layer : table) {
      if (layer.size() != n)
        throw std::invalid_argument("table has wrong middle size");
      for (const auto& row : layer) {
        Vec v = json_to_vec(row);
        if (v.size() != n)
          throw std::invalid_argument("table has wrong inner size");
        for (auto& x : v) c.push_back(std::move(x));
      }
    }
    Vec unit = json_to_vec(j.at("unit"));
    if (unit.size() != n) throw std::invalid_argument("unit length mismatch");
    AlgebraInput in;
    in.algebra =
        std::make_shared<Algebra>(Algebra::from_dense_table(n, c, unit));
    if (j.contains("idempotents")) {
      std::vector<Vec> idems;
      for (const auto& e : j.at("idempotents")) {
        Vec v = json_to_vec(e);
        if (v.size() != n)
          throw std::invalid_argument("idempotent length mismatch");
        idems.push_back(std::move(v));
      }
      in.idempotents = std::move(idems);
    }
    for (std::size_t i = 0; i < n; ++i)
      in.basis_labels.push_back("b" + std::to_string(i));
    return in;
  }
  if (type == "bound_quiver") {
    BoundQuiver q;
    q.vertex_count = j.at("vertices").get<std::size_t>();
    for (const auto& a : j.at("arrows"))
      q.arrows.push_back({a.at("name").get<std::string>(),
                          a.at("from").get<std::size_t>(),
                          a.at("to").get<std::size_t>()});
    if (j.contains("relations")) {
      for (const auto& rel : j.at("relations")) {
        Relation r;
        auto read_term = [](const json& t) -> RelationTerm {
          RelationTerm term;
          term.coeff = t.contains("coeff") ? json_to_rational(t.at("coeff"))
                                           : Rat(1);
          for (const auto& name : t.at("path"))
            term.path.push_back(name.get<std::string>());
          return term;
        };
        if (rel.is_array()) {
          for (const auto& t : rel) r.push_back(read_term(t));
        } else {
          r.push_back(read_term(rel));
        }
        q.relations.push_back(std::move(r));
      }
    }
    QuiverAlgebra qa = from_bound_quiver(q);
    AlgebraInput in;
    in.algebra = std::make_shared<Algebra>(std::move(qa.algebra));
    in.idempotents = std::move(qa.vertex_idempotents);
    in.basis_labels = std::move(qa.basis_labels);
    return in;
  }
  throw std::invalid_argument("unknown algebra input type: " + type);
}

ZPlusRing parse_pseudoring_json(const json& j) {
  ZPlusRing r;
  for (const auto& n : j.at("basis")) r.names.push_back(n.get<std::string>());
  std::size_t m = r.names.size();
  const json& table = j.at("table");
  if (table.size() != m) throw std::invalid_argument("table size mismatch");
  for (const auto& layer : table) {
    if (layer.size() != m) throw std::invalid_argument("table size mismatch");
    for (const auto& row : layer) {
      if (row.size() != m) throw std::invalid_argument("table size mismatch");
      for (const auto& x : row) {
        if (!x.is_number_integer() || x.get<std::int64_t>() < 0)
          throw std::invalid_argument(
              "pseudoring entries must be nonnegative integers");
        r.table.push_back(x.get<std::int64_t>());
      }
    }
  }
  return r;
}

json pseudoring_to_json(const ZPlusRing& r) {
  json out;
  out["basis"] = r.names;
  json table = json::array();
  std::size_t m = r.size();
  for (std::size_t i = 0; i < m; ++i) {
    json layer = json::array();
    for (std::size_t j2 = 0; j2 < m; ++j2) {
      json row = json::array();
      for (std::size_t k = 0; k < m; ++k) row.push_back(r.c(i, j2, k));
      layer.push_back(std::move(row));
    }
    table.push_back(std::move(layer));
  }
  out["table"] = std::move(table);
  return out;
}

Bimodule parse_bimodule_json(const json& j, const AlgebraPtr& left,
                             const AlgebraPtr& right) {
  Bimodule m;
  m.left_alg = left;
  m.right_alg = right;
  m.dim = j.at("dim").get<std::size_t>();
  for (const auto& a : j.at("left_action"))
    m.left_action.push_back(json_to_matrix(a));
  for (const auto& a : j.at("right_action"))
    m.right_action.push_back(json_to_matrix(a));
  ValidationReport rep = validate_module(m);
  if (!rep.ok) throw std::invalid_argument("invalid bimodule: " + rep.detail);
  return m;
}

json bimodule_to_json(const Bimodule& m) {
  json out;
  out["dim"] = m.dim;
  json l = json::array(), r = json::array();
  for (const auto& a : m.left_action) l.push_back(matrix_to_json(a));
  for (const auto& a : m.right_action) r.push_back(matrix_to_json(a));
  out["left_action"] = std::move(l);
  out["right_action"] = std::move(r);
  return out;
}

std::vector<GeneratorSpec> parse_generator_spec(const json& j) {
  std::vector<GeneratorSpec> out;
  for (const auto& g : j.at("generators")) {
    GeneratorSpec spec;
    spec.kind = g.at("kind").get<std::string>();
    if (spec.kind == "free") {
      spec.i = g.at("i").get<std::size_t>();
      spec.j = g.at("j").get<std::size_t>();
    } else if (spec.kind == "explicit") {
      spec.module = g.at("module");
    } else if (spec.kind != "regular") {
      throw std::invalid_argument("unknown generator kind: " + spec.kind);
    }
    if (g.contains("label")) spec.label = g.at("label").get<std::string>();
    out.push_back(std::move(spec));
  }
  return out;
}

std::string content_digest(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

}  // namespace bimodcat
