#include "bimodcat/quiver.hpp"

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bimodcat {
namespace {

// Paths are stored as arrow index sequences in composition order (the last
// entry acts first). A trivial path is an empty sequence at a vertex.
struct Path {
  std::size_t source;
  std::vector<std::size_t> arrows;
  std::size_t length() const { return arrows.size(); }
};

// Echelon over path coordinates with pivot = LARGEST path id. Path ids
// grow with length, so normal forms prefer shorter paths.
class TopEchelon {
 public:
  // Returns the new pivot id, or nothing when the row was dependent.
  std::optional<std::size_t> insert(SVec v) {
    while (!v.empty()) {
      auto it = rows_.find(v.back().first);
      if (it == rows_.end()) {
        Rat inv = 1 / v.back().second;
        for (auto& [i, c] : v) c *= inv;
        std::size_t piv = v.back().first;
        rows_.emplace(piv, std::move(v));
        return piv;
      }
      v = sparse_axpy(v, v.back().second, it->second);
    }
    return std::nullopt;
  }
  SVec reduce(SVec v) const {
    std::size_t scan = v.size();
    while (scan > 0) {
      auto it = rows_.find(v[scan - 1].first);
      if (it == rows_.end()) {
        --scan;
        continue;
      }
      v = sparse_axpy(v, v[scan - 1].second, it->second);
      scan = v.size();
    }
    return v;
  }
  bool is_pivot(std::size_t id) const { return rows_.count(id) > 0; }
  const SVec& row(std::size_t piv) const { return rows_.at(piv); }

 private:
  std::map<std::size_t, SVec> rows_;
};

SVec sorted_sparse(std::vector<std::pair<std::size_t, Rat>> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SVec out;
  for (auto& [i, c] : terms) {
    if (!out.empty() && out.back().first == i) {
      out.back().second += c;
      if (is_zero(out.back().second)) out.pop_back();
    } else if (!is_zero(c)) {
      out.emplace_back(i, c);
    }
  }
  return out;
}

struct Builder {
  const BoundQuiver& q;
  std::vector<Path> paths;
  std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> ids;
  std::vector<std::size_t> target_of;
  TopEchelon ech;

  explicit Builder(const BoundQuiver& quiver) : q(quiver) {}

  std::size_t arrow_target(std::size_t a) const { return q.arrows[a].to; }
  std::size_t arrow_source(std::size_t a) const { return q.arrows[a].from; }

  std::size_t intern(Path p) {
    auto key = std::make_pair(p.source, p.arrows);
    auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    std::size_t tgt =
        p.arrows.empty() ? p.source : arrow_target(p.arrows.front());
    paths.push_back(std::move(p));
    target_of.push_back(tgt);
    ids.emplace(std::move(key), paths.size() - 1);
    return paths.size() - 1;
  }

  std::optional<std::size_t> lookup(std::size_t source,
                                    const std::vector<std::size_t>& arrows) const {
    auto it = ids.find(std::make_pair(source, arrows));
    if (it == ids.end()) return std::nullopt;
    return it->second;
  }

  // a∘p; only looks up, never creates (all paths of a processed length are
  // enumerated up front).
  std::optional<std::size_t> left_ext(std::size_t arrow, std::size_t pid) const {
    if (arrow_source(arrow) != target_of[pid]) return std::nullopt;
    std::vector<std::size_t> arrows = paths[pid].arrows;
    arrows.insert(arrows.begin(), arrow);
    return lookup(paths[pid].source, arrows);
  }
  // p∘a
  std::optional<std::size_t> right_ext(std::size_t pid, std::size_t arrow) const {
    if (arrow_target(arrow) != paths[pid].source) return std::nullopt;
    std::vector<std::size_t> arrows = paths[pid].arrows;
    arrows.push_back(arrow);
    return lookup(arrow_source(arrow), arrows);
  }
};

}  // namespace

QuiverAlgebra from_bound_quiver(const BoundQuiver& q, std::size_t max_length,
                                std::size_t max_dim) {
  std::size_t nv = q.vertex_count, na = q.arrows.size();
  if (nv == 0) throw std::invalid_argument("quiver has no vertices");
  std::map<std::string, std::size_t> arrow_index;
  for (std::size_t a = 0; a < na; ++a) {
    const Arrow& ar = q.arrows[a];
    if (ar.from >= nv || ar.to >= nv)
      throw std::invalid_argument("arrow endpoint out of range: " + ar.name);
    if (!arrow_index.emplace(ar.name, a).second)
      throw std::invalid_argument("duplicate arrow name: " + ar.name);
  }

  Builder b(q);
  for (std::size_t v = 0; v < nv; ++v) b.intern({v, {}});
  for (std::size_t a = 0; a < na; ++a) b.intern({q.arrows[a].from, {a}});

  // Parse and validate relations; interning is deferred until the level at
  // which the relation is inserted, so path ids stay ordered by length.
  struct ParsedRelation {
    std::vector<std::pair<Path, Rat>> terms;
    std::size_t max_len = 0;
  };
  std::vector<ParsedRelation> rels;
  std::size_t deepest_relation = 0;
  for (const auto& rel : q.relations) {
    if (rel.empty()) continue;
    ParsedRelation pr;
    std::optional<std::pair<std::size_t, std::size_t>> st;
    for (const auto& term : rel) {
      if (term.path.size() < 2)
        throw std::invalid_argument("relation term has length < 2");
      Path p{0, {}};
      for (auto it = term.path.rbegin(); it != term.path.rend(); ++it) {
        auto ai = arrow_index.find(*it);
        if (ai == arrow_index.end())
          throw std::invalid_argument("unknown arrow in relation: " + *it);
        std::size_t a = ai->second;
        if (p.arrows.empty()) {
          p.source = q.arrows[a].from;
        } else if (q.arrows[a].from != b.arrow_target(p.arrows.front())) {
          throw std::invalid_argument("relation path is not composable");
        }
        p.arrows.insert(p.arrows.begin(), a);
      }
      std::size_t tgt = b.arrow_target(p.arrows.front());
      if (!st) st = {p.source, tgt};
      if (st->first != p.source || st->second != tgt)
        throw std::invalid_argument(
            "relation terms do not share source and target");
      pr.max_len = std::max(pr.max_len, p.arrows.size());
      pr.terms.emplace_back(std::move(p), term.coeff);
    }
    deepest_relation = std::max(deepest_relation, pr.max_len);
    rels.push_back(std::move(pr));
  }

  std::vector<std::size_t> level_start = {0, nv, nv + na};
  std::set<std::size_t> extended;  // pivot ids whose row was extended

  // Single-arrow extensions of a stored echelon row: these generate all
  // two-sided multiples of the relation ideal level by level.
  auto extensions_of = [&](std::size_t piv) {
    std::vector<SVec> out;
    const SVec row = b.ech.row(piv);
    for (std::size_t a = 0; a < na; ++a) {
      std::vector<std::pair<std::size_t, Rat>> lt, rt;
      for (const auto& [pid, c] : row) {
        if (auto e = b.left_ext(a, pid)) lt.emplace_back(*e, c);
        if (auto e = b.right_ext(pid, a)) rt.emplace_back(*e, c);
      }
      if (!lt.empty()) out.push_back(sorted_sparse(std::move(lt)));
      if (!rt.empty()) out.push_back(sorted_sparse(std::move(rt)));
    }
    return out;
  };

  std::size_t basis_count = nv + na;
  std::size_t level = 2;
  while (true) {
    if (level > max_length)
      throw NotFiniteDimensionalError(
          "independent paths persist past the length cap");
    // Enumerate every path of this length.
    for (std::size_t pid = level_start[level - 1]; pid < level_start[level];
         ++pid) {
      for (std::size_t a = 0; a < na; ++a) {
        if (b.arrow_source(a) != b.target_of[pid]) continue;
        Path p = b.paths[pid];
        p.arrows.insert(p.arrows.begin(), a);
        b.intern(std::move(p));
      }
    }
    level_start.push_back(b.paths.size());
    if (b.paths.size() > 64 * max_dim + 1024)
      throw NotFiniteDimensionalError("path count exceeds the cap");

    // Collect this level's rows, then insert with cascading: a row whose
    // pivot lands below the current level is extended immediately (its
    // extensions have coordinates at this level or below).
    std::vector<SVec> pending;
    for (const auto& r : rels) {
      if (r.max_len != level) continue;
      std::vector<std::pair<std::size_t, Rat>> terms;
      for (const auto& [p, c] : r.terms) {
        auto id = b.lookup(p.source, p.arrows);
        if (!id)
          throw std::invalid_argument("relation path does not exist");
        terms.emplace_back(*id, c);
      }
      pending.push_back(sorted_sparse(std::move(terms)));
    }
    std::vector<std::size_t> to_extend;
    for (std::size_t pid = 0; pid < level_start[level]; ++pid)
      if (b.ech.is_pivot(pid) && b.paths[pid].length() + 1 == level &&
          !extended.count(pid))
        to_extend.push_back(pid);
    for (std::size_t piv : to_extend) {
      extended.insert(piv);
      for (auto& row : extensions_of(piv)) pending.push_back(std::move(row));
    }
    while (!pending.empty()) {
      SVec row = std::move(pending.back());
      pending.pop_back();
      auto piv = b.ech.insert(std::move(row));
      if (!piv) continue;
      if (b.paths[*piv].length() + 1 <= level && !extended.count(*piv)) {
        extended.insert(*piv);
        for (auto& ext : extensions_of(*piv)) pending.push_back(std::move(ext));
      }
    }

    std::size_t fresh = 0;
    for (std::size_t pid = level_start[level]; pid < level_start[level + 1];
         ++pid)
      if (!b.ech.is_pivot(pid)) ++fresh;
    basis_count += fresh;
    if (basis_count > max_dim)
      throw NotFiniteDimensionalError("dimension exceeds the cap");
    if (fresh == 0 && level >= deepest_relation) break;
    ++level;
  }

  std::vector<std::size_t> basis_ids;
  for (std::size_t pid = 0; pid < b.paths.size(); ++pid)
    if (!b.ech.is_pivot(pid) && b.paths[pid].length() < level)
      basis_ids.push_back(pid);
  std::size_t dim = basis_ids.size();
  std::vector<std::size_t> coord_of(b.paths.size(), SIZE_MAX);
  for (std::size_t i = 0; i < dim; ++i) coord_of[basis_ids[i]] = i;

  auto normal_form = [&](std::size_t pid) -> SVec {
    SVec red = b.ech.reduce({{pid, Rat(1)}});
    std::vector<std::pair<std::size_t, Rat>> out;
    for (const auto& [id, c] : red) {
      if (coord_of[id] == SIZE_MAX)
        throw std::logic_error("normal form contains a non-basis path");
      out.emplace_back(coord_of[id], c);
    }
    return sorted_sparse(std::move(out));
  };

  // Multiply one arrow onto a combination of basis paths and reduce.
  auto arrow_times = [&](std::size_t arrow, const SVec& v) -> SVec {
    std::vector<std::pair<std::size_t, Rat>> acc;
    for (const auto& [coord, c] : v) {
      auto ext = b.left_ext(arrow, basis_ids[coord]);
      if (!ext) continue;
      for (const auto& [coord2, c2] : normal_form(*ext))
        acc.emplace_back(coord2, c * c2);
    }
    return sorted_sparse(std::move(acc));
  };

  std::vector<SVec> prods(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const Path& p = b.paths[basis_ids[i]];
    for (std::size_t j = 0; j < dim; ++j) {
      if (p.source != b.target_of[basis_ids[j]]) continue;
      SVec acc{{j, Rat(1)}};
      for (auto it = p.arrows.rbegin(); it != p.arrows.rend() && !acc.empty();
           ++it)
        acc = arrow_times(*it, acc);
      prods[i * dim + j] = std::move(acc);
    }
  }
  Vec unit(dim, Rat(0));
  std::vector<Vec> vertex_idems(nv, Vec(dim, Rat(0)));
  for (std::size_t v = 0; v < nv; ++v) {
    unit[coord_of[v]] = 1;
    vertex_idems[v][coord_of[v]] = 1;
  }

  std::vector<std::string> labels(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const Path& p = b.paths[basis_ids[i]];
    if (p.arrows.empty()) {
      labels[i] = "e" + std::to_string(p.source);
    } else {
      std::ostringstream os;
      for (std::size_t t = 0; t < p.arrows.size(); ++t)
        os << (t ? "*" : "") << q.arrows[p.arrows[t]].name;
      labels[i] = os.str();
    }
  }

  Algebra alg(dim, std::move(prods), std::move(unit));
  ValidationReport rep = validate_algebra(alg);
  if (!rep.ok)
    throw std::invalid_argument(
        "relations produce an inconsistent multiplication table: " +
        rep.detail);
  return {std::move(alg), std::move(vertex_idems), std::move(labels)};
}

}  // namespace bimodcat
