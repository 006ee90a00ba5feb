#include "bimodcat/zplus.hpp"

#include <sstream>
#include <stdexcept>

namespace bimodcat {

PseudoringReport validate_pseudoring(const ZPlusRing& r) {
  std::size_t m = r.size();
  if (r.table.size() != m * m * m)
    return {false, "table size does not match basis size"};
  for (auto v : r.table)
    if (v < 0) return {false, "negative structure constant"};
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l) {
          std::int64_t lhs = 0, rhs = 0;
          for (std::size_t p = 0; p < m; ++p) {
            lhs += r.c(i, j, p) * r.c(p, k, l);
            rhs += r.c(j, k, p) * r.c(i, p, l);
          }
          if (lhs != rhs) {
            std::ostringstream os;
            os << "associativity fails at (i,j,k,l) = (" << i << "," << j
               << "," << k << "," << l << ")";
            return {false, os.str()};
          }
        }
  return {true, ""};
}

std::int64_t triple_coeff(const ZPlusRing& r, std::size_t i, std::size_t j,
                          std::size_t k, std::size_t l) {
  std::int64_t s = 0;
  for (std::size_t p = 0; p < r.size(); ++p)
    s += r.c(i, j, p) * r.c(p, k, l);
  return s;
}

NearringReport nearring_report(const ZPlusRing& r) {
  NearringReport rep;
  std::size_t m = r.size();
  rep.witnesses.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m && !rep.witnesses[i]; ++j)
      for (std::size_t k = 0; k < m && !rep.witnesses[i]; ++k)
        if (triple_coeff(r, j, i, k, i) > 0) rep.witnesses[i] = {{j, k}};
    if (!rep.witnesses[i]) {
      rep.is_nearring = false;
      if (!rep.failing) rep.failing = i;
    }
  }
  return rep;
}

bool is_nearring(const ZPlusRing& r) { return nearring_report(r).is_nearring; }

bool is_ideal(const ZPlusRing& r, const IdealMembers& k) {
  std::size_t m = r.size();
  for (auto j : k)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t l = 0; l < m; ++l) {
        if (r.c(i, j, l) > 0 && !k.count(l)) return false;
        if (r.c(j, i, l) > 0 && !k.count(l)) return false;
      }
  return true;
}

IdealMembers ideal_closure(const ZPlusRing& r, const IdealMembers& seed) {
  std::size_t m = r.size();
  IdealMembers k = seed;
  std::vector<std::size_t> queue(k.begin(), k.end());
  while (!queue.empty()) {
    std::size_t j = queue.back();
    queue.pop_back();
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t l = 0; l < m; ++l) {
        if ((r.c(i, j, l) > 0 || r.c(j, i, l) > 0) && !k.count(l)) {
          k.insert(l);
          queue.push_back(l);
        }
      }
  }
  return k;
}

IdealMembers complement_ideal(const ZPlusRing& r, const IdealMembers& k) {
  std::size_t m = r.size();
  IdealMembers rest;
  for (std::size_t j = 0; j < m; ++j)
    if (!k.count(j)) rest.insert(j);
  IdealMembers closure = ideal_closure(r, rest);
  if (is_nearring(r)) {
    // Direct characterization: b_l lies in the complement ideal iff it
    // appears in some bᵢbⱼbₖ with j outside k. Equivalent to the fixpoint
    // closure by nonnegativity; verified here.
    IdealMembers direct;
    for (std::size_t l = 0; l < m; ++l) {
      bool in = false;
      for (auto j : rest)
        for (std::size_t i = 0; i < m && !in; ++i)
          for (std::size_t kk = 0; kk < m && !in; ++kk)
            if (triple_coeff(r, i, j, kk, l) > 0) in = true;
      if (in) direct.insert(l);
    }
    if (direct != closure)
      throw std::logic_error(
          "ideal closure disagrees with the triple-product characterization");
  }
  return closure;
}

DiscretenessReport is_discrete_bruteforce(const ZPlusRing& r,
                                          std::size_t max_basis) {
  std::size_t m = r.size();
  if (m > max_basis)
    throw TooLargeError("basis too large for subset enumeration");
  for (std::size_t mask = 0; mask < (std::size_t(1) << m); ++mask) {
    IdealMembers k;
    for (std::size_t j = 0; j < m; ++j)
      if (mask & (std::size_t(1) << j)) k.insert(j);
    if (!is_ideal(r, k)) continue;
    IdealMembers comp = complement_ideal(r, k);
    for (auto j : k)
      if (comp.count(j)) return {false, k};
  }
  return {true, std::nullopt};
}

std::vector<std::vector<bool>> leq_lr(const ZPlusRing& r) {
  std::size_t m = r.size();
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m && !leq[i][j]; ++k)
        for (std::size_t l = 0; l < m && !leq[i][j]; ++l)
          if (triple_coeff(r, k, j, l, i) > 0) leq[i][j] = true;
    }
  // Transitivity must hold by positivity; failure is an internal error.
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        if (leq[i][j] && leq[j][k] && !leq[i][k])
          throw std::logic_error("cell preorder is not transitive");
  return leq;
}

CellDecomposition cell_decomposition(const ZPlusRing& r) {
  NearringReport nr = nearring_report(r);
  if (!nr.is_nearring)
    throw NotNearringError("cell decomposition requires a nearring");
  std::size_t m = r.size();
  auto leq = leq_lr(r);
  CellDecomposition out;
  out.discrete = true;
  for (std::size_t i = 0; i < m && out.discrete; ++i)
    for (std::size_t j = 0; j < m && out.discrete; ++j)
      if (leq[i][j] != leq[j][i]) {
        out.discrete = false;
        out.asymmetric_pair = leq[i][j] ? std::make_pair(i, j)
                                        : std::make_pair(j, i);
      }
  // Cells: equivalence classes of the symmetrized preorder.
  std::vector<std::size_t> cell_of(m, SIZE_MAX);
  for (std::size_t i = 0; i < m; ++i) {
    if (cell_of[i] != SIZE_MAX) continue;
    std::size_t id = out.cells.size();
    out.cells.push_back({});
    for (std::size_t j = 0; j < m; ++j)
      if (cell_of[j] == SIZE_MAX && leq[i][j] && leq[j][i]) {
        cell_of[j] = id;
        out.cells.back().push_back(j);
      }
  }
  if (!out.discrete) return out;

  // Cross-cell structure constants must vanish; each cell restricts to an
  // indecomposable discrete nearring.
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        if (r.c(i, j, k) > 0 &&
            (cell_of[i] != cell_of[j] || cell_of[j] != cell_of[k]))
          throw std::logic_error("cross-cell product does not vanish");
  for (const auto& cell : out.cells) {
    std::size_t cm = cell.size();
    ZPlusRing sub;
    sub.table.assign(cm * cm * cm, 0);
    for (std::size_t i = 0; i < cm; ++i) sub.names.push_back(r.names[cell[i]]);
    for (std::size_t i = 0; i < cm; ++i)
      for (std::size_t j = 0; j < cm; ++j)
        for (std::size_t k = 0; k < cm; ++k)
          sub.table[(i * cm + j) * cm + k] = r.c(cell[i], cell[j], cell[k]);
    if (!is_indecomposable_discrete(sub))
      throw std::logic_error("cell is not indecomposable discrete");
    out.cell_rings.push_back(std::move(sub));
  }
  return out;
}

bool is_indecomposable_discrete(const ZPlusRing& r) {
  std::size_t m = r.size();
  for (std::size_t j = 0; j < m; ++j)
    if (ideal_closure(r, {j}).size() != m) return false;
  return true;
}

ZPlusRing direct_sum(const ZPlusRing& a, const ZPlusRing& b) {
  std::size_t ma = a.size(), mb = b.size(), m = ma + mb;
  ZPlusRing out;
  out.names = a.names;
  out.names.insert(out.names.end(), b.names.begin(), b.names.end());
  out.table.assign(m * m * m, 0);
  for (std::size_t i = 0; i < ma; ++i)
    for (std::size_t j = 0; j < ma; ++j)
      for (std::size_t k = 0; k < ma; ++k)
        out.table[(i * m + j) * m + k] = a.c(i, j, k);
  for (std::size_t i = 0; i < mb; ++i)
    for (std::size_t j = 0; j < mb; ++j)
      for (std::size_t k = 0; k < mb; ++k)
        out.table[((ma + i) * m + (ma + j)) * m + (ma + k)] = b.c(i, j, k);
  return out;
}

}  // namespace bimodcat
