#include "bimodcat/module.hpp"

#include <cassert>
#include <sstream>

namespace bimodcat {
namespace {

Matrix combine(const std::vector<Matrix>& mats, const Vec& x,
               std::size_t dim) {
  Matrix r(dim, dim);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (is_zero(x[i])) continue;
    r = r + mats[i] * x[i];
  }
  return r;
}

ValidationReport check_action(const Algebra& a,
                              const std::vector<Matrix>& act, std::size_t dim,
                              bool right) {
  std::size_t n = a.dim();
  if (act.size() != n) return {false, "action matrix count mismatch"};
  for (std::size_t i = 0; i < n; ++i)
    if (act[i].rows() != dim || act[i].cols() != dim)
      return {false, "action matrix shape mismatch"};
  Matrix u(dim, dim);
  for (std::size_t i = 0; i < n; ++i)
    if (!is_zero(a.unit()[i])) u = u + act[i] * a.unit()[i];
  if (!u.is_identity()) return {false, "unit does not act as the identity"};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix lhs = right ? act[j] * act[i] : act[i] * act[j];
      Matrix rhs(dim, dim);
      for (const auto& [k, c] : a.product(i, j)) rhs = rhs + act[k] * c;
      if (!(lhs == rhs)) {
        std::ostringstream os;
        os << "action fails multiplicativity at (" << i << "," << j << ")";
        return {false, os.str()};
      }
    }
  return {true, ""};
}

}  // namespace

ValidationReport validate_module(const LeftModule& m) {
  return check_action(*m.alg, m.action, m.dim, false);
}

ValidationReport validate_module(const RightModule& m) {
  return check_action(*m.alg, m.action, m.dim, true);
}

ValidationReport validate_module(const Bimodule& m) {
  auto l = check_action(*m.left_alg, m.left_action, m.dim, false);
  if (!l.ok) return {false, "left action: " + l.detail};
  auto r = check_action(*m.right_alg, m.right_action, m.dim, true);
  if (!r.ok) return {false, "right action: " + r.detail};
  for (std::size_t i = 0; i < m.left_action.size(); ++i)
    for (std::size_t j = 0; j < m.right_action.size(); ++j)
      if (!(m.left_action[i] * m.right_action[j] ==
            m.right_action[j] * m.left_action[i])) {
        std::ostringstream os;
        os << "left and right actions do not commute at (" << i << "," << j
           << ")";
        return {false, os.str()};
      }
  return {true, ""};
}

Matrix action_of(const LeftModule& m, const Vec& x) {
  return combine(m.action, x, m.dim);
}
Matrix action_of(const RightModule& m, const Vec& x) {
  return combine(m.action, x, m.dim);
}
Matrix left_action_of(const Bimodule& m, const Vec& x) {
  return combine(m.left_action, x, m.dim);
}
Matrix right_action_of(const Bimodule& m, const Vec& x) {
  return combine(m.right_action, x, m.dim);
}

LeftModule regular_left_module(const AlgebraPtr& a) {
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < a->dim(); ++i)
    act.push_back(a->basis_left_mult(i));
  return {a, a->dim(), std::move(act)};
}

SubmoduleData left_ideal_module(const AlgebraPtr& a, const Vec& e) {
  Subspace ae = column_space(a->right_mult(e));
  LeftModule reg = regular_left_module(a);
  LeftModule mod = submodule(reg, ae);
  Matrix incl = ae.basis().transpose();
  return {std::move(mod), std::move(incl)};
}

LeftModule submodule(const LeftModule& m, const Subspace& u) {
  std::size_t d = u.dim();
  std::vector<Matrix> act;
  for (const auto& big : m.action) {
    Matrix small(d, d);
    for (std::size_t j = 0; j < d; ++j) {
      Vec img = big.apply(u.basis_vector(j));
      Vec coords = u.coordinates(img);  // throws if not invariant
      for (std::size_t i = 0; i < d; ++i) small.at(i, j) = coords[i];
    }
    act.push_back(std::move(small));
  }
  return {m.alg, d, std::move(act)};
}

LeftModule direct_sum(const LeftModule& a, const LeftModule& b) {
  std::size_t d = a.dim + b.dim;
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < a.action.size(); ++i) {
    Matrix m(d, d);
    for (std::size_t r = 0; r < a.dim; ++r)
      for (std::size_t c = 0; c < a.dim; ++c) m.at(r, c) = a.action[i].at(r, c);
    for (std::size_t r = 0; r < b.dim; ++r)
      for (std::size_t c = 0; c < b.dim; ++c)
        m.at(a.dim + r, a.dim + c) = b.action[i].at(r, c);
    act.push_back(std::move(m));
  }
  return {a.alg, d, std::move(act)};
}

Bimodule direct_sum(const Bimodule& a, const Bimodule& b) {
  LeftModule l = direct_sum(a.left_restriction(), b.left_restriction());
  RightModule ra = a.right_restriction(), rb = b.right_restriction();
  LeftModule rsum = direct_sum(LeftModule{ra.alg, ra.dim, ra.action},
                               LeftModule{rb.alg, rb.dim, rb.action});
  return {a.left_alg, a.right_alg, l.dim, l.action, rsum.action};
}

Bimodule regular_bimodule(const AlgebraPtr& a) {
  std::vector<Matrix> l, r;
  for (std::size_t i = 0; i < a->dim(); ++i) {
    l.push_back(a->basis_left_mult(i));
    r.push_back(a->basis_right_mult(i));
  }
  return {a, a, a->dim(), std::move(l), std::move(r)};
}

Bimodule free_bimodule(const AlgebraPtr& a, const Vec& e_i, const Vec& e_j) {
  Subspace left_leg = column_space(a->right_mult(e_i));  // A·eᵢ
  Subspace right_leg = column_space(a->left_mult(e_j));  // eⱼ·A
  std::size_t du = left_leg.dim(), dw = right_leg.dim();
  std::vector<Matrix> left_act, right_act;
  for (std::size_t k = 0; k < a->dim(); ++k) {
    Matrix lam(du, du);
    for (std::size_t c = 0; c < du; ++c) {
      Vec img = a->mul(unit_vec(a->dim(), k), left_leg.basis_vector(c));
      Vec coords = left_leg.coordinates(img);
      for (std::size_t r = 0; r < du; ++r) lam.at(r, c) = coords[r];
    }
    Matrix rho(dw, dw);
    for (std::size_t c = 0; c < dw; ++c) {
      Vec img = a->mul(right_leg.basis_vector(c), unit_vec(a->dim(), k));
      Vec coords = right_leg.coordinates(img);
      for (std::size_t r = 0; r < dw; ++r) rho.at(r, c) = coords[r];
    }
    left_act.push_back(kron(lam, Matrix::identity(dw)));
    right_act.push_back(kron(Matrix::identity(du), rho));
  }
  return {a, a, du * dw, std::move(left_act), std::move(right_act)};
}

Bimodule tensor_square_bimodule(const AlgebraPtr& a) {
  std::size_t n = a->dim();
  std::vector<Matrix> l, r;
  for (std::size_t k = 0; k < n; ++k) {
    l.push_back(kron(a->basis_left_mult(k), Matrix::identity(n)));
    r.push_back(kron(Matrix::identity(n), a->basis_right_mult(k)));
  }
  return {a, a, n * n, std::move(l), std::move(r)};
}

namespace {

HomSpace hom_from_constraints(std::size_t src_dim, std::size_t dst_dim,
                              const std::vector<Matrix>& dst_act,
                              const std::vector<Matrix>& src_act,
                              const std::vector<Matrix>& dst_act2,
                              const std::vector<Matrix>& src_act2) {
  // f: src -> dst, row-major vec(f), constraint per action matrix:
  //   kron(A_dst, I) - kron(I, A_srcᵀ).
  std::size_t vdim = src_dim * dst_dim;
  Echelon constraints(vdim);
  auto add = [&](const Matrix& da, const Matrix& sa) {
    Matrix c = kron(da, Matrix::identity(src_dim)) -
               kron(Matrix::identity(dst_dim), sa.transpose());
    for (std::size_t i = 0; i < c.rows(); ++i) constraints.insert(c.row(i));
  };
  for (std::size_t i = 0; i < dst_act.size(); ++i) add(dst_act[i], src_act[i]);
  for (std::size_t i = 0; i < dst_act2.size(); ++i)
    add(dst_act2[i], src_act2[i]);
  constraints.fully_reduce();
  Matrix kern = kernel_matrix(constraints.to_matrix());
  HomSpace h;
  h.src_dim = src_dim;
  h.dst_dim = dst_dim;
  h.space = Subspace::span_rows(kern);
  for (std::size_t b = 0; b < h.space.dim(); ++b) {
    Vec v = h.space.basis_vector(b);
    Matrix f(dst_dim, src_dim);
    for (std::size_t i = 0; i < dst_dim; ++i)
      for (std::size_t j = 0; j < src_dim; ++j) f.at(i, j) = v[i * src_dim + j];
    h.basis.push_back(std::move(f));
  }
  return h;
}

}  // namespace

HomSpace hom_space(const LeftModule& m, const LeftModule& n) {
  return hom_from_constraints(m.dim, n.dim, n.action, m.action, {}, {});
}

HomSpace hom_space(const RightModule& m, const RightModule& n) {
  return hom_from_constraints(m.dim, n.dim, n.action, m.action, {}, {});
}

HomSpace hom_space(const Bimodule& m, const Bimodule& n) {
  return hom_from_constraints(m.dim, n.dim, n.left_action, m.left_action,
                              n.right_action, m.right_action);
}

Vec hom_coordinates(const HomSpace& h, const Matrix& f) {
  Vec v(h.src_dim * h.dst_dim);
  for (std::size_t i = 0; i < h.dst_dim; ++i)
    for (std::size_t j = 0; j < h.src_dim; ++j)
      v[i * h.src_dim + j] = f.at(i, j);
  return h.space.coordinates(v);
}

Matrix hom_from_coordinates(const HomSpace& h, const Vec& c) {
  Matrix f(h.dst_dim, h.src_dim);
  for (std::size_t b = 0; b < c.size(); ++b)
    if (!is_zero(c[b])) f = f + h.basis[b] * c[b];
  return f;
}

LeftModule bimodule_as_left_env(const Bimodule& m, const AlgebraPtr& env) {
  std::size_t n = m.left_alg->dim();
  assert(env->dim() == n * n);
  std::vector<Matrix> act;
  act.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      act.push_back(m.right_action[i] * m.left_action[k]);
  return {env, m.dim, std::move(act)};
}

SimpleModules simple_modules(const AlgebraAnalysis& an) {
  const Algebra& s = an.rad.semisimple;
  AlgebraPtr a = an.alg;
  SimpleModules out;
  for (std::size_t blk = 0; blk < an.num_blocks; ++blk) {
    std::size_t idx = 0;
    while (an.block_of[idx] != blk) ++idx;
    Vec ebar = an.rad.projection.apply(an.idempotents[idx]);
    Subspace v = column_space(s.right_mult(ebar));  // S·ē
    std::size_t d = v.dim();
    std::vector<Matrix> act;
    for (std::size_t i = 0; i < a->dim(); ++i) {
      Vec abar = an.rad.projection.apply(unit_vec(a->dim(), i));
      Matrix mi(d, d);
      for (std::size_t c = 0; c < d; ++c) {
        Vec img = s.mul(abar, v.basis_vector(c));
        Vec coords = v.coordinates(img);
        for (std::size_t r = 0; r < d; ++r) mi.at(r, c) = coords[r];
      }
      act.push_back(std::move(mi));
    }
    LeftModule simple{a, d, std::move(act)};
    HomSpace end = hom_space(simple, simple);
    out.end_dims.push_back(end.basis.size());
    out.simples.push_back(std::move(simple));
  }
  return out;
}

TopData top(const AlgebraAnalysis& an, const LeftModule& m) {
  // Radical image Rad(A)·m.
  Echelon ech(m.dim);
  const Subspace& rad = an.rad.radical;
  for (std::size_t b = 0; b < rad.dim(); ++b) {
    Matrix act = action_of(m, rad.basis_vector(b));
    for (std::size_t j = 0; j < m.dim; ++j) ech.insert(act.col(j));
  }
  Subspace radm = Subspace::from_echelon(std::move(ech));

  // Quotient coordinates: complement (non-pivot) coordinates.
  std::size_t n = m.dim;
  std::vector<bool> is_piv(n, false);
  for (auto p : radm.pivots()) is_piv[p] = true;
  std::vector<std::size_t> comp;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_piv[j]) comp.push_back(j);
  std::size_t q = comp.size();
  Matrix proj(q, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec v = unit_vec(n, j);
    for (std::size_t r = 0; r < radm.dim(); ++r) {
      Rat f = v[radm.pivots()[r]];
      if (is_zero(f)) continue;
      for (std::size_t k = 0; k < n; ++k) v[k] -= f * radm.basis().at(r, k);
    }
    for (std::size_t i = 0; i < q; ++i) proj.at(i, j) = v[comp[i]];
  }
  Matrix section(n, q);
  for (std::size_t i = 0; i < q; ++i) section.at(comp[i], i) = 1;
  std::vector<Matrix> act;
  for (const auto& big : m.action) act.push_back(proj * big * section);
  LeftModule topm{m.alg, q, std::move(act)};

  SimpleModules sm = simple_modules(an);
  std::vector<std::size_t> mult(an.num_blocks, 0);
  for (std::size_t blk = 0; blk < an.num_blocks; ++blk) {
    HomSpace h = hom_space(topm, sm.simples[blk]);
    assert(h.basis.size() % sm.end_dims[blk] == 0);
    mult[blk] = h.basis.size() / sm.end_dims[blk];
  }
  return {std::move(topm), std::move(proj), std::move(mult)};
}

ProjectiveCover projective_cover(const AlgebraAnalysis& an,
                                 const LeftModule& m) {
  TopData t = top(an, m);
  AlgebraPtr a = an.alg;
  std::size_t n = a->dim();

  LeftModule cover{a, 0, {}};
  for (std::size_t i = 0; i < n; ++i) cover.action.push_back(Matrix(0, 0));
  std::vector<Matrix> columns;  // images of cover basis vectors in m

  for (std::size_t blk = 0; blk < an.num_blocks; ++blk) {
    if (t.multiplicities[blk] == 0) continue;
    std::size_t idx = 0;
    while (an.block_of[idx] != blk) ++idx;
    const Vec& e = an.idempotents[idx];
    SubmoduleData ae = left_ideal_module(a, e);

    // Generators: elements of e·m whose top images are independent.
    Subspace em = column_space(action_of(m, e));
    Echelon picked(t.top.dim);
    std::vector<Vec> gens;
    for (std::size_t b = 0; b < em.dim() && gens.size() < t.multiplicities[blk];
         ++b) {
      Vec x = em.basis_vector(b);
      if (picked.insert(t.projection.apply(x))) gens.push_back(x);
    }
    if (gens.size() != t.multiplicities[blk])
      throw std::logic_error("projective cover generator search failed");

    for (const Vec& x : gens) {
      // Map A·e -> m, w ↦ w·x (w acting through the module structure).
      Matrix phi(m.dim, ae.module.dim);
      for (std::size_t c = 0; c < ae.module.dim; ++c) {
        Vec w = ae.inclusion.col(c);
        Vec img = action_of(m, w).apply(x);
        for (std::size_t r = 0; r < m.dim; ++r) phi.at(r, c) = img[r];
      }
      columns.push_back(std::move(phi));
      cover = {a, cover.dim + ae.module.dim,
               direct_sum(cover, ae.module).action};
    }
  }

  Matrix cov(m.dim, cover.dim);
  std::size_t off = 0;
  for (const auto& phi : columns) {
    for (std::size_t r = 0; r < m.dim; ++r)
      for (std::size_t c = 0; c < phi.cols(); ++c)
        cov.at(r, off + c) = phi.at(r, c);
    off += phi.cols();
  }
  if (rank(cov) != m.dim)
    throw std::logic_error("projective cover map is not surjective");
  return {std::move(cover), std::move(cov), std::move(t.multiplicities)};
}

bool is_projective(const AlgebraAnalysis& an, const LeftModule& m) {
  if (m.dim == 0) return true;
  ProjectiveCover pc = projective_cover(an, m);
  return pc.cover.dim == m.dim;
}

std::vector<std::size_t> decompose_projective(const AlgebraAnalysis& an,
                                              const LeftModule& m) {
  if (m.dim == 0) return std::vector<std::size_t>(an.num_blocks, 0);
  ProjectiveCover pc = projective_cover(an, m);
  if (pc.cover.dim != m.dim)
    throw NotProjectiveError("module is not projective");
  // Dimension partition check.
  std::size_t total = 0;
  for (std::size_t blk = 0; blk < an.num_blocks; ++blk) {
    std::size_t idx = 0;
    while (an.block_of[idx] != blk) ++idx;
    Subspace ae = column_space(an.alg->right_mult(an.idempotents[idx]));
    total += pc.multiplicities[blk] * ae.dim();
  }
  if (total != m.dim)
    throw std::logic_error("projective decomposition does not partition dim");
  return pc.multiplicities;
}

std::vector<std::size_t> composition_factors(const AlgebraAnalysis& an,
                                             const LeftModule& m) {
  std::vector<std::size_t> counts(an.num_blocks, 0);
  LeftModule cur = m;
  while (cur.dim > 0) {
    TopData t = top(an, cur);
    for (std::size_t b = 0; b < an.num_blocks; ++b)
      counts[b] += t.multiplicities[b];
    // Descend to Rad·cur.
    Echelon ech(cur.dim);
    for (std::size_t b = 0; b < an.rad.radical.dim(); ++b) {
      Matrix act = action_of(cur, an.rad.radical.basis_vector(b));
      for (std::size_t j = 0; j < cur.dim; ++j) ech.insert(act.col(j));
    }
    Subspace radm = Subspace::from_echelon(std::move(ech));
    if (radm.dim() == cur.dim)
      throw std::logic_error("radical filtration did not terminate");
    cur = submodule(cur, radm);
  }
  // Σ check against dim.
  SimpleModules sm = simple_modules(an);
  std::size_t total = 0;
  for (std::size_t b = 0; b < an.num_blocks; ++b)
    total += counts[b] * sm.simples[b].dim;
  if (total != m.dim)
    throw std::logic_error("composition factors do not partition dim");
  return counts;
}

}  // namespace bimodcat
