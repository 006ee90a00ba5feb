#include "bimodcat/tensor.hpp"

#include <cassert>
#include <sstream>

namespace bimodcat {
namespace {

// Restriction of a bimodule to an action-invariant subspace.
Bimodule bimodule_on_subspace(const Bimodule& m, const Subspace& u) {
  std::size_t d = u.dim();
  auto restrict_all = [&](const std::vector<Matrix>& acts) {
    std::vector<Matrix> out;
    for (const auto& big : acts) {
      Matrix small(d, d);
      for (std::size_t j = 0; j < d; ++j) {
        Vec coords = u.coordinates(big.apply(u.basis_vector(j)));
        for (std::size_t i = 0; i < d; ++i) small.at(i, j) = coords[i];
      }
      out.push_back(std::move(small));
    }
    return out;
  };
  return {m.left_alg, m.right_alg, d, restrict_all(m.left_action),
          restrict_all(m.right_action)};
}

}  // namespace

TensorResult tensor_objects(const Bimodule& m, const Bimodule& n) {
  if (m.right_alg->dim() != n.left_alg->dim())
    throw std::invalid_argument("middle algebras do not match");
  const Algebra& mid = *m.right_alg;
  std::size_t dm = m.dim, dn = n.dim, big = dm * dn;

  // Balancing subspace Σₖ im(Rₖ⊗I − I⊗Lₖ).
  Echelon ech(big);
  for (std::size_t k = 0; k < mid.dim(); ++k) {
    Matrix rel = kron(m.right_action[k], Matrix::identity(dn)) -
                 kron(Matrix::identity(dm), n.left_action[k]);
    for (std::size_t j = 0; j < big; ++j) ech.insert(rel.col(j));
  }
  ech.fully_reduce();
  auto free_idx = ech.free_indices();
  std::size_t q = free_idx.size();

  Matrix surj(q, big);
  for (std::size_t j = 0; j < big; ++j) {
    SVec red = ech.reduce({{j, Rat(1)}});
    // Residue is supported on free coordinates.
    for (const auto& [idx, c] : red) {
      auto it = std::lower_bound(free_idx.begin(), free_idx.end(), idx);
      assert(it != free_idx.end() && *it == idx);
      surj.at(static_cast<std::size_t>(it - free_idx.begin()), j) = c;
    }
  }
  Matrix sect(big, q);
  for (std::size_t i = 0; i < q; ++i) sect.at(free_idx[i], i) = 1;

  std::vector<Matrix> left_act, right_act;
  for (std::size_t k = 0; k < m.left_alg->dim(); ++k)
    left_act.push_back(
        surj * kron(m.left_action[k], Matrix::identity(dn)) * sect);
  for (std::size_t k = 0; k < n.right_alg->dim(); ++k)
    right_act.push_back(
        surj * kron(Matrix::identity(dm), n.right_action[k]) * sect);
  Bimodule object{m.left_alg, n.right_alg, q, std::move(left_act),
                  std::move(right_act)};
  ValidationReport rep = validate_module(object);
  if (!rep.ok)
    throw std::logic_error("induced actions on the tensor product are not a "
                           "bimodule: " +
                           rep.detail);
  return {std::move(object), std::move(surj), std::move(sect)};
}

Matrix tensor_morphisms(const TensorResult& src, const TensorResult& dst,
                        const Matrix& f, const Matrix& g) {
  return dst.surjection * kron(f, g) * src.section;
}

Matrix left_unitor(const TensorResult& an, const Bimodule& n) {
  const Algebra& a = *n.left_alg;
  std::size_t da = a.dim(), dn = n.dim;
  Matrix mult(dn, da * dn);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < dn; ++j) {
      Vec img = n.left_action[i].col(j);
      for (std::size_t r = 0; r < dn; ++r) mult.at(r, i * dn + j) = img[r];
    }
  Matrix lam = mult * an.section;
  if (rank(lam) != dn) throw std::logic_error("left unitor is not invertible");
  return lam;
}

Matrix right_unitor(const TensorResult& na, const Bimodule& n) {
  const Algebra& a = *n.right_alg;
  std::size_t da = a.dim(), dn = n.dim;
  Matrix mult(dn, dn * da);
  for (std::size_t j = 0; j < dn; ++j)
    for (std::size_t i = 0; i < da; ++i) {
      Vec img = n.right_action[i].col(j);
      for (std::size_t r = 0; r < dn; ++r) mult.at(r, j * da + i) = img[r];
    }
  Matrix rho = mult * na.section;
  if (rank(rho) != dn)
    throw std::logic_error("right unitor is not invertible");
  return rho;
}

AssociatorData associator(const Bimodule& m, const Bimodule& n,
                          const Bimodule& p) {
  AssociatorData out;
  out.mn = tensor_objects(m, n);
  out.mn_p = tensor_objects(out.mn.object, p);
  out.np = tensor_objects(n, p);
  out.m_np = tensor_objects(m, out.np.object);
  // (m⊗n)⊗p → m⊗(n⊗p) through the common space m⊗n⊗p (index flattening
  // (i·dn+j)·dp+k = i·(dn·dp)+(j·dp+k) is literal equality).
  Matrix lift = kron(out.mn.section, Matrix::identity(p.dim)) * out.mn_p.section;
  Matrix drop = out.m_np.surjection *
                kron(Matrix::identity(m.dim), out.np.surjection);
  out.map = drop * lift;
  if (out.mn_p.object.dim != out.m_np.object.dim ||
      rank(out.map) != out.mn_p.object.dim)
    throw std::logic_error("associator is not invertible");
  return out;
}

EndAlgebra endomorphism_algebra(const Bimodule& m) {
  HomSpace h = hom_space(m, m);
  std::size_t d = h.basis.size();
  std::vector<SVec> prods(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      prods[i * d + j] = to_sparse(hom_coordinates(h, h.basis[i] * h.basis[j]));
  Vec unit = hom_coordinates(h, Matrix::identity(m.dim));
  auto alg = std::make_shared<Algebra>(d, std::move(prods), std::move(unit));
  return {std::move(h), std::move(alg)};
}

bool has_local_endomorphism_algebra(const Bimodule& m) {
  EndAlgebra end = endomorphism_algebra(m);
  RadicalData rd = jacobson_radical(*end.alg);
  return rd.semisimple.dim() == 1;
}

std::vector<DecompSummand> decompose(const Bimodule& m) {
  std::vector<DecompSummand> out;
  if (m.dim == 0) return out;
  EndAlgebra end = endomorphism_algebra(m);
  std::vector<Vec> idems = primitive_idempotents(*end.alg);
  for (const auto& eps : idems) {
    Matrix projector = hom_from_coordinates(end.hom, eps);
    Subspace img = column_space(projector);
    Bimodule piece = bimodule_on_subspace(m, img);
    Matrix incl = img.basis().transpose();
    Matrix proj(img.dim(), m.dim);
    for (std::size_t i = 0; i < img.dim(); ++i)
      for (std::size_t j = 0; j < m.dim; ++j)
        proj.at(i, j) = projector.at(img.pivots()[i], j);
    out.push_back({std::move(piece), std::move(incl), std::move(proj)});
  }
  // Dimension partition sanity.
  std::size_t total = 0;
  for (const auto& s : out) total += s.piece.dim;
  if (total != m.dim)
    throw std::logic_error("decomposition does not partition the dimension");
  return out;
}

std::vector<GroupedSummand> decompose_grouped(const Bimodule& m) {
  std::vector<GroupedSummand> out;
  for (auto& s : decompose(m)) {
    bool matched = false;
    for (auto& g : out)
      if (iso_indecomposable(g.piece, s.piece)) {
        ++g.multiplicity;
        matched = true;
        break;
      }
    if (!matched) out.push_back({std::move(s.piece), 1});
  }
  return out;
}

bool iso_indecomposable(const Bimodule& x, const Bimodule& y) {
  return find_iso(x, y).has_value();
}

std::optional<std::pair<Matrix, Matrix>> find_iso(const Bimodule& x,
                                                  const Bimodule& y) {
  if (x.dim != y.dim) return std::nullopt;
  if (x.dim == 0) return std::make_pair(Matrix(0, 0), Matrix(0, 0));
  HomSpace xy = hom_space(x, y), yx = hom_space(y, x);
  for (const auto& f : xy.basis)
    for (const auto& g : yx.basis) {
      auto inv = inverse(g * f);
      if (!inv) continue;
      return std::make_pair(f, *inv * g);
    }
  return std::nullopt;
}

namespace {

Bimodule hom_dual_bimodule(const AlgebraPtr& a, const HomSpace& h,
                           const Bimodule& v, DualSide side) {
  std::size_t d = h.basis.size(), n = a->dim();
  std::vector<Matrix> left_act(n, Matrix(d, d)), right_act(n, Matrix(d, d));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < d; ++t) {
      Matrix lphi, rphi;
      if (side == DualSide::left) {
        // (a·φ)(x) = φ(x·a); (φ·a)(x) = φ(x)·a.
        lphi = h.basis[t] * v.right_action[i];
        rphi = a->basis_right_mult(i) * h.basis[t];
      } else {
        // (a·ψ)(x) = a·ψ(x); (ψ·a)(x) = ψ(a·x).
        lphi = a->basis_left_mult(i) * h.basis[t];
        rphi = h.basis[t] * v.left_action[i];
      }
      Vec lc = hom_coordinates(h, lphi), rc = hom_coordinates(h, rphi);
      for (std::size_t r = 0; r < d; ++r) {
        left_act[i].at(r, t) = lc[r];
        right_act[i].at(r, t) = rc[r];
      }
    }
  return {a, a, d, std::move(left_act), std::move(right_act)};
}

bool is_zero_on_balancing(const TensorResult& t, const Matrix& big_map) {
  // big_map is defined on the ambient M⊗N; it factors through the cokernel
  // iff big_map = (big_map∘section)∘surjection.
  return big_map * t.section * t.surjection == big_map;
}

}  // namespace

DualityDatum dual(const AlgebraAnalysis& an, const Bimodule& v,
                  DualSide side) {
  AlgebraPtr a = an.alg;
  std::size_t n = a->dim(), dv = v.dim;
  if (side == DualSide::left) {
    if (!is_projective(an, v.left_restriction()))
      throw NotRigidError("left restriction is not projective");
  } else {
    RightModule r = v.right_restriction();
    // Right projectivity via the opposite algebra.
    auto op = std::make_shared<Algebra>(opposite(*a));
    AlgebraAnalysis op_an = analyze_algebra(op);
    LeftModule as_left{op, r.dim, r.action};
    if (!is_projective(op_an, as_left))
      throw NotRigidError("right restriction is not projective");
  }

  HomSpace h;
  if (side == DualSide::left) {
    h = hom_space(v.left_restriction(), regular_left_module(a));
  } else {
    RightModule reg{a, n, {}};
    for (std::size_t i = 0; i < n; ++i)
      reg.action.push_back(a->basis_right_mult(i));
    h = hom_space(v.right_restriction(), reg);
  }
  std::size_t dw = h.basis.size();
  Bimodule w = hom_dual_bimodule(a, h, v, side);
  ValidationReport rep = validate_module(w);
  if (!rep.ok) throw std::logic_error("dual bimodule invalid: " + rep.detail);

  DualityDatum d;
  d.side = side;
  d.dual = w;

  Bimodule reg_bim = regular_bimodule(a);
  if (side == DualSide::left) {
    // ev: V⊗W → A, v⊗φ ↦ φ(v).
    d.ev_source = tensor_objects(v, w);
    Matrix big(n, dv * dw);
    for (std::size_t j = 0; j < dv; ++j)
      for (std::size_t t = 0; t < dw; ++t) {
        Vec img = h.basis[t].col(j);
        for (std::size_t r = 0; r < n; ++r) big.at(r, j * dw + t) = img[r];
      }
    if (!is_zero_on_balancing(d.ev_source, big))
      throw std::logic_error("evaluation does not kill the balancing space");
    d.ev = big * d.ev_source.section;

    // coev: A → W⊗V, 1 ↦ Σ φₜ⊗vₛ with Σ φₜ(x)·vₛ = x (projective
    // coordinates; solvable exactly when the left restriction is
    // projective).
    d.coev_target = tensor_objects(w, v);
    Matrix sys(dv * dv, dw * dv);
    for (std::size_t t = 0; t < dw; ++t)
      for (std::size_t s = 0; s < dv; ++s)
        for (std::size_t r = 0; r < dv; ++r) {
          Vec img = left_action_of(v, h.basis[t].col(r)).col(s);
          for (std::size_t c = 0; c < dv; ++c)
            sys.at(r * dv + c, t * dv + s) = img[c];
        }
    Vec rhs(dv * dv, Rat(0));
    for (std::size_t r = 0; r < dv; ++r) rhs[r * dv + r] = 1;
    auto sol = solve(sys, rhs);
    if (!sol)
      throw std::logic_error("projective coordinates do not exist");
    Vec coev0 = d.coev_target.surjection.apply(*sol);
    Matrix coev(d.coev_target.object.dim, n);
    for (std::size_t i = 0; i < n; ++i) {
      Vec col = left_action_of(d.coev_target.object, unit_vec(n, i)).apply(coev0);
      for (std::size_t r = 0; r < col.size(); ++r) coev.at(r, i) = col[r];
    }
    d.coev = std::move(coev);
  } else {
    // ev: W⊗V → A, ψ⊗x ↦ ψ(x).
    d.ev_source = tensor_objects(w, v);
    Matrix big(n, dw * dv);
    for (std::size_t t = 0; t < dw; ++t)
      for (std::size_t j = 0; j < dv; ++j) {
        Vec img = h.basis[t].col(j);
        for (std::size_t r = 0; r < n; ++r) big.at(r, t * dv + j) = img[r];
      }
    if (!is_zero_on_balancing(d.ev_source, big))
      throw std::logic_error("evaluation does not kill the balancing space");
    d.ev = big * d.ev_source.section;

    // coev: A → V⊗W, 1 ↦ Σ vₛ⊗ψₜ with Σ vₛ·ψₜ(x) = x.
    d.coev_target = tensor_objects(v, w);
    Matrix sys(dv * dv, dv * dw);
    for (std::size_t s = 0; s < dv; ++s)
      for (std::size_t t = 0; t < dw; ++t)
        for (std::size_t r = 0; r < dv; ++r) {
          Vec img = right_action_of(v, h.basis[t].col(r)).col(s);
          for (std::size_t c = 0; c < dv; ++c)
            sys.at(r * dv + c, s * dw + t) = img[c];
        }
    Vec rhs(dv * dv, Rat(0));
    for (std::size_t r = 0; r < dv; ++r) rhs[r * dv + r] = 1;
    auto sol = solve(sys, rhs);
    if (!sol)
      throw std::logic_error("projective coordinates do not exist");
    Vec coev0 = d.coev_target.surjection.apply(*sol);
    Matrix coev(d.coev_target.object.dim, n);
    for (std::size_t i = 0; i < n; ++i) {
      Vec col = left_action_of(d.coev_target.object, unit_vec(n, i)).apply(coev0);
      for (std::size_t r = 0; r < col.size(); ++r) coev.at(r, i) = col[r];
    }
    d.coev = std::move(coev);
  }
  (void)reg_bim;
  return d;
}

bool verify_zigzags(const Bimodule& v, const DualityDatum& d) {
  const Bimodule& w = d.dual;
  AlgebraPtr a = v.left_alg;
  Bimodule reg = regular_bimodule(a);
  if (d.side == DualSide::left) {
    // T1: λ_V ∘ (ev⊗id) ∘ α⁻¹ ∘ (id⊗coev) ∘ ρ⁻¹ = id_V.
    TensorResult va = tensor_objects(v, reg);
    Matrix rho = right_unitor(va, v);
    auto rho_inv = inverse(rho);
    AssociatorData asc = associator(v, w, v);
    // id_v ⊗ coev : V⊗A → V⊗(W⊗V).
    Matrix step2 = tensor_morphisms(va, asc.m_np, Matrix::identity(v.dim), d.coev);
    auto alpha_inv = inverse(asc.map);
    TensorResult av = tensor_objects(reg, v);
    Matrix step4 = tensor_morphisms(asc.mn_p, av, d.ev, Matrix::identity(v.dim));
    Matrix lam = left_unitor(av, v);
    Matrix t1 = lam * step4 * (*alpha_inv) * step2 * (*rho_inv);
    if (!t1.is_identity()) return false;
    // T2: ρ_W ∘ (id⊗ev) ∘ α ∘ (coev⊗id) ∘ λ⁻¹ = id_W.
    TensorResult aw = tensor_objects(reg, w);
    Matrix lamw = left_unitor(aw, w);
    auto lamw_inv = inverse(lamw);
    AssociatorData asc2 = associator(w, v, w);
    Matrix step2b = tensor_morphisms(aw, asc2.mn_p, d.coev, Matrix::identity(w.dim));
    TensorResult wa = tensor_objects(w, reg);
    Matrix step4b = tensor_morphisms(asc2.m_np, wa, Matrix::identity(w.dim), d.ev);
    Matrix rhow = right_unitor(wa, w);
    Matrix t2 = rhow * step4b * asc2.map * step2b * (*lamw_inv);
    return t2.is_identity();
  }
  // side = right. T1: ρ_V ∘ (id⊗ev) ∘ α ∘ (coev⊗id) ∘ λ⁻¹ = id_V.
  TensorResult av = tensor_objects(reg, v);
  Matrix lam = left_unitor(av, v);
  auto lam_inv = inverse(lam);
  AssociatorData asc = associator(v, w, v);
  Matrix step2 = tensor_morphisms(av, asc.mn_p, d.coev, Matrix::identity(v.dim));
  TensorResult va = tensor_objects(v, reg);
  Matrix step4 = tensor_morphisms(asc.m_np, va, Matrix::identity(v.dim), d.ev);
  Matrix rho = right_unitor(va, v);
  Matrix t1 = rho * step4 * asc.map * step2 * (*lam_inv);
  if (!t1.is_identity()) return false;
  // T2: λ_W ∘ (ev⊗id) ∘ α⁻¹ ∘ (id⊗coev) ∘ ρ⁻¹ = id_W.
  TensorResult wa = tensor_objects(w, reg);
  Matrix rhow = right_unitor(wa, w);
  auto rhow_inv = inverse(rhow);
  AssociatorData asc2 = associator(w, v, w);
  Matrix step2b = tensor_morphisms(wa, asc2.m_np, Matrix::identity(w.dim), d.coev);
  auto alpha2_inv = inverse(asc2.map);
  TensorResult aw = tensor_objects(reg, w);
  Matrix step4b = tensor_morphisms(asc2.mn_p, aw, d.ev, Matrix::identity(w.dim));
  Matrix lamw = left_unitor(aw, w);
  Matrix t2 = lamw * step4b * (*alpha2_inv) * step2b * (*rhow_inv);
  return t2.is_identity();
}

EnvelopingContext enveloping_context(const AlgebraAnalysis& an) {
  auto env = std::make_shared<Algebra>(enveloping(*an.alg));
  std::size_t k = an.idempotents.size(), n = an.alg->dim();
  std::vector<Vec> supplied;
  for (std::size_t p = 0; p < k; ++p)
    for (std::size_t q = 0; q < k; ++q) {
      Vec eps(n * n, Rat(0));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          Rat v = an.idempotents[p][i] * an.idempotents[q][j];
          if (!is_zero(v)) eps[i * n + j] = v;
        }
      supplied.push_back(std::move(eps));
    }
  EnvelopingContext ctx;
  ctx.env = analyze_algebra(env, supplied);
  ctx.k = k;
  return ctx;
}

ZPlusRing cartan_pseudoring(const AlgebraAnalysis& an) {
  if (!an.basic) throw NonSplitError("cartan pseudoring needs a basic algebra");
  auto cart = cartan_matrix(an);
  std::size_t k = an.idempotents.size(), m = k * k;
  ZPlusRing r;
  r.table.assign(m * m * m, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      std::ostringstream os;
      os << "P(" << i << "," << j << ")";
      r.names.push_back(os.str());
    }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t kk = 0; kk < k; ++kk)
        for (std::size_t l = 0; l < k; ++l) {
          std::size_t a = i * k + j, b = kk * k + l, out = i * k + l;
          r.table[(a * m + b) * m + out] =
              static_cast<std::int64_t>(cart[j][kk]);
        }
  return r;
}

ZPlusRing grothendieck_pseudoring(const AlgebraAnalysis& an) {
  if (!an.basic)
    throw NonSplitError("grothendieck pseudoring needs a basic algebra");
  EnvelopingContext ctx = enveloping_context(an);
  auto envptr = ctx.env.alg;
  std::size_t k = an.idempotents.size(), m = k * k;

  std::vector<Bimodule> frees;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      frees.push_back(
          free_bimodule(an.alg, an.idempotents[i], an.idempotents[j]));

  ZPlusRing r;
  r.table.assign(m * m * m, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      std::ostringstream os;
      os << "P(" << i << "," << j << ")";
      r.names.push_back(os.str());
    }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      TensorResult t = tensor_objects(frees[a], frees[b]);
      LeftModule as_env = bimodule_as_left_env(t.object, envptr);
      std::vector<std::size_t> mult = decompose_projective(ctx.env, as_env);
      for (std::size_t blk = 0; blk < mult.size(); ++blk) {
        if (mult[blk] == 0) continue;
        r.table[(a * m + b) * m + ctx.free_label_of_env_block(blk)] =
            static_cast<std::int64_t>(mult[blk]);
      }
    }
  PseudoringReport rep = validate_pseudoring(r);
  if (!rep.ok)
    throw std::logic_error("extracted pseudoring is not associative: " +
                           rep.detail);
  return r;
}

SemigroupModel semigroup_model(const AlgebraPtr& alg,
                               std::vector<Bimodule> gens,
                               std::vector<std::string> labels) {
  std::size_t g = gens.size();
  for (std::size_t i = 0; i < g; ++i)
    if (!has_local_endomorphism_algebra(gens[i]))
      throw std::invalid_argument(
          "semigroup generator " + labels[i] +
          " does not have a local endomorphism algebra");
  SemigroupModel sm;
  sm.alg = alg;
  sm.gens = std::move(gens);
  sm.labels = std::move(labels);
  sm.ring.names = sm.labels;
  std::size_t m = g;
  sm.ring.table.assign(m * m * m, 0);
  sm.pairs.resize(g * g);
  for (std::size_t a = 0; a < g; ++a)
    for (std::size_t b = 0; b < g; ++b) {
      SemigroupModel::PairDecomp pd;
      pd.tensor = tensor_objects(sm.gens[a], sm.gens[b]);
      for (auto& s : decompose(pd.tensor.object)) {
        std::optional<std::size_t> match;
        for (std::size_t c = 0; c < g && !match; ++c)
          if (iso_indecomposable(sm.gens[c], s.piece)) match = c;
        if (!match)
          throw NotClosedError("tensor " + sm.labels[a] + " ⊗ " +
                               sm.labels[b] +
                               " has a summand outside the generators");
        auto iso = find_iso(sm.gens[*match], s.piece);
        assert(iso);
        // gens[c] → piece → tensor and back.
        pd.comp.push_back(*match);
        pd.incl.push_back(s.inclusion * iso->first);
        pd.proj.push_back(iso->second * s.projection);
        ++sm.ring.table[(a * m + b) * m + *match];
      }
      sm.pairs[a * g + b] = std::move(pd);
    }
  PseudoringReport rep = validate_pseudoring(sm.ring);
  if (!rep.ok)
    throw std::logic_error("semigroup pseudoring is not associative: " +
                           rep.detail);
  sm.homs.resize(g * g);
  for (std::size_t a = 0; a < g; ++a)
    for (std::size_t b = 0; b < g; ++b)
      sm.homs[a * g + b] = hom_space(sm.gens[a], sm.gens[b]);
  return sm;
}

bool is_centrally_projective(const AlgebraAnalysis& an, const Bimodule& v) {
  EnvelopingContext ctx = enveloping_context(an);
  std::size_t k = an.idempotents.size();
  std::vector<Bimodule> frees;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      frees.push_back(
          free_bimodule(an.alg, an.idempotents[i], an.idempotents[j]));
  for (const auto& left : frees)
    for (const auto& right : frees) {
      TensorResult lv = tensor_objects(left, v);
      TensorResult lvr = tensor_objects(lv.object, right);
      LeftModule as_env = bimodule_as_left_env(lvr.object, ctx.env.alg);
      if (!is_projective(ctx.env, as_env)) return false;
    }
  return true;
}

}  // namespace bimodcat
