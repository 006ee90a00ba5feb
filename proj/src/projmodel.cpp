#include "bimodcat/projmodel.hpp"

#include <cassert>
#include <sstream>

namespace bimodcat {
namespace {

Matrix rows_range(const Matrix& m, std::size_t lo, std::size_t hi) {
  Matrix out(hi - lo, m.cols());
  for (std::size_t i = lo; i < hi; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i - lo, j) = m.at(i, j);
  return out;
}

// Direct sum of subspaces laid out at consecutive offsets.
Subspace padded_sum(const std::vector<std::pair<const Subspace*, std::size_t>>&
                        parts,
                    std::size_t ambient) {
  Echelon ech(ambient);
  for (const auto& [s, off] : parts)
    for (std::size_t b = 0; b < s->dim(); ++b) {
      Vec v(ambient, Rat(0));
      Vec row = s->basis_vector(b);
      for (std::size_t j = 0; j < row.size(); ++j) v[off + j] = row[j];
      ech.insert(v);
    }
  return Subspace::from_echelon(std::move(ech));
}

void finalize_model(ProjModel& pm) {
  std::size_t n = pm.num_objects;
  pm.slice_offset.assign(n * n + 1, 0);
  for (std::size_t p = 0; p < n * n; ++p)
    pm.slice_offset[p + 1] = pm.slice_offset[p] + pm.hom_dim[p];

  // Unit action layout check: id_R ⊗ id_a has components δ_st·id.
  auto check_identity_blocks = [&](const ActionComponent& ac, std::size_t a) {
    Vec out = ac.map.apply(pm.slice_of(pm.object_idems[a], a, a));
    std::size_t S = ac.dst_labels.size(), T = ac.src_labels.size();
    for (std::size_t s = 0; s < S; ++s)
      for (std::size_t t = 0; t < T; ++t) {
        std::size_t blk = s * T + t;
        std::size_t lo = ac.block_offset[blk], hi = ac.block_offset[blk + 1];
        Vec block(out.begin() + lo, out.begin() + hi);
        if (s == t && ac.src_labels[t] == ac.dst_labels[s]) {
          Vec id_coords = pm.slice_of(pm.object_idems[ac.src_labels[t]],
                                      ac.src_labels[t], ac.src_labels[t]);
          if (block != id_coords)
            throw std::logic_error("identity action block is not the identity");
        } else if (!is_zero_vec(block)) {
          throw std::logic_error("identity action has off-diagonal blocks");
        }
      }
  };
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t a = 0; a < n; ++a) {
      if (pm.has_left_action) check_identity_blocks(pm.left(r, a, a), a);
      if (pm.has_right_action) check_identity_blocks(pm.right(r, a, a), a);
    }
}

}  // namespace

Vec ProjModel::slice_of(const Vec& endo_vec, std::size_t a,
                        std::size_t b) const {
  std::size_t p = pair(a, b);
  Vec out(hom_dim[p]);
  for (std::size_t i = 0; i < hom_dim[p]; ++i)
    out[i] = endo_vec[slice_offset[p] + i];
  return out;
}

Vec ProjModel::embed(const Vec& hom_vec, std::size_t a, std::size_t b) const {
  Vec out(endo->dim(), Rat(0));
  std::size_t p = pair(a, b);
  for (std::size_t i = 0; i < hom_vec.size(); ++i)
    out[slice_offset[p] + i] = hom_vec[i];
  return out;
}

std::size_t HomIdeal::total_dim() const {
  std::size_t t = 0;
  for (const auto& s : slices) t += s.dim();
  return t;
}

// ---------------------------------------------------------------------
// Corner-space model over all free bimodules of a basic algebra:
// Hom(Aeᵢ⊗eⱼA, Aeₖ⊗e_lA) ≅ eᵢAeₖ ⊗ e_lAeⱼ, one pure tensor per basis pair,
// composed through corner multiplication.
// ---------------------------------------------------------------------

ProjModel build_proj_model(const AlgebraAnalysis& an) {
  if (!an.basic)
    throw NonSplitError("the projective model needs a basic algebra");
  const Algebra& alg = *an.alg;
  std::size_t k = an.idempotents.size();
  std::size_t n = k * k;

  std::vector<Subspace> corner(k * k, Subspace(0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      corner[i * k + j] =
          corner_subspace(alg, an.idempotents[i], an.idempotents[j]);
  auto cdim = [&](std::size_t i, std::size_t j) {
    return corner[i * k + j].dim();
  };
  auto ccoords = [&](std::size_t i, std::size_t j, const Vec& x) {
    return corner[i * k + j].coordinates(x);
  };

  ProjModel pm;
  pm.num_objects = n;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      std::ostringstream os;
      os << "P(" << i << "," << j << ")";
      pm.labels.push_back(os.str());
      pm.objects.push_back(
          free_bimodule(an.alg, an.idempotents[i], an.idempotents[j]));
    }
  auto l1 = [&](std::size_t a) { return a / k; };
  auto l2 = [&](std::size_t a) { return a % k; };

  pm.hom_dim.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      pm.hom_dim[pm.pair(a, b)] = cdim(l1(a), l1(b)) * cdim(l2(b), l2(a));
  pm.slice_offset.assign(n * n + 1, 0);
  for (std::size_t p = 0; p < n * n; ++p)
    pm.slice_offset[p + 1] = pm.slice_offset[p] + pm.hom_dim[p];
  std::size_t edim = pm.slice_offset.back();

  // Endomorphism algebra of ⊕ P_a. Basis element of the slice (a,b) with
  // coordinate (t,s) is the pure tensor (u_t, v_s); composition is
  // (u,v)∘(u',v') = (u'·u, v·v').
  struct EIndex {
    std::size_t a, b, t, s;
  };
  std::vector<EIndex> eindex(edim);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t p = pm.pair(a, b), off = pm.slice_offset[p];
      std::size_t du = cdim(l1(a), l1(b)), dv = cdim(l2(b), l2(a));
      for (std::size_t t = 0; t < du; ++t)
        for (std::size_t s = 0; s < dv; ++s)
          eindex[off + t * dv + s] = {a, b, t, s};
    }
  std::vector<SVec> prods(edim * edim);
  for (std::size_t x = 0; x < edim; ++x)
    for (std::size_t y = 0; y < edim; ++y) {
      const EIndex& f = eindex[x];  // f : a → b
      const EIndex& g = eindex[y];  // g : c → d ; f∘g needs d == a
      if (g.b != f.a) continue;
      std::size_t c = g.a;
      Vec u = alg.mul(corner[l1(c) * k + l1(g.b)].basis_vector(g.t),
                      corner[l1(f.a) * k + l1(f.b)].basis_vector(f.t));
      Vec v = alg.mul(corner[l2(f.b) * k + l2(f.a)].basis_vector(f.s),
                      corner[l2(g.b) * k + l2(g.a)].basis_vector(g.s));
      Vec uc = ccoords(l1(c), l1(f.b), u);
      Vec vc = ccoords(l2(f.b), l2(c), v);
      std::size_t p = pm.pair(c, f.b), off = pm.slice_offset[p];
      std::size_t dv = cdim(l2(f.b), l2(c));
      SVec prod;
      for (std::size_t t = 0; t < uc.size(); ++t)
        for (std::size_t s = 0; s < vc.size(); ++s) {
          Rat val = uc[t] * vc[s];
          if (!is_zero(val)) prod.emplace_back(off + t * dv + s, val);
        }
      prods[x * edim + y] = std::move(prod);
    }

  pm.object_idems.assign(n, Vec(edim, Rat(0)));
  Vec unit(edim, Rat(0));
  for (std::size_t a = 0; a < n; ++a) {
    Vec uc = ccoords(l1(a), l1(a), an.idempotents[l1(a)]);
    Vec vc = ccoords(l2(a), l2(a), an.idempotents[l2(a)]);
    std::size_t off = pm.slice_offset[pm.pair(a, a)];
    std::size_t dv = cdim(l2(a), l2(a));
    for (std::size_t t = 0; t < uc.size(); ++t)
      for (std::size_t s = 0; s < vc.size(); ++s) {
        Rat val = uc[t] * vc[s];
        pm.object_idems[a][off + t * dv + s] = val;
        unit[off + t * dv + s] += val;
      }
  }
  pm.endo = std::make_shared<Algebra>(edim, std::move(prods), std::move(unit));
  {
    ValidationReport rep = validate_algebra(*pm.endo);
    if (!rep.ok)
      throw std::logic_error("endomorphism algebra invalid: " + rep.detail);
  }

  // Action tables by middle-corner contraction.
  auto make_left = [&](std::size_t r, std::size_t a, std::size_t b) {
    ActionComponent ac;
    std::size_t r1 = l1(r), r2 = l2(r), a1 = l1(a), a2 = l2(a), b1 = l1(b),
                b2 = l2(b);
    std::size_t T = cdim(r2, a1), S = cdim(r2, b1);
    std::size_t src = r1 * k + a2, dst = r1 * k + b2;
    ac.src_labels.assign(T, src);
    ac.dst_labels.assign(S, dst);
    std::size_t block = pm.hom_dim[pm.pair(src, dst)];
    ac.block_offset.assign(S * T + 1, 0);
    for (std::size_t i = 0; i < S * T; ++i)
      ac.block_offset[i + 1] = ac.block_offset[i] + block;
    ac.map = Matrix(S * T * block, pm.hom_dim[pm.pair(a, b)]);
    Vec ce = ccoords(r1, r1, an.idempotents[r1]);
    std::size_t du = cdim(a1, b1), dv = cdim(b2, a2);
    std::size_t dcomp_v = cdim(b2, a2);  // v part survives unchanged
    for (std::size_t ut = 0; ut < du; ++ut) {
      for (std::size_t t = 0; t < T; ++t) {
        Vec wu = alg.mul(corner[r2 * k + a1].basis_vector(t),
                         corner[a1 * k + b1].basis_vector(ut));
        Vec lam = ccoords(r2, b1, wu);
        for (std::size_t s = 0; s < S; ++s) {
          if (is_zero(lam[s])) continue;
          // Component (s,t) = lam[s]·(e_{r1} ⊗ v): coordinates ce ⊗ δ_v.
          std::size_t blk = ac.block_offset[s * T + t];
          std::size_t inner_dv = cdim(b2, a2);
          for (std::size_t p2 = 0; p2 < ce.size(); ++p2) {
            if (is_zero(ce[p2])) continue;
            for (std::size_t vs = 0; vs < dv; ++vs) {
              ac.map.at(blk + p2 * inner_dv + vs, ut * dcomp_v + vs) +=
                  lam[s] * ce[p2];
            }
          }
        }
      }
    }
    return ac;
  };
  auto make_right = [&](std::size_t r, std::size_t a, std::size_t b) {
    ActionComponent ac;
    std::size_t r1 = l1(r), r2 = l2(r), a1 = l1(a), a2 = l2(a), b1 = l1(b),
                b2 = l2(b);
    std::size_t T = cdim(a2, r1), S = cdim(b2, r1);
    std::size_t src = a1 * k + r2, dst = b1 * k + r2;
    ac.src_labels.assign(T, src);
    ac.dst_labels.assign(S, dst);
    std::size_t block = pm.hom_dim[pm.pair(src, dst)];
    ac.block_offset.assign(S * T + 1, 0);
    for (std::size_t i = 0; i < S * T; ++i)
      ac.block_offset[i + 1] = ac.block_offset[i] + block;
    ac.map = Matrix(S * T * block, pm.hom_dim[pm.pair(a, b)]);
    Vec ce = ccoords(r2, r2, an.idempotents[r2]);
    std::size_t du = cdim(a1, b1), dv = cdim(b2, a2);
    for (std::size_t vs = 0; vs < dv; ++vs) {
      for (std::size_t t = 0; t < T; ++t) {
        Vec vw = alg.mul(corner[b2 * k + a2].basis_vector(vs),
                         corner[a2 * k + r1].basis_vector(t));
        Vec lam = ccoords(b2, r1, vw);
        for (std::size_t s = 0; s < S; ++s) {
          if (is_zero(lam[s])) continue;
          // Component (s,t) = lam[s]·(u ⊗ e_{r2}): coordinates δ_u ⊗ ce.
          std::size_t blk = ac.block_offset[s * T + t];
          std::size_t inner_dv = cdim(r2, r2);
          for (std::size_t ut = 0; ut < du; ++ut)
            for (std::size_t q2 = 0; q2 < ce.size(); ++q2) {
              if (is_zero(ce[q2])) continue;
              ac.map.at(blk + ut * inner_dv + q2, ut * dv + vs) +=
                  lam[s] * ce[q2];
            }
        }
      }
    }
    return ac;
  };

  pm.left_act.resize(n * n * n);
  pm.right_act.resize(n * n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        pm.left_act[r * n * n + pm.pair(a, b)] = make_left(r, a, b);
        pm.right_act[r * n * n + pm.pair(a, b)] = make_right(r, a, b);
      }

  pm.ring = cartan_pseudoring(an);
  finalize_model(pm);
  return pm;
}

// ---------------------------------------------------------------------
// Generic model over the generators of a closed monoidal subcategory.
// ---------------------------------------------------------------------

ProjModel build_proj_model(const SemigroupModel& sm) {
  std::size_t g = sm.gens.size();
  ProjModel pm;
  pm.num_objects = g;
  pm.labels = sm.labels;
  pm.objects = sm.gens;
  pm.ring = sm.ring;

  pm.hom_dim.assign(g * g, 0);
  for (std::size_t a = 0; a < g; ++a)
    for (std::size_t b = 0; b < g; ++b)
      pm.hom_dim[pm.pair(a, b)] = sm.homs[a * g + b].basis.size();
  pm.slice_offset.assign(g * g + 1, 0);
  for (std::size_t p = 0; p < g * g; ++p)
    pm.slice_offset[p + 1] = pm.slice_offset[p] + pm.hom_dim[p];
  std::size_t edim = pm.slice_offset.back();

  std::vector<SVec> prods(edim * edim);
  for (std::size_t a = 0; a < g; ++a)
    for (std::size_t b = 0; b < g; ++b)
      for (std::size_t c = 0; c < g; ++c) {
        const HomSpace& hab = sm.homs[a * g + b];
        const HomSpace& hbc = sm.homs[b * g + c];
        const HomSpace& hac = sm.homs[a * g + c];
        for (std::size_t i = 0; i < hbc.basis.size(); ++i)
          for (std::size_t j = 0; j < hab.basis.size(); ++j) {
            Vec coords = hom_coordinates(hac, hbc.basis[i] * hab.basis[j]);
            std::size_t x = pm.slice_offset[pm.pair(b, c)] + i;
            std::size_t y = pm.slice_offset[pm.pair(a, b)] + j;
            SVec sp;
            std::size_t off = pm.slice_offset[pm.pair(a, c)];
            for (std::size_t t = 0; t < coords.size(); ++t)
              if (!is_zero(coords[t])) sp.emplace_back(off + t, coords[t]);
            prods[x * edim + y] = std::move(sp);
          }
      }
  Vec unit(edim, Rat(0));
  pm.object_idems.assign(g, Vec(edim, Rat(0)));
  for (std::size_t a = 0; a < g; ++a) {
    Vec idc = hom_coordinates(sm.homs[a * g + a],
                              Matrix::identity(sm.gens[a].dim));
    std::size_t off = pm.slice_offset[pm.pair(a, a)];
    for (std::size_t t = 0; t < idc.size(); ++t) {
      pm.object_idems[a][off + t] = idc[t];
      unit[off + t] += idc[t];
    }
  }
  pm.endo = std::make_shared<Algebra>(edim, std::move(prods), std::move(unit));
  {
    ValidationReport rep = validate_algebra(*pm.endo);
    if (!rep.ok)
      throw std::logic_error("endomorphism algebra invalid: " + rep.detail);
  }

  auto make_component = [&](std::size_t r, std::size_t a, std::size_t b,
                            bool left_side) {
    ActionComponent ac;
    const auto& pa = left_side ? sm.pairs[r * g + a] : sm.pairs[a * g + r];
    const auto& pb = left_side ? sm.pairs[r * g + b] : sm.pairs[b * g + r];
    ac.src_labels = pa.comp;
    ac.dst_labels = pb.comp;
    std::size_t S = ac.dst_labels.size(), T = ac.src_labels.size();
    ac.block_offset.assign(S * T + 1, 0);
    for (std::size_t s = 0; s < S; ++s)
      for (std::size_t t = 0; t < T; ++t)
        ac.block_offset[s * T + t + 1] =
            ac.block_offset[s * T + t] +
            pm.hom_dim[pm.pair(ac.src_labels[t], ac.dst_labels[s])];
    std::size_t rows = ac.block_offset.back();
    ac.map = Matrix(rows, pm.hom_dim[pm.pair(a, b)]);
    const HomSpace& hab = sm.homs[a * g + b];
    for (std::size_t col = 0; col < hab.basis.size(); ++col) {
      Matrix big =
          left_side
              ? tensor_morphisms(pa.tensor, pb.tensor,
                                 Matrix::identity(sm.gens[r].dim),
                                 hab.basis[col])
              : tensor_morphisms(pa.tensor, pb.tensor, hab.basis[col],
                                 Matrix::identity(sm.gens[r].dim));
      for (std::size_t s = 0; s < S; ++s)
        for (std::size_t t = 0; t < T; ++t) {
          Matrix comp = pb.proj[s] * big * pa.incl[t];
          Vec coords = hom_coordinates(
              sm.homs[ac.src_labels[t] * g + ac.dst_labels[s]], comp);
          std::size_t off = ac.block_offset[s * T + t];
          for (std::size_t i = 0; i < coords.size(); ++i)
            ac.map.at(off + i, col) = coords[i];
        }
    }
    return ac;
  };

  pm.left_act.resize(g * g * g);
  pm.right_act.resize(g * g * g);
  for (std::size_t r = 0; r < g; ++r)
    for (std::size_t a = 0; a < g; ++a)
      for (std::size_t b = 0; b < g; ++b) {
        pm.left_act[r * g * g + pm.pair(a, b)] = make_component(r, a, b, true);
        pm.right_act[r * g * g + pm.pair(a, b)] =
            make_component(r, a, b, false);
      }
  finalize_model(pm);
  return pm;
}

HomIdeal category_radical(const ProjModel& pm) {
  RadicalData rd = jacobson_radical(*pm.endo);
  std::size_t n = pm.num_objects;
  HomIdeal ideal;
  std::size_t sliced_total = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t p = pm.pair(a, b), h = pm.hom_dim[p];
      Matrix block(h, pm.endo->dim());
      for (std::size_t i = 0; i < h; ++i)
        block.at(i, pm.slice_offset[p] + i) = 1;
      Subspace blocksub = Subspace::span_rows(block);
      Subspace inter = intersect(rd.radical, blocksub);
      std::vector<Vec> rows;
      for (std::size_t i = 0; i < inter.dim(); ++i) {
        Vec v = inter.basis_vector(i);
        rows.push_back(pm.slice_of(v, a, b));
      }
      Subspace slice = Subspace::span_vectors(rows, h);
      sliced_total += slice.dim();
      if (a != b && !pm.objects.empty() && slice.dim() != h)
        throw std::logic_error(
            "radical slice between distinct indecomposables is not full");
      ideal.slices.push_back(std::move(slice));
    }
  if (sliced_total != rd.radical.dim())
    throw std::logic_error("radical does not decompose into Hom slices");
  return ideal;
}

namespace {

Subspace component_target(const ProjModel& pm, const ActionComponent& ac,
                          const HomIdeal& rad) {
  std::vector<std::pair<const Subspace*, std::size_t>> parts;
  std::size_t S = ac.dst_labels.size(), T = ac.src_labels.size();
  for (std::size_t s = 0; s < S; ++s)
    for (std::size_t t = 0; t < T; ++t)
      parts.emplace_back(
          &rad.slices[pm.pair(ac.src_labels[t], ac.dst_labels[s])],
          ac.block_offset[s * T + t]);
  return padded_sum(parts, ac.block_offset.back());
}

// Composite map for id_P ⊗ f ⊗ id_Q (right action by Q first, then left
// action by P applied blockwise) together with its radical target.
std::pair<Matrix, Subspace> two_sided_action(const ProjModel& pm,
                                             std::size_t p, std::size_t q,
                                             std::size_t a, std::size_t b,
                                             const HomIdeal& rad) {
  const ActionComponent& rc = pm.right(q, a, b);
  std::size_t S = rc.dst_labels.size(), T = rc.src_labels.size();
  std::vector<Matrix> blocks;
  std::vector<std::pair<const Subspace*, std::size_t>> parts;
  std::vector<Subspace> own;  // keep targets alive
  std::size_t row_off = 0;
  own.reserve(S * T);
  for (std::size_t s = 0; s < S; ++s)
    for (std::size_t t = 0; t < T; ++t) {
      std::size_t c = rc.src_labels[t], d = rc.dst_labels[s];
      const ActionComponent& lc = pm.left(p, c, d);
      std::size_t blk = s * T + t;
      Matrix rblock =
          rows_range(rc.map, rc.block_offset[blk], rc.block_offset[blk + 1]);
      blocks.push_back(lc.map * rblock);
      own.push_back(component_target(pm, lc, rad));
      row_off += blocks.back().rows();
    }
  Matrix big(0, pm.hom_dim[pm.pair(a, b)]);
  for (auto& blk : blocks) big = Matrix::vcat(big, blk);
  std::size_t off = 0;
  for (std::size_t i = 0; i < own.size(); ++i) {
    parts.emplace_back(&own[i], off);
    off += blocks[i].rows();
  }
  return {std::move(big), padded_sum(parts, off)};
}

}  // namespace

HomIdeal module_radical(const ProjModel& pm, ActionSide side) {
  if ((side == ActionSide::left || side == ActionSide::two_sided) &&
      !pm.has_left_action)
    throw std::invalid_argument("model has no left action data");
  if ((side == ActionSide::right || side == ActionSide::two_sided) &&
      !pm.has_right_action)
    throw std::invalid_argument("model has no right action data");
  HomIdeal rad = category_radical(pm);
  std::size_t n = pm.num_objects;
  HomIdeal out;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t h = pm.hom_dim[pm.pair(a, b)];
      Subspace x = Subspace::full(h);
      if (side == ActionSide::left || side == ActionSide::right) {
        for (std::size_t r = 0; r < n && !x.is_zero(); ++r) {
          const ActionComponent& ac = side == ActionSide::left
                                          ? pm.left(r, a, b)
                                          : pm.right(r, a, b);
          x = intersect(x, preimage(ac.map, component_target(pm, ac, rad)));
        }
      } else {
        for (std::size_t p = 0; p < n && !x.is_zero(); ++p)
          for (std::size_t q = 0; q < n && !x.is_zero(); ++q) {
            auto [map, target] = two_sided_action(pm, p, q, a, b, rad);
            x = intersect(x, preimage(map, target));
          }
      }
      out.slices.push_back(std::move(x));
    }
  // The result must itself be stable on the acting side(s) and sit inside
  // the categorical radical.
  for (std::size_t p = 0; p < n * n; ++p)
    if (!rad.slices[p].contains(out.slices[p]))
      throw std::logic_error("module radical is not inside the radical");
  StabilityReport st = is_stable_ideal(
      pm, out, side != ActionSide::right, side != ActionSide::left);
  if (!st.stable)
    throw std::logic_error("module radical is not a stable ideal: " +
                           st.witness);
  return out;
}

StabilityReport is_stable_ideal(const ProjModel& pm, const HomIdeal& ideal,
                                bool under_left, bool under_right) {
  std::size_t n = pm.num_objects;
  auto vec_in_ideal = [&](const Vec& endo_vec) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (!ideal.slices[pm.pair(a, b)].contains(pm.slice_of(endo_vec, a, b)))
          return false;
    return true;
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Subspace& sl = ideal.slices[pm.pair(a, b)];
      for (std::size_t i = 0; i < sl.dim(); ++i) {
        Vec f = pm.embed(sl.basis_vector(i), a, b);
        for (std::size_t e = 0; e < pm.endo->dim(); ++e) {
          Vec g = unit_vec(pm.endo->dim(), e);
          if (!vec_in_ideal(pm.endo->mul(g, f)) ||
              !vec_in_ideal(pm.endo->mul(f, g))) {
            std::ostringstream os;
            os << "composition closure fails at Hom(" << pm.labels[a] << ", "
               << pm.labels[b] << ")";
            return {false, os.str()};
          }
        }
        auto check_side = [&](const ActionComponent& ac) {
          Vec out = ac.map.apply(sl.basis_vector(i));
          std::size_t S = ac.dst_labels.size(), T = ac.src_labels.size();
          for (std::size_t s = 0; s < S; ++s)
            for (std::size_t t = 0; t < T; ++t) {
              std::size_t lo = ac.block_offset[s * T + t],
                          hi = ac.block_offset[s * T + t + 1];
              Vec block(out.begin() + lo, out.begin() + hi);
              if (!ideal.slices[pm.pair(ac.src_labels[t], ac.dst_labels[s])]
                       .contains(block))
                return false;
            }
          return true;
        };
        for (std::size_t r = 0; r < n; ++r) {
          if (under_left && pm.has_left_action &&
              !check_side(pm.left(r, a, b))) {
            std::ostringstream os;
            os << "left action stability fails at Hom(" << pm.labels[a]
               << ", " << pm.labels[b] << ") under " << pm.labels[r];
            return {false, os.str()};
          }
          if (under_right && pm.has_right_action &&
              !check_side(pm.right(r, a, b))) {
            std::ostringstream os;
            os << "right action stability fails at Hom(" << pm.labels[a]
               << ", " << pm.labels[b] << ") under " << pm.labels[r];
            return {false, os.str()};
          }
        }
      }
    }
  return {true, ""};
}

ProjModel quotient_model(const ProjModel& pm, const HomIdeal& ideal) {
  std::size_t n = pm.num_objects;
  StabilityReport comp_only = is_stable_ideal(pm, ideal, false, false);
  if (!comp_only.stable) throw NotStableError(comp_only.witness);
  bool left_ok = pm.has_left_action &&
                 is_stable_ideal(pm, ideal, true, false).stable;
  bool right_ok = pm.has_right_action &&
                  is_stable_ideal(pm, ideal, false, true).stable;
  if (!left_ok && !right_ok)
    throw NotStableError("ideal is stable under no action side");

  // Per-pair quotient coordinates.
  std::vector<Matrix> proj(n * n), sect(n * n);
  ProjModel out;
  out.num_objects = n;
  out.labels = pm.labels;
  out.ring = pm.ring;
  out.has_left_action = left_ok;
  out.has_right_action = right_ok;
  out.hom_dim.assign(n * n, 0);
  for (std::size_t p = 0; p < n * n; ++p) {
    const Subspace& sl = ideal.slices[p];
    std::size_t h = pm.hom_dim[p];
    std::vector<bool> is_piv(h, false);
    for (auto pv : sl.pivots()) is_piv[pv] = true;
    std::vector<std::size_t> comp;
    for (std::size_t j = 0; j < h; ++j)
      if (!is_piv[j]) comp.push_back(j);
    std::size_t q = comp.size();
    out.hom_dim[p] = q;
    Matrix pr(q, h);
    for (std::size_t j = 0; j < h; ++j) {
      Vec v = unit_vec(h, j);
      for (std::size_t r = 0; r < sl.dim(); ++r) {
        Rat f = v[sl.pivots()[r]];
        if (is_zero(f)) continue;
        for (std::size_t c = 0; c < h; ++c) v[c] -= f * sl.basis().at(r, c);
      }
      for (std::size_t i = 0; i < q; ++i) pr.at(i, j) = v[comp[i]];
    }
    Matrix se(h, q);
    for (std::size_t i = 0; i < q; ++i) se.at(comp[i], i) = 1;
    proj[p] = std::move(pr);
    sect[p] = std::move(se);
  }
  out.slice_offset.assign(n * n + 1, 0);
  for (std::size_t p = 0; p < n * n; ++p)
    out.slice_offset[p + 1] = out.slice_offset[p] + out.hom_dim[p];
  std::size_t edim = out.slice_offset.back();

  // Quotient endomorphism algebra: lift, multiply, project.
  std::vector<SVec> prods(edim * edim);
  auto lift = [&](std::size_t p, std::size_t i) {
    // basis i of quotient slice p, lifted to old endo coordinates
    Vec h = sect[p].col(i);
    Vec full(pm.endo->dim(), Rat(0));
    std::size_t a = p / n, b = p % n;
    Vec emb = pm.embed(h, a, b);
    return emb;
  };
  for (std::size_t p1 = 0; p1 < n * n; ++p1)
    for (std::size_t i = 0; i < out.hom_dim[p1]; ++i)
      for (std::size_t p2 = 0; p2 < n * n; ++p2)
        for (std::size_t j = 0; j < out.hom_dim[p2]; ++j) {
          Vec prod = pm.endo->mul(lift(p1, i), lift(p2, j));
          SVec sp;
          for (std::size_t pp = 0; pp < n * n; ++pp) {
            Vec sl = pm.slice_of(prod, pp / n, pp % n);
            Vec qc = proj[pp].apply(sl);
            for (std::size_t t = 0; t < qc.size(); ++t)
              if (!is_zero(qc[t]))
                sp.emplace_back(out.slice_offset[pp] + t, qc[t]);
          }
          std::sort(sp.begin(), sp.end());
          prods[(out.slice_offset[p1] + i) * edim +
                (out.slice_offset[p2] + j)] = std::move(sp);
        }
  auto project_full = [&](const Vec& old_vec) {
    Vec v(edim, Rat(0));
    for (std::size_t pp = 0; pp < n * n; ++pp) {
      Vec qc = proj[pp].apply(
          // slice of the old vector
          [&] {
            Vec s(pm.hom_dim[pp]);
            for (std::size_t t = 0; t < s.size(); ++t)
              s[t] = old_vec[pm.slice_offset[pp] + t];
            return s;
          }());
      for (std::size_t t = 0; t < qc.size(); ++t)
        v[out.slice_offset[pp] + t] = qc[t];
    }
    return v;
  };
  Vec unit = project_full(pm.endo->unit());
  out.endo = std::make_shared<Algebra>(edim, std::move(prods), std::move(unit));
  {
    ValidationReport rep = validate_algebra(*out.endo);
    if (!rep.ok)
      throw std::logic_error("quotient endomorphism algebra invalid: " +
                             rep.detail);
  }
  out.object_idems.clear();
  for (std::size_t a = 0; a < n; ++a)
    out.object_idems.push_back(project_full(pm.object_idems[a]));

  auto quotient_component = [&](const ActionComponent& ac, std::size_t p) {
    ActionComponent qc;
    qc.src_labels = ac.src_labels;
    qc.dst_labels = ac.dst_labels;
    std::size_t S = ac.dst_labels.size(), T = ac.src_labels.size();
    qc.block_offset.assign(S * T + 1, 0);
    for (std::size_t s = 0; s < S; ++s)
      for (std::size_t t = 0; t < T; ++t)
        qc.block_offset[s * T + t + 1] =
            qc.block_offset[s * T + t] +
            out.hom_dim[out.pair(ac.src_labels[t], ac.dst_labels[s])];
    Matrix old = ac.map * sect[p];
    qc.map = Matrix(qc.block_offset.back(), out.hom_dim[p]);
    for (std::size_t s = 0; s < S; ++s)
      for (std::size_t t = 0; t < T; ++t) {
        std::size_t blk = s * T + t;
        std::size_t pp = pm.pair(ac.src_labels[t], ac.dst_labels[s]);
        Matrix rows = rows_range(old, ac.block_offset[blk],
                                 ac.block_offset[blk + 1]);
        Matrix qrows = proj[pp] * rows;
        for (std::size_t i = 0; i < qrows.rows(); ++i)
          for (std::size_t j = 0; j < qrows.cols(); ++j)
            qc.map.at(qc.block_offset[blk] + i, j) = qrows.at(i, j);
      }
    return qc;
  };
  if (left_ok) {
    out.left_act.resize(n * n * n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t p = 0; p < n * n; ++p)
        out.left_act[r * n * n + p] =
            quotient_component(pm.left_act[r * n * n + p], p);
  } else {
    out.has_left_action = false;
  }
  if (right_ok) {
    out.right_act.resize(n * n * n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t p = 0; p < n * n; ++p)
        out.right_act[r * n * n + p] =
            quotient_component(pm.right_act[r * n * n + p], p);
  } else {
    out.has_right_action = false;
  }
  finalize_model(out);
  return out;
}

ExactnessReport exactness_report(const ProjModel& pm) {
  ExactnessReport rep;
  try {
    CellDecomposition cd = cell_decomposition(pm.ring);
    rep.base_discrete = cd.discrete;
  } catch (const NotNearringError&) {
    rep.base_nearring = false;
    try {
      rep.base_discrete = is_discrete_bruteforce(pm.ring).discrete;
    } catch (const TooLargeError&) {
      rep.base_discrete = false;
    }
  }
  HomIdeal rad = module_radical(pm, ActionSide::left);
  for (const auto& s : rad.slices) rep.radical_dims.push_back(s.dim());
  rep.radical_total = rad.total_dim();
  rep.exact = rep.radical_total == 0;
  if (rep.exact) {
    rep.quotient_endo_dim = pm.endo->dim();
    return rep;
  }
  ProjModel quot = quotient_model(pm, rad);
  rep.quotient_endo_dim = quot.endo->dim();
  if (rep.base_discrete) {
    HomIdeal rad2 = module_radical(quot, ActionSide::left);
    rep.quotient_radical_zero = (rad2.total_dim() == 0);
  }
  return rep;
}

NontrivialityReport radical_nontriviality_check(const ProjModel& pm) {
  NontrivialityReport rep;
  std::size_t n = pm.num_objects;
  for (std::size_t a = 0; a < n && rep.vacuous; ++a)
    for (std::size_t b = 0; b < n && rep.vacuous; ++b) {
      if (a == b || pm.hom_dim[pm.pair(a, b)] == 0) continue;
      rep.vacuous = false;
      rep.from = a;
      rep.to = b;
    }
  if (rep.vacuous) return rep;
  HomIdeal rad = module_radical(pm, ActionSide::left);
  rep.hom_dim = pm.hom_dim[pm.pair(rep.from, rep.to)];
  rep.radical_dim = rad.slices[pm.pair(rep.from, rep.to)].dim();
  rep.proper = rep.radical_dim < rep.hom_dim;
  return rep;
}

HomVanishingReport hom_vanishing(const ProjModel& pm, const IdealMembers& i) {
  HomVanishingReport rep;
  rep.complement = complement_ideal(pm.ring, i);
  for (auto q : rep.complement) {
    if (i.count(q)) continue;
    for (auto p : i) {
      if (pm.hom_dim[pm.pair(q, p)] != 0) {
        rep.holds = false;
        rep.witness = {q, p, pm.hom_dim[pm.pair(q, p)]};
        return rep;
      }
    }
  }
  return rep;
}

std::vector<Bimodule> simple_bimodules(const AlgebraAnalysis& an,
                                       const EnvelopingContext& ctx) {
  SimpleModules sm = simple_modules(ctx.env);
  std::size_t nn = an.alg->dim();
  std::vector<Bimodule> out;
  for (const auto& simple : sm.simples) {
    Bimodule b;
    b.left_alg = an.alg;
    b.right_alg = an.alg;
    b.dim = simple.dim;
    for (std::size_t k2 = 0; k2 < nn; ++k2) {
      Matrix l(simple.dim, simple.dim);
      for (std::size_t i = 0; i < nn; ++i)
        if (!is_zero(an.alg->unit()[i]))
          l = l + simple.action[i * nn + k2] * an.alg->unit()[i];
      b.left_action.push_back(std::move(l));
    }
    for (std::size_t i = 0; i < nn; ++i) {
      Matrix r(simple.dim, simple.dim);
      for (std::size_t k2 = 0; k2 < nn; ++k2)
        if (!is_zero(an.alg->unit()[k2]))
          r = r + simple.action[i * nn + k2] * an.alg->unit()[k2];
      b.right_action.push_back(std::move(r));
    }
    ValidationReport rep = validate_module(b);
    if (!rep.ok)
      throw std::logic_error("simple bimodule invalid: " + rep.detail);
    out.push_back(std::move(b));
  }
  return out;
}

SerreContext make_serre_context(const AlgebraAnalysis& an) {
  SerreContext ctx;
  ctx.k = an.idempotents.size();
  std::size_t m = ctx.k * ctx.k;
  ctx.num_simples = m;
  ctx.projective_ring = cartan_pseudoring(an);
  EnvelopingContext env = enveloping_context(an);
  std::vector<Bimodule> simples = simple_bimodules(an, env);

  std::vector<Bimodule> frees, rduals, lduals;
  for (std::size_t i = 0; i < ctx.k; ++i)
    for (std::size_t j = 0; j < ctx.k; ++j)
      frees.push_back(
          free_bimodule(an.alg, an.idempotents[i], an.idempotents[j]));
  for (const auto& f : frees) {
    rduals.push_back(dual(an, f, DualSide::right).dual);
    lduals.push_back(dual(an, f, DualSide::left).dual);
  }

  ctx.factors.assign(m * m * m, {});
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t lp = 0; lp < m; ++lp) {
        TensorResult t1 = tensor_objects(rduals[a], simples[lp]);
        TensorResult t2 = tensor_objects(t1.object, lduals[b]);
        LeftModule as_env = bimodule_as_left_env(t2.object, env.env.alg);
        ctx.factors[(a * m + b) * m + lp] =
            composition_factors(env.env, as_env);
      }
  return ctx;
}

bool serre_condition(const SerreContext& ctx, const std::vector<bool>& sigma) {
  std::size_t m = ctx.num_simples;
  for (std::size_t l = 0; l < m; ++l) {
    if (!sigma[l]) continue;
    for (std::size_t lp = 0; lp < m; ++lp) {
      if (sigma[lp]) continue;
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
          if (ctx.factors[(a * m + b) * m + lp][l] != 0) return false;
    }
  }
  return true;
}

bool serre_ideal_condition(const SerreContext& ctx,
                           const std::vector<bool>& sigma) {
  IdealMembers members;
  for (std::size_t t = 0; t < ctx.num_simples; ++t)
    if (sigma[t]) members.insert(ctx.proj_label_of_simple(t));
  return is_ideal(ctx.projective_ring, members);
}

}  // namespace bimodcat
