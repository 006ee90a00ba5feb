#include "bimodcat/algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace bimodcat {

Algebra::Algebra(std::size_t dim, std::vector<SVec> products, Vec unit)
    : dim_(dim), products_(std::move(products)), unit_(std::move(unit)) {
  if (products_.size() != dim_ * dim_)
    throw std::invalid_argument("product table size mismatch");
  if (unit_.size() != dim_) throw std::invalid_argument("unit length mismatch");
}

Algebra Algebra::from_dense_table(std::size_t dim, const std::vector<Rat>& c,
                                  Vec unit) {
  if (c.size() != dim * dim * dim)
    throw std::invalid_argument("structure constant table size mismatch");
  std::vector<SVec> prods(dim * dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      SVec p;
      for (std::size_t k = 0; k < dim; ++k) {
        const Rat& x = c[(i * dim + j) * dim + k];
        if (!is_zero(x)) p.emplace_back(k, x);
      }
      prods[i * dim + j] = std::move(p);
    }
  return Algebra(dim, std::move(prods), std::move(unit));
}

Algebra Algebra::rationals() {
  return Algebra(1, {SVec{{0, Rat(1)}}}, Vec{Rat(1)});
}

Rat Algebra::structure_constant(std::size_t i, std::size_t j,
                                std::size_t k) const {
  for (const auto& [idx, c] : product(i, j))
    if (idx == k) return c;
  return Rat(0);
}

Vec Algebra::mul(const Vec& x, const Vec& y) const {
  Vec r(dim_, Rat(0));
  for (std::size_t i = 0; i < dim_; ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (is_zero(y[j])) continue;
      Rat f = x[i] * y[j];
      for (const auto& [k, c] : product(i, j)) r[k] += f * c;
    }
  }
  return r;
}

Matrix Algebra::left_mult(const Vec& x) const {
  Matrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      for (const auto& [k, c] : product(i, j)) m.at(k, j) += x[i] * c;
  }
  return m;
}

Matrix Algebra::right_mult(const Vec& x) const {
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    if (is_zero(x[j])) continue;
    for (std::size_t i = 0; i < dim_; ++i)
      for (const auto& [k, c] : product(i, j)) m.at(k, i) += x[j] * c;
  }
  return m;
}

Matrix Algebra::basis_left_mult(std::size_t i) const {
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j)
    for (const auto& [k, c] : product(i, j)) m.at(k, j) = c;
  return m;
}

Matrix Algebra::basis_right_mult(std::size_t i) const {
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j)
    for (const auto& [k, c] : product(j, i)) m.at(k, j) = c;
  return m;
}

Rat Algebra::trace_left_mult(const Vec& x) const {
  Rat t = 0;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      for (const auto& [k, c] : product(i, j))
        if (k == j) t += x[i] * c;
  }
  return t;
}

bool Algebra::is_idempotent(const Vec& e) const { return mul(e, e) == e; }

bool Algebra::is_commutative() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      if (product(i, j) != product(j, i)) return false;
  return true;
}

ValidationReport validate_algebra(const Algebra& a) {
  std::size_t n = a.dim();
  // Unit law.
  for (std::size_t i = 0; i < n; ++i) {
    Vec basis = unit_vec(n, i);
    if (a.mul(a.unit(), basis) != basis || a.mul(basis, a.unit()) != basis) {
      std::ostringstream os;
      os << "unit law fails at basis element " << i;
      return {false, os.str()};
    }
  }
  // Associativity: (aᵢaⱼ)aₖ = aᵢ(aⱼaₖ), compared as sparse expansions.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const SVec& pij = a.product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        Vec lhs(n, Rat(0)), rhs(n, Rat(0));
        for (const auto& [m, c] : pij)
          for (const auto& [l, d] : a.product(m, k)) lhs[l] += c * d;
        for (const auto& [m, c] : a.product(j, k))
          for (const auto& [l, d] : a.product(i, m)) rhs[l] += c * d;
        if (lhs != rhs) {
          std::ostringstream os;
          os << "associativity fails at (i,j,k) = (" << i << "," << j << ","
             << k << ")";
          return {false, os.str()};
        }
      }
    }
  return {true, ""};
}

Algebra opposite(const Algebra& a) {
  std::size_t n = a.dim();
  std::vector<SVec> prods(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) prods[i * n + j] = a.product(j, i);
  return Algebra(n, std::move(prods), a.unit());
}

Algebra tensor_algebra(const Algebra& a, const Algebra& b) {
  std::size_t na = a.dim(), nb = b.dim(), n = na * nb;
  std::vector<SVec> prods(n * n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t k = 0; k < nb; ++k)
      for (std::size_t j = 0; j < na; ++j)
        for (std::size_t l = 0; l < nb; ++l) {
          SVec p;
          for (const auto& [m, c] : a.product(i, j))
            for (const auto& [q, d] : b.product(k, l))
              p.emplace_back(m * nb + q, c * d);
          std::sort(p.begin(), p.end(),
                    [](const auto& x, const auto& y) { return x.first < y.first; });
          prods[(i * nb + k) * n + (j * nb + l)] = std::move(p);
        }
  Vec unit(n, Rat(0));
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t k = 0; k < nb; ++k) {
      Rat u = a.unit()[i] * b.unit()[k];
      if (!is_zero(u)) unit[i * nb + k] = u;
    }
  return Algebra(n, std::move(prods), std::move(unit));
}

Algebra enveloping(const Algebra& a) {
  return tensor_algebra(opposite(a), a);
}

bool is_two_sided_ideal(const Algebra& a, const Subspace& s) {
  for (std::size_t b = 0; b < s.dim(); ++b) {
    Vec v = s.basis_vector(b);
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (!s.contains(a.mul(unit_vec(a.dim(), i), v))) return false;
      if (!s.contains(a.mul(v, unit_vec(a.dim(), i)))) return false;
    }
  }
  return true;
}

Subspace subspace_product(const Algebra& a, const Subspace& u,
                          const Subspace& v) {
  Echelon e(a.dim());
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (std::size_t j = 0; j < v.dim(); ++j)
      e.insert(a.mul(u.basis_vector(i), v.basis_vector(j)));
  return Subspace::from_echelon(std::move(e));
}

bool is_nilpotent_ideal(const Algebra& a, const Subspace& ideal) {
  Subspace power = ideal;
  for (std::size_t step = 0; step < a.dim(); ++step) {
    if (power.is_zero()) return true;
    Subspace next = subspace_product(a, power, ideal);
    if (next.dim() == power.dim()) return next.is_zero();
    power = next;
  }
  return power.is_zero();
}

QuotientAlgebra quotient_by_ideal(const Algebra& a, const Subspace& ideal) {
  if (!is_two_sided_ideal(a, ideal))
    throw std::invalid_argument("subspace is not a two-sided ideal");
  std::size_t n = a.dim();
  const Matrix& basis = ideal.basis();
  const auto& pivots = ideal.pivots();
  std::vector<bool> is_piv(n, false);
  for (auto p : pivots) is_piv[p] = true;
  std::vector<std::size_t> comp;  // complement coordinates
  for (std::size_t j = 0; j < n; ++j)
    if (!is_piv[j]) comp.push_back(j);
  std::size_t q = comp.size();

  // projection: reduce modulo the echelon basis, then read complement coords.
  Matrix proj(q, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec v = unit_vec(n, j);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      const Rat& c = v[pivots[r]];
      if (is_zero(c)) continue;
      Rat f = c;
      for (std::size_t k = 0; k < n; ++k) v[k] -= f * basis.at(r, k);
    }
    for (std::size_t i = 0; i < q; ++i) proj.at(i, j) = v[comp[i]];
  }
  Matrix section(n, q);
  for (std::size_t i = 0; i < q; ++i) section.at(comp[i], i) = 1;

  std::vector<SVec> prods(q * q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) {
      Vec prod = a.mul(unit_vec(n, comp[i]), unit_vec(n, comp[j]));
      prods[i * q + j] = to_sparse(proj.apply(prod));
    }
  Vec unit = proj.apply(a.unit());
  return {Algebra(q, std::move(prods), std::move(unit)), std::move(proj),
          std::move(section)};
}

RadicalData jacobson_radical(const Algebra& a) {
  std::size_t n = a.dim();
  // Gram matrix of (x,y) ↦ trace(L_{x·y}).
  Vec trace_l(n);
  for (std::size_t i = 0; i < n; ++i)
    trace_l[i] = a.trace_left_mult(unit_vec(n, i));
  Matrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rat g = 0;
      for (const auto& [k, c] : a.product(i, j)) g += c * trace_l[k];
      gram.at(i, j) = g;
    }
  Subspace radical = kernel_subspace(gram);
  QuotientAlgebra quot = quotient_by_ideal(a, radical);
  return {std::move(radical), std::move(quot.algebra),
          std::move(quot.projection), std::move(quot.section)};
}

Subspace corner_subspace(const Algebra& a, const Vec& e_left,
                         const Vec& e_right) {
  Echelon ech(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    ech.insert(a.mul(e_left, a.mul(unit_vec(a.dim(), i), e_right)));
  return Subspace::from_echelon(std::move(ech));
}

CornerAlgebra corner_algebra(const Algebra& a, const Vec& e) {
  if (!a.is_idempotent(e))
    throw std::invalid_argument("corner_algebra: e is not idempotent");
  std::size_t n = a.dim();
  Subspace corner = corner_subspace(a, e, e);
  std::size_t q = corner.dim();
  Matrix inclusion(n, q);
  for (std::size_t i = 0; i < q; ++i) {
    Vec b = corner.basis_vector(i);
    for (std::size_t r = 0; r < n; ++r) inclusion.at(r, i) = b[r];
  }
  // projection(x) = coordinates of e·x·e in the echelon basis; with a
  // reduced-echelon basis those are just the values at pivot columns.
  Matrix exe = a.left_mult(e) * a.right_mult(e);
  Matrix proj(q, n);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < n; ++j)
      proj.at(i, j) = exe.at(corner.pivots()[i], j);
  std::vector<SVec> prods(q * q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) {
      Vec p = a.mul(corner.basis_vector(i), corner.basis_vector(j));
      prods[i * q + j] = to_sparse(proj.apply(p));
    }
  Vec unit = proj.apply(e);
  return {Algebra(q, std::move(prods), std::move(unit)), std::move(inclusion),
          std::move(proj)};
}

Subspace idempotent_ideal(const Algebra& a, const Vec& e) {
  if (!a.is_idempotent(e))
    throw std::invalid_argument("idempotent_ideal: e is not idempotent");
  std::size_t n = a.dim();
  Echelon ech(n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec aie = a.mul(unit_vec(n, i), e);
    for (std::size_t j = 0; j < n; ++j)
      ech.insert(a.mul(aie, unit_vec(n, j)));
  }
  return Subspace::from_echelon(std::move(ech));
}

QuotientAlgebra quotient_by_idempotent_ideal(const Algebra& a, const Vec& e) {
  return quotient_by_ideal(a, idempotent_ideal(a, e));
}

AlgebraAnalysis analyze_algebra(AlgebraPtr a,
                                const std::optional<std::vector<Vec>>& supplied) {
  AlgebraAnalysis an;
  an.alg = a;
  an.rad = jacobson_radical(*a);
  an.idempotents = primitive_idempotents(*a, supplied);
  // Block grouping: ēᵢ S ēⱼ ≠ 0 in the semisimple quotient identifies
  // idempotents whose projectives are isomorphic.
  std::size_t k = an.idempotents.size();
  std::vector<Vec> bars(k);
  for (std::size_t i = 0; i < k; ++i)
    bars[i] = an.rad.projection.apply(an.idempotents[i]);
  std::vector<std::size_t> parent(k);
  for (std::size_t i = 0; i < k; ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      Subspace c = corner_subspace(an.rad.semisimple, bars[i], bars[j]);
      if (!c.is_zero()) parent[find(i)] = find(j);
    }
  an.block_of.assign(k, 0);
  std::vector<std::size_t> roots;
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t r = find(i);
    auto it = std::find(roots.begin(), roots.end(), r);
    if (it == roots.end()) {
      roots.push_back(r);
      an.block_of[i] = roots.size() - 1;
    } else {
      an.block_of[i] = static_cast<std::size_t>(it - roots.begin());
    }
  }
  an.num_blocks = roots.size();
  an.basic = (an.num_blocks == k);
  return an;
}

bool is_basic(const AlgebraAnalysis& an) { return an.basic; }

BasifyResult basify(const AlgebraAnalysis& an) {
  std::size_t n = an.alg->dim();
  std::vector<std::size_t> chosen;
  std::vector<bool> seen(an.num_blocks, false);
  Vec e(n, Rat(0));
  for (std::size_t i = 0; i < an.idempotents.size(); ++i) {
    if (seen[an.block_of[i]]) continue;
    seen[an.block_of[i]] = true;
    chosen.push_back(i);
    e = e + an.idempotents[i];
  }
  return {corner_algebra(*an.alg, e), std::move(e), std::move(chosen)};
}

std::vector<std::vector<std::size_t>> cartan_matrix(const AlgebraAnalysis& an) {
  std::size_t k = an.idempotents.size();
  std::vector<std::vector<std::size_t>> c(k, std::vector<std::size_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      c[i][j] =
          corner_subspace(*an.alg, an.idempotents[i], an.idempotents[j]).dim();
  return c;
}

}  // namespace bimodcat
