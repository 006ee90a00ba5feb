#include <algorithm>
#include <cassert>
#include <optional>

#include "bimodcat/algebra.hpp"

namespace bimodcat {
namespace {

// ---- dense univariate polynomials over ℚ, coefficients low -> high ----

using Poly = std::vector<Rat>;

void p_norm(Poly& p) {
  while (!p.empty() && is_zero(p.back())) p.pop_back();
}

std::size_t p_deg(const Poly& p) { return p.empty() ? 0 : p.size() - 1; }

Poly p_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  p_norm(r);
  return r;
}

Poly p_sub(const Poly& a, const Poly& b) {
  Poly r = a;
  if (b.size() > r.size()) r.resize(b.size(), Rat(0));
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  p_norm(r);
  return r;
}

Poly p_scale(const Poly& a, const Rat& c) {
  Poly r = a;
  for (auto& x : r) x *= c;
  p_norm(r);
  return r;
}

std::pair<Poly, Poly> p_divmod(const Poly& a, const Poly& b) {
  Poly rem = a, quot;
  if (b.empty()) throw std::invalid_argument("polynomial division by zero");
  if (rem.size() >= b.size()) quot.assign(rem.size() - b.size() + 1, Rat(0));
  while (rem.size() >= b.size() && !rem.empty()) {
    Rat c = rem.back() / b.back();
    std::size_t shift = rem.size() - b.size();
    quot[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) rem[shift + i] -= c * b[i];
    p_norm(rem);
  }
  p_norm(quot);
  return {quot, rem};
}

Poly p_monic(const Poly& a) {
  if (a.empty()) return a;
  return p_scale(a, 1 / a.back());
}

Poly p_gcd(Poly a, Poly b) {
  p_norm(a);
  p_norm(b);
  while (!b.empty()) {
    auto [q, r] = p_divmod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return p_monic(a);
}

/// Extended Euclid: returns (alpha, beta) with alpha·u + beta·v = gcd(u,v),
/// gcd normalized monic.
std::pair<Poly, Poly> p_bezout(const Poly& u, const Poly& v) {
  Poly r0 = u, r1 = v;
  Poly s0 = {Rat(1)}, s1 = {};
  Poly t0 = {}, t1 = {Rat(1)};
  while (!r1.empty()) {
    auto [q, r] = p_divmod(r0, r1);
    Poly s2 = p_sub(s0, p_mul(q, s1));
    Poly t2 = p_sub(t0, p_mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) throw std::invalid_argument("bezout of zero polynomials");
  Rat inv = 1 / r0.back();
  return {p_scale(s0, inv), p_scale(t0, inv)};
}

Poly p_derivative(const Poly& a) {
  Poly r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(Rat((long)i) * a[i]);
  p_norm(r);
  return r;
}

Rat p_eval(const Poly& a, const Rat& x) {
  Rat r = 0;
  for (std::size_t i = a.size(); i-- > 0;) r = r * x + a[i];
  return r;
}

/// Evaluates p at an algebra element (Horner).
Vec p_eval_alg(const Algebra& alg, const Poly& p, const Vec& x) {
  Vec r(alg.dim(), Rat(0));
  for (std::size_t i = p.size(); i-- > 0;) {
    r = alg.mul(r, x);
    if (!is_zero(p[i])) r = r + p[i] * alg.unit();
  }
  return r;
}

/// Divisors of |z|, by trial division; empty when |z| is too large to
/// factor cheaply (callers then simply find no roots, which is safe).
std::vector<mpz_class> divisors_of(mpz_class z) {
  std::vector<mpz_class> divs;
  z = abs(z);
  if (z == 0) return divs;
  if (z > mpz_class("1000000000000")) return divs;
  std::vector<std::pair<mpz_class, unsigned>> factors;
  mpz_class m = z;
  for (mpz_class p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      unsigned e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      factors.emplace_back(p, e);
    }
  }
  if (m > 1) factors.emplace_back(m, 1);
  divs.push_back(1);
  for (const auto& [p, e] : factors) {
    std::size_t sz = divs.size();
    mpz_class pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

/// Rational roots with multiplicities, via the rational root bound on the
/// integer-cleared polynomial.
std::vector<std::pair<Rat, std::size_t>> rational_roots(Poly f) {
  std::vector<std::pair<Rat, std::size_t>> roots;
  p_norm(f);
  if (f.size() <= 1) return roots;
  // Root at 0.
  std::size_t z = 0;
  while (f.size() > 1 && is_zero(f.front())) {
    f.erase(f.begin());
    ++z;
  }
  if (z) roots.emplace_back(Rat(0), z);
  if (f.size() <= 1) return roots;
  // Clear denominators and content.
  mpz_class den_lcm = 1;
  for (const auto& c : f) {
    mpz_class d = c.get_den();
    den_lcm = lcm(den_lcm, d);
  }
  std::vector<mpz_class> zi;
  for (const auto& c : f) {
    mpq_class scaled = c * Rat(den_lcm);
    zi.push_back(scaled.get_num());
  }
  mpz_class content = 0;
  for (const auto& c : zi) content = gcd(content, c);
  if (content > 1)
    for (auto& c : zi) c /= content;
  auto ps = divisors_of(zi.front());
  auto qs = divisors_of(zi.back());
  for (const auto& p : ps)
    for (const auto& q : qs) {
      for (int sign = 0; sign < 2; ++sign) {
        Rat cand(sign ? -p : p, q);
        cand.canonicalize();
        if (!is_zero(p_eval(f, cand))) continue;
        bool known = false;
        for (auto& [r, m] : roots)
          if (r == cand) known = true;
        if (known) continue;
        // Deflate to find multiplicity.
        Poly g = f;
        std::size_t mult = 0;
        Poly lin = {-cand, Rat(1)};
        while (true) {
          auto [quot, rem] = p_divmod(g, lin);
          if (!rem.empty()) break;
          g = quot;
          ++mult;
        }
        roots.emplace_back(cand, mult);
      }
    }
  return roots;
}

/// Minimal polynomial of x in a unital algebra, monic.
Poly min_poly(const Algebra& alg, const Vec& x) {
  std::size_t n = alg.dim();
  Echelon ech(n);
  std::vector<Vec> powers;
  Vec p = alg.unit();
  while (true) {
    if (!ech.insert(p)) break;
    powers.push_back(p);
    p = alg.mul(p, x);
  }
  // p is dependent on earlier powers: p = Σ c_i powers[i].
  Matrix m(n, powers.size());
  for (std::size_t j = 0; j < powers.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) m.at(i, j) = powers[j][i];
  auto c = solve(m, p);
  assert(c.has_value());
  Poly mu(powers.size() + 1, Rat(0));
  for (std::size_t i = 0; i < powers.size(); ++i) mu[i] = -(*c)[i];
  mu[powers.size()] = 1;
  return mu;
}

bool is_unit_multiple(const Algebra& alg, const Vec& x) {
  Matrix m = Matrix::from_rows({alg.unit(), x});
  return rank(m) <= 1;
}

/// Splits the minimal polynomial into >= 2 pairwise coprime factors when
/// possible: full-multiplicity linear factors from rational roots, then a
/// squarefree-decomposition fallback.
std::vector<Poly> coprime_pieces(const Poly& mu) {
  std::vector<Poly> pieces;
  Poly rest = mu;
  for (const auto& [r, mult] : rational_roots(mu)) {
    Poly fac = {Rat(1)};
    Poly lin = {-r, Rat(1)};
    for (std::size_t i = 0; i < mult; ++i) fac = p_mul(fac, lin);
    pieces.push_back(fac);
    rest = p_divmod(rest, fac).first;
  }
  if (!rest.empty() && p_deg(rest) >= 1) pieces.push_back(p_monic(rest));
  if (pieces.size() >= 2) return pieces;
  // No split from roots; try squarefree decomposition mu = Π s_i^i.
  Poly g = p_gcd(mu, p_derivative(mu));
  if (p_deg(g) >= 1 && p_deg(g) < p_deg(mu)) {
    // mu/g is the squarefree part; peel repeated parts into coprime powers.
    std::vector<Poly> sf;
    Poly m = mu;
    while (p_deg(m) >= 1) {
      Poly gg = p_gcd(m, p_derivative(m));
      Poly sqf = p_divmod(m, gg).first;  // squarefree part of m
      sf.push_back(sqf);
      m = std::move(gg);
    }
    // s_i = sf[i-1]/sf[i]; piece_i = s_i^i.
    std::vector<Poly> out;
    for (std::size_t i = 0; i + 1 <= sf.size(); ++i) {
      Poly si = (i + 1 < sf.size()) ? p_divmod(sf[i], sf[i + 1]).first : sf[i];
      if (p_deg(si) >= 1) {
        Poly piece = {Rat(1)};
        for (std::size_t k = 0; k <= i; ++k) piece = p_mul(piece, si);
        out.push_back(piece);
      }
    }
    if (out.size() >= 2) return out;
  }
  return {};
}

/// Idempotent from a coprime factorization mu = u·v: with alpha·u+beta·v=1,
/// the element (beta·v)(x) is idempotent in ℚ[x].
std::optional<Vec> idempotent_from_split(const Algebra& alg, const Vec& x,
                                         const Poly& mu,
                                         const std::vector<Poly>& pieces) {
  Poly u = pieces[0];
  Poly v = {Rat(1)};
  for (std::size_t i = 1; i < pieces.size(); ++i) v = p_mul(v, pieces[i]);
  auto [alpha, beta] = p_bezout(u, v);
  Vec e = p_eval_alg(alg, p_mul(beta, v), x);
  if (!alg.is_idempotent(e)) return std::nullopt;
  if (is_zero_vec(e) || e == alg.unit()) return std::nullopt;
  return e;
}

std::vector<Vec> split_candidates(const Algebra& alg) {
  std::size_t n = alg.dim();
  std::vector<Vec> cands;
  // Central elements first.
  std::vector<Matrix> comm;
  for (std::size_t i = 0; i < n; ++i)
    comm.push_back(alg.basis_left_mult(i) - alg.basis_right_mult(i));
  Matrix stacked(0, n);
  for (const auto& m : comm) stacked = Matrix::vcat(stacked, m);
  Subspace center = kernel_subspace(stacked);
  for (std::size_t i = 0; i < center.dim(); ++i)
    cands.push_back(center.basis_vector(i));
  for (std::size_t i = 0; i < center.dim(); ++i)
    for (std::size_t j = i; j < center.dim(); ++j)
      cands.push_back(alg.mul(center.basis_vector(i), center.basis_vector(j)));
  for (std::size_t i = 0; i < n; ++i) cands.push_back(unit_vec(n, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec bi = unit_vec(n, i), bj = unit_vec(n, j);
      cands.push_back(alg.mul(bi, bj));
      if (i < j) {
        cands.push_back(bi + bj);
        cands.push_back(bi - bj);
      }
    }
  return cands;
}

/// Searches for a nontrivial idempotent. Min-poly splits work in any
/// algebra; the minimal-left-ideal descent additionally assumes the algebra
/// is semisimple (which is how it is called).
std::optional<Vec> find_proper_idempotent(const Algebra& alg,
                                          bool semisimple) {
  std::size_t n = alg.dim();
  if (n <= 1) return std::nullopt;
  auto cands = split_candidates(alg);
  for (const auto& x : cands) {
    if (is_zero_vec(x) || is_unit_multiple(alg, x)) continue;
    Poly mu = min_poly(alg, x);
    auto pieces = coprime_pieces(mu);
    if (pieces.size() < 2) continue;
    auto e = idempotent_from_split(alg, x, mu, pieces);
    if (e) return e;
  }
  if (!semisimple) return std::nullopt;
  // Minimal-left-ideal descent: in a semisimple algebra, any proper minimal
  // left ideal L satisfies L·x0 = L for some basis x0, and solving e·x0 = x0
  // inside L produces a nontrivial idempotent.
  for (const auto& x : cands) {
    if (is_zero_vec(x) || is_unit_multiple(alg, x)) continue;
    Echelon ech(n);
    for (std::size_t i = 0; i < n; ++i)
      ech.insert(alg.mul(unit_vec(n, i), x));
    Subspace ideal = Subspace::from_echelon(std::move(ech));
    if (ideal.is_zero() || ideal.dim() == n) continue;
    bool shrunk = true;
    while (shrunk) {
      shrunk = false;
      for (std::size_t b = 0; b < ideal.dim(); ++b) {
        Vec y = ideal.basis_vector(b);
        Echelon e2(n);
        for (std::size_t i = 0; i < n; ++i)
          e2.insert(alg.mul(unit_vec(n, i), y));
        Subspace sub = Subspace::from_echelon(std::move(e2));
        if (!sub.is_zero() && sub.dim() < ideal.dim()) {
          ideal = sub;
          shrunk = true;
          break;
        }
      }
    }
    for (std::size_t b = 0; b < ideal.dim(); ++b) {
      Vec x0 = ideal.basis_vector(b);
      Matrix cols(n, ideal.dim());
      bool nonzero = false;
      for (std::size_t t = 0; t < ideal.dim(); ++t) {
        Vec lx = alg.mul(ideal.basis_vector(t), x0);
        if (!is_zero_vec(lx)) nonzero = true;
        for (std::size_t r = 0; r < n; ++r) cols.at(r, t) = lx[r];
      }
      if (!nonzero) continue;
      auto c = solve(cols, x0);
      if (!c) continue;
      Vec e(n, Rat(0));
      for (std::size_t t = 0; t < ideal.dim(); ++t)
        e = e + (*c)[t] * ideal.basis_vector(t);
      if (alg.is_idempotent(e) && !is_zero_vec(e) && e != alg.unit())
        return e;
    }
  }
  return std::nullopt;
}

void verify_orthogonal_complete(const Algebra& alg,
                                const std::vector<Vec>& idems,
                                const char* what) {
  Vec total(alg.dim(), Rat(0));
  for (std::size_t i = 0; i < idems.size(); ++i) {
    if (!alg.is_idempotent(idems[i]))
      throw std::invalid_argument(std::string(what) + ": not idempotent");
    for (std::size_t j = 0; j < idems.size(); ++j) {
      if (i == j) continue;
      if (!is_zero_vec(alg.mul(idems[i], idems[j])))
        throw std::invalid_argument(std::string(what) + ": not orthogonal");
    }
    total = total + idems[i];
  }
  if (total != alg.unit())
    throw std::invalid_argument(std::string(what) +
                                ": idempotents do not sum to the unit");
}

/// Orthogonal primitive idempotents of a semisimple algebra, each certified
/// by a one-dimensional corner. Throws NonSplitError otherwise.
std::vector<Vec> split_semisimple(const Algebra& s) {
  if (s.dim() == 0) return {};
  std::vector<Vec> work = {s.unit()};
  std::size_t guard = 0;
  while (true) {
    if (++guard > 4 * s.dim() + 8)
      throw std::logic_error("idempotent refinement did not terminate");
    bool changed = false;
    for (std::size_t t = 0; t < work.size(); ++t) {
      CornerAlgebra corner = corner_algebra(s, work[t]);
      if (corner.algebra.dim() <= 1) continue;
      auto e_c = find_proper_idempotent(corner.algebra, true);
      if (!e_c)
        throw NonSplitError(
            "semisimple block is not a split product of copies of the "
            "rationals; supply idempotents explicitly");
      Vec e(s.dim(), Rat(0));
      for (std::size_t r = 0; r < s.dim(); ++r)
        for (std::size_t q = 0; q < corner.algebra.dim(); ++q)
          e[r] += corner.inclusion.at(r, q) * (*e_c)[q];
      Vec rest = work[t] - e;
      work[t] = e;
      work.insert(work.begin() + t + 1, rest);
      changed = true;
      break;
    }
    if (!changed) break;
  }
  return work;
}

}  // namespace

std::vector<Vec> primitive_idempotents(
    const Algebra& a, const std::optional<std::vector<Vec>>& supplied) {
  std::size_t n = a.dim();
  if (n == 0) return {};
  RadicalData rad = jacobson_radical(a);
  const Algebra& s = rad.semisimple;

  std::vector<Vec> result;
  if (supplied) {
    verify_orthogonal_complete(a, *supplied, "supplied idempotents");
    for (const auto& e : *supplied) {
      Vec ebar = rad.projection.apply(e);
      if (corner_subspace(s, ebar, ebar).dim() <= 1) {
        result.push_back(e);
        continue;
      }
      // Refine a non-primitive member inside its corner.
      CornerAlgebra corner = corner_algebra(a, e);
      auto parts = primitive_idempotents(corner.algebra, std::nullopt);
      for (const auto& p : parts) {
        Vec lifted(n, Rat(0));
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t q = 0; q < corner.algebra.dim(); ++q)
            lifted[r] += corner.inclusion.at(r, q) * p[q];
        result.push_back(lifted);
      }
    }
  } else {
    std::vector<Vec> bars = split_semisimple(s);
    // Lift along the nilpotent kernel, one corner at a time.
    Vec remaining = a.unit();
    for (std::size_t t = 0; t < bars.size(); ++t) {
      Vec e;
      if (t + 1 == bars.size()) {
        e = remaining;
      } else {
        Vec x = rad.section.apply(bars[t]);
        x = a.mul(remaining, a.mul(x, remaining));
        std::size_t iters = 0;
        while (a.mul(x, x) != x) {
          Vec x2 = a.mul(x, x);
          Vec x3 = a.mul(x2, x);
          x = Rat(3) * x2 - Rat(2) * x3;
          if (++iters > 200)
            throw std::logic_error("idempotent lifting did not converge");
        }
        e = x;
      }
      result.push_back(e);
      remaining = remaining - e;
    }
  }

  verify_orthogonal_complete(a, result, "computed idempotents");
  for (const auto& e : result) {
    Vec ebar = rad.projection.apply(e);
    if (corner_subspace(s, ebar, ebar).dim() != 1)
      throw NonSplitError(
          "primitive idempotent has a corner of dimension > 1 in the "
          "semisimple quotient (non-split block)");
  }
  return result;
}

}  // namespace bimodcat
