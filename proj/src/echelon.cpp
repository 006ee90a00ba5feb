#include "bimodcat/echelon.hpp"

namespace bimodcat {

SVec to_sparse(const Vec& v) {
  SVec s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!is_zero(v[i])) s.emplace_back(i, v[i]);
  return s;
}

Vec to_dense(const SVec& v, std::size_t n) {
  Vec d(n, Rat(0));
  for (const auto& [i, c] : v) d[i] = c;
  return d;
}

SVec sparse_axpy(const SVec& a, const Rat& c, const SVec& b) {
  SVec r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      Rat x = -c * b[j].second;
      if (!is_zero(x)) r.emplace_back(b[j].first, std::move(x));
      ++j;
    } else {
      Rat x = a[i].second - c * b[j].second;
      if (!is_zero(x)) r.emplace_back(a[i].first, std::move(x));
      ++i, ++j;
    }
  }
  return r;
}

bool Echelon::insert(SVec v) {
  while (!v.empty()) {
    auto it = rows_.find(v.front().first);
    if (it == rows_.end()) {
      // New pivot; normalize leading coefficient to 1.
      Rat inv = 1 / v.front().second;
      for (auto& [idx, c] : v) c *= inv;
      rows_.emplace(v.front().first, std::move(v));
      return true;
    }
    v = sparse_axpy(v, v.front().second, it->second);
  }
  return false;
}

SVec Echelon::reduce(SVec v) const {
  // Eliminate every pivot coordinate. Each elimination removes the current
  // smallest pivot hit and can only introduce larger indices, so this
  // terminates.
  std::size_t scan = 0;
  while (scan < v.size()) {
    auto it = rows_.find(v[scan].first);
    if (it == rows_.end()) {
      ++scan;
      continue;
    }
    v = sparse_axpy(v, v[scan].second, it->second);
  }
  return v;
}

std::vector<std::size_t> Echelon::pivots() const {
  std::vector<std::size_t> p;
  p.reserve(rows_.size());
  for (const auto& [piv, row] : rows_) p.push_back(piv);
  return p;
}

std::vector<std::size_t> Echelon::free_indices() const {
  std::vector<std::size_t> f;
  auto it = rows_.begin();
  for (std::size_t j = 0; j < ambient_; ++j) {
    if (it != rows_.end() && it->first == j) {
      ++it;
    } else {
      f.push_back(j);
    }
  }
  return f;
}

void Echelon::fully_reduce() {
  // Back-substitute from the largest pivot down.
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    std::size_t piv = it->first;
    for (auto jt = rows_.begin(); jt->first != piv; ++jt) {
      auto& row = jt->second;
      for (std::size_t k = 0; k < row.size(); ++k) {
        if (row[k].first == piv) {
          row = sparse_axpy(row, row[k].second, it->second);
          break;
        }
        if (row[k].first > piv) break;
      }
    }
  }
}

Matrix Echelon::to_matrix() const {
  Matrix m(rows_.size(), ambient_);
  std::size_t i = 0;
  for (const auto& [piv, row] : rows_) {
    for (const auto& [j, c] : row) m.at(i, j) = c;
    ++i;
  }
  return m;
}

}  // namespace bimodcat
