#include "hkgeom/exactmath/linalg.hpp"

namespace hkgeom::exact {

Echelon row_reduce(DenseMatrix m, std::size_t cols) {
  Echelon e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c].is_zero()) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[r], m[piv]);
    Scalar inv = m[r][c].inverse();
    for (auto& v : m[r]) v *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Scalar f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    e.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  e.reduced = std::move(m);
  return e;
}

DenseMatrix kernel_basis(const DenseMatrix& m, std::size_t cols) {
  for (const auto& row : m)
    if (row.size() != cols) throw InvalidArgument("ragged matrix rows");
  Echelon e = row_reduce(m, cols);
  FieldSpec f;
  for (const auto& row : m)
    for (const auto& v : row) f = join(f, v.field());
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  DenseMatrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    DenseVector v(cols, Scalar::zero(f));
    v[free] = Scalar::one(f);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const DenseMatrix& m, std::size_t cols) { return row_reduce(m, cols).pivots.size(); }

DenseMatrix kernel_basis(const PolyMatrix& m) { return kernel_basis(m.constants(), m.cols()); }
std::size_t rank(const PolyMatrix& m) { return rank(m.constants(), m.cols()); }

void axpy(SparseVector& y, const Scalar& a, const SparseVector& x) {
  if (a.is_zero()) return;
  for (const auto& [i, v] : x) {
    auto [it, inserted] = y.try_emplace(i, a * v);
    if (!inserted) {
      it->second += a * v;
      if (it->second.is_zero()) y.erase(it);
    }
  }
}

Scalar dot(const SparseVector& a, const SparseVector& b) {
  Scalar s;
  const SparseVector& small = a.size() <= b.size() ? a : b;
  const SparseVector& large = a.size() <= b.size() ? b : a;
  for (const auto& [i, v] : small) {
    auto it = large.find(i);
    if (it != large.end()) s += v * it->second;
  }
  return s;
}

SparseVector SparseEchelon::reduce(SparseVector v) const {
  auto it = v.begin();
  while (it != v.end()) {
    auto r = rows_.find(it->first);
    if (r == rows_.end()) {
      ++it;
      continue;
    }
    std::size_t col = it->first;
    axpy(v, -it->second, r->second);
    it = v.upper_bound(col);
  }
  return v;
}

bool SparseEchelon::insert(SparseVector v) {
  for (const auto& [i, x] : v)
    if (i >= cols_) throw InvalidArgument("sparse vector index out of range");
  v = reduce(std::move(v));
  if (v.empty()) return false;
  Scalar inv = v.begin()->second.inverse();
  for (auto& [i, x] : v) x *= inv;
  std::size_t pivot = v.begin()->first;
  rows_.emplace(pivot, std::move(v));
  return true;
}

std::vector<SparseVector> SparseEchelon::kernel_basis() const {
  std::map<std::size_t, SparseVector> reduced = rows_;
  for (auto it = reduced.rbegin(); it != reduced.rend(); ++it) {
    std::size_t p = it->first;
    const SparseVector& prow = it->second;
    for (auto jt = reduced.begin(); jt->first < p; ++jt) {
      auto e = jt->second.find(p);
      if (e == jt->second.end()) continue;
      Scalar f = e->second;
      axpy(jt->second, -f, prow);
    }
  }
  std::vector<SparseVector> basis;
  std::map<std::size_t, std::vector<std::pair<std::size_t, Scalar>>> by_free;
  for (const auto& [p, row] : reduced)
    for (const auto& [c, v] : row)
      if (c != p) by_free[c].emplace_back(p, v);
  for (std::size_t f = 0; f < cols_; ++f) {
    if (reduced.count(f)) continue;
    SparseVector v;
    v[f] = Scalar(1);
    auto it = by_free.find(f);
    if (it != by_free.end())
      for (const auto& [p, c] : it->second) v[p] = -c;
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace hkgeom::exact
