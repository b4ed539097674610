#include "hkgeom/exactmath/polymatrix.hpp"

#include <bit>
#include <functional>
#include <sstream>
#include <unordered_map>

namespace hkgeom::exact {

PolyMatrix::PolyMatrix(Variables vars, std::size_t rows, std::size_t cols)
    : vars_(std::move(vars)), rows_(rows), cols_(cols), entries_(rows * cols, MultiPoly(vars_)) {}

PolyMatrix::PolyMatrix(Variables vars, const std::vector<std::vector<MultiPoly>>& rows)
    : PolyMatrix(std::move(vars), rows.size(), rows.empty() ? 0 : rows.front().size()) {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols_) throw InvalidArgument("ragged matrix rows");
    for (std::size_t c = 0; c < cols_; ++c) set(r, c, rows[r][c]);
  }
}

PolyMatrix PolyMatrix::from_scalars(const Variables& vars, const std::vector<std::vector<Scalar>>& rows) {
  PolyMatrix m(vars, rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw InvalidArgument("ragged matrix rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m.set(r, c, MultiPoly::constant(vars, rows[r][c]));
  }
  return m;
}

void PolyMatrix::set(std::size_t r, std::size_t c, MultiPoly p) {
  if (r >= rows_ || c >= cols_) throw InvalidArgument("matrix index out of range");
  if (!(p.variables() == vars_)) throw InvalidArgument("matrix entry over a different variable set");
  entries_[r * cols_ + c] = std::move(p);
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(vars_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.entries_[c * rows_ + r] = at(r, c);
  return t;
}

PolyMatrix PolyMatrix::select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  PolyMatrix s(vars_, rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s.entries_[i * cols.size() + j] = at(rows[i], cols[j]);
  return s;
}

PolyMatrix PolyMatrix::substitute(const std::vector<MultiPoly>& images) const {
  Variables target = images.empty() ? Variables() : images.front().variables();
  PolyMatrix s(target, rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) s.entries_[i] = entries_[i].substitute(images);
  return s;
}

std::vector<std::vector<Scalar>> PolyMatrix::evaluate(std::span<const Scalar> point) const {
  std::vector<std::vector<Scalar>> v(rows_, std::vector<Scalar>(cols_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) v[r][c] = at(r, c).evaluate(point);
  return v;
}

bool PolyMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

bool PolyMatrix::is_constant() const {
  for (const auto& e : entries_)
    if (!e.is_constant()) return false;
  return true;
}

std::vector<std::vector<Scalar>> PolyMatrix::constants() const {
  if (!is_constant()) throw InvalidArgument("matrix has non-constant entries");
  std::vector<std::vector<Scalar>> v(rows_, std::vector<Scalar>(cols_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) v[r][c] = at(r, c).constant_term();
  return v;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw InvalidArgument("matrix product dimension mismatch");
  if (!(a.vars_ == b.vars_)) throw InvalidArgument("matrix product over different variable sets");
  PolyMatrix p(a.vars_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) {
      MultiPoly s(a.vars_);
      for (std::size_t k = 0; k < a.cols_; ++k) s += a.at(i, k) * b.at(k, j);
      p.entries_[i * b.cols_ + j] = std::move(s);
    }
  return p;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

std::string PolyMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    os << "[";
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << at(r, c).to_string();
    os << "]\n";
  }
  return os.str();
}

MultiPoly determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("determinant of a non-square matrix");
  std::size_t n = m.rows();
  if (n > 16) throw InvalidArgument("determinant size limit exceeded");
  const Variables& vars = m.variables();
  if (n == 0) return MultiPoly::constant(vars, Scalar(1));
  std::unordered_map<std::uint32_t, MultiPoly> memo;
  std::function<MultiPoly(std::uint32_t)> det = [&](std::uint32_t mask) -> MultiPoly {
    std::size_t row = n - static_cast<std::size_t>(std::popcount(mask));
    if (mask == 0) return MultiPoly::constant(vars, Scalar(1));
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    MultiPoly sum(vars);
    int position = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(mask & (1u << c))) continue;
      const MultiPoly& a = m.at(row, c);
      if (!a.is_zero()) {
        MultiPoly term = a * det(mask & ~(1u << c));
        if (position % 2) sum -= term;
        else sum += term;
      }
      ++position;
    }
    memo.emplace(mask, sum);
    return sum;
  };
  return det((1u << n) - 1);
}

namespace {

void combinations(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  while (true) {
    out.push_back(c);
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

std::vector<std::size_t> complement(std::size_t n, const std::vector<std::size_t>& removed) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0, j = 0; i < n; ++i) {
    if (j < removed.size() && removed[j] == i) ++j;
    else keep.push_back(i);
  }
  return keep;
}

}  // namespace

std::vector<Minor> maximal_minors(const PolyMatrix& m, std::size_t size) {
  if (size == 0 || size > std::min(m.rows(), m.cols())) throw InvalidArgument("minor size out of range");
  std::vector<std::vector<std::size_t>> del_rows, del_cols;
  combinations(m.rows(), m.rows() - size, del_rows);
  combinations(m.cols(), m.cols() - size, del_cols);
  bool hilbert_burch = size == m.cols() && m.rows() == size + 1;
  std::vector<Minor> out;
  for (const auto& dr : del_rows) {
    for (const auto& dc : del_cols) {
      MultiPoly v = determinant(m.select(complement(m.rows(), dr), complement(m.cols(), dc)));
      if (hilbert_burch && dr.front() % 2 == 1) v = -v;
      out.push_back({dr, dc, std::move(v)});
    }
  }
  return out;
}

}  // namespace hkgeom::exact
