#pragma once

#include <vector>

#include "hkgeom/exactmath/multipoly.hpp"

namespace hkgeom::exact {

class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(Variables vars, std::size_t rows, std::size_t cols);
  PolyMatrix(Variables vars, const std::vector<std::vector<MultiPoly>>& rows);
  // Constant matrix.
  static PolyMatrix from_scalars(const Variables& vars, const std::vector<std::vector<Scalar>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Variables& variables() const { return vars_; }
  const MultiPoly& at(std::size_t r, std::size_t c) const { return entries_.at(r * cols_ + c); }
  void set(std::size_t r, std::size_t c, MultiPoly p);

  PolyMatrix transpose() const;
  PolyMatrix select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  PolyMatrix substitute(const std::vector<MultiPoly>& images) const;
  // Constant matrix of values, as scalars.
  std::vector<std::vector<Scalar>> evaluate(std::span<const Scalar> point) const;
  bool is_zero() const;
  bool is_constant() const;
  std::vector<std::vector<Scalar>> constants() const;  // throws unless constant

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

  std::string to_string() const;

 private:
  Variables vars_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<MultiPoly> entries_;
};

// Laplace expansion memoized on column subsets.
MultiPoly determinant(const PolyMatrix& m);

struct Minor {
  std::vector<std::size_t> deleted_rows;
  std::vector<std::size_t> deleted_cols;
  MultiPoly value;
};

// All size x size minors, ordered lexicographically by deleted row set, then
// deleted column set. For an (n) x (n-1) matrix and size n-1 each minor carries
// the sign (-1)^j of its deleted row j.
std::vector<Minor> maximal_minors(const PolyMatrix& m, std::size_t size);

}  // namespace hkgeom::exact
