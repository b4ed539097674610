#pragma once

#include <map>
#include <vector>

#include "hkgeom/exactmath/polymatrix.hpp"

namespace hkgeom::exact {

using DenseMatrix = std::vector<std::vector<Scalar>>;
using DenseVector = std::vector<Scalar>;

struct Echelon {
  DenseMatrix reduced;  // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;
};

Echelon row_reduce(DenseMatrix m, std::size_t cols);
DenseMatrix kernel_basis(const DenseMatrix& m, std::size_t cols);
std::size_t rank(const DenseMatrix& m, std::size_t cols);

DenseMatrix kernel_basis(const PolyMatrix& m);
std::size_t rank(const PolyMatrix& m);

using SparseVector = std::map<std::size_t, Scalar>;

// Incremental row echelon form over sparse rows. Every stored row has an
// implicit leading 1 at its pivot and no entries left of it.
class SparseEchelon {
 public:
  explicit SparseEchelon(std::size_t cols) : cols_(cols) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  const std::map<std::size_t, SparseVector>& rows() const { return rows_; }

  SparseVector reduce(SparseVector v) const;
  bool contains(const SparseVector& v) const { return reduce(v).empty(); }
  // Returns true if v was independent of the stored rows.
  bool insert(SparseVector v);
  // Basis of {x : row . x = 0 for every stored row}, one vector per free column.
  std::vector<SparseVector> kernel_basis() const;

 private:
  std::size_t cols_;
  std::map<std::size_t, SparseVector> rows_;  // keyed by pivot column
};

void axpy(SparseVector& y, const Scalar& a, const SparseVector& x);
Scalar dot(const SparseVector& a, const SparseVector& b);

}  // namespace hkgeom::exact
