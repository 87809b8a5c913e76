#pragma once
// Incremental sparse row reduction over Q and linear-map solvers built on it.

#include <map>
#include <utility>
#include <vector>

#include "xgn/opmatrix.hpp"

namespace xgn {

class SparseRref {
 public:
  using Row = std::map<int, BigRat>;

  explicit SparseRref(int cols) : cols_(cols) {}
  // reduces the row against the current pivots; returns true if it raised the rank
  bool add(Row row);
  int rank() const { return static_cast<int>(pivots_.size()); }
  int cols() const { return cols_; }
  std::vector<std::vector<BigRat>> nullspace();

 private:
  void reduce(Row& row) const;
  int cols_;
  std::map<int, Row> pivots_;  // pivot column -> row with leading 1 there
};

// all Phi (tgt x src) with Phi A_k = B_k Phi for every pair (A_k, B_k); Phi flattened row-major
std::vector<std::vector<BigRat>> intertwiner_basis(const std::vector<std::pair<SpMat, SpMat>>& pairs, int dt,
                                                   int ds);
std::vector<std::vector<BigRat>> commutant_basis(const std::vector<SpMat>& ops, int d);
SpMat unflatten(const std::vector<BigRat>& v, int rows, int cols);

}  // namespace xgn
