#include "xgn/linsolve.hpp"

namespace xgn {

void SparseRref::reduce(Row& row) const {
  auto it = row.begin();
  while (it != row.end()) {
    const int col = it->first;
    auto p = pivots_.find(col);
    if (p == pivots_.end()) {
      ++it;
      continue;
    }
    BigRat k = it->second;
    for (auto& [c, v] : p->second) {
      BigRat& x = row[c];
      x -= k * v;
      if (x == 0) row.erase(c);
    }
    it = row.lower_bound(col);
  }
}

bool SparseRref::add(Row row) {
  for (auto it = row.begin(); it != row.end();) it = it->second == 0 ? row.erase(it) : std::next(it);
  reduce(row);
  if (row.empty()) return false;
  BigRat lead = row.begin()->second;
  for (auto& [c, v] : row) v /= lead;
  pivots_.emplace(row.begin()->first, std::move(row));
  return true;
}

std::vector<std::vector<BigRat>> SparseRref::nullspace() {
  // back substitution, largest pivot first
  for (auto p = pivots_.rbegin(); p != pivots_.rend(); ++p) {
    const int col = p->first;
    for (auto& [other, row] : pivots_) {
      if (other >= col) break;
      auto it = row.find(col);
      if (it == row.end()) continue;
      BigRat k = it->second;
      for (auto& [c, v] : p->second) {
        BigRat& x = row[c];
        x -= k * v;
        if (x == 0) row.erase(c);
      }
    }
  }
  std::vector<std::vector<BigRat>> basis;
  for (int f = 0; f < cols_; ++f) {
    if (pivots_.count(f)) continue;
    std::vector<BigRat> v(cols_, 0);
    v[f] = 1;
    for (auto& [pc, row] : pivots_) {
      auto it = row.find(f);
      if (it != row.end()) v[pc] = -it->second;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::vector<BigRat>> intertwiner_basis(const std::vector<std::pair<SpMat, SpMat>>& pairs, int dt,
                                                   int ds) {
  SparseRref rref(dt * ds);
  for (auto& [A, B] : pairs) {
    // (Phi A - B Phi)_{ij}; unknown Phi_ik has index i * ds + k
    std::vector<SparseRref::Row> rows(static_cast<size_t>(dt) * ds);
    for (int j = 0; j < ds; ++j)
      for (auto& [k, a] : A.col(j))
        for (int i = 0; i < dt; ++i) rows[i * ds + j][i * ds + k] += a;
    for (int k = 0; k < dt; ++k)
      for (auto& [i, b] : B.col(k))
        for (int j = 0; j < ds; ++j) rows[i * ds + j][k * ds + j] -= b;
    for (auto& r : rows)
      if (!r.empty()) rref.add(std::move(r));
  }
  return rref.nullspace();
}

std::vector<std::vector<BigRat>> commutant_basis(const std::vector<SpMat>& ops, int d) {
  std::vector<std::pair<SpMat, SpMat>> pairs;
  for (auto& a : ops) pairs.emplace_back(a, a);
  return intertwiner_basis(pairs, d, d);
}

SpMat unflatten(const std::vector<BigRat>& v, int rows, int cols) {
  SpMat M(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (v[i * cols + j] != 0) M.add_to(i, j, v[i * cols + j]);
  return M;
}

}  // namespace xgn
