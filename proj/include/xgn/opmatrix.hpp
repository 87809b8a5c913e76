#pragma once
// Sparse constant operators over Q and rectangular arrays of operator-valued
// rational functions sharing one monic scalar denominator.

#include <functional>
#include <utility>
#include <vector>

#include "xgn/exactcore.hpp"

namespace xgn {

// Column-compressed sparse matrix; each column holds (row, value) sorted by row.
class SpMat {
 public:
  using Entry = std::pair<int, BigRat>;
  using Column = std::vector<Entry>;

  SpMat() = default;
  SpMat(int rows, int cols) : r_(rows), c_(cols), col_(cols) {}
  static SpMat identity(int d);
  static SpMat scalar(int d, const BigRat& s);
  static SpMat from_dense(const QMatrix& M);
  static SpMat unit(int rows, int cols, int i, int j);  // matrix unit e_ij

  int rows() const { return r_; }
  int cols() const { return c_; }
  const Column& col(int j) const { return col_[j]; }
  size_t nnz() const;
  bool is_zero() const;
  bool is_identity() const;

  BigRat get(int i, int j) const;
  void add_to(int i, int j, const BigRat& v);  // keeps columns sorted

  SpMat operator+(const SpMat& o) const;
  SpMat operator-(const SpMat& o) const;
  SpMat operator*(const SpMat& o) const;
  SpMat operator*(const BigRat& s) const;
  SpMat operator-() const { return *this * BigRat(-1); }
  SpMat& operator+=(const SpMat& o) { return *this = *this + o; }
  SpMat& operator-=(const SpMat& o) { return *this = *this - o; }
  bool operator==(const SpMat& o) const;
  bool operator!=(const SpMat& o) const { return !(*this == o); }

  SpMat transpose() const;
  SpMat submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;
  std::vector<BigRat> apply(const std::vector<BigRat>& v) const;
  QMatrix dense() const;

  friend SpMat kron(const SpMat& a, const SpMat& b);

 private:
  int r_ = 0, c_ = 0;
  std::vector<Column> col_;
};

SpMat kron(const SpMat& a, const SpMat& b);
SpMat commutator(const SpMat& a, const SpMat& b);

// Polynomial in u with operator coefficients (all d x d).
struct OpPoly {
  int d = 0;
  std::vector<SpMat> c;  // ascending; may be empty for zero

  OpPoly() = default;
  explicit OpPoly(int dim) : d(dim) {}
  OpPoly(const SpMat& constant);  // NOLINT
  int deg() const;                 // -1 when zero
  bool is_zero() const { return deg() < 0; }
  void trim();
  SpMat eval(const BigRat& at) const;
  UPoly scalar_poly(int i, int j) const;  // matrix entry (i,j) as a polynomial

  OpPoly& operator+=(const OpPoly& o);
  OpPoly& operator-=(const OpPoly& o);
  friend OpPoly operator+(OpPoly a, const OpPoly& b) { return a += b; }
  friend OpPoly operator-(OpPoly a, const OpPoly& b) { return a -= b; }
  friend OpPoly operator*(const OpPoly& a, const OpPoly& b);
  friend OpPoly operator*(const OpPoly& a, const UPoly& p);
  OpPoly map(const std::function<SpMat(const SpMat&)>& f, int new_dim) const;
};

// rows x cols array of operator polynomials over a single monic denominator.
class OpMatrix {
 public:
  OpMatrix() = default;
  OpMatrix(int rows, int cols, int d);
  static OpMatrix identity(int n, int d);
  static OpMatrix constant(const std::vector<SpMat>& entries, int rows, int cols);

  int rows() const { return r_; }
  int cols() const { return c_; }
  int dim() const { return d_; }
  const UPoly& den() const { return den_; }
  OpPoly& num(int i, int j) { return e_[static_cast<size_t>(i) * c_ + j]; }
  const OpPoly& num(int i, int j) const { return e_[static_cast<size_t>(i) * c_ + j]; }
  void set_den(const UPoly& den);  // den must be monic
  int num_deg() const;

  OpMatrix operator*(const OpMatrix& o) const;
  OpMatrix operator+(const OpMatrix& o) const;
  OpMatrix operator-(const OpMatrix& o) const;
  OpMatrix scaled(const RatFunc& f) const;
  // entries multiplied on the left by a constant operator
  OpMatrix left_mul(const SpMat& a) const;
  OpMatrix right_mul(const SpMat& a) const;
  bool equals(const OpMatrix& o) const;  // cross-multiplied comparison
  bool is_zero() const;

  // u -> a*u + b in every entry
  OpMatrix substitute(const BigRat& a, const BigRat& b) const;
  // cancel the largest common factor of den and every numerator entry
  OpMatrix reduced() const;
  // numerators at u0 and den(u0)
  std::vector<SpMat> eval_num(const BigRat& u0) const;
  // entry values at u0 (throws at a pole)
  std::vector<SpMat> eval(const BigRat& u0) const;
  // coefficient grids of u^0, u^-1, ..., u^-K; entries must be proper
  std::vector<std::vector<SpMat>> laurent(int K) const;
  RatFunc scalar_entry(int i, int j, int r, int c) const;

  OpMatrix map_ops(const std::function<SpMat(const SpMat&)>& f, int new_dim) const;
  OpMatrix sub_block(int r0, int c0, int nr, int nc) const;
  OpMatrix transpose_blocks() const;  // swap block indices, operators untouched
  // exact inverse of the flattened (rows*d) x (cols*d) matrix
  OpMatrix inverse() const;
  // for a 1 x 1 matrix of dimension k*dv, split the C^k factor into blocks
  OpMatrix split_blocks(int k) const;

 private:
  int r_ = 0, c_ = 0, d_ = 0;
  std::vector<OpPoly> e_;
  UPoly den_ = UPoly(1);
};

// (v + M)^{-1} as a 1 x 1 OpMatrix, via the minimal polynomial of M.
OpMatrix resolvent(const SpMat& M);
// monic minimal polynomial of a square constant matrix
UPoly minimal_polynomial(const SpMat& M);

// entry (i,j) = sum_k kron(A_ik, B_kj)
OpMatrix coproduct_product(const OpMatrix& A, const OpMatrix& B);

}  // namespace xgn
