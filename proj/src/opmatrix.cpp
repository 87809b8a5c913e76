#include "xgn/opmatrix.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace xgn {

// ---------------------------------------------------------------- SpMat

SpMat SpMat::identity(int d) { return scalar(d, 1); }

SpMat SpMat::scalar(int d, const BigRat& s) {
  SpMat m(d, d);
  if (s != 0)
    for (int i = 0; i < d; ++i) m.col_[i].emplace_back(i, s);
  return m;
}

SpMat SpMat::from_dense(const QMatrix& M) {
  int r = static_cast<int>(M.size());
  int c = r ? static_cast<int>(M[0].size()) : 0;
  SpMat m(r, c);
  for (int j = 0; j < c; ++j)
    for (int i = 0; i < r; ++i)
      if (M[i][j] != 0) m.col_[j].emplace_back(i, M[i][j]);
  return m;
}

SpMat SpMat::unit(int rows, int cols, int i, int j) {
  SpMat m(rows, cols);
  m.col_[j].emplace_back(i, 1);
  return m;
}

size_t SpMat::nnz() const {
  size_t n = 0;
  for (auto& c : col_) n += c.size();
  return n;
}

bool SpMat::is_zero() const {
  for (auto& c : col_)
    if (!c.empty()) return false;
  return true;
}

bool SpMat::is_identity() const {
  if (r_ != c_) return false;
  for (int j = 0; j < c_; ++j)
    if (col_[j].size() != 1 || col_[j][0].first != j || col_[j][0].second != 1) return false;
  return true;
}

BigRat SpMat::get(int i, int j) const {
  auto& c = col_[j];
  auto it = std::lower_bound(c.begin(), c.end(), i,
                             [](const Entry& e, int r) { return e.first < r; });
  if (it != c.end() && it->first == i) return it->second;
  return 0;
}

void SpMat::add_to(int i, int j, const BigRat& v) {
  if (v == 0) return;
  auto& c = col_[j];
  auto it = std::lower_bound(c.begin(), c.end(), i,
                             [](const Entry& e, int r) { return e.first < r; });
  if (it != c.end() && it->first == i) {
    it->second += v;
    if (it->second == 0) c.erase(it);
  } else {
    c.insert(it, Entry(i, v));
  }
}

static void merge_cols(const SpMat::Column& a, const SpMat::Column& b, int sb,
                       SpMat::Column& out) {
  out.clear();
  out.reserve(a.size() + b.size());
  size_t p = 0, q = 0;
  while (p < a.size() || q < b.size()) {
    if (q == b.size() || (p < a.size() && a[p].first < b[q].first)) {
      out.push_back(a[p++]);
    } else if (p == a.size() || b[q].first < a[p].first) {
      out.emplace_back(b[q].first, sb > 0 ? b[q].second : BigRat(-b[q].second));
      ++q;
    } else {
      BigRat v = sb > 0 ? BigRat(a[p].second + b[q].second) : BigRat(a[p].second - b[q].second);
      if (v != 0) out.emplace_back(a[p].first, v);
      ++p;
      ++q;
    }
  }
}

SpMat SpMat::operator+(const SpMat& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw MathError("SpMat shape mismatch in +");
  SpMat m(r_, c_);
  for (int j = 0; j < c_; ++j) merge_cols(col_[j], o.col_[j], 1, m.col_[j]);
  return m;
}

SpMat SpMat::operator-(const SpMat& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw MathError("SpMat shape mismatch in -");
  SpMat m(r_, c_);
  for (int j = 0; j < c_; ++j) merge_cols(col_[j], o.col_[j], -1, m.col_[j]);
  return m;
}

SpMat SpMat::operator*(const SpMat& o) const {
  if (c_ != o.r_) throw MathError("SpMat shape mismatch in *");
  SpMat m(r_, o.c_);
  std::vector<BigRat> acc(r_);
  std::vector<char> used(r_, 0);
  std::vector<int> idx;
  BigRat t;
  for (int j = 0; j < o.c_; ++j) {
    idx.clear();
    for (auto& [k, bv] : o.col_[j]) {
      for (auto& [i, av] : col_[k]) {
        mpq_mul(t.get_mpq_t(), av.get_mpq_t(), bv.get_mpq_t());
        if (!used[i]) {
          used[i] = 1;
          idx.push_back(i);
          acc[i] = t;
        } else {
          acc[i] += t;
        }
      }
    }
    std::sort(idx.begin(), idx.end());
    auto& out = m.col_[j];
    out.reserve(idx.size());
    for (int i : idx) {
      if (acc[i] != 0) out.emplace_back(i, acc[i]);
      used[i] = 0;
    }
  }
  return m;
}

SpMat SpMat::operator*(const BigRat& s) const {
  SpMat m(r_, c_);
  if (s == 0) return m;
  for (int j = 0; j < c_; ++j) {
    m.col_[j] = col_[j];
    for (auto& e : m.col_[j]) e.second *= s;
  }
  return m;
}

bool SpMat::operator==(const SpMat& o) const {
  return r_ == o.r_ && c_ == o.c_ && col_ == o.col_;
}

SpMat SpMat::transpose() const {
  SpMat m(c_, r_);
  for (int j = 0; j < c_; ++j)
    for (auto& [i, v] : col_[j]) m.col_[i].emplace_back(j, v);
  return m;
}

SpMat SpMat::submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
  std::vector<int> pos(r_, -1);
  for (size_t a = 0; a < rows.size(); ++a) pos[rows[a]] = static_cast<int>(a);
  SpMat m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (size_t b = 0; b < cols.size(); ++b) {
    for (auto& [i, v] : col_[cols[b]])
      if (pos[i] >= 0) m.col_[b].emplace_back(pos[i], v);
    std::sort(m.col_[b].begin(), m.col_[b].end(),
              [](const Entry& x, const Entry& y) { return x.first < y.first; });
  }
  return m;
}

std::vector<BigRat> SpMat::apply(const std::vector<BigRat>& v) const {
  std::vector<BigRat> out(r_, 0);
  for (int j = 0; j < c_; ++j) {
    if (v[j] == 0) continue;
    for (auto& [i, a] : col_[j]) out[i] += a * v[j];
  }
  return out;
}

QMatrix SpMat::dense() const {
  QMatrix M(r_, std::vector<BigRat>(c_, 0));
  for (int j = 0; j < c_; ++j)
    for (auto& [i, v] : col_[j]) M[i][j] = v;
  return M;
}

SpMat kron(const SpMat& a, const SpMat& b) {
  SpMat m(a.r_ * b.r_, a.c_ * b.c_);
  for (int ja = 0; ja < a.c_; ++ja)
    for (int jb = 0; jb < b.c_; ++jb) {
      auto& out = m.col_[ja * b.c_ + jb];
      out.reserve(a.col_[ja].size() * b.col_[jb].size());
      for (auto& [ia, va] : a.col_[ja])
        for (auto& [ib, vb] : b.col_[jb]) out.emplace_back(ia * b.r_ + ib, va * vb);
    }
  return m;
}

SpMat commutator(const SpMat& a, const SpMat& b) { return a * b - b * a; }

// ---------------------------------------------------------------- OpPoly

OpPoly::OpPoly(const SpMat& constant) : d(constant.rows()) {
  if (!constant.is_zero()) c.push_back(constant);
}

int OpPoly::deg() const {
  for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k)
    if (!c[k].is_zero()) return k;
  return -1;
}

void OpPoly::trim() { c.resize(deg() + 1); }

SpMat OpPoly::eval(const BigRat& at) const {
  SpMat r(d, d);
  for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) r = r * at + c[k];
  return r;
}

UPoly OpPoly::scalar_poly(int i, int j) const {
  std::vector<BigRat> v(c.size());
  for (size_t k = 0; k < c.size(); ++k) v[k] = c[k].get(i, j);
  return UPoly(std::move(v));
}

OpPoly& OpPoly::operator+=(const OpPoly& o) {
  if (d == 0) d = o.d;
  if (o.c.size() > c.size()) c.resize(o.c.size(), SpMat(d, d));
  for (size_t k = 0; k < o.c.size(); ++k) c[k] += o.c[k];
  trim();
  return *this;
}

OpPoly& OpPoly::operator-=(const OpPoly& o) {
  if (d == 0) d = o.d;
  if (o.c.size() > c.size()) c.resize(o.c.size(), SpMat(d, d));
  for (size_t k = 0; k < o.c.size(); ++k) c[k] -= o.c[k];
  trim();
  return *this;
}

OpPoly operator*(const OpPoly& a, const OpPoly& b) {
  OpPoly r(a.d ? a.d : b.d);
  if (a.is_zero() || b.is_zero()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, SpMat(r.d, r.d));
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i].is_zero()) continue;
    for (size_t j = 0; j < b.c.size(); ++j) {
      if (b.c[j].is_zero()) continue;
      r.c[i + j] += a.c[i] * b.c[j];
    }
  }
  r.trim();
  return r;
}

OpPoly operator*(const OpPoly& a, const UPoly& p) {
  OpPoly r(a.d);
  if (a.is_zero() || p.is_zero()) return r;
  r.c.assign(a.c.size() + p.coeffs().size() - 1, SpMat(a.d, a.d));
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i].is_zero()) continue;
    for (size_t j = 0; j < p.coeffs().size(); ++j)
      if (p.coeffs()[j] != 0) r.c[i + j] += a.c[i] * p.coeffs()[j];
  }
  r.trim();
  return r;
}

OpPoly OpPoly::map(const std::function<SpMat(const SpMat&)>& f, int new_dim) const {
  OpPoly r(new_dim);
  for (auto& m : c) r.c.push_back(f(m));
  r.trim();
  return r;
}

static OpPoly kron_poly(const OpPoly& a, const OpPoly& b) {
  OpPoly r(a.d * b.d);
  if (a.is_zero() || b.is_zero()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, SpMat(r.d, r.d));
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j)
      if (!a.c[i].is_zero() && !b.c[j].is_zero()) r.c[i + j] += kron(a.c[i], b.c[j]);
  r.trim();
  return r;
}

// ---------------------------------------------------------------- OpMatrix

OpMatrix::OpMatrix(int rows, int cols, int d)
    : r_(rows), c_(cols), d_(d), e_(static_cast<size_t>(rows) * cols, OpPoly(d)) {}

OpMatrix OpMatrix::identity(int n, int d) {
  OpMatrix m(n, n, d);
  for (int i = 0; i < n; ++i) m.num(i, i) = OpPoly(SpMat::identity(d));
  return m;
}

OpMatrix OpMatrix::constant(const std::vector<SpMat>& entries, int rows, int cols) {
  OpMatrix m(rows, cols, entries.at(0).rows());
  for (int i = 0; i < rows * cols; ++i) m.e_[i] = OpPoly(entries[i]);
  return m;
}

void OpMatrix::set_den(const UPoly& den) {
  if (den.is_zero() || den.lead() != 1) throw MathError("denominator must be monic");
  den_ = den;
}

int OpMatrix::num_deg() const {
  int d = -1;
  for (auto& e : e_) d = std::max(d, e.deg());
  return d;
}

OpMatrix OpMatrix::operator*(const OpMatrix& o) const {
  if (c_ != o.r_ || d_ != o.d_) throw MathError("OpMatrix shape mismatch in *");
  OpMatrix m(r_, o.c_, d_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < o.c_; ++j) {
      OpPoly acc(d_);
      for (int k = 0; k < c_; ++k) {
        if (num(i, k).is_zero() || o.num(k, j).is_zero()) continue;
        acc += num(i, k) * o.num(k, j);
      }
      m.num(i, j) = std::move(acc);
    }
  m.den_ = den_ * o.den_;
  return m;
}

static UPoly lcm(const UPoly& a, const UPoly& b) {
  return (a * b.divexact(UPoly::gcd(a, b))).monic();
}

OpMatrix OpMatrix::operator+(const OpMatrix& o) const {
  if (r_ != o.r_ || c_ != o.c_ || d_ != o.d_) throw MathError("OpMatrix shape mismatch in +");
  OpMatrix m(r_, c_, d_);
  if (den_ == o.den_) {
    for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] + o.e_[i];
    m.den_ = den_;
    return m;
  }
  UPoly L = lcm(den_, o.den_);
  UPoly fa = L.divexact(den_), fb = L.divexact(o.den_);
  for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] * fa + o.e_[i] * fb;
  m.den_ = L;
  return m;
}

OpMatrix OpMatrix::operator-(const OpMatrix& o) const { return *this + o.scaled(RatFunc(-1)); }

OpMatrix OpMatrix::scaled(const RatFunc& f) const {
  OpMatrix m(r_, c_, d_);
  for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] * f.num();
  m.den_ = den_ * f.den();
  return m;
}

OpMatrix OpMatrix::left_mul(const SpMat& a) const {
  return map_ops([&](const SpMat& x) { return a * x; }, a.rows());
}

OpMatrix OpMatrix::right_mul(const SpMat& a) const {
  return map_ops([&](const SpMat& x) { return x * a; }, a.cols());
}

bool OpMatrix::equals(const OpMatrix& o) const {
  if (r_ != o.r_ || c_ != o.c_ || d_ != o.d_) return false;
  if (den_ == o.den_) {
    for (size_t i = 0; i < e_.size(); ++i)
      if (!(e_[i] - o.e_[i]).is_zero()) return false;
    return true;
  }
  for (size_t i = 0; i < e_.size(); ++i)
    if (!(e_[i] * o.den_ - o.e_[i] * den_).is_zero()) return false;
  return true;
}

bool OpMatrix::is_zero() const {
  for (auto& e : e_)
    if (!e.is_zero()) return false;
  return true;
}

OpMatrix OpMatrix::substitute(const BigRat& a, const BigRat& b) const {
  if (a == 0) throw MathError("degenerate substitution");
  OpMatrix m(r_, c_, d_);
  UPoly lin = UPoly::linear(a, b);
  UPoly den = den_.compose_linear(a, b);
  BigRat inv_lead = 1 / den.lead();
  for (size_t i = 0; i < e_.size(); ++i) {
    const OpPoly& p = e_[i];
    OpPoly acc(d_);
    // Horner: p(au+b)
    for (int k = static_cast<int>(p.c.size()) - 1; k >= 0; --k) {
      acc = acc * lin;
      acc += OpPoly(p.c[k]);
    }
    m.e_[i] = acc * UPoly(inv_lead);
  }
  m.den_ = den * inv_lead;
  return m;
}

OpMatrix OpMatrix::reduced() const {
  if (den_.deg() <= 0) return *this;
  UPoly g = den_;
  std::map<std::pair<int, int>, std::vector<BigRat>> scratch;
  for (auto& e : e_) {
    scratch.clear();
    for (size_t k = 0; k < e.c.size(); ++k)
      for (int j = 0; j < e.c[k].cols(); ++j)
        for (auto& [i, v] : e.c[k].col(j)) {
          auto& vec = scratch[{i, j}];
          if (vec.size() <= k) vec.resize(k + 1, 0);
          vec[k] = v;
        }
    for (auto& [pos, vec] : scratch) {
      g = UPoly::gcd(g, UPoly(vec));
      if (g.deg() <= 0) return *this;
    }
  }
  OpMatrix m(r_, c_, d_);
  // dividing operator polynomials by a scalar polynomial entry-wise
  for (size_t idx = 0; idx < e_.size(); ++idx) {
    const OpPoly& e = e_[idx];
    if (e.is_zero()) continue;
    std::map<std::pair<int, int>, std::vector<BigRat>> pos;
    for (size_t k = 0; k < e.c.size(); ++k)
      for (int j = 0; j < e.c[k].cols(); ++j)
        for (auto& [i, v] : e.c[k].col(j)) {
          auto& vec = pos[{i, j}];
          if (vec.size() <= k) vec.resize(k + 1, 0);
          vec[k] = v;
        }
    OpPoly out(d_);
    for (auto& [ij, vec] : pos) {
      UPoly q = UPoly(vec).divexact(g);
      if (static_cast<int>(out.c.size()) < q.deg() + 1) out.c.resize(q.deg() + 1, SpMat(d_, d_));
      for (int k = 0; k <= q.deg(); ++k) out.c[k].add_to(ij.first, ij.second, q.coef(k));
    }
    out.trim();
    m.e_[idx] = std::move(out);
  }
  m.den_ = den_.divexact(g);
  return m;
}

std::vector<SpMat> OpMatrix::eval_num(const BigRat& u0) const {
  std::vector<SpMat> out;
  out.reserve(e_.size());
  for (auto& e : e_) {
    OpPoly p = e;
    p.d = d_;
    out.push_back(p.eval(u0));
  }
  return out;
}

std::vector<SpMat> OpMatrix::eval(const BigRat& u0) const {
  BigRat q = den_.eval(u0);
  if (q == 0) throw MathError("evaluation at a pole");
  auto out = eval_num(u0);
  BigRat inv = 1 / q;
  for (auto& m : out) m = m * inv;
  return out;
}

std::vector<std::vector<SpMat>> OpMatrix::laurent(int K) const {
  int dn = num_deg();
  if (dn > den_.deg()) throw MathError("entries not proper at infinity");
  auto s = inverse_series(den_, K + std::max(dn, 0));
  std::vector<std::vector<SpMat>> out(K + 1);
  for (int k = 0; k <= K; ++k) {
    out[k].reserve(e_.size());
    for (auto& e : e_) {
      SpMat acc(d_, d_);
      for (size_t j = 0; j < e.c.size(); ++j)
        if (s[j + k] != 0 && !e.c[j].is_zero()) acc += e.c[j] * s[j + k];
      out[k].push_back(std::move(acc));
    }
  }
  return out;
}

RatFunc OpMatrix::scalar_entry(int i, int j, int r, int c) const {
  return RatFunc(num(i, j).scalar_poly(r, c), den_);
}

OpMatrix OpMatrix::map_ops(const std::function<SpMat(const SpMat&)>& f, int new_dim) const {
  OpMatrix m(r_, c_, new_dim);
  for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i].map(f, new_dim);
  m.den_ = den_;
  return m;
}

OpMatrix OpMatrix::sub_block(int r0, int c0, int nr, int nc) const {
  OpMatrix m(nr, nc, d_);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) m.num(i, j) = num(r0 + i, c0 + j);
  m.den_ = den_;
  return m;
}

OpMatrix OpMatrix::transpose_blocks() const {
  OpMatrix m(c_, r_, d_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) m.num(j, i) = num(i, j);
  m.den_ = den_;
  return m;
}

namespace {
struct DSU {
  std::vector<int> p;
  explicit DSU(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void join(int a, int b) { p[find(a)] = find(b); }
};
}  // namespace

OpMatrix OpMatrix::inverse() const {
  if (r_ != c_) throw MathError("inverse of a non-square operator matrix");
  const int N = r_ * d_;
  // flattened entries: (row, col) -> coefficient vector of the numerator
  std::map<std::pair<int, int>, std::vector<BigRat>> ent;
  for (int bi = 0; bi < r_; ++bi)
    for (int bj = 0; bj < c_; ++bj) {
      const OpPoly& e = num(bi, bj);
      for (size_t k = 0; k < e.c.size(); ++k)
        for (int j = 0; j < d_; ++j)
          for (auto& [i, v] : e.c[k].col(j)) {
            auto& vec = ent[{bi * d_ + i, bj * d_ + j}];
            if (vec.size() <= k) vec.resize(k + 1, 0);
            vec[k] = v;
          }
    }
  DSU dsu(2 * N);
  for (auto& [rc, vec] : ent) dsu.join(rc.first, N + rc.second);
  std::map<int, std::pair<std::vector<int>, std::vector<int>>> comps;
  for (int i = 0; i < N; ++i) comps[dsu.find(i)].first.push_back(i);
  for (int j = 0; j < N; ++j) comps[dsu.find(N + j)].second.push_back(j);

  struct Piece {
    int row, col;
    RatFunc val;
  };
  std::vector<Piece> pieces;
  UPoly L(1);
  for (auto& [root, rc] : comps) {
    auto& rows = rc.first;
    auto& cols = rc.second;
    if (rows.size() != cols.size()) throw SingularError("singular operator matrix");
    int k = static_cast<int>(rows.size());
    std::map<int, int> cpos;
    for (int b = 0; b < k; ++b) cpos[cols[b]] = b;
    std::vector<UPoly> A(static_cast<size_t>(k) * k);
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) {
        auto it = ent.find({rows[a], cols[b]});
        if (it != ent.end()) A[a * k + b] = UPoly(it->second);
      }
    std::vector<UPoly> adj;
    UPoly det = bareiss_adjugate(std::move(A), k, adj);
    if (det.is_zero()) throw SingularError("singular operator matrix");
    // (N/q)^{-1} = q * A^{-1}; A^{-1} has rows indexed by cols, cols by rows
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) {
        const UPoly& x = adj[a * k + b];
        if (x.is_zero()) continue;
        RatFunc val(x * den_, det);
        L = lcm(L, val.den());
        pieces.push_back({cols[a], rows[b], std::move(val)});
      }
  }
  OpMatrix m(r_, c_, d_);
  for (auto& p : pieces) {
    UPoly numer = p.val.num() * L.divexact(p.val.den());
    OpPoly& e = m.num(p.row / d_, p.col / d_);
    if (static_cast<int>(e.c.size()) < numer.deg() + 1) e.c.resize(numer.deg() + 1, SpMat(d_, d_));
    for (int t = 0; t <= numer.deg(); ++t) e.c[t].add_to(p.row % d_, p.col % d_, numer.coef(t));
  }
  for (auto& e : m.e_) e.trim();
  m.den_ = L;
  return m;
}

OpMatrix OpMatrix::split_blocks(int k) const {
  if (r_ != 1 || c_ != 1 || d_ % k != 0) throw MathError("split_blocks needs a 1x1 matrix");
  int dv = d_ / k;
  OpMatrix m(k, k, dv);
  const OpPoly& e = num(0, 0);
  for (size_t t = 0; t < e.c.size(); ++t)
    for (int J = 0; J < d_; ++J)
      for (auto& [I, v] : e.c[t].col(J)) {
        OpPoly& target = m.num(I / dv, J / dv);
        if (target.c.size() <= t) target.c.resize(t + 1, SpMat(dv, dv));
        target.c[t].add_to(I % dv, J % dv, v);
      }
  for (auto& x : m.e_) x.trim();
  m.den_ = den_;
  return m;
}

// ---------------------------------------------------------------- resolvent

UPoly minimal_polynomial(const SpMat& M) {
  const int d = M.rows();
  if (d != M.cols()) throw MathError("minimal polynomial of a non-square matrix");
  using Vec = std::map<long, BigRat>;
  auto vectorize = [&](const SpMat& X) {
    Vec v;
    for (int j = 0; j < d; ++j)
      for (auto& [i, x] : X.col(j)) v[static_cast<long>(i) * d + j] = x;
    return v;
  };
  // reduced basis: pivot key -> (vector, combination over powers)
  std::vector<std::pair<Vec, std::vector<BigRat>>> basis;
  std::vector<long> pivots;
  SpMat P = SpMat::identity(d);
  for (int k = 0;; ++k) {
    Vec v = vectorize(P);
    std::vector<BigRat> comb(k + 1, 0);
    comb[k] = 1;
    for (size_t b = 0; b < basis.size(); ++b) {
      auto it = v.find(pivots[b]);
      if (it == v.end()) continue;
      BigRat f = it->second;
      for (auto& [key, x] : basis[b].first) {
        BigRat nv = v[key] - f * x;
        if (nv == 0) v.erase(key);
        else v[key] = nv;
      }
      for (size_t t = 0; t < basis[b].second.size(); ++t) comb[t] -= f * basis[b].second[t];
    }
    if (v.empty()) return UPoly(comb);  // comb[k] = 1: monic relation
    long piv = v.begin()->first;
    BigRat inv = 1 / v.begin()->second;
    for (auto& [key, x] : v) x *= inv;
    for (auto& c : comb) c *= inv;
    basis.emplace_back(std::move(v), std::move(comb));
    pivots.push_back(piv);
    P = P * M;
  }
}

OpMatrix resolvent(const SpMat& M) {
  const int d = M.rows();
  UPoly mu = minimal_polynomial(M);
  const int k = mu.deg();
  // (M - y)^{-1} = -h(M, y) / mu(y) with mu(x) - mu(y) = (x - y) h(x, y); y = -v
  std::vector<SpMat> powers{SpMat::identity(d)};
  for (int i = 1; i < k; ++i) powers.push_back(powers.back() * M);
  OpPoly numer(d);
  numer.c.assign(k, SpMat(d, d));
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      // term mu_j * M^i * y^{j-1-i}, y^t = (-1)^t v^t
      int t = j - 1 - i;
      BigRat coef = mu.coef(j) * ((t % 2) ? -1 : 1);
      numer.c[t] += powers[i] * coef;
    }
  UPoly den = mu.compose_linear(-1, 0);
  BigRat s = -1 / den.lead();  // the minus sign of -h together with monic scaling
  OpMatrix R(1, 1, d);
  R.num(0, 0) = numer * UPoly(s);
  R.set_den(den * (1 / den.lead()));
  return R;
}

OpMatrix coproduct_product(const OpMatrix& A, const OpMatrix& B) {
  if (A.cols() != B.rows()) throw MathError("coproduct shape mismatch");
  OpMatrix m(A.rows(), B.cols(), A.dim() * B.dim());
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < B.cols(); ++j) {
      OpPoly acc(A.dim() * B.dim());
      for (int k = 0; k < A.cols(); ++k) acc += kron_poly(A.num(i, k), B.num(k, j));
      m.num(i, j) = std::move(acc);
    }
  m.set_den((A.den() * B.den()).monic());
  return m;
}

}  // namespace xgn
