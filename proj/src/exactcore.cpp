#include "xgn/exactcore.hpp"

#include <algorithm>
#include <sstream>

namespace xgn {

std::string to_string(const BigRat& q) { return q.get_str(); }

BigRat parse_rat(const std::string& s) {
  BigRat q;
  if (s.empty() || q.set_str(s, 10) != 0) throw MathError("bad rational: " + s);
  q.canonicalize();
  if (q.get_den() == 0) throw MathError("zero denominator: " + s);
  return q;
}

// ---------------------------------------------------------------- UPoly

UPoly::UPoly(const BigRat& c) {
  if (c != 0) c_.push_back(c);
}

UPoly::UPoly(std::vector<BigRat> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::x() { return UPoly(std::vector<BigRat>{0, 1}); }

UPoly UPoly::linear(const BigRat& a, const BigRat& b) {
  return UPoly(std::vector<BigRat>{b, a});
}

UPoly UPoly::monomial(const BigRat& c, int k) {
  std::vector<BigRat> v(k + 1);
  v[k] = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigRat UPoly::coef(int k) const {
  if (k < 0 || k > deg()) return 0;
  return c_[k];
}

BigRat UPoly::eval(const BigRat& at) const {
  BigRat r = 0;
  for (int k = deg(); k >= 0; --k) r = r * at + c_[k];
  return r;
}

UPoly UPoly::compose_linear(const BigRat& a, const BigRat& b) const {
  // Horner in the polynomial ring
  UPoly r;
  UPoly lin = linear(a, b);
  for (int k = deg(); k >= 0; --k) {
    r *= lin;
    r += UPoly(c_[k]);
  }
  return r;
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  UPoly r = *this;
  BigRat l = lead();
  for (auto& x : r.c_) x /= l;
  return r;
}

UPoly UPoly::derivative() const {
  std::vector<BigRat> v;
  for (int k = 1; k <= deg(); ++k) v.push_back(c_[k] * k);
  return UPoly(std::move(v));
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<BigRat> v(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(v));
}

UPoly& UPoly::operator*=(const UPoly& o) { return *this = *this * o; }

UPoly& UPoly::operator*=(const BigRat& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= s;
  return *this;
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

void UPoly::divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  if (b.is_zero()) throw MathError("polynomial division by zero");
  r = a;
  int db = b.deg();
  if (r.deg() < db) {
    q = UPoly();
    return;
  }
  std::vector<BigRat> qc(r.deg() - db + 1);
  BigRat inv_lead = 1 / b.lead();
  auto& rc = r.c_;
  for (int k = static_cast<int>(rc.size()) - 1; k >= db; --k) {
    if (rc[k] == 0) continue;
    BigRat f = rc[k] * inv_lead;
    qc[k - db] = f;
    for (int j = 0; j <= db; ++j) rc[k - db + j] -= f * b.c_[j];
  }
  r.trim();
  q = UPoly(std::move(qc));
}

UPoly UPoly::divexact(const UPoly& b) const {
  UPoly q, r;
  divmod(*this, b, q, r);
  if (!r.is_zero()) throw MathError("inexact polynomial division");
  return q;
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

std::string UPoly::str(const char* var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = deg(); k >= 0; --k) {
    if (c_[k] == 0) continue;
    BigRat c = c_[k];
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    BigRat a = abs(c);
    if (k == 0 || a != 1) os << a.get_str();
    if (k > 0) os << var;
    if (k > 1) os << "^" << k;
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------- RatFunc

RatFunc::RatFunc(UPoly num, UPoly den) {
  if (den.is_zero()) throw MathError("rational function with zero denominator");
  if (num.is_zero()) {
    num_ = UPoly();
    den_ = UPoly(1);
    return;
  }
  UPoly g = UPoly::gcd(num, den);
  if (g.deg() > 0) {
    num = num.divexact(g);
    den = den.divexact(g);
  }
  BigRat l = den.lead();
  num_ = num * (1 / l);
  den_ = den * (1 / l);
}

BigRat RatFunc::eval(const BigRat& at) const {
  BigRat d = den_.eval(at);
  if (d == 0) throw MathError("evaluation at a pole");
  return num_.eval(at) / d;
}

RatFunc RatFunc::compose_linear(const BigRat& a, const BigRat& b) const {
  return RatFunc(num_.compose_linear(a, b), den_.compose_linear(a, b));
}

RatFunc RatFunc::inv() const {
  if (is_zero()) throw MathError("division by zero rational function");
  return RatFunc(den_, num_);
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (den_ == o.den_) return *this = RatFunc(num_ + o.num_, den_);
  return *this = RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc& RatFunc::operator-=(const RatFunc& o) {
  if (den_ == o.den_) return *this = RatFunc(num_ - o.num_, den_);
  return *this = RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  return *this = RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw MathError("division by zero rational function");
  return *this = RatFunc(num_ * o.den_, den_ * o.num_);
}

std::string RatFunc::str() const {
  if (den_.deg() == 0) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

// ---------------------------------------------------------------- series

std::vector<BigRat> inverse_series(const UPoly& q, int upto) {
  if (q.is_zero()) throw MathError("series of 1/0");
  // 1/q = u^-d * 1/(l*(1 + c_{d-1}/l u^-1 + ...)); solve s from q*s = 1
  int d = q.deg();
  std::vector<BigRat> s(std::max(upto + 1, 0));
  const BigRat& l = q.lead();
  for (int t = d; t <= upto; ++t) {
    // coefficient of u^{-(t-d)} in q(u) * sum s_t u^-t equals [t == d]
    BigRat acc = (t == d) ? BigRat(1) : BigRat(0);
    for (int j = 1; j <= d && t - j >= d; ++j) acc -= q.coef(d - j) * s[t - j];
    s[t] = acc / l;
  }
  return s;
}

LaurentSeries<BigRat> expand_at_infinity(const RatFunc& f, int K, bool allow_poly,
                                         UPoly* poly_part) {
  UPoly num = f.num();
  if (!f.is_proper()) {
    if (!allow_poly) throw MathError("improper rational function at infinity");
    UPoly q, r;
    UPoly::divmod(f.num(), f.den(), q, r);
    if (poly_part) *poly_part = q;
    num = r;
  } else if (poly_part) {
    *poly_part = UPoly();
  }
  LaurentSeries<BigRat> out;
  out.c.assign(K + 1, 0);
  int dn = num.deg();
  auto s = inverse_series(f.den(), K + std::max(dn, 0));
  for (int k = 0; k <= K; ++k)
    for (int j = 0; j <= dn; ++j) out.c[k] += num.coef(j) * s[j + k];
  // a proper f with deg num == deg den contributes its constant part at k=0
  return out;
}

// ---------------------------------------------------------------- RFMatrix

RFMatrix RFMatrix::identity(int k) {
  RFMatrix m(k, k);
  for (int i = 0; i < k; ++i) m(i, i) = RatFunc(1);
  return m;
}

RFMatrix RFMatrix::operator*(const RFMatrix& o) const {
  if (c_ != o.r_) throw MathError("RFMatrix shape mismatch");
  RFMatrix r(r_, o.c_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      const RatFunc& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.c_; ++j)
        if (!o(k, j).is_zero()) r(i, j) += a * o(k, j);
    }
  return r;
}

RFMatrix RFMatrix::operator+(const RFMatrix& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw MathError("RFMatrix shape mismatch");
  RFMatrix r = *this;
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

RFMatrix RFMatrix::operator-(const RFMatrix& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw MathError("RFMatrix shape mismatch");
  RFMatrix r = *this;
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
  return r;
}

bool RFMatrix::operator==(const RFMatrix& o) const {
  return r_ == o.r_ && c_ == o.c_ && e_ == o.e_;
}

UPoly bareiss_adjugate(std::vector<UPoly> A, int k, std::vector<UPoly>& adj) {
  // Augment [A | I] and run fraction-free Gauss-Jordan; every entry stays a
  // minor of the augmented matrix, so each division below is exact.
  int w = 2 * k;
  std::vector<UPoly> M(static_cast<size_t>(k) * w);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) M[i * w + j] = std::move(A[i * k + j]);
    M[i * w + k + i] = UPoly(1);
  }
  UPoly prev(1);
  int sign = 1;
  for (int p = 0; p < k; ++p) {
    int piv = -1;
    int best = 1 << 30;
    for (int i = p; i < k; ++i)
      if (!M[i * w + p].is_zero() && M[i * w + p].deg() < best) {
        best = M[i * w + p].deg();
        piv = i;
      }
    if (piv < 0) throw SingularError("singular polynomial matrix");
    if (piv != p) {
      for (int j = 0; j < w; ++j) std::swap(M[p * w + j], M[piv * w + j]);
      sign = -sign;
    }
    const UPoly pv = M[p * w + p];
    for (int i = 0; i < k; ++i) {
      if (i == p) continue;
      UPoly f = M[i * w + p];
      for (int j = 0; j < w; ++j) {
        if (j == p) continue;
        UPoly t = pv * M[i * w + j];
        if (!f.is_zero() && !M[p * w + j].is_zero()) t -= f * M[p * w + j];
        M[i * w + j] = t.is_zero() ? t : t.divexact(prev);
      }
      M[i * w + p] = UPoly();
    }
    prev = pv;
  }
  // M = [d*I | d*A^{-1}] with d the determinant of the row-permuted matrix
  adj.assign(static_cast<size_t>(k) * k, UPoly());
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) adj[i * k + j] = std::move(M[i * w + k + j]);
  (void)sign;
  return prev;
}

RFMatrix rfm_inverse(const RFMatrix& M) {
  if (M.rows() != M.cols()) throw MathError("inverse of a non-square matrix");
  int k = M.rows();
  // clear denominators row by row: M = D^{-1} A with D diagonal
  std::vector<UPoly> A(static_cast<size_t>(k) * k);
  std::vector<UPoly> rowscale(k);
  for (int i = 0; i < k; ++i) {
    UPoly l(1);
    for (int j = 0; j < k; ++j) {
      const UPoly& d = M(i, j).den();
      if (d.deg() > 0) l = l * d.divexact(UPoly::gcd(l, d));
    }
    rowscale[i] = l;
    for (int j = 0; j < k; ++j) A[i * k + j] = M(i, j).num() * l.divexact(M(i, j).den());
  }
  std::vector<UPoly> adj;
  UPoly det = bareiss_adjugate(A, k, adj);
  if (det.is_zero()) throw SingularError("singular matrix");
  // M^{-1} = A^{-1} D = adj D / det
  RFMatrix R(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (!adj[i * k + j].is_zero()) R(i, j) = RatFunc(adj[i * k + j] * rowscale[j], det);
  return R;
}

std::vector<std::vector<BigRat>> rfm_nullspace(const QMatrix& Min, int cols) {
  QMatrix M = Min;
  int r = static_cast<int>(M.size());
  int c = cols >= 0 ? cols : (r ? static_cast<int>(M[0].size()) : 0);
  std::vector<int> pivcol;
  int row = 0;
  for (int col = 0; col < c && row < r; ++col) {
    int piv = -1;
    for (int i = row; i < r; ++i)
      if (M[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(M[row], M[piv]);
    BigRat inv = 1 / M[row][col];
    for (int j = col; j < c; ++j) M[row][j] *= inv;
    for (int i = 0; i < r; ++i) {
      if (i == row || M[i][col] == 0) continue;
      BigRat f = M[i][col];
      for (int j = col; j < c; ++j)
        if (M[row][j] != 0) M[i][j] -= f * M[row][j];
    }
    pivcol.push_back(col);
    ++row;
  }
  std::vector<bool> is_piv(c, false);
  for (int pc : pivcol) is_piv[pc] = true;
  std::vector<std::vector<BigRat>> basis;
  for (int f = 0; f < c; ++f) {
    if (is_piv[f]) continue;
    std::vector<BigRat> v(c, 0);
    v[f] = 1;
    for (size_t p = 0; p < pivcol.size(); ++p) v[pivcol[p]] = -M[p][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

int rank(const QMatrix& M) {
  int c = M.empty() ? 0 : static_cast<int>(M[0].size());
  return c - static_cast<int>(rfm_nullspace(M, c).size());
}

}  // namespace xgn
