#pragma once
// Exact scalars: rationals, univariate polynomials and rational functions in
// the spectral variable u, plus dense matrices over rational functions.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace xgn {

using BigRat = mpq_class;
using BigInt = mpz_class;

struct MathError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SingularError : MathError {
  using MathError::MathError;
};

// canonicalized a/b (mpq_class(a, b) alone is not reduced)
inline BigRat rat(long a, long b = 1) {
  BigRat q(a, b);
  q.canonicalize();
  return q;
}

std::string to_string(const BigRat& q);
BigRat parse_rat(const std::string& s);  // "p", "p/q", "-p/q"

// Polynomial in u, coefficients ascending.
class UPoly {
 public:
  UPoly() = default;
  UPoly(const BigRat& c);  // NOLINT: constants convert implicitly
  UPoly(long c) : UPoly(BigRat(c)) {}
  explicit UPoly(std::vector<BigRat> coeffs);

  static UPoly x();                         // u
  static UPoly linear(const BigRat& a, const BigRat& b);  // a*u + b
  static UPoly monomial(const BigRat& c, int k);

  int deg() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  bool is_const() const { return c_.size() <= 1; }
  const BigRat& lead() const { return c_.back(); }
  BigRat coef(int k) const;
  const std::vector<BigRat>& coeffs() const { return c_; }

  BigRat eval(const BigRat& at) const;
  UPoly compose_linear(const BigRat& a, const BigRat& b) const;  // p(a u + b)
  UPoly monic() const;
  UPoly derivative() const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const UPoly& o);
  UPoly& operator*=(const BigRat& s);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const BigRat& s) { return a *= s; }
  UPoly operator-() const;
  bool operator==(const UPoly& o) const { return c_ == o.c_; }
  bool operator!=(const UPoly& o) const { return !(*this == o); }

  // quotient and remainder; throws on division by zero
  static void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
  UPoly divexact(const UPoly& b) const;  // throws if remainder nonzero
  static UPoly gcd(UPoly a, UPoly b);   // monic (zero if both zero)

  std::string str(const char* var = "u") const;

 private:
  void trim();
  std::vector<BigRat> c_;
};

// num/den with den monic and gcd(num, den) = 1.
class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(const UPoly& p) : num_(p), den_(1) {}  // NOLINT
  RatFunc(const BigRat& c) : num_(c), den_(1) {}  // NOLINT
  RatFunc(long c) : RatFunc(BigRat(c)) {}        // NOLINT
  RatFunc(UPoly num, UPoly den);                  // normalizes; throws on den = 0

  static RatFunc u() { return RatFunc(UPoly::x()); }

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_proper() const { return num_.deg() <= den_.deg(); }
  BigRat eval(const BigRat& at) const;  // throws if the denominator vanishes
  RatFunc compose_linear(const BigRat& a, const BigRat& b) const;
  RatFunc inv() const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  RatFunc operator-() const { return RatFunc(-num_, den_); }
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  std::string str() const;

 private:
  UPoly num_, den_;
};

// Coefficients c_0..c_K of u^0, u^-1, ..., u^-K.
template <class C>
struct LaurentSeries {
  std::vector<C> c;
  int order() const { return static_cast<int>(c.size()) - 1; }
};

// Laurent coefficients at infinity of 1/q: s[t] is the coefficient of u^-t.
std::vector<BigRat> inverse_series(const UPoly& q, int upto);

// Polynomial part (if any) is returned separately when allow_poly is set,
// otherwise improper input throws.
LaurentSeries<BigRat> expand_at_infinity(const RatFunc& f, int K,
                                         bool allow_poly = false,
                                         UPoly* poly_part = nullptr);

class RFMatrix {
 public:
  RFMatrix() = default;
  RFMatrix(int rows, int cols) : r_(rows), c_(cols), e_(static_cast<size_t>(rows) * cols) {}
  static RFMatrix identity(int k);

  int rows() const { return r_; }
  int cols() const { return c_; }
  RatFunc& operator()(int i, int j) { return e_[static_cast<size_t>(i) * c_ + j]; }
  const RatFunc& operator()(int i, int j) const { return e_[static_cast<size_t>(i) * c_ + j]; }

  RFMatrix operator*(const RFMatrix& o) const;
  RFMatrix operator+(const RFMatrix& o) const;
  RFMatrix operator-(const RFMatrix& o) const;
  bool operator==(const RFMatrix& o) const;

 private:
  int r_ = 0, c_ = 0;
  std::vector<RatFunc> e_;
};

// Fraction-free Gauss-Jordan on a square polynomial matrix (row-major).
// Returns d = +-det(A); adj receives d*A^{-1}, so A * adj = d * I.
UPoly bareiss_adjugate(std::vector<UPoly> A, int k, std::vector<UPoly>& adj);

RFMatrix rfm_inverse(const RFMatrix& M);  // throws SingularError

using QMatrix = std::vector<std::vector<BigRat>>;
// Basis of the right kernel, one vector per free column of the RREF.
std::vector<std::vector<BigRat>> rfm_nullspace(const QMatrix& M, int cols = -1);
int rank(const QMatrix& M);

}  // namespace xgn
