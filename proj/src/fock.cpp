#include "xgn/fock.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace xgn::liealg {

Case parse_case(const std::string& s) {
  if (s == "orth" || s == "so") return Case::Orth;
  if (s == "symp" || s == "sp") return Case::Symp;
  throw std::invalid_argument("case must be orth or symp");
}

static void fill_block(Pairing& p, int offset, int size, Case kind) {
  for (int loc = 1; loc <= size; ++loc) {
    int i = offset + loc;
    int t;
    if (loc % 2 == 0) t = loc - 1;
    else if (loc < size) t = loc + 1;
    else t = loc;
    p.tilde_[i] = offset + t;
    p.theta_[i] = (kind == Case::Orth || loc % 2 == 1) ? 1 : -1;
  }
}

Pairing Pairing::standard(int n, Case kind) {
  if (kind == Case::Symp && n % 2) throw std::invalid_argument("symplectic form needs even n");
  Pairing p;
  p.kind = kind;
  p.n = n;
  p.tilde_.assign(n + 1, 0);
  p.theta_.assign(n + 1, 0);
  fill_block(p, 0, n, kind);
  return p;
}

Pairing Pairing::composite(int n, int l, Case kind) {
  if (kind == Case::Symp && (n % 2 || l % 2))
    throw std::invalid_argument("symplectic form needs even n and l");
  Pairing p;
  p.kind = kind;
  p.n = n + l;
  p.tilde_.assign(n + l + 1, 0);
  p.theta_.assign(n + l + 1, 0);
  fill_block(p, 0, n, kind);
  fill_block(p, n, l, kind);
  return p;
}

Pairing Pairing::block(int offset, int size) const {
  Pairing p;
  p.kind = kind;
  p.n = size;
  p.tilde_.assign(size + 1, 0);
  p.theta_.assign(size + 1, 0);
  for (int i = 1; i <= size; ++i) {
    int t = tilde_.at(offset + i) - offset;
    if (t < 1 || t > size) throw std::invalid_argument("pairing block crosses boundary");
    p.tilde_[i] = t;
    p.theta_[i] = theta_[offset + i];
  }
  return p;
}

}  // namespace xgn::liealg

namespace xgn::fock {

FockSpace::FockSpace(int rows, int cols) : m(rows), n(cols) {
  if (rows < 0 || cols < 0 || rows * cols > 20) throw std::invalid_argument("Fock space too large");
}

int FockSpace::slot(int a, int i) const {
  if (a < 1 || a > m || i < 1 || i > n) throw std::out_of_range("Fock index out of range");
  return (a - 1) * n + (i - 1);
}

SpMat creation(const FockSpace& fs, int a, int i) {
  int s = fs.slot(a, i);
  SpMat X(fs.dim(), fs.dim());
  unsigned below = (1u << s) - 1;
  for (unsigned b = 0; b < static_cast<unsigned>(fs.dim()); ++b) {
    if (b & (1u << s)) continue;
    int sign = (std::popcount(b & below) % 2) ? -1 : 1;
    X.add_to(static_cast<int>(b | (1u << s)), static_cast<int>(b), sign);
  }
  return X;
}

SpMat annihilation(const FockSpace& fs, int a, int i) {
  int s = fs.slot(a, i);
  SpMat D(fs.dim(), fs.dim());
  unsigned below = (1u << s) - 1;
  for (unsigned b = 0; b < static_cast<unsigned>(fs.dim()); ++b) {
    if (!(b & (1u << s))) continue;
    int sign = (std::popcount(b & below) % 2) ? -1 : 1;
    D.add_to(static_cast<int>(b & ~(1u << s)), static_cast<int>(b), sign);
  }
  return D;
}

SpMat p_gen(const FockSpace& fs, const Pairing& pr, int c, int i) {
  if (c == 0) throw std::invalid_argument("row index c must be nonzero");
  if (c < 0) return creation(fs, -c, i);
  return annihilation(fs, c, pr.tilde(i)) * BigRat(pr.theta(i));
}

SpMat q_gen(const FockSpace& fs, const Pairing& pr, int c, int i) {
  if (c == 0) throw std::invalid_argument("row index c must be nonzero");
  if (c < 0) return annihilation(fs, -c, i);
  return creation(fs, c, pr.tilde(i)) * BigRat(pr.theta(i));
}

std::vector<int> column_order(int n) {
  std::vector<int> seq;
  if (n % 2 == 0) {
    for (int k = 1; k <= n - 1; k += 2) seq.push_back(k);
    for (int k = n; k >= 2; k -= 2) seq.push_back(k);
  } else {
    for (int k = 1; k <= n - 2; k += 2) seq.push_back(k);
    seq.push_back(n);
    for (int k = n - 1; k >= 2; k -= 2) seq.push_back(k);
  }
  return seq;
}

SpMat f_monomial(const FockSpace& fs, int a, int s) {
  if (s < 0 || s > fs.n) throw std::out_of_range("monomial degree out of range");
  auto seq = column_order(fs.n);
  SpMat r = SpMat::identity(fs.dim());
  for (int t = 0; t < s; ++t) r = r * creation(fs, a, seq[t]);
  return r;
}

SpMat g_monomial(const FockSpace& fs, const Pairing& pr, int a, int s) {
  if (s < 0 || s > fs.n) throw std::out_of_range("monomial degree out of range");
  auto seq = column_order(fs.n);
  SpMat r = SpMat::identity(fs.dim());
  for (int t = 0; t < s; ++t) r = r * annihilation(fs, a, pr.tilde(seq[t]));
  return r;
}

SpMat row_degree(const FockSpace& fs, int a) {
  SpMat D(fs.dim(), fs.dim());
  for (int b = 0; b < fs.dim(); ++b) {
    int cnt = 0;
    for (int i = 1; i <= fs.n; ++i) cnt += (b >> fs.slot(a, i)) & 1;
    if (cnt) D.add_to(b, b, cnt);
  }
  return D;
}

int basis_of_slots(std::vector<int> slots, int& sign) {
  // bubble sort counting transpositions; repeated slot -> zero monomial
  sign = 1;
  for (size_t i = 0; i < slots.size(); ++i)
    for (size_t j = 0; j + 1 < slots.size() - i; ++j)
      if (slots[j] > slots[j + 1]) {
        std::swap(slots[j], slots[j + 1]);
        sign = -sign;
      }
  int b = 0;
  for (size_t i = 0; i < slots.size(); ++i) {
    if (i && slots[i] == slots[i - 1]) {
      sign = 0;
      return -1;
    }
    b |= 1 << slots[i];
  }
  return b;
}

SpMat varpi_conjugator(const FockSpace& fs, const Pairing& pr, const std::vector<int>& delta) {
  if (static_cast<int>(delta.size()) != fs.m) throw std::invalid_argument("delta length mismatch");
  std::vector<bool> twisted(fs.m + 1, false);
  for (int a = 1; a <= fs.m; ++a) {
    if (delta[a - 1] != 1 && delta[a - 1] != -1) throw std::invalid_argument("delta entries are +-1");
    if (delta[a - 1] == -1) twisted[fs.m + 1 - a] = true;
  }
  // new vacuum: full twisted rows, ascending
  std::vector<BigRat> omega(fs.dim(), 0);
  omega[0] = 1;
  for (int r = fs.m; r >= 1; --r) {
    if (!twisted[r]) continue;
    for (int i = fs.n; i >= 1; --i) omega = creation(fs, r, i).apply(omega);
  }
  // images of creation operators under varpi
  std::vector<SpMat> img;
  for (int r = 1; r <= fs.m; ++r)
    for (int i = 1; i <= fs.n; ++i)
      img.push_back(twisted[r] ? annihilation(fs, r, pr.tilde(i)) * BigRat(pr.theta(i))
                               : creation(fs, r, i));
  return conjugator_from_images(fs, img, omega);
}

SpMat conjugator_from_images(const FockSpace& fs, const std::vector<SpMat>& img,
                             const std::vector<BigRat>& vacuum_image) {
  const int D = fs.dim();
  if (static_cast<int>(img.size()) != fs.m * fs.n) throw std::invalid_argument("one image per slot");
  SpMat W(D, D);
  for (int b = 0; b < D; ++b) {
    std::vector<BigRat> v = vacuum_image;
    // b = x_{s1} ... x_{sk} 1 with s1 < ... < sk: apply the last factor first
    for (int s = fs.m * fs.n - 1; s >= 0; --s)
      if (b & (1 << s)) v = img[s].apply(v);
    for (int i = 0; i < D; ++i)
      if (v[i] != 0) W.add_to(i, b, v[i]);
  }
  return W;
}

SpMat signed_perm_inverse(const SpMat& W) {
  // entries are +-1, one per row and column
  return W.transpose();
}

SpMat conjugate(const SpMat& W, const SpMat& g) { return W * g * signed_perm_inverse(W); }

}  // namespace xgn::fock
