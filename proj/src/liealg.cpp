#include "xgn/liealg.hpp"

#include <stdexcept>

namespace xgn::liealg {

FmData::FmData(int m_, Case kind_) : m(m_), kind(kind_) {
  if (m_ < 0) throw std::invalid_argument("m must be nonnegative");
}

int FmData::pos(int c) const {
  if (c == 0 || c < -m || c > m) throw std::out_of_range("signed index out of range");
  return c < 0 ? c + m : c + m - 1;
}

int FmData::index_at(int p) const { return p < m ? p - m : p - m + 1; }

int FmData::eps(int a, int b) const {
  if (kind == Case::Orth) return 1;
  return ((a > 0) == (b > 0)) ? 1 : -1;
}

std::vector<int> FmData::indices() const {
  std::vector<int> r;
  for (int p = 0; p < 2 * m; ++p) r.push_back(index_at(p));
  return r;
}

FmElem FmData::basis_symbol(int a, int b, BigRat coef) {
  FmElem x;
  x[{a, b}] = coef;
  return x;
}

std::vector<std::pair<int, int>> FmData::basis() const {
  std::vector<std::pair<int, int>> r;
  for (int a : indices())
    for (int b : indices()) {
      std::pair<int, int> self{a, b}, other{-b, -a};
      if (other < self) continue;
      if (self == other && kind == Case::Orth) continue;  // F_{a,-a} = 0
      r.push_back(self);
    }
  return r;
}

FmElem FmData::canonical(const FmElem& x) const {
  FmElem r;
  for (auto& [ab, k] : x) {
    if (k == 0) continue;
    auto [a, b] = ab;
    pos(a), pos(b);
    std::pair<int, int> other{-b, -a};
    if (ab == other) {
      if (kind == Case::Orth) continue;
      r[ab] += k;
    } else if (other < ab) {
      r[other] -= k * eps(a, b);
    } else {
      r[ab] += k;
    }
  }
  for (auto it = r.begin(); it != r.end();) it = (it->second == 0) ? r.erase(it) : std::next(it);
  return r;
}

bool FmData::equal(const FmElem& x, const FmElem& y) const { return canonical(x) == canonical(y); }

FmElem add(const FmElem& x, const FmElem& y, BigRat ky) {
  FmElem r = x;
  for (auto& [k, v] : y) r[k] += ky * v;
  for (auto it = r.begin(); it != r.end();) it = (it->second == 0) ? r.erase(it) : std::next(it);
  return r;
}

FmElem scale(const FmElem& x, BigRat k) {
  FmElem r;
  if (k == 0) return r;
  for (auto& [ab, v] : x) r[ab] = v * k;
  return r;
}

FmElem FmData::bracket(int a, int b, int c, int d) const {
  FmElem r;
  auto put = [&](int p, int q, int k) {
    if (k) r[{p, q}] += k;
  };
  if (c == b) put(a, d, 1);
  if (a == d) put(c, b, -1);
  if (c == -a) put(-b, d, -eps(a, b));
  if (d == -b) put(c, -a, eps(a, b));
  for (auto it = r.begin(); it != r.end();) it = (it->second == 0) ? r.erase(it) : std::next(it);
  return r;
}

FmElem FmData::bracket(const FmElem& x, const FmElem& y) const {
  FmElem r;
  for (auto& [ab, k1] : x)
    for (auto& [cd, k2] : y) r = add(r, bracket(ab.first, ab.second, cd.first, cd.second), k1 * k2);
  return r;
}

SpMat FmData::matrix(int a, int b) const {
  SpMat M(2 * m, 2 * m);
  M.add_to(pos(a), pos(b), 1);
  M.add_to(pos(-b), pos(-a), -eps(a, b));
  return M;
}

SpMat FmData::matrix(const FmElem& x) const {
  SpMat M(2 * m, 2 * m);
  for (auto& [ab, k] : x) M += matrix(ab.first, ab.second) * k;
  return M;
}

FmElem FmData::from_matrix(const SpMat& M) const {
  FmElem r;
  for (auto [a, b] : basis()) {
    BigRat v = M.get(pos(a), pos(b));
    if (v == 0) continue;
    r[{a, b}] = v / matrix(a, b).get(pos(a), pos(b));
  }
  if (matrix(r) != M) throw MathError("matrix does not lie in f_m");
  return r;
}

SpMat zeta(const FmData& f, const fock::FockSpace& fs, const Pairing& pr, int a, int b) {
  if (fs.m != f.m || fs.n != pr.n) throw std::invalid_argument("Fock space does not match f_m");
  const int n = fs.n;
  SpMat r(fs.dim(), fs.dim());
  if (a > 0 && b > 0) {
    if (a == b) r = SpMat::scalar(fs.dim(), rat(-n, 2));
    for (int k = 1; k <= n; ++k) r += fock::creation(fs, a, k) * fock::annihilation(fs, b, k);
  } else if (a > 0 && b < 0) {
    for (int k = 1; k <= n; ++k)
      r += fock::creation(fs, a, pr.tilde(k)) * fock::creation(fs, -b, k) * BigRat(pr.theta(k));
  } else if (a < 0 && b > 0) {
    for (int k = 1; k <= n; ++k)
      r += fock::annihilation(fs, -a, k) * fock::annihilation(fs, b, pr.tilde(k)) * BigRat(pr.theta(k));
  } else {
    r = -zeta(f, fs, pr, -b, -a) * BigRat(f.eps(a, b));
  }
  return r;
}

SpMat zeta_pq(const FmData& f, const fock::FockSpace& fs, const Pairing& pr, int c, int d) {
  if (fs.m != f.m || fs.n != pr.n) throw std::invalid_argument("Fock space does not match f_m");
  SpMat r(fs.dim(), fs.dim());
  if (c == d) r = SpMat::scalar(fs.dim(), rat(-fs.n, 2));
  for (int k = 1; k <= fs.n; ++k) r += fock::q_gen(fs, pr, c, k) * fock::p_gen(fs, pr, d, k);
  return r;
}

SpMat zeta(const FmData& f, const fock::FockSpace& fs, const Pairing& pr, const FmElem& x) {
  SpMat r(fs.dim(), fs.dim());
  for (auto& [ab, k] : x) r += zeta(f, fs, pr, ab.first, ab.second) * k;
  return r;
}

SpMat gn_action(const fock::FockSpace& fs, const Pairing& pr, int i, int j) {
  if (i < 1 || j < 1 || i > fs.n || j > fs.n) throw std::out_of_range("column index out of range");
  SpMat r(fs.dim(), fs.dim());
  BigRat s = pr.theta(i) * pr.theta(j);
  for (int c = 1; c <= fs.m; ++c) {
    r += fock::creation(fs, c, i) * fock::annihilation(fs, c, j);
    r -= fock::creation(fs, c, pr.tilde(j)) * fock::annihilation(fs, c, pr.tilde(i)) * s;
  }
  return r;
}

SpMat gn_matrix(const Pairing& pr, int i, int j) {
  SpMat M(pr.n, pr.n);
  M.add_to(i - 1, j - 1, 1);
  M.add_to(pr.tilde(j) - 1, pr.tilde(i) - 1, -pr.theta(i) * pr.theta(j));
  return M;
}

Weight rho(Case kind, int m) {
  Weight r;
  for (int a = 1; a <= m; ++a) r.push_back(kind == Case::Orth ? m - a : m - a + 1);
  return r;
}

Weight shifted_labels(Case kind, const Weight& mu) {
  Weight r = rho(kind, static_cast<int>(mu.size()));
  for (size_t a = 0; a < mu.size(); ++a) r[a] += mu[a];
  return r;
}

int bar(int m, int c) { return c > 0 ? m + 1 - c : -m - 1 - c; }

Sl2Triple sl2_triple(const FmData& f, int a) {
  const int m = f.m;
  if (a < 1 || a > m) throw std::out_of_range("sl2 index out of range");
  auto F = [](int p, int q) { return FmData::basis_symbol(p, q); };
  auto B = [m](int c) { return bar(m, c); };
  Sl2Triple t;
  if (a < m) {
    t.e = F(-B(a), -B(a + 1));
    t.f = F(-B(a + 1), -B(a));
    t.h = add(F(-B(a), -B(a)), F(-B(a + 1), -B(a + 1)), -1);
  } else if (f.kind == Case::Orth) {
    if (m < 2) throw std::invalid_argument("so_2 has no roots");
    t.e = F(-B(m - 1), B(m));
    t.f = F(B(m), -B(m - 1));
    t.h = add(F(-B(m - 1), -B(m - 1)), F(-B(m), -B(m)));
  } else {
    t.e = FmData::basis_symbol(-B(m), B(m), rat(1, 2));
    t.f = FmData::basis_symbol(B(m), -B(m), rat(1, 2));
    t.h = F(-B(m), -B(m));
  }
  return t;
}

}  // namespace xgn::liealg
