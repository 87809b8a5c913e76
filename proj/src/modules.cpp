#include "xgn/modules.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

#include "json.hpp"
#include "xgn/fock.hpp"
#include "xgn/linsolve.hpp"

namespace xgn::modules {

using fock::FockSpace;

namespace {

OpPoly scalar_poly(const UPoly& p, int d) {
  OpPoly r(d);
  for (auto& c : p.coeffs()) r.c.push_back(SpMat::scalar(d, c));
  r.trim();
  return r;
}

OpPoly times_const(const OpPoly& p, const SpMat& C) {
  return p.map([&](const SpMat& a) { return a * C; }, C.cols());
}

OpMatrix lift_left(const OpMatrix& X, int right_dim) {
  SpMat I = SpMat::identity(right_dim);
  return X.map_ops([&](const SpMat& a) { return kron(a, I); }, X.dim() * right_dim);
}

// k x k diagonal matrix with the 1 x 1 entry X repeated
OpMatrix diag_repeat(const OpMatrix& X, int k) {
  OpMatrix D(k, k, X.dim());
  for (int i = 0; i < k; ++i) D.num(i, i) = X.num(0, 0);
  D.set_den(X.den());
  return D;
}

OpMatrix one_by_one(const RatFunc& f, int d) {
  OpMatrix m(1, 1, d);
  m.num(0, 0) = scalar_poly(f.num(), d);
  m.set_den(f.den());
  return m;
}

OpMatrix trace_blocks(const OpMatrix& X) {
  OpMatrix t(1, 1, X.dim());
  for (int c = 0; c < X.rows(); ++c) t.num(0, 0) += X.num(c, c);
  t.set_den(X.den());
  return t;
}

// entry_ij = delta_ij + sum_ab R_ab * (L[a*n+i] Rt[b*n+j]), R a k x k grid on the full space
Realization bimodule_core(const Pairing& pr, const OpMatrix& R, const std::vector<SpMat>& L,
                          const std::vector<SpMat>& Rt, Flavor fl) {
  const int n = pr.n, k = R.rows(), d = R.dim();
  Realization r;
  r.flavor = fl;
  r.pairing = pr;
  r.M = OpMatrix(n, n, d);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      OpPoly acc(d);
      if (i == j) acc = scalar_poly(R.den(), d);
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
          const OpPoly& e = R.num(a, b);
          if (e.is_zero()) continue;
          SpMat op = L[a * n + i] * Rt[b * n + j];
          if (op.is_zero()) continue;
          acc += times_const(e, op);
        }
      r.M.num(i, j) = std::move(acc);
    }
  r.M.set_den(R.den());
  r.M = r.M.reduced();
  return r;
}

int popcount(int x) { return std::popcount(static_cast<unsigned>(x)); }

long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

bool is_integer(const BigRat& q) { return q.get_den() == 1; }

std::string weight_str(const Weight& w) {
  std::string s = "(";
  for (size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + to_string(w[i]);
  return s + ")";
}

SpMat grassmann_gl(int l, int a, int b) {
  FockSpace fs(1, l);
  return fock::creation(fs, 1, a) * fock::annihilation(fs, 1, b);
}

}  // namespace

// ---------------------------------------------------------------- representations

const SpMat& FmRep::at(int a, int b) const {
  return F.at(static_cast<size_t>(f.pos(a)) * f.dim2() + f.pos(b));
}

SpMat FmRep::image(const FmElem& x) const {
  SpMat r(dim, dim);
  for (auto& [ab, k] : x) r += at(ab.first, ab.second) * k;
  return r;
}

SpMat FmRep::block_matrix() const {
  const int k = f.dim2();
  SpMat B(k * dim, k * dim);
  for (int p = 0; p < k; ++p)
    for (int q = 0; q < k; ++q) B += kron(SpMat::unit(k, k, p, q), F[p * k + q]);
  return B;
}

FmRep fm_trivial(const FmData& f) {
  FmRep V{f, 1, {}};
  V.F.assign(static_cast<size_t>(f.dim2()) * f.dim2(), SpMat(1, 1));
  return V;
}

FmRep fm_defining(const FmData& f) {
  FmRep V{f, f.dim2(), {}};
  for (int a : f.indices())
    for (int b : f.indices()) V.F.push_back(f.matrix(a, b));
  return V;
}

FmRep fm_fock(const FmData& f, int k) {
  FockSpace fs(f.m, k);
  Pairing pr = Pairing::standard(k, f.kind);
  FmRep V{f, fs.dim(), {}};
  for (int a : f.indices())
    for (int b : f.indices()) V.F.push_back(liealg::zeta(f, fs, pr, a, b));
  return V;
}

bool is_representation(const FmRep& V) {
  for (int a : V.f.indices())
    for (int b : V.f.indices())
      for (int c : V.f.indices())
        for (int d : V.f.indices())
          if (commutator(V.at(a, b), V.at(c, d)) != V.image(V.f.bracket(a, b, c, d))) return false;
  return true;
}

GlRep gl_trivial(int l) {
  GlRep U{l, 1, std::vector<SpMat>(static_cast<size_t>(l) * l, SpMat(1, 1)), Weight(l, 0), {BigRat(1)}};
  return U;
}

GlRep gl_defining(int l) {
  GlRep U{l, l, {}, Weight(l, 0), std::vector<BigRat>(l, 0)};
  for (int a = 0; a < l; ++a)
    for (int b = 0; b < l; ++b) U.E.push_back(SpMat::unit(l, l, a, b));
  U.highest_weight[0] = 1;
  U.highest_vector[0] = 1;
  return U;
}

GlRep gl_dual(int l) {
  GlRep U{l, l, {}, Weight(l, 0), std::vector<BigRat>(l, 0)};
  for (int a = 0; a < l; ++a)
    for (int b = 0; b < l; ++b) U.E.push_back(-SpMat::unit(l, l, b, a));
  U.highest_weight[l - 1] = -1;
  U.highest_vector[l - 1] = 1;
  return U;
}

GlRep gl_exterior(int l, int k) {
  if (k < 0 || k > l) throw std::invalid_argument("exterior power degree out of range");
  std::vector<int> idx = degree_indices(l, k);
  GlRep U{l, static_cast<int>(idx.size()), {}, Weight(l, 0), std::vector<BigRat>(idx.size(), 0)};
  for (int a = 1; a <= l; ++a)
    for (int b = 1; b <= l; ++b) U.E.push_back(grassmann_gl(l, a, b).submatrix(idx, idx));
  for (int a = 0; a < k; ++a) U.highest_weight[a] = 1;
  U.highest_vector[0] = 1;  // x_1 ... x_k is the smallest mask of degree k
  return U;
}

// ---------------------------------------------------------------- module records

std::string ModuleSpec::to_json() const {
  nlohmann::json j;
  j["name"] = real.name;
  j["flavor"] = real.flavor == Flavor::T ? "T" : "S";
  j["n"] = real.n();
  j["dim"] = real.dim();
  j["zero"] = zero;
  j["twist"] = twist.str();
  j["params"] = params;
  auto ent = nlohmann::json::array();
  if (!zero) {
    const OpMatrix& M = real.M;
    for (int i = 0; i < M.rows(); ++i)
      for (int k = 0; k < M.cols(); ++k) {
        std::map<std::pair<int, int>, bool> seen;
        for (auto& c : M.num(i, k).c)
          for (int col = 0; col < c.cols(); ++col)
            for (auto& [row, v] : c.col(col)) seen[{row, col}] = true;
        for (auto& [rc, _] : seen) {
          RatFunc f = M.scalar_entry(i, k, rc.first, rc.second);
          if (i == k && rc.first == rc.second && f == RatFunc(1)) continue;
          ent.push_back({i, k, rc.first, rc.second, f.str()});
        }
      }
  }
  j["entries"] = ent;
  auto gr = nlohmann::json::array();
  for (auto& w : grading) {
    auto a = nlohmann::json::array();
    for (auto& x : w) a.push_back(to_string(x));
    gr.push_back(a);
  }
  j["grading"] = gr;
  return j.dump();
}

// ---------------------------------------------------------------- P_z

std::vector<int> degree_indices(int n, int N) {
  if (N < 0 || N > n) throw std::invalid_argument("degree out of range");
  std::vector<int> r;
  for (int mask = 0; mask < (1 << n); ++mask)
    if (popcount(mask) == N) r.push_back(mask);
  return r;
}

Realization restrict(const Realization& X, const std::vector<int>& idx) {
  Realization r = X;
  r.M = X.M.map_ops([&](const SpMat& a) { return a.submatrix(idx, idx); }, static_cast<int>(idx.size()))
            .reduced();
  return r;
}

Realization conjugate(const Realization& X, const SpMat& W, const SpMat& Winv) {
  Realization r = X;
  r.M = X.M.map_ops([&](const SpMat& a) { return W * a * Winv; }, W.rows());
  return r;
}

Realization p_module(const Pairing& pr, const BigRat& z) {
  const int n = pr.n;
  std::vector<SpMat> gl;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) gl.push_back(grassmann_gl(n, i, j));
  Realization r = yangian::tau_shift(yangian::eval_hom(pr, gl), -z);
  r.name = "P[" + to_string(z) + "]";
  return r;
}

Realization p_prime_module(const Pairing& pr, const BigRat& z) {
  Realization r = yangian::twist_auto(p_module(pr, z));
  r.name = "P'[" + to_string(z) + "]";
  return r;
}

Realization p_block(const Pairing& pr, const BigRat& z, int N) {
  if (std::abs(N) > pr.n) throw std::invalid_argument("P block degree exceeds n");
  if (N == 0) {
    Realization r = yangian::identity_realization(pr, Flavor::T, 1);
    r.name = "P0";
    return r;
  }
  Realization full = N > 0 ? p_module(pr, z) : p_prime_module(pr, z);
  Realization r = restrict(full, degree_indices(pr.n, std::abs(N)));
  r.name = full.name + "^" + std::to_string(N);
  return r;
}

Realization degree_submodule(const Realization& P, int N) {
  const int n = std::countr_zero(static_cast<unsigned>(P.dim()));
  if ((1 << n) != P.dim()) throw std::invalid_argument("not a Grassmann module");
  if (std::abs(N) > n) throw std::invalid_argument("degree exceeds n");
  return restrict(P, degree_indices(n, std::abs(N)));
}

bool p_prime_push_check(const Pairing& pr, const BigRat& z, int block) {
  FockSpace fs(1, pr.n);
  SpMat W = fock::varpi_conjugator(fs, pr, {-1});
  Realization lhs = p_prime_module(pr, z);
  Realization pushed = conjugate(p_module(pr, -z - 1), W, W.transpose());
  RatFunc g(UPoly::linear(1, -z - 1), UPoly::linear(1, -z));
  Realization rhs = yangian::scalar_twist(pushed, g);
  if (block >= 0) {
    auto idx = degree_indices(pr.n, block);
    return restrict(lhs, idx).equals(restrict(rhs, idx));
  }
  return lhs.equals(rhs);
}

// ---------------------------------------------------------------- alpha_l

Realization alpha_l(const Pairing& pr, const GlRep& U) {
  const int l = U.l, n = pr.n;
  FockSpace fs(l, n);
  // -E' has block (a, b) equal to -E_ba
  SpMat M(l * U.dim, l * U.dim);
  for (int a = 1; a <= l; ++a)
    for (int b = 1; b <= l; ++b) M -= kron(SpMat::unit(l, l, a - 1, b - 1), U.at(b, a));
  OpMatrix R = lift_left(resolvent(M).split_blocks(l), fs.dim());
  SpMat IU = SpMat::identity(U.dim);
  std::vector<SpMat> X, D;
  for (int a = 1; a <= l; ++a)
    for (int i = 1; i <= n; ++i) {
      X.push_back(kron(IU, fock::creation(fs, a, i)));
      D.push_back(kron(IU, fock::annihilation(fs, a, i)));
    }
  Realization r = bimodule_core(pr, R, X, D, Flavor::T);
  r.name = "alpha" + std::to_string(l);
  return r;
}

SpMat gl_diag_action(const Pairing& pr, const GlRep& U, int a, int b) {
  FockSpace fs(U.l, pr.n);
  SpMat g(fs.dim(), fs.dim());
  for (int k = 1; k <= pr.n; ++k) g += fock::creation(fs, a, k) * fock::annihilation(fs, b, k);
  return kron(U.at(a, b), SpMat::identity(fs.dim())) + kron(SpMat::identity(U.dim), g);
}

OpMatrix z_series(const GlRep& U) {
  const int l = U.l;
  SpMat M(l * U.dim, l * U.dim);
  for (int a = 1; a <= l; ++a)
    for (int b = 1; b <= l; ++b) M += kron(SpMat::unit(l, l, a - 1, b - 1), U.at(a, b));
  return trace_blocks(resolvent(M).split_blocks(l)).reduced();
}

RatFunc hc_scalar(const Weight& lambda) {
  const int l = static_cast<int>(lambda.size());
  RatFunc r(1);
  for (int a = 1; a <= l; ++a) {
    BigRat c = BigRat(l - a) + lambda[a - 1];
    r *= RatFunc(UPoly::linear(1, c + 1), UPoly::linear(1, c));
  }
  return r;
}

bool hc_check(const GlRep& U) {
  SpMat proj(U.dim, U.dim);
  for (int i = 0; i < U.dim; ++i)
    if (U.highest_vector[i] != 0) proj.add_to(i, 0, U.highest_vector[i]);
  OpMatrix one_plus_z = OpMatrix::identity(1, U.dim) + z_series(U);
  OpMatrix lhs = one_plus_z.right_mul(proj);
  OpMatrix rhs = one_by_one(hc_scalar(U.highest_weight), U.dim).right_mul(proj);
  return lhs.equals(rhs);
}

bool resolvent_transpose_check(const GlRep& U) {
  const int l = U.l;
  SpMat M(l * U.dim, l * U.dim), Mp(l * U.dim, l * U.dim);
  for (int a = 1; a <= l; ++a)
    for (int b = 1; b <= l; ++b) {
      M += kron(SpMat::unit(l, l, a - 1, b - 1), U.at(a, b));
      Mp += kron(SpMat::unit(l, l, a - 1, b - 1), U.at(b, a));
    }
  OpMatrix inv_e = resolvent(M).split_blocks(l);
  OpMatrix inv_ep = resolvent(Mp).split_blocks(l).substitute(1, l);
  OpMatrix one_plus_z = OpMatrix::identity(1, U.dim) + z_series(U);
  for (int a = 0; a < l; ++a)
    for (int d = 0; d < l; ++d)
      if (!inv_e.sub_block(d, a, 1, 1).equals(one_plus_z * inv_ep.sub_block(a, d, 1, 1))) return false;
  return true;
}

// ---------------------------------------------------------------- beta_m

OpMatrix f_resolvent(const FmRep& V) { return resolvent(V.block_matrix()).split_blocks(V.f.dim2()); }

OpMatrix w_series(const FmRep& V) { return trace_blocks(f_resolvent(V)).reduced(); }

Realization beta_core(const Pairing& pr, const OpMatrix& Fres, const std::vector<SpMat>& p,
                      const std::vector<SpMat>& q, int m) {
  if (Fres.rows() != 2 * m) throw std::invalid_argument("beta_core: resolvent size mismatch");
  Realization r = bimodule_core(pr, Fres, p, q, Flavor::S);
  r.name = "beta" + std::to_string(m);
  return r;
}

Realization beta_m(const Pairing& pr, const FmRep& V) {
  const int m = V.f.m, n = pr.n;
  if (V.f.kind != pr.kind) throw std::invalid_argument("beta_m: f_m and g_n cases differ");
  FockSpace fs(m, n);
  BigRat shift = rat(liealg::pm(pr.kind), 2) - m;
  OpMatrix Fres = lift_left(f_resolvent(V).substitute(1, shift), fs.dim());
  SpMat IV = SpMat::identity(V.dim);
  std::vector<SpMat> p, q;
  for (int c : V.f.indices())
    for (int i = 1; i <= n; ++i) {
      p.push_back(kron(IV, fock::p_gen(fs, pr, c, i)));
      q.push_back(kron(IV, fock::q_gen(fs, pr, c, i)));
    }
  return beta_core(pr, Fres, p, q, m);
}

SpMat fm_diag_action(const Pairing& pr, const FmRep& V, int a, int b) {
  FockSpace fs(V.f.m, pr.n);
  return kron(V.at(a, b), SpMat::identity(fs.dim())) +
         kron(SpMat::identity(V.dim), liealg::zeta(V.f, fs, pr, a, b));
}

namespace {

// 1 / (2u + 2m - s) scaled by k
RatFunc transpose_frac(int m, int s, const BigRat& k) {
  return RatFunc(UPoly(k), UPoly::linear(2, 2 * m - s));
}

}  // namespace

bool f_transpose_check(const FmRep& V) {
  const FmData& f = V.f;
  const int m = f.m, s = liealg::pm(f.kind), k = f.dim2();
  OpMatrix F = f_resolvent(V);
  OpMatrix Fp(k, k, V.dim);
  for (int a : f.indices())
    for (int b : f.indices()) {
      OpPoly e = F.num(f.pos(-b), f.pos(-a));
      if (f.eps(a, b) < 0) e = e * UPoly(-1);
      Fp.num(f.pos(a), f.pos(b)) = e;
    }
  Fp.set_den(F.den());
  OpMatrix W = w_series(V);
  OpMatrix coef = W + OpMatrix::identity(1, V.dim).scaled(RatFunc(1) - transpose_frac(m, s, s));
  OpMatrix rhs = diag_repeat(coef, k) * F.substitute(-1, s - 2 * m) + F.scaled(transpose_frac(m, s, s));
  return Fp.scaled(RatFunc(-1)).equals(rhs);
}

bool w_product_check(const FmRep& V) {
  const int m = V.f.m, s = liealg::pm(V.f.kind);
  OpMatrix W = w_series(V);
  OpMatrix I = OpMatrix::identity(1, V.dim);
  RatFunc c = transpose_frac(m, s, s);
  OpMatrix left = W + I.scaled(RatFunc(1) - c);
  OpMatrix right = W.substitute(-1, s - 2 * m) + I.scaled(RatFunc(1) + c);
  RatFunc inv_sq = transpose_frac(m, s, 1) * transpose_frac(m, s, 1);
  return (left * right).equals(I.scaled(RatFunc(1) - inv_sq));
}

std::vector<SpMat> wtilde_coefficients(const FmRep& V, int K) {
  const int m = V.f.m, s = liealg::pm(V.f.kind);
  // 1 + Wbar(u) with (1 -+ 1/2u) Wbar(u) = W(u -+ ... )
  OpMatrix Wshift = w_series(V).substitute(1, rat(s, 2) - m);
  OpMatrix A = OpMatrix::identity(1, V.dim) +
               Wshift.scaled(RatFunc(UPoly::linear(2, 0), UPoly::linear(2, -s))).reduced();
  auto grids = A.reduced().laurent(K);
  std::vector<SpMat> a, w;
  for (auto& g : grids) a.push_back(g[0]);
  w.push_back(SpMat::identity(V.dim));
  for (int k = 1; k <= K; ++k) {
    SpMat acc(V.dim, V.dim);
    for (int j = 1; j <= k; ++j) acc += a[j] * w[k - j];
    if (k % 2) {
      w.push_back(acc * rat(-1, 2));
    } else {
      if (!acc.is_zero()) throw MathError("W~ recursion inconsistent at order " + std::to_string(k));
      w.push_back(SpMat(V.dim, V.dim));
    }
  }
  return w;
}

std::vector<std::vector<SpMat>> beta_tilde(const Pairing& pr, const FmRep& V, int K) {
  Realization B = beta_m(pr, V);
  auto b = B.M.laurent(K);
  auto w = wtilde_coefficients(V, K);
  const int fd = B.dim() / V.dim;
  SpMat IF = SpMat::identity(fd);
  std::vector<std::vector<SpMat>> out(K + 1);
  for (int k = 0; k <= K; ++k) {
    out[k].assign(b[k].size(), SpMat(B.dim(), B.dim()));
    for (int j = 0; j <= k; ++j) {
      if (w[j].is_zero()) continue;
      SpMat lw = kron(w[j], IF);
      for (size_t e = 0; e < b[k].size(); ++e)
        if (!b[k - j][e].is_zero()) out[k][e] += lw * b[k - j][e];
    }
  }
  return out;
}

bool beta_tilde_symmetry_check(const Pairing& pr, const FmRep& V, int K) {
  auto st = beta_tilde(pr, V, K);
  const int n = pr.n, s = liealg::pm(pr.kind);
  for (int k = 0; k <= K; ++k)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        SpMat lhs = st[k][(pr.tilde(j) - 1) * n + pr.tilde(i) - 1] * BigRat(pr.theta(i) * pr.theta(j));
        const SpMat& cur = st[k][(i - 1) * n + j - 1];
        SpMat rhs = (k % 2) ? -cur : cur;
        // (1 - (-1)^{k-1}) / 2 is 1 exactly when k is even and positive
        if (k > 0 && k % 2 == 0) rhs += st[k - 1][(i - 1) * n + j - 1] * BigRat(s);
        if (lhs != rhs) return false;
      }
  return true;
}

Realization f_delta(const Pairing& pr, const FmRep& V, const std::vector<int>& delta) {
  FockSpace fs(V.f.m, pr.n);
  SpMat W = kron(SpMat::identity(V.dim), fock::varpi_conjugator(fs, pr, delta));
  Realization r = conjugate(beta_m(pr, V), W, W.transpose());
  r.name = "Fdelta(" + r.name + ")";
  return r;
}

// ---------------------------------------------------------------- tensor models

std::vector<BigRat> nu_labels(const Weight& mu, const Weight& lambda, int n) {
  if (mu.size() != lambda.size()) throw std::invalid_argument("mu and lambda differ in length");
  std::vector<BigRat> r;
  for (size_t a = 0; a < mu.size(); ++a) r.push_back(rat(n, 2) + mu[a] - lambda[a]);
  return r;
}

void check_generic(const Weight& mu, Case kind) {
  const int m = static_cast<int>(mu.size());
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      if (is_integer(mu[a] - mu[b]))
        throw GenericityError("mu_" + std::to_string(a + 1) + " - mu_" + std::to_string(b + 1) +
                              " is an integer");
      if (is_integer(mu[a] + mu[b]))
        throw GenericityError("mu_" + std::to_string(a + 1) + " + mu_" + std::to_string(b + 1) +
                              " is an integer");
    }
  if (kind == Case::Symp)
    for (int a = 0; a < m; ++a)
      if (is_integer(2 * mu[a])) throw GenericityError("2 mu_" + std::to_string(a + 1) + " is an integer");
}

RatFunc muprod(const Weight& mu, Case kind) {
  Weight r = liealg::rho(kind, static_cast<int>(mu.size()));
  RatFunc f(1);
  for (size_t a = 0; a < mu.size(); ++a)
    f *= RatFunc(UPoly::linear(1, -mu[a] + rat(1, 2) - r[a]), UPoly::linear(1, -mu[a] - rat(1, 2) - r[a]));
  return f;
}

namespace {

// factors listed from a = m down to a = 1; signed degrees select P or P'
ModuleSpec tensor_model(const std::vector<BigRat>& zs, const std::vector<int>& degs, Case kind, int n) {
  Pairing pr = Pairing::standard(n, kind);
  const int m = static_cast<int>(zs.size());
  Realization T = p_block(pr, zs[m - 1], degs[m - 1]);
  for (int a = m - 1; a >= 1; --a) T = yangian::coproduct(T, p_block(pr, zs[a - 1], degs[a - 1]));
  ModuleSpec ms;
  ms.real = yangian::sym_from_T(T);
  return ms;
}

bool nu_degrees(const std::vector<BigRat>& nu, int n, std::vector<int>& out) {
  out.clear();
  for (auto& v : nu) {
    if (!is_integer(v) || v < 0 || v > n) return false;
    out.push_back(static_cast<int>(v.get_num().get_si()));
  }
  return true;
}

ModuleSpec zero_module(Case kind, int n) {
  ModuleSpec ms;
  ms.zero = true;
  ms.real = yangian::identity_realization(Pairing::standard(n, kind), Flavor::S, 1);
  ms.real.name = "zero";
  return ms;
}

}  // namespace

ModuleSpec verma_model(const Weight& mu, const Weight& lambda, Case kind, int n) {
  check_generic(mu, kind);
  auto nu = nu_labels(mu, lambda, n);
  std::vector<int> deg;
  if (!nu_degrees(nu, n, deg)) return zero_module(kind, n);
  const int m = static_cast<int>(mu.size());
  Weight r = liealg::rho(kind, m);
  std::vector<BigRat> zs;
  for (int a = 0; a < m; ++a) zs.push_back(mu[a] - rat(1, 2) + r[a]);
  ModuleSpec ms = tensor_model(zs, deg, kind, n);
  ms.real.name = "verma";
  ms.twist = muprod(mu, kind);
  ms.params = {{"mu", weight_str(mu)}, {"lambda", weight_str(lambda)}, {"nu", weight_str(nu)},
               {"case", liealg::case_name(kind)}};
  // F_{cc} with c = m+1-a acts as -n/2 + deg_a - mu_a; each factor is homogeneous
  Weight g(m);
  for (int a = 1; a <= m; ++a) g[m - a] = rat(-n, 2) + deg[a - 1] - mu[a - 1];
  ms.grading.assign(ms.real.dim(), g);
  return ms;
}

ModuleSpec siverma_model(const Weight& mu, const Weight& lambda, const weyl::SignedPerm& sigma, Case kind,
                         int n) {
  check_generic(mu, kind);
  auto nu = nu_labels(mu, lambda, n);
  std::vector<int> deg;
  if (!nu_degrees(nu, n, deg)) return zero_module(kind, n);
  const int m = static_cast<int>(mu.size());
  Weight r = liealg::rho(kind, m);
  auto mut = weyl::pull_labels(sigma, mu);
  auto rt = weyl::pull_labels(sigma, r);
  auto nut = weyl::pull_labels(sigma, deg);
  auto delta = sigma.delta();
  std::vector<BigRat> zs;
  std::vector<int> sdeg;
  for (int a = 0; a < m; ++a) {
    zs.push_back(mut[a] - rat(1, 2) + rt[a]);
    sdeg.push_back(delta[a] * nut[a]);
  }
  ModuleSpec ms = tensor_model(zs, sdeg, kind, n);
  ms.real.name = "siverma";
  ms.twist = muprod(mu, kind);
  std::string w;
  for (int x : sigma.img) w += std::to_string(x) + " ";
  ms.params = {{"mu", weight_str(mu)}, {"lambda", weight_str(lambda)}, {"nu", weight_str(nu)},
               {"sigma", w}, {"case", liealg::case_name(kind)}};
  return ms;
}

std::vector<BigRat> fock_to_tensor(const std::vector<BigRat>& v, int m, int n, const std::vector<int>& deg) {
  std::vector<std::vector<int>> idx;
  long total = 1;
  for (int r = 0; r < m; ++r) {
    idx.push_back(degree_indices(n, deg[r]));
    total *= static_cast<long>(idx.back().size());
  }
  std::vector<BigRat> out(total, 0);
  const int rowmask = (1 << n) - 1;
  for (size_t b = 0; b < v.size(); ++b) {
    if (v[b] == 0) continue;
    long index = 0;
    for (int r = 0; r < m; ++r) {
      int rm = (static_cast<int>(b) >> (r * n)) & rowmask;
      auto it = std::lower_bound(idx[r].begin(), idx[r].end(), rm);
      if (it == idx[r].end() || *it != rm)
        throw MathError("Fock vector has a component outside the tensor model");
      index = index * static_cast<long>(idx[r].size()) + (it - idx[r].begin());
    }
    out[index] += v[b];
  }
  return out;
}

// ---------------------------------------------------------------- twisted tensor

Realization twisted_tensor(const Pairing& pr, const FmRep& V, const GlRep& U) {
  const int m = V.f.m, l = U.l, n = pr.n;
  BigRat z = BigRat(m) - rat(liealg::pm(pr.kind), 2);
  Realization B = beta_m(pr, V);
  Realization A = yangian::tau_shift(alpha_l(pr, U), -z);
  Realization C = yangian::coaction(B, A);
  FockSpace fl(l, n);
  SpMat IB = SpMat::identity(B.dim()), IF = SpMat::identity(fl.dim());
  OpMatrix Z = (OpMatrix::identity(1, U.dim) + z_series(U).substitute(1, -z - l)).reduced();
  Z = Z.map_ops([&](const SpMat& a) { return kron(IB, kron(a, IF)); }, C.dim());
  C.M = (diag_repeat(Z, n) * C.M).reduced();
  C.name = "twisted_tensor";
  return C;
}

SpMat twisted_fm_action(const Pairing& pr, const FmRep& V, const GlRep& U, int a, int b) {
  FockSpace fl(U.l, pr.n);
  return kron(fm_diag_action(pr, V, a, b), SpMat::identity(U.dim * fl.dim()));
}

SpMat twisted_gl_action(const Pairing& pr, const FmRep& V, const GlRep& U, int a, int b) {
  FockSpace fm(V.f.m, pr.n);
  SpMat g = gl_diag_action(pr, U, a, b);
  if (a == b) g -= SpMat::scalar(g.rows(), rat(pr.n, 2));
  return kron(SpMat::identity(V.dim * fm.dim()), g);
}

// ---------------------------------------------------------------- Olshanski

RatFunc olshanski_f(int m, int l, Case kind) {
  BigRat c = rat(liealg::pm(kind) - l, 2);
  return RatFunc(UPoly::linear(1, c - m), UPoly::linear(1, c));
}

namespace {

void olshanski_guard(int m, int n, int l, Case kind) {
  if (m < 1 || n < 1 || l < 0) throw std::invalid_argument("olshanski: need m, n >= 1 and l >= 0");
  if (kind == Case::Symp && (n % 2 || l % 2)) throw std::invalid_argument("symplectic case needs even n and l");
}

// delta + (u - l/2 +- 1/2)^{-1} g on G(C^m (x) C^{n+l}) with the glued pairing
Realization big_pi(int m, int n, int l, Case kind) {
  Pairing pr = Pairing::composite(n, l, kind);
  FockSpace fs(m, n + l);
  std::vector<SpMat> g;
  for (int i = 1; i <= n + l; ++i)
    for (int j = 1; j <= n + l; ++j) g.push_back(liealg::gn_action(fs, pr, i, j));
  return yangian::tau_shift(yangian::pi_n(pr, g), rat(l, 2));
}

Realization corner(const Realization& X, const OpMatrix& M, int n) {
  Realization r;
  r.flavor = Flavor::S;
  r.pairing = X.pairing.block(0, n);
  r.M = M;
  return r;
}

}  // namespace

Realization olshanski_gamma(int m, int n, int l, Case kind) {
  olshanski_guard(m, n, l, kind);
  Realization G = big_pi(m, n, l, kind);
  OpMatrix A = G.M.sub_block(0, 0, n, n);
  if (l == 0) return corner(G, A, n);
  OpMatrix B = G.M.sub_block(0, n, n, l), C = G.M.sub_block(n, 0, l, n), D = G.M.sub_block(n, n, l, l);
  Realization r = corner(G, (A - B * D.inverse().reduced() * C).reduced(), n);
  r.name = "gamma" + std::to_string(l);
  return r;
}

Realization olshanski_compositional(int m, int n, int l, Case kind) {
  olshanski_guard(m, n, l, kind);
  // omega_n o corner o omega_{n+l} already shifts u by -l/2, so start from the unshifted pi_{n+l}
  Realization G = yangian::tau_shift(big_pi(m, n, l, kind), rat(-l, 2));
  Realization outer = yangian::omega_n(G);
  Realization r = yangian::omega_n(corner(G, outer.M.sub_block(0, 0, n, n), n));
  r.name = "gamma" + std::to_string(l) + "_compositional";
  return r;
}

Realization olshanski_beta(int m, int n, int l, Case kind) {
  olshanski_guard(m, n, l, kind);
  Pairing pr = Pairing::composite(n, l, kind);
  FockSpace fs(m, n + l);
  FmData f(m, kind);
  const int k = f.dim2(), d = fs.dim();
  // zeta-bar_l(F_cd) = -delta l/2 + sum over the C^l columns of q_ck p_dk
  SpMat Bm(k * d, k * d);
  for (int c : f.indices())
    for (int e : f.indices()) {
      SpMat z(d, d);
      if (c == e) z = SpMat::scalar(d, rat(-l, 2));
      for (int col = n + 1; col <= n + l; ++col) z += fock::q_gen(fs, pr, c, col) * fock::p_gen(fs, pr, e, col);
      Bm += kron(SpMat::unit(k, k, f.pos(c), f.pos(e)), z);
    }
  BigRat shift = rat(liealg::pm(kind), 2) - m;
  OpMatrix Fres = resolvent(Bm).split_blocks(k).substitute(1, shift);
  std::vector<SpMat> p, q;
  for (int c : f.indices())
    for (int i = 1; i <= n; ++i) {
      p.push_back(fock::p_gen(fs, pr, c, i));
      q.push_back(fock::q_gen(fs, pr, c, i));
    }
  Realization b = beta_core(pr.block(0, n), Fres, p, q, m);
  Realization r = yangian::scalar_twist(b, olshanski_f(m, l, kind));
  r.name = "olshanski_beta";
  return r;
}

OlshanskiReport olshanski_check(int m, int n, int l, Case kind) {
  OlshanskiReport rep;
  Realization g = olshanski_gamma(m, n, l, kind);
  rep.routes_agree = g.equals(olshanski_compositional(m, n, l, kind));
  Realization b = olshanski_beta(m, n, l, kind);
  OpMatrix diff = (g.M - b.M).reduced();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!diff.num(i, j).is_zero()) ++rep.defect_entries;
  rep.equal_to_beta = rep.defect_entries == 0;
  return rep;
}

// ---------------------------------------------------------------- Howe duality

int howe_commutant_dimension(int m, int n, Case kind) {
  Pairing pr = Pairing::standard(n, kind);
  if (m == 0) return 1;
  FmData f(m, kind);
  Realization B = beta_m(pr, fm_trivial(f));
  FockSpace fs(m, n);
  std::vector<SpMat> ops;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (auto& c : B.M.num(i, j).c)
        if (!c.is_zero()) ops.push_back(c);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) ops.push_back(liealg::gn_action(fs, pr, i, j));
  for (auto [a, b] : f.basis()) ops.push_back(fm_diag_action(pr, fm_trivial(f), a, b));
  return static_cast<int>(commutant_basis(ops, fs.dim()).size());
}

int howe_partition_count(int m, int n, Case kind) {
  // partitions with at most m columns, encoded by their column lengths c_1 >= ... >= c_m >= 0
  int count = 0;
  std::vector<int> cols(m, 0);
  const int bound = n;
  std::function<void(int, int)> rec = [&](int idx, int maxlen) {
    if (idx == m) {
      int rows = m ? cols[0] : 0;
      bool ok = kind == Case::Symp ? 2 * rows <= n : (m < 2 ? cols[0] <= n : cols[0] + cols[1] <= n);
      if (ok) ++count;
      return;
    }
    for (int c = 0; c <= maxlen; ++c) {
      cols[idx] = c;
      rec(idx + 1, c);
    }
  };
  if (m == 0) return 1;
  rec(0, bound);
  return count;
}

int howe_dimension_sum_sp(int n) {
  if (n % 2) throw std::invalid_argument("symplectic case needs even n");
  int total = 0;
  for (int k = 0; k <= n / 2; ++k)
    total += (n / 2 - k + 1) * static_cast<int>(binom(n, k) - binom(n, k - 2));
  return total;
}

}  // namespace xgn::modules
