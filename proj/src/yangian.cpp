#include "xgn/yangian.hpp"

#include <stdexcept>

#include "json.hpp"

namespace xgn::yangian {

namespace {

// transposition P and its twisted version Q on C^n (x) C^n, index (a,b) -> a*n+b
SpMat swap_op(int n) {
  SpMat P(n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) P.add_to(i * n + j, j * n + i, 1);
  return P;
}

SpMat q_op(const Pairing& pr) {
  const int n = pr.n;
  SpMat Q(n * n, n * n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      Q.add_to((i - 1) * n + pr.tilde(i) - 1, (j - 1) * n + pr.tilde(j) - 1, pr.theta(i) * pr.theta(j));
  return Q;
}

OpMatrix u_minus(const SpMat& X) {
  OpMatrix m(1, 1, X.rows());
  OpPoly p(X.rows());
  p.c = {-X, SpMat::identity(X.rows())};
  m.num(0, 0) = p;
  return m;
}

// distinct sample points, away from small integers and half integers
BigRat grid_point(int k, bool second) {
  return second ? rat(-3 * k - 1, 7) : rat(5 * k + 2, 3);
}

void require_flavor(const Realization& X, Flavor f, const char* what) {
  if (X.flavor != f) throw std::invalid_argument(std::string(what) + ": wrong realization flavor");
  if (X.pairing.n != X.n()) throw std::invalid_argument(std::string(what) + ": pairing size mismatch");
}

Realization with(const Realization& X, OpMatrix M, const std::string& name) {
  Realization r = X;
  r.M = std::move(M);
  r.name = name + "(" + X.name + ")";
  return r;
}

}  // namespace

std::string CheckReport::to_json() const {
  nlohmann::json j;
  j["pass"] = pass;
  j["degree_bound"] = degree_bound;
  auto pts = nlohmann::json::array();
  for (auto& [u, v] : points_used) pts.push_back({to_string(u), to_string(v)});
  j["points_used"] = pts;
  auto d = nlohmann::json::array();
  for (auto& e : defects) d.push_back({{"i", e.i + 1}, {"k", e.k + 1}, {"j", e.j + 1}, {"l", e.l + 1},
                                       {"u", to_string(e.u)}, {"v", to_string(e.v)}});
  j["defect_entries"] = d;
  return j.dump();
}

OpMatrix r_matrix(int n) { return u_minus(swap_op(n)); }
OpMatrix r_prime_matrix(const Pairing& pr) { return u_minus(q_op(pr)); }

CheckReport check_rtt(const Realization& T, int max_defects) {
  require_flavor(T, Flavor::T, "check_rtt");
  const int n = T.n(), d = T.dim();
  CheckReport rep;
  const int D = std::max(T.M.num_deg(), 0) + 1;
  rep.degree_bound = D;
  auto at = [n](int i, int j) { return i * n + j; };
  for (int a = 0; a <= D; ++a) {
    BigRat u = grid_point(a, false);
    auto Nu = T.M.eval_num(u);
    for (int b = 0; b <= D; ++b) {
      BigRat v = grid_point(b, true);
      rep.points_used.push_back({u, v});
      auto Nv = T.M.eval_num(v);
      // products N(u)_x N(v)_y and N(v)_y N(u)_x
      std::vector<SpMat> uv(n * n * n * n), vu(n * n * n * n);
      for (int x = 0; x < n * n; ++x)
        for (int y = 0; y < n * n; ++y) {
          if (Nu[x].is_zero() || Nv[y].is_zero()) {
            uv[x * n * n + y] = vu[x * n * n + y] = SpMat(d, d);
            continue;
          }
          uv[x * n * n + y] = Nu[x] * Nv[y];
          vu[x * n * n + y] = Nv[y] * Nu[x];
        }
      auto UV = [&](int x, int y) -> const SpMat& { return uv[x * n * n + y]; };
      auto VU = [&](int y, int x) -> const SpMat& { return vu[x * n * n + y]; };
      BigRat h = u - v;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) {
              SpMat lhs = UV(at(i, j), at(k, l)) * h - UV(at(k, j), at(i, l));
              SpMat rhs = VU(at(k, l), at(i, j)) * h - VU(at(k, j), at(i, l));
              if (lhs != rhs) {
                rep.pass = false;
                if (static_cast<int>(rep.defects.size()) < max_defects) rep.defects.push_back({i, k, j, l, u, v});
              }
            }
    }
  }
  return rep;
}

CheckReport check_reflection(const Realization& S, int max_defects) {
  require_flavor(S, Flavor::S, "check_reflection");
  const Pairing& pr = S.pairing;
  const int n = S.n(), d = S.dim();
  CheckReport rep;
  const int D = std::max(S.M.num_deg(), 0) + 2;
  rep.degree_bound = D;
  auto at = [n](int i, int j) { return i * n + j; };
  auto til = [&](int i) { return pr.tilde(i + 1) - 1; };
  auto th = [&](int i) { return pr.theta(i + 1); };
  for (int a = 0; a <= D; ++a) {
    BigRat u = grid_point(a, false);
    auto Nu = S.M.eval_num(u);
    for (int b = 0; b <= D; ++b) {
      BigRat v = grid_point(b, true);
      rep.points_used.push_back({u, v});
      auto Nv = S.M.eval_num(v);
      std::vector<SpMat> uv(n * n * n * n), vu(n * n * n * n);
      for (int x = 0; x < n * n; ++x)
        for (int y = 0; y < n * n; ++y) {
          if (Nu[x].is_zero() || Nv[y].is_zero()) {
            uv[x * n * n + y] = vu[x * n * n + y] = SpMat(d, d);
            continue;
          }
          uv[x * n * n + y] = Nu[x] * Nv[y];
          vu[x * n * n + y] = Nv[y] * Nu[x];
        }
      // uv(x, y) = S_x(u) S_y(v); vu(y, x) = S_y(v) S_x(u)
      auto UV = [&](int x, int y) -> const SpMat& { return uv[x * n * n + y]; };
      auto VU = [&](int y, int x) -> const SpMat& { return vu[x * n * n + y]; };
      BigRat w = -u - v, h = u - v;
      // left side: R(u-v) S1(u) R'(-u-v) S2(v), right side: S2(v) R'(-u-v) S1(u) R(u-v)
      auto M1 = [&](int i, int k, int j, int l) {
        return UV(at(i, j), at(k, l)) * w - UV(at(i, til(k)), at(til(j), l)) * BigRat(th(til(k)) * th(j));
      };
      auto M2 = [&](int i, int k, int j, int l) {
        return VU(at(k, l), at(i, j)) * w - VU(at(k, til(i)), at(til(l), j)) * BigRat(th(i) * th(til(l)));
      };
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
          for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l) {
              SpMat lhs = M1(i, k, j, l) * h - M1(k, i, j, l);
              SpMat rhs = M2(i, k, j, l) * h - M2(i, k, l, j);
              if (lhs != rhs) {
                rep.pass = false;
                if (static_cast<int>(rep.defects.size()) < max_defects) rep.defects.push_back({i, k, j, l, u, v});
              }
            }
    }
  }
  return rep;
}

namespace {

// sum_{ij} E_ij (x) 1 (x) X_ij or 1 (x) E_ij (x) X_ij on C^n (x) C^n (x) V
SpMat embed(const std::vector<SpMat>& X, int n, int slot) {
  const int d = X.at(0).rows();
  SpMat r(n * n * d, n * n * d);
  SpMat one = SpMat::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (X[i * n + j].is_zero()) continue;
      SpMat e = SpMat::unit(n, n, i, j);
      r += kron(slot == 1 ? kron(e, one) : kron(one, e), X[i * n + j]);
    }
  return r;
}

SpMat scalar_block(const SpMat& A, int d) { return kron(A, SpMat::identity(d)); }

}  // namespace

bool check_rtt_blockwise(const Realization& T) {
  require_flavor(T, Flavor::T, "check_rtt_blockwise");
  const int n = T.n(), d = T.dim();
  const int D = std::max(T.M.num_deg(), 0) + 1;
  SpMat P = swap_op(n), I = SpMat::identity(n * n);
  for (int a = 0; a <= D; ++a)
    for (int b = 0; b <= D; ++b) {
      BigRat u = grid_point(a, false), v = grid_point(b, true);
      SpMat T1 = embed(T.M.eval_num(u), n, 1), T2 = embed(T.M.eval_num(v), n, 2);
      SpMat R = scalar_block(I * (u - v) - P, d);
      if (R * T1 * T2 != T2 * T1 * R) return false;
    }
  return true;
}

bool check_reflection_blockwise(const Realization& S) {
  require_flavor(S, Flavor::S, "check_reflection_blockwise");
  const int n = S.n(), d = S.dim();
  const int D = std::max(S.M.num_deg(), 0) + 2;
  SpMat P = swap_op(n), Q = q_op(S.pairing), I = SpMat::identity(n * n);
  for (int a = 0; a <= D; ++a)
    for (int b = 0; b <= D; ++b) {
      BigRat u = grid_point(a, false), v = grid_point(b, true);
      SpMat S1 = embed(S.M.eval_num(u), n, 1), S2 = embed(S.M.eval_num(v), n, 2);
      SpMat R = scalar_block(I * (u - v) - P, d), Rp = scalar_block(I * (-u - v) - Q, d);
      if (R * S1 * Rp * S2 != S2 * Rp * S1 * R) return false;
    }
  return true;
}

Realization identity_realization(const Pairing& pr, Flavor fl, int dim) {
  Realization r;
  r.flavor = fl;
  r.pairing = pr;
  r.M = OpMatrix::identity(pr.n, dim);
  r.name = "identity";
  return r;
}

Realization eval_hom(const Pairing& pr, const std::vector<SpMat>& gl) {
  const int n = pr.n;
  if (static_cast<int>(gl.size()) != n * n) throw std::invalid_argument("eval_hom needs n^2 operators");
  const int d = gl[0].rows();
  Realization r;
  r.flavor = Flavor::T;
  r.pairing = pr;
  r.M = OpMatrix(n, n, d);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      OpPoly p(d);
      p.c = {gl[i * n + j], i == j ? SpMat::identity(d) : SpMat(d, d)};
      p.trim();
      r.M.num(i, j) = p;
    }
  r.M.set_den(UPoly::x());
  r.M = r.M.reduced();
  r.name = "eval";
  return r;
}

Realization pi_n(const Pairing& pr, const std::vector<SpMat>& g) {
  const int n = pr.n;
  if (static_cast<int>(g.size()) != n * n) throw std::invalid_argument("pi_n needs n^2 operators");
  const int d = g[0].rows();
  BigRat shift = rat(liealg::pm(pr.kind), 2);
  Realization r;
  r.flavor = Flavor::S;
  r.pairing = pr;
  r.M = OpMatrix(n, n, d);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      OpPoly p(d);
      SpMat c0 = g[i * n + j];
      if (i == j) c0 += SpMat::scalar(d, shift);
      p.c = {c0, i == j ? SpMat::identity(d) : SpMat(d, d)};
      p.trim();
      r.M.num(i, j) = p;
    }
  r.M.set_den(UPoly::linear(1, shift));
  r.M = r.M.reduced();
  r.name = "pi_n";
  return r;
}

Realization tau_shift(const Realization& T, const BigRat& z) {
  return with(T, T.M.substitute(1, -z), "tau");
}

Realization scalar_twist(const Realization& X, const RatFunc& f) {
  if (f.num().deg() != f.den().deg() || f.num().lead() != 1)
    throw MathError("scalar twist must have leading term 1");
  return with(X, X.M.scaled(f).reduced(), "twist");
}

Realization transpose_prime(const Realization& X) {
  const Pairing& pr = X.pairing;
  const int n = X.n();
  OpMatrix M(n, n, X.dim());
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      OpPoly p = X.M.num(pr.tilde(j) - 1, pr.tilde(i) - 1);
      if (pr.theta(i) * pr.theta(j) < 0) p = p * UPoly(-1);
      M.num(i - 1, j - 1) = p;
    }
  M.set_den(X.M.den());
  return with(X, M, "transpose");
}

Realization twist_auto(const Realization& T) {
  Realization r = transpose_prime(T);
  r.M = r.M.substitute(-1, 0);
  r.name = "twist(" + T.name + ")";
  return r;
}

Realization matrix_inverse(const Realization& X) { return with(X, X.M.inverse().reduced(), "inverse"); }

Realization tin(const Realization& T) {
  return with(T, T.M.substitute(-1, 0).inverse().reduced(), "tin");
}

Realization omega_n(const Realization& S) {
  require_flavor(S, Flavor::S, "omega_n");
  return with(S, S.M.substitute(-1, rat(-S.n(), 2)).inverse().reduced(), "omega");
}

Realization sym_from_T(const Realization& T) {
  require_flavor(T, Flavor::T, "sym_from_T");
  Realization r = with(T, (twist_auto(T).M * T.M).reduced(), "sym");
  r.flavor = Flavor::S;
  return r;
}

Realization coproduct(const Realization& A, const Realization& B) {
  if (A.n() != B.n()) throw std::invalid_argument("coproduct: mismatched n");
  Realization r = A;
  r.M = coproduct_product(A.M, B.M).reduced();
  r.name = "coproduct(" + A.name + "," + B.name + ")";
  return r;
}

Realization coaction(const Realization& S, const Realization& T) {
  if (S.n() != T.n()) throw std::invalid_argument("coaction: mismatched n");
  require_flavor(S, Flavor::S, "coaction");
  require_flavor(T, Flavor::T, "coaction");
  const int dv = S.dim();
  // sum_{g,h} S_gh (x) T'(-u)_{ig} T_hj(u) = (1 (x) T'(-u)) (S (x)_coproduct T)
  OpMatrix left = twist_auto(T).M.map_ops([dv](const SpMat& a) { return kron(SpMat::identity(dv), a); },
                                           dv * T.dim());
  Realization r = S;
  r.M = (left * coproduct_product(S.M, T.M)).reduced();
  r.name = "coaction(" + S.name + "," + T.name + ")";
  return r;
}

bool check_symmetry(const Realization& S) {
  require_flavor(S, Flavor::S, "check_symmetry");
  OpMatrix Sm = S.M.substitute(-1, 0);
  RatFunc half_inv(UPoly(rat(liealg::pm(S.pairing.kind), 2)), UPoly::x());
  OpMatrix rhs = Sm + (S.M - Sm).scaled(half_inv);
  return transpose_prime(S).M.equals(rhs);
}

OpMatrix compute_O(const Realization& S) {
  require_flavor(S, Flavor::S, "compute_O");
  const Pairing& pr = S.pairing;
  const int n = S.n(), d = S.dim();
  OpMatrix Sinv = S.M.substitute(-1, 0).inverse().reduced();
  // A_{j,e} = theta_{e~} S_{e~ j}(u)
  OpMatrix A(n, n, d);
  for (int j = 1; j <= n; ++j)
    for (int e = 1; e <= n; ++e) {
      OpPoly p = S.M.num(pr.tilde(e) - 1, j - 1);
      if (pr.theta(pr.tilde(e)) < 0) p = p * UPoly(-1);
      A.num(j - 1, e - 1) = p;
    }
  A.set_den(S.M.den());
  OpMatrix X = A * Sinv;
  OpMatrix B = S.M * Sinv;
  // Y_jl = 2u X_jl - theta_{j~} B_{j~ l}
  OpMatrix Bp(n, n, d);
  for (int j = 1; j <= n; ++j)
    for (int l = 1; l <= n; ++l) {
      OpPoly p = B.num(pr.tilde(j) - 1, l - 1);
      if (pr.theta(pr.tilde(j)) < 0) p = p * UPoly(-1);
      Bp.num(j - 1, l - 1) = p;
    }
  Bp.set_den(B.den());
  OpMatrix Y = (X.scaled(RatFunc(UPoly::linear(2, 0))) - Bp).reduced();
  // Y_jl = (2u -+ 1) O theta_j delta_{l j~}
  RatFunc scale(UPoly(1), UPoly::linear(1, rat(-liealg::pm(pr.kind), 2)) );
  OpMatrix O = Y.sub_block(0, pr.tilde(1) - 1, 1, 1).scaled(scale * RatFunc(rat(pr.theta(1), 2))).reduced();
  for (int j = 1; j <= n; ++j)
    for (int l = 1; l <= n; ++l) {
      OpMatrix y = Y.sub_block(j - 1, l - 1, 1, 1);
      if (l == pr.tilde(j)) {
        if (!y.scaled(scale * RatFunc(rat(pr.theta(j), 2))).equals(O))
          throw MathError("central series: inconsistent diagonal entries");
      } else if (!y.is_zero()) {
        throw MathError("central series: nonzero off-pattern entry");
      }
    }
  return O;
}

std::vector<std::vector<SpMat>> extract_coefficients(const Realization& X, int K) { return X.M.laurent(K); }

}  // namespace xgn::yangian
