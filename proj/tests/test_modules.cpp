#include "doctest.h"
#include "xgn/modules.hpp"

using namespace xgn;
using namespace xgn::modules;
using fock::FockSpace;

namespace {

RatFunc rf(std::vector<BigRat> num, std::vector<BigRat> den) { return RatFunc(UPoly(num), UPoly(den)); }

// every numerator coefficient commutes with op (denominators are scalar)
bool commutes(const Realization& X, const SpMat& op) {
  for (int i = 0; i < X.n(); ++i)
    for (int j = 0; j < X.n(); ++j)
      for (auto& c : X.M.num(i, j).c)
        if (!commutator(c, op).is_zero()) return false;
  return true;
}

// delta_ij + ops[i*n+j] / (u + shift)
Realization first_order(const Pairing& pr, const std::vector<SpMat>& ops, const BigRat& shift, Flavor fl) {
  Realization r = yangian::tau_shift(yangian::eval_hom(pr, ops), -shift);
  r.flavor = fl;
  return r;
}

Realization bump(Realization X) {
  OpMatrix b(X.n(), X.n(), X.dim());
  OpPoly p(X.dim());
  p.c = {SpMat::unit(X.dim(), X.dim(), 0, X.dim() - 1)};
  b.num(0, X.n() - 1) = p;
  b.set_den(UPoly::x());
  X.M = X.M + b;
  return X;
}

}  // namespace

TEST_CASE("P modules on the Grassmann algebra") {
  BigRat z = rat(1, 3);
  auto pr1 = Pairing::standard(1, Case::Orth);
  auto P1 = p_module(pr1, z);
  CHECK(P1.M.scalar_entry(0, 0, 0, 0) == RatFunc(1));
  CHECK(P1.M.scalar_entry(0, 0, 1, 1) == rf({rat(4, 3), 1}, {rat(1, 3), 1}));
  CHECK(P1.M.scalar_entry(0, 0, 0, 1) == RatFunc(0));

  for (Case k : {Case::Orth, Case::Symp}) {
    auto pr = Pairing::standard(2, k);
    // P'_z from the explicit entries delta - theta_i theta_j x_{j~} d_{i~} / (u - z)
    FockSpace fs(1, 2);
    std::vector<SpMat> ops;
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j)
        ops.push_back(fock::creation(fs, 1, pr.tilde(j)) * fock::annihilation(fs, 1, pr.tilde(i)) *
                      BigRat(-pr.theta(i) * pr.theta(j)));
    CHECK(p_prime_module(pr, z).equals(first_order(pr, ops, -z, Flavor::T)));
    CHECK(yangian::check_rtt(p_module(pr, z)).pass);
    CHECK(yangian::check_rtt(p_prime_module(pr, z)).pass);
    CHECK(p_prime_push_check(pr, z));
    CHECK(p_prime_push_check(pr, z, 1));
    CHECK(p_prime_push_check(pr, z, 0));
    FockSpace f1(1, 2);
    SpMat W = fock::varpi_conjugator(f1, pr, {-1});
    auto wrong = yangian::scalar_twist(conjugate(p_module(pr, -z), W, W.transpose()),
                                       RatFunc(UPoly::linear(1, -z - 1), UPoly::linear(1, -z)));
    CHECK_FALSE(p_prime_module(pr, z).equals(wrong));
  }
  auto pr3 = Pairing::standard(3, Case::Orth);
  CHECK(p_prime_push_check(pr3, rat(2, 5)));
  for (int N = -3; N <= 3; ++N) {
    auto B = p_block(pr3, z, N);
    CHECK(B.dim() == (N == 0 ? 1 : (std::abs(N) == 1 || std::abs(N) == 2 ? 3 : 1)));
    CHECK(yangian::check_rtt(B).pass);
  }
  CHECK(p_block(pr3, z, 0).equals(yangian::identity_realization(pr3, Flavor::T, 1)));
  CHECK(degree_submodule(p_module(pr3, z), 0).equals(yangian::identity_realization(pr3, Flavor::T, 1)));
  CHECK(degree_submodule(p_module(pr3, z), 2).equals(p_block(pr3, z, 2)));
  CHECK_THROWS(p_block(pr3, z, 4));
}

TEST_CASE("alpha_l bimodule") {
  auto pr = Pairing::standard(2, Case::Orth);
  // l = 1, trivial U: delta + x_i d_j / u
  CHECK(alpha_l(pr, gl_trivial(1)).equals(p_module(pr, 0)));

  GlRep U = gl_defining(2);
  auto A = alpha_l(pr, U);
  CHECK(A.dim() == 2 * 16);
  CHECK(yangian::check_rtt(A).pass);
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b) CHECK(commutes(A, gl_diag_action(pr, U, a, b)));
  CHECK_FALSE(commutes(A, kron(SpMat::identity(2), fock::creation(FockSpace(2, 2), 1, 1))));
  auto co = A.M.laurent(1);
  FockSpace fs(2, 2);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      SpMat s(16, 16);
      for (int c = 1; c <= 2; ++c) s += fock::creation(fs, c, i) * fock::annihilation(fs, c, j);
      CHECK(co[1][(i - 1) * 2 + j - 1] == kron(SpMat::identity(2), s));
    }
  CHECK_FALSE(yangian::check_rtt(bump(alpha_l(pr, gl_trivial(1)))).pass);
}

TEST_CASE("Z series and the Harish-Chandra image") {
  OpMatrix Z1 = z_series(gl_defining(1));
  CHECK(Z1.scalar_entry(0, 0, 0, 0) == rf({1}, {1, 1}));
  CHECK(z_series(gl_trivial(1)).scalar_entry(0, 0, 0, 0) == rf({1}, {0, 1}));
  CHECK(hc_scalar({1}) == rf({2, 1}, {1, 1}));
  // trivial l = 2: (1 + 1/(u+1)) (1 + 1/u)
  CHECK(hc_scalar({0, 0}) == rf({2, 3, 1}, {0, 1, 1}));
  for (auto U : {gl_trivial(2), gl_defining(2), gl_dual(2), gl_defining(3), gl_exterior(3, 2), gl_dual(1)}) {
    CHECK(hc_check(U));
    CHECK(resolvent_transpose_check(U));
    auto lead = z_series(U).laurent(1);
    CHECK(lead[1][0] == SpMat::scalar(U.dim, U.l));
  }
  GlRep bad = gl_defining(2);
  bad.highest_weight = {0, 1};
  CHECK_FALSE(hc_check(bad));
}

TEST_CASE("f_m resolvent against its Neumann series") {
  for (Case k : {Case::Orth, Case::Symp})
    for (int m = 1; m <= 2; ++m) {
      FmData f(m, k);
      FmRep V = fm_defining(f);
      CHECK(is_representation(V));
      const int K = 8, d = V.dim, w = f.dim2();
      auto grid = f_resolvent(V).laurent(K);
      SpMat B = V.block_matrix();
      SpMat power = SpMat::identity(w * d);  // (-F)^{t-1} is the u^{-t} coefficient
      for (int t = 1; t <= K; ++t) {
        for (int p = 0; p < w; ++p)
          for (int q = 0; q < w; ++q) {
            std::vector<int> rows, cols;
            for (int x = 0; x < d; ++x) {
              rows.push_back(p * d + x);
              cols.push_back(q * d + x);
            }
            CHECK(grid[t][p * w + q] == power.submatrix(rows, cols));
          }
        power = power * (-B);
      }
      CHECK(grid[0][0].is_zero());
    }
  CHECK(is_representation(fm_fock(FmData(1, Case::Symp), 2)));
  CHECK(is_representation(fm_fock(FmData(2, Case::Orth), 1)));
}

TEST_CASE("beta_m bimodule") {
  for (Case k : {Case::Orth, Case::Symp}) {
    const int s = liealg::pm(k);
    auto pr = Pairing::standard(2, k);
    for (int m = 1; m <= 2; ++m) {
      FmData f(m, k);
      // trivial V: delta + sum_c p_ci q_cj / (u +- 1/2 - m)
      FockSpace fs(m, 2);
      std::vector<SpMat> ops;
      for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
          SpMat o(fs.dim(), fs.dim());
          for (int c : f.indices()) o += fock::p_gen(fs, pr, c, i) * fock::q_gen(fs, pr, c, j);
          ops.push_back(o);
        }
      Realization expect = first_order(pr, ops, rat(s, 2) - m, Flavor::S);
      auto B0 = beta_m(pr, fm_trivial(f));
      CHECK(B0.equals(expect));
      CHECK(yangian::check_reflection(B0).pass);
    }
    FmData f(1, k);
    FmRep V = fm_defining(f);
    auto B = beta_m(pr, V);
    CHECK(yangian::check_reflection(B).pass);
    CHECK(yangian::check_reflection_blockwise(B));
    for (auto [a, b] : f.basis()) CHECK(commutes(B, fm_diag_action(pr, V, a, b)));
    auto O = yangian::compute_O(B);
    CHECK((O * O.substitute(-1, 0)).equals(OpMatrix::identity(1, B.dim())));
    CHECK_FALSE(yangian::check_reflection(bump(B)).pass);
  }
}

TEST_CASE("transpose identity for the f_m resolvent and the W product") {
  for (Case k : {Case::Orth, Case::Symp})
    for (int m = 1; m <= 2; ++m) {
      FmData f(m, k);
      for (auto V : {fm_trivial(f), fm_defining(f)}) {
        CHECK(f_transpose_check(V));
        CHECK(w_product_check(V));
      }
      FmRep W = fm_defining(f);
      CHECK(w_series(fm_trivial(f)).scalar_entry(0, 0, 0, 0) == rf({2 * m}, {0, 1}));
      CHECK(w_series(W).laurent(1)[1][0] == SpMat::scalar(W.dim, 2 * m));
      // breaking the representation breaks the identity
      W.F[0] = W.F[0] * BigRat(2);
      CHECK_FALSE(f_transpose_check(W));
    }
  CHECK(f_transpose_check(fm_fock(FmData(1, Case::Symp), 2)));
  CHECK(w_product_check(fm_fock(FmData(1, Case::Orth), 2)));
}

TEST_CASE("W-tilde and the symmetry of beta-tilde") {
  for (Case k : {Case::Orth, Case::Symp})
    for (int m = 1; m <= 2; ++m) {
      FmData f(m, k);
      auto w = wtilde_coefficients(fm_defining(f), 6);
      CHECK(w[0] == SpMat::identity(2 * m));
      CHECK(w[1] == SpMat::scalar(2 * m, -m));
      for (int e = 2; e <= 6; e += 2) CHECK(w[e].is_zero());
    }
  for (Case k : {Case::Orth, Case::Symp}) {
    auto pr = Pairing::standard(2, k);
    FmData f(1, k);
    FmRep V = fm_defining(f);
    CHECK(beta_tilde_symmetry_check(pr, V, 10));
    auto st = beta_tilde(pr, V, 2);
    FockSpace fs(1, 2);
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j)
        CHECK(st[1][(i - 1) * 2 + j - 1] == kron(SpMat::identity(2), liealg::gn_action(fs, pr, i, j)));
  }
}

TEST_CASE("F_delta twists") {
  auto pr = Pairing::standard(2, Case::Orth);
  FmData f(2, Case::Orth);
  FmRep V = fm_defining(f);
  CHECK(f_delta(pr, V, {1, 1}).equals(beta_m(pr, V)));
  auto F = f_delta(pr, V, {1, -1});
  CHECK(yangian::check_reflection(F).pass);
  CHECK_FALSE(F.equals(beta_m(pr, V)));
  FockSpace fs(2, 2);
  CHECK(fock::varpi_conjugator(fs, pr, {1, -1}) == weyl::braid_letter_on_clifford(fs, pr, 2));
}

TEST_CASE("tensor models of coinvariants") {
  const int n = 2;
  Weight mu{rat(5, 7)};
  for (int nu = 0; nu <= 2; ++nu) {
    Weight lambda{mu[0] + 1 - nu};
    auto M = verma_model(mu, lambda, Case::Symp, n);
    CHECK_FALSE(M.zero);
    CHECK(M.real.dim() == (nu == 1 ? 2 : 1));
    CHECK(yangian::check_reflection(M.real).pass);
    CHECK(M.twist == rf({rat(-5, 7) - rat(1, 2), 1}, {rat(-5, 7) - rat(3, 2), 1}));
    for (auto& g : M.grading) CHECK(g == Weight{-lambda[0]});
    CHECK(siverma_model(mu, lambda, weyl::SignedPerm::identity(1), Case::Symp, n).real.equals(M.real));
    auto S = siverma_model(mu, lambda, weyl::SignedPerm::generator(1, 1), Case::Symp, n);
    auto pr = Pairing::standard(n, Case::Symp);
    CHECK(S.real.equals(yangian::sym_from_T(p_block(pr, mu[0] - rat(1, 2) + 1, -nu))));
    CHECK(S.twist == M.twist);
  }
  CHECK(verma_model(mu, {mu[0] - 2}, Case::Symp, n).zero);
  CHECK(verma_model(mu, {mu[0] + rat(1, 2)}, Case::Symp, n).zero);
  CHECK_THROWS_AS(verma_model({rat(1, 2)}, {rat(1, 2)}, Case::Symp, n), GenericityError);
  CHECK_THROWS_AS(verma_model({rat(1, 3), rat(4, 3)}, {0, 0}, Case::Orth, n), GenericityError);
  CHECK_THROWS_AS(verma_model({rat(1, 3), rat(2, 3)}, {0, 0}, Case::Orth, n), GenericityError);

  Weight mu2{rat(5, 7), rat(2, 11)};
  for (Case k : {Case::Orth, Case::Symp}) {
    Weight lambda{mu2[0], mu2[1]};  // nu = (1, 1)
    auto M = verma_model(mu2, lambda, k, n);
    CHECK(M.real.dim() == 4);
    CHECK(yangian::check_reflection(M.real).pass);
    CHECK(yangian::check_symmetry(M.real));
    for (auto& sg : weyl::all_perms(2)) {
      auto S = siverma_model(mu2, lambda, sg, k, n);
      CHECK(S.twist == M.twist);
      CHECK(S.real.dim() == 4);
    }
  }
  std::vector<BigRat> v(16, 0);
  v[0b1001] = 3;  // x_{11} x_{22}: row 1 mask 01, row 2 mask 10
  auto t = fock_to_tensor(v, 2, 2, {1, 1});
  CHECK(t == std::vector<BigRat>{0, 3, 0, 0});
  CHECK_THROWS(fock_to_tensor(v, 2, 2, {2, 0}));
}

TEST_CASE("twisted tensor product") {
  auto pr = Pairing::standard(2, Case::Orth);
  FmData f(1, Case::Orth);
  FmRep V = fm_defining(f);
  GlRep U = gl_defining(1);
  auto X = twisted_tensor(pr, V, U);
  CHECK(X.dim() == 2 * 4 * 1 * 4);
  CHECK(yangian::check_reflection(X).pass);
  for (auto [a, b] : f.basis()) CHECK(commutes(X, twisted_fm_action(pr, V, U, a, b)));
  CHECK(commutes(X, twisted_gl_action(pr, V, U, 1, 1)));
}

TEST_CASE("Olshanski realization") {
  CHECK(olshanski_f(1, 2, Case::Symp) == rf({rat(-5, 2), 1}, {rat(-3, 2), 1}));
  auto pr = Pairing::standard(2, Case::Orth);
  FockSpace fs(1, 2);
  std::vector<SpMat> g;
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) g.push_back(liealg::gn_action(fs, pr, i, j));
  CHECK(olshanski_gamma(1, 2, 0, Case::Orth).equals(yangian::pi_n(pr, g)));
  CHECK(olshanski_check(1, 2, 0, Case::Orth).pass());
  auto rep = olshanski_check(1, 2, 1, Case::Orth);
  CHECK(rep.routes_agree);
  CHECK(rep.equal_to_beta);
  CHECK(rep.defect_entries == 0);
  CHECK(yangian::check_reflection(olshanski_gamma(1, 2, 1, Case::Orth)).pass);
  CHECK_THROWS(olshanski_gamma(1, 2, 1, Case::Symp));
}

TEST_CASE("Howe duality counts") {
  CHECK(howe_partition_count(1, 2, Case::Symp) == 2);
  CHECK(howe_commutant_dimension(1, 2, Case::Symp) == 2);
  CHECK(howe_dimension_sum_sp(2) == 4);
  CHECK(howe_partition_count(1, 4, Case::Symp) == 3);
  CHECK(howe_commutant_dimension(1, 4, Case::Symp) == 3);
  for (int n = 2; n <= 8; n += 2) CHECK(howe_dimension_sum_sp(n) == (1 << n));
  CHECK(howe_commutant_dimension(0, 2, Case::Symp) == 1);
  CHECK(howe_partition_count(2, 2, Case::Symp) == 3);
}
