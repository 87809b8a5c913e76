#include "doctest.h"
#include "xgn/liealg.hpp"
#include "xgn/yangian.hpp"

using namespace xgn;
using namespace xgn::yangian;

namespace {

std::vector<SpMat> gl_defining(int n) {
  std::vector<SpMat> e;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) e.push_back(SpMat::unit(n, n, i, j));
  return e;
}

std::vector<SpMat> gn_defining(const Pairing& pr) {
  std::vector<SpMat> g;
  for (int i = 1; i <= pr.n; ++i)
    for (int j = 1; j <= pr.n; ++j) g.push_back(liealg::gn_matrix(pr, i, j));
  return g;
}

Realization perturbed(Realization X) {
  OpMatrix bump(X.n(), X.n(), X.dim());
  OpPoly p(X.dim());
  p.c = {SpMat::unit(X.dim(), X.dim(), 0, X.dim() - 1)};
  bump.num(0, X.n() - 1) = p;
  bump.set_den(UPoly::x());
  X.M = X.M + bump;
  return X;
}

RatFunc rf(std::vector<BigRat> num, std::vector<BigRat> den) { return RatFunc(UPoly(num), UPoly(den)); }

std::vector<Case> cases_for(int n) {
  if (n % 2) return {Case::Orth};
  return {Case::Orth, Case::Symp};
}

}  // namespace

TEST_CASE("R-matrix unitarity") {
  for (int n = 1; n <= 4; ++n) {
    OpMatrix R = r_matrix(n);
    OpMatrix one = OpMatrix::identity(1, n * n);
    // R(u) R(-u) = 1 - u^2
    CHECK((R * R.substitute(-1, 0)).equals(one.scaled(rf({1, 0, -1}, {1}))));
    for (Case k : cases_for(n)) {
      auto pr = Pairing::standard(n, k);
      OpMatrix Rp = r_prime_matrix(pr);
      CHECK((Rp * Rp.substitute(-1, n)).equals(one.scaled(rf({0, n, -1}, {1}))));
    }
  }
}

TEST_CASE("evaluation homomorphism satisfies RTT") {
  for (int n = 1; n <= 4; ++n) {
    auto pr = Pairing::standard(n, Case::Orth);
    auto T = eval_hom(pr, gl_defining(n));
    auto rep = check_rtt(T);
    CHECK(rep.pass);
    CHECK(rep.degree_bound == 2);
    CHECK(rep.points_used.size() == 9);
    CHECK(check_rtt_blockwise(T));
    auto bad = perturbed(T);
    if (n > 1) {
      CHECK_FALSE(check_rtt(bad).pass);
      CHECK_FALSE(check_rtt_blockwise(bad));
    }
  }
  auto pr = Pairing::standard(2, Case::Orth);
  auto T = eval_hom(pr, gl_defining(2));
  CHECK(T.M.scalar_entry(0, 1, 1, 0) == RatFunc(0));
  CHECK(T.M.scalar_entry(0, 1, 0, 1) == rf({1}, {0, 1}));
  CHECK(T.M.scalar_entry(0, 0, 0, 0) == rf({1, 1}, {0, 1}));
  auto triv = eval_hom(pr, std::vector<SpMat>(4, SpMat(1, 1)));
  CHECK(triv.equals(identity_realization(pr, Flavor::T, 1)));
  auto co = extract_coefficients(T, 3);
  CHECK(co[1][1] == SpMat::unit(2, 2, 0, 1));
  CHECK(co[2][1].is_zero());
  CHECK(co[3][0].is_zero());
}

TEST_CASE("automorphisms of the Yangian preserve RTT") {
  auto pr = Pairing::standard(2, Case::Symp);
  auto T = eval_hom(pr, gl_defining(2));
  CHECK(tau_shift(T, 0).equals(T));
  CHECK(tau_shift(tau_shift(T, rat(1, 5)), rat(1, 5)).equals(tau_shift(T, rat(2, 5))));
  auto Tz = tau_shift(T, rat(1, 3));
  CHECK(check_rtt(Tz).pass);
  RatFunc f = rf({rat(-5, 2), 1}, {rat(-3, 2), 1});
  CHECK(scalar_twist(T, RatFunc(1)).equals(T));
  CHECK(check_rtt(scalar_twist(Tz, f)).pass);
  CHECK(scalar_twist(scalar_twist(T, f), f).equals(scalar_twist(T, f * f)));
  CHECK_THROWS_AS(scalar_twist(T, RatFunc(2)), MathError);
  auto tw = twist_auto(Tz);
  CHECK(check_rtt(tw).pass);
  CHECK(twist_auto(tw).equals(Tz));
  auto inv = matrix_inverse(Tz);
  CHECK((Tz.M * inv.M).equals(OpMatrix::identity(2, 2)));
  CHECK(tin(tin(Tz)).equals(Tz));
  CHECK(check_rtt(tin(Tz)).pass);
  auto P = coproduct(Tz, tau_shift(T, rat(2, 7)));
  CHECK(check_rtt(P).pass);
  CHECK(check_rtt_blockwise(P));
  auto one = identity_realization(pr, Flavor::T, 1);
  CHECK(coproduct(Tz, one).equals(Tz));
  auto A = coproduct(coproduct(Tz, T), Tz), B = coproduct(Tz, coproduct(T, Tz));
  CHECK(A.equals(B));
}

TEST_CASE("transpose relative to the form") {
  auto pr = Pairing::standard(2, Case::Orth);
  auto T = eval_hom(pr, gl_defining(2));
  auto Tp = transpose_prime(T);
  // orth, n = 2: (T')_{11} = T_{22}
  CHECK(Tp.M.scalar_entry(0, 0, 1, 1) == T.M.scalar_entry(1, 1, 1, 1));
  CHECK(Tp.M.scalar_entry(0, 1, 0, 1) == T.M.scalar_entry(0, 1, 0, 1));
}

TEST_CASE("pi_n realizations satisfy the reflection equation") {
  for (int n = 1; n <= 4; ++n)
    for (Case k : cases_for(n)) {
      if (n == 4 && k == Case::Orth) continue;
      auto pr = Pairing::standard(n, k);
      auto S = pi_n(pr, gn_defining(pr));
      auto rep = check_reflection(S);
      CHECK(rep.pass);
      CHECK(check_reflection_blockwise(S));
      CHECK(check_symmetry(S));
      CHECK(compute_O(S).equals(OpMatrix::identity(1, n)));
      if (n > 1) {
        auto bad = perturbed(S);
        CHECK_FALSE(check_reflection(bad).pass);
        CHECK_FALSE(check_reflection_blockwise(bad));
      }
    }
  auto pr = Pairing::standard(2, Case::Symp);
  auto S = pi_n(pr, gn_defining(pr));
  // S_11(u) = 1 + (E_11 - E_22)/(u - 1/2)
  CHECK(S.M.scalar_entry(0, 0, 0, 0) == rf({rat(1, 2), 1}, {rat(-1, 2), 1}));
  CHECK(S.M.scalar_entry(0, 0, 1, 1) == rf({rat(-3, 2), 1}, {rat(-1, 2), 1}));
  auto triv = pi_n(pr, std::vector<SpMat>(4, SpMat(1, 1)));
  CHECK(triv.equals(identity_realization(pr, Flavor::S, 1)));
}

TEST_CASE("pi_n on the Fock space through the g_n action") {
  auto pr = Pairing::standard(3, Case::Orth);
  fock::FockSpace fs(1, 3);
  std::vector<SpMat> g;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) g.push_back(liealg::gn_action(fs, pr, i, j));
  auto S = pi_n(pr, g);
  CHECK(check_reflection(S).pass);
  CHECK(check_symmetry(S));
}

TEST_CASE("operations on reflection realizations") {
  for (Case k : {Case::Orth, Case::Symp}) {
    auto pr = Pairing::standard(2, k);
    auto S = pi_n(pr, gn_defining(pr));
    auto W = omega_n(S);
    CHECK(check_reflection(W).pass);
    CHECK(omega_n(W).equals(S));
    CHECK(omega_n(identity_realization(pr, Flavor::S, 2)).equals(identity_realization(pr, Flavor::S, 2)));
    RatFunc f = rf({rat(-5, 2), 1}, {rat(-3, 2), 1});
    auto Sf = scalar_twist(S, f);
    CHECK(check_reflection(Sf).pass);
    // a twist by f with f(u) != f(-u) moves the central series to f(u)/f(-u)
    OpMatrix O = compute_O(Sf);
    RatFunc ratio = f / f.compose_linear(-1, 0);
    CHECK(O.equals(OpMatrix::identity(1, 2).scaled(ratio)));
    CHECK((O * O.substitute(-1, 0)).equals(OpMatrix::identity(1, 2)));
    CHECK_FALSE(check_symmetry(Sf));
    // sym_from_T
    auto T = eval_hom(pr, gl_defining(2));
    auto T2 = coproduct(tau_shift(T, rat(1, 3)), tau_shift(T, rat(2, 7)));
    auto Y = sym_from_T(T2);
    CHECK(check_reflection(Y).pass);
    CHECK(check_symmetry(Y));
    CHECK(compute_O(Y).equals(OpMatrix::identity(1, 4)));
    CHECK(sym_from_T(identity_realization(pr, Flavor::T, 3)).equals(identity_realization(pr, Flavor::S, 3)));
    // coaction on S (x) T
    auto C = coaction(S, tau_shift(T, rat(1, 3)));
    CHECK(check_reflection(C).pass);
    auto T1 = tau_shift(T, rat(1, 4)), T3 = tau_shift(T, rat(-2, 5));
    CHECK(coaction(coaction(S, T1), T3).equals(coaction(S, coproduct(T1, T3))));
  }
}
