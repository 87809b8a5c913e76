#include <random>

#include "doctest.h"
#include "xgn/liealg.hpp"

using namespace xgn;
using namespace xgn::liealg;
using fock::FockSpace;

namespace {

// gl_n acting on row vectors of the Fock space: M -> sum_c sum_ij M_ij x_ci d_cj
SpMat gl_action(const FockSpace& fs, const SpMat& M) {
  SpMat r(fs.dim(), fs.dim());
  for (int i = 1; i <= fs.n; ++i)
    for (int j = 1; j <= fs.n; ++j) {
      BigRat v = M.get(i - 1, j - 1);
      if (v == 0) continue;
      for (int c = 1; c <= fs.m; ++c) r += fock::creation(fs, c, i) * fock::annihilation(fs, c, j) * v;
    }
  return r;
}

std::vector<Case> cases_for(int n) {
  if (n % 2) return {Case::Orth};
  return {Case::Orth, Case::Symp};
}

}  // namespace

TEST_CASE("pairing data") {
  for (int n = 1; n <= 6; ++n)
    for (Case k : cases_for(n)) {
      auto p = Pairing::standard(n, k);
      for (int i = 1; i <= n; ++i) {
        CHECK(p.tilde(p.tilde(i)) == i);
        CHECK(p.theta(p.tilde(i)) == pm(k) * p.theta(i) * (p.tilde(i) == i ? pm(k) : 1));
      }
    }
  auto p3 = Pairing::standard(3, Case::Orth);
  CHECK(p3.tilde(1) == 2);
  CHECK(p3.tilde(3) == 3);
  auto s4 = Pairing::standard(4, Case::Symp);
  CHECK(s4.theta(2) == -1);
  CHECK(s4.theta(3) == 1);
  CHECK_THROWS(Pairing::standard(3, Case::Symp));
  auto c = Pairing::composite(2, 4, Case::Symp);
  CHECK(c.tilde(3) == 4);
  CHECK(c.theta(3) == 1);
  CHECK(c.theta(4) == -1);
  CHECK(c.tilde(6) == 5);
  auto blk = c.block(2, 4);
  CHECK(blk.tilde(1) == 2);
  CHECK(blk.theta(2) == -1);
}

TEST_CASE("f_m basis size") {
  for (int m = 1; m <= 3; ++m) {
    CHECK(FmData(m, Case::Orth).dimension() == m * (2 * m - 1));
    CHECK(FmData(m, Case::Symp).dimension() == m * (2 * m + 1));
  }
}

TEST_CASE("structure relations agree with matrix commutators") {
  for (int m = 1; m <= 3; ++m)
    for (Case k : {Case::Orth, Case::Symp}) {
      FmData f(m, k);
      for (int a : f.indices())
        for (int b : f.indices()) {
          SpMat A = f.matrix(a, b);
          CHECK(f.matrix(a, b) == f.matrix(-b, -a) * BigRat(-f.eps(a, b)));
          for (int c : f.indices())
            for (int d : f.indices())
              CHECK(commutator(A, f.matrix(c, d)) == f.matrix(f.bracket(a, b, c, d)));
        }
    }
  FmData f(2, Case::Orth);
  CHECK(f.equal(f.bracket(1, 2, 2, 1), add(FmData::basis_symbol(1, 1), FmData::basis_symbol(2, 2), -1)));
  CHECK(f.bracket(1, 1, 1, 1).empty());
}

TEST_CASE("defining matrices are traceless and lie in f_m") {
  for (Case k : {Case::Orth, Case::Symp}) {
    FmData f(2, k);
    for (auto [a, b] : f.basis()) {
      SpMat M = f.matrix(a, b);
      BigRat tr = 0;
      for (int p = 0; p < 4; ++p) tr += M.get(p, p);
      CHECK(tr == 0);
      CHECK(f.equal(f.from_matrix(M), FmData::basis_symbol(a, b)));
    }
    CHECK(f.matrix(1, 1) == SpMat::unit(4, 4, f.pos(1), f.pos(1)) - SpMat::unit(4, 4, f.pos(-1), f.pos(-1)));
    CHECK_THROWS(f.from_matrix(SpMat::unit(4, 4, 0, 0)));
  }
}

TEST_CASE("Jacobi identity") {
  std::mt19937 g(13);
  for (int m = 1; m <= 3; ++m)
    for (Case k : {Case::Orth, Case::Symp}) {
      FmData f(m, k);
      auto B = f.basis();
      auto jac = [&](auto x, auto y, auto z) {
        FmElem X = FmData::basis_symbol(x.first, x.second), Y = FmData::basis_symbol(y.first, y.second),
               Z = FmData::basis_symbol(z.first, z.second);
        FmElem s = add(add(f.bracket(X, f.bracket(Y, Z)), f.bracket(Y, f.bracket(Z, X))),
                       f.bracket(Z, f.bracket(X, Y)));
        return f.canonical(s).empty();
      };
      if (m <= 2) {
        for (auto& x : B)
          for (auto& y : B)
            for (auto& z : B) CHECK(jac(x, y, z));
      } else {
        for (int t = 0; t < 500; ++t) CHECK(jac(B[g() % B.size()], B[g() % B.size()], B[g() % B.size()]));
      }
    }
}

TEST_CASE("zeta on a single row") {
  FmData f(1, Case::Orth);
  FockSpace fs(1, 2);
  auto pr = Pairing::standard(2, Case::Orth);
  SpMat z = zeta(f, fs, pr, 1, 1);
  CHECK(z.dense() == QMatrix{{-1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 1}});
  CHECK(z - fock::row_degree(fs, 1) == SpMat::scalar(4, -1));
}

TEST_CASE("zeta is a homomorphism and matches the pq description") {
  for (int m = 1; m <= 2; ++m)
    for (int n = 1; n <= 3; ++n)
      for (Case k : cases_for(n)) {
        FmData f(m, k);
        FockSpace fs(m, n);
        auto pr = Pairing::standard(n, k);
        for (int c : f.indices())
          for (int d : f.indices()) CHECK(zeta(f, fs, pr, c, d) == zeta_pq(f, fs, pr, c, d));
        for (int a = 1; a <= m; ++a)
          CHECK(zeta(f, fs, pr, a, a) - fock::row_degree(fs, a) == SpMat::scalar(fs.dim(), rat(-n, 2)));
        auto B = f.basis();
        std::vector<SpMat> Z;
        for (auto [a, b] : B) Z.push_back(zeta(f, fs, pr, a, b));
        for (size_t s = 0; s < B.size(); ++s)
          for (size_t t = 0; t < B.size(); ++t)
            CHECK(commutator(Z[s], Z[t]) ==
                  zeta(f, fs, pr, f.bracket(B[s].first, B[s].second, B[t].first, B[t].second)));
      }
}

TEST_CASE("g_n action: closure and Howe commutation") {
  for (int m = 1; m <= 2; ++m)
    for (int n = 1; n <= 3; ++n)
      for (Case k : cases_for(n)) {
        FmData f(m, k);
        FockSpace fs(m, n);
        auto pr = Pairing::standard(n, k);
        std::vector<SpMat> G;
        for (int i = 1; i <= n; ++i)
          for (int j = 1; j <= n; ++j) {
            SpMat gij = gn_action(fs, pr, i, j);
            CHECK(gij == gl_action(fs, gn_matrix(pr, i, j)));
            G.push_back(gij);
          }
        for (int i = 1; i <= n; ++i)
          for (int j = 1; j <= n; ++j)
            for (int a = 1; a <= n; ++a)
              for (int b = 1; b <= n; ++b)
                CHECK(commutator(G[(i - 1) * n + j - 1], G[(a - 1) * n + b - 1]) ==
                      gl_action(fs, commutator(gn_matrix(pr, i, j), gn_matrix(pr, a, b))));
        for (auto [a, b] : f.basis()) {
          SpMat z = zeta(f, fs, pr, a, b);
          for (auto& g : G) CHECK(commutator(z, g).is_zero());
        }
      }
  FockSpace fs(1, 2);
  auto orth = Pairing::standard(2, Case::Orth);
  CHECK(gn_action(fs, orth, 1, 1) ==
        fock::creation(fs, 1, 1) * fock::annihilation(fs, 1, 1) - fock::creation(fs, 1, 2) * fock::annihilation(fs, 1, 2));
  FockSpace fs3(1, 3);
  CHECK(gn_action(fs3, Pairing::standard(3, Case::Orth), 3, 3).is_zero());
}

TEST_CASE("rho and shifted labels") {
  CHECK(rho(Case::Orth, 3) == Weight{2, 1, 0});
  CHECK(rho(Case::Symp, 2) == Weight{2, 1});
  CHECK(shifted_labels(Case::Symp, Weight{rat(5, 7)}) == Weight{rat(12, 7)});
}

TEST_CASE("sl2 triples") {
  for (int m = 1; m <= 3; ++m)
    for (Case k : {Case::Orth, Case::Symp}) {
      FmData f(m, k);
      for (int a = 1; a <= m; ++a) {
        if (k == Case::Orth && m == 1) {
          CHECK_THROWS(sl2_triple(f, a));
          continue;
        }
        auto t = sl2_triple(f, a);
        SpMat E = f.matrix(t.e), F = f.matrix(t.f), H = f.matrix(t.h);
        CHECK(commutator(E, F) == H);
        CHECK(commutator(H, E) == E * BigRat(2));
        CHECK(commutator(H, F) == F * BigRat(-2));
        CHECK(f.equal(f.bracket(t.e, t.f), t.h));
      }
    }
  FmData sp(2, Case::Symp);
  CHECK(sp.equal(sl2_triple(sp, 2).e, FmData::basis_symbol(-1, 1, rat(1, 2))));
  FmData so(2, Case::Orth);
  CHECK(so.equal(sl2_triple(so, 2).e, FmData::basis_symbol(-2, 1)));
}
