#pragma once
// f_m = so_{2m} or sp_{2m} with basis F_{ab}, a, b in {-m..-1, 1..m}; the dual
// pair homomorphism zeta_n into the Clifford algebra; the g_n action.

#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "xgn/fock.hpp"
#include "xgn/pairing.hpp"

namespace xgn::liealg {

// linear combination of symbols F_{ab}; not unique until canonical()
using FmElem = std::map<std::pair<int, int>, BigRat>;

struct FmData {
  int m = 0;
  Case kind = Case::Orth;
  FmData(int m, Case kind);

  int dim2() const { return 2 * m; }
  // position of a signed index in the ordering -m..-1, 1..m
  int pos(int c) const;
  int index_at(int p) const;
  int eps(int a, int b) const;
  std::vector<int> indices() const;  // -m..-1, 1..m

  static FmElem basis_symbol(int a, int b, BigRat coef = 1);
  // the chosen basis: one of F_{ab}, F_{-b,-a} per pair, zero symbols dropped
  std::vector<std::pair<int, int>> basis() const;
  int dimension() const { return static_cast<int>(basis().size()); }
  FmElem canonical(const FmElem& x) const;
  bool equal(const FmElem& x, const FmElem& y) const;

  // [F_ab, F_cd] as a combination of symbols, term by term from the structure relations
  FmElem bracket(int a, int b, int c, int d) const;
  FmElem bracket(const FmElem& x, const FmElem& y) const;

  SpMat matrix(int a, int b) const;  // defining representation on C^{2m}
  SpMat matrix(const FmElem& x) const;
  // inverse of matrix() on the image; throws if M is not in f_m
  FmElem from_matrix(const SpMat& M) const;
};

FmElem add(const FmElem& x, const FmElem& y, BigRat ky = 1);
FmElem scale(const FmElem& x, BigRat k);

// zeta_n(F_ab) by the three-case formula, and by -delta n/2 + sum_k q_{ck} p_{dk}
SpMat zeta(const FmData& f, const fock::FockSpace& fs, const Pairing& pr, int a, int b);
SpMat zeta_pq(const FmData& f, const fock::FockSpace& fs, const Pairing& pr, int c, int d);
SpMat zeta(const FmData& f, const fock::FockSpace& fs, const Pairing& pr, const FmElem& x);

// sum_c (x_{ci} d_{cj} - theta_i theta_j x_{c j~} d_{c i~})
SpMat gn_action(const fock::FockSpace& fs, const Pairing& pr, int i, int j);
// E_ij - theta_i theta_j E_{j~ i~} on C^n
SpMat gn_matrix(const Pairing& pr, int i, int j);

using Weight = std::vector<BigRat>;
Weight rho(Case kind, int m);
Weight shifted_labels(Case kind, const Weight& mu);

struct Sl2Triple {
  FmElem e, f, h;
};
Sl2Triple sl2_triple(const FmData& f, int a);

// bar(c) = m+1-c for c > 0, -m-1-c for c < 0
int bar(int m, int c);

}  // namespace xgn::liealg
