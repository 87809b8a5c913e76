#pragma once
// Realizations of Y(gl_n) (flavor T) and X(g_n) (flavor S) as n x n arrays of
// operator-valued rational functions, with exact axiom checks and the standard
// automorphisms and homomorphisms.

#include <string>
#include <vector>

#include "xgn/opmatrix.hpp"
#include "xgn/pairing.hpp"

namespace xgn::yangian {

using liealg::Case;
using liealg::Pairing;

enum class Flavor { T, S };

struct Realization {
  Flavor flavor = Flavor::T;
  Pairing pairing;
  OpMatrix M;  // n x n grid of dim x dim operators
  std::string name;

  int n() const { return M.rows(); }
  int dim() const { return M.dim(); }
  bool equals(const Realization& o) const { return M.equals(o.M); }
};

struct CheckReport {
  bool pass = true;
  int degree_bound = 0;
  std::vector<std::pair<BigRat, BigRat>> points_used;
  // (i, k, j, l) index tuples and the grid point of each failing component
  struct Defect {
    int i, k, j, l;
    BigRat u, v;
  };
  std::vector<Defect> defects;
  std::string to_json() const;
};

// R(u) = u - P and R'(u) = u - Q as n^2-dimensional 1 x 1 operator matrices
OpMatrix r_matrix(int n);
OpMatrix r_prime_matrix(const Pairing& pr);

// Complete checks on a (D+1) x (D+1) grid in (u, v); D bounds the degree in
// each variable of the cleared identity. max_defects limits the report size.
CheckReport check_rtt(const Realization& T, int max_defects = 8);
CheckReport check_reflection(const Realization& S, int max_defects = 8);
// the same identities assembled as n^2 d x n^2 d matrices (independent route)
bool check_rtt_blockwise(const Realization& T);
bool check_reflection_blockwise(const Realization& S);

// T_ij(u) = delta_ij + E_ij / u, gl[i*n+j] the image of E_ij
Realization eval_hom(const Pairing& pr, const std::vector<SpMat>& gl);
// S_ij(u) = delta_ij + G_ij / (u +- 1/2), g[i*n+j] the image of E_ij - theta theta E_{j~ i~}
Realization pi_n(const Pairing& pr, const std::vector<SpMat>& g);
Realization identity_realization(const Pairing& pr, Flavor fl, int dim);

Realization tau_shift(const Realization& T, const BigRat& z);  // u -> u - z
Realization scalar_twist(const Realization& X, const RatFunc& f);
Realization transpose_prime(const Realization& X);  // (i,j) -> theta_i theta_j X_{j~ i~}
Realization twist_auto(const Realization& T);       // T(u) -> T'(-u)
Realization matrix_inverse(const Realization& X);   // X(u)^{-1}
Realization tin(const Realization& T);              // T(u) -> T(-u)^{-1}
Realization omega_n(const Realization& S);          // S(u) -> S(-u-n/2)^{-1}
Realization sym_from_T(const Realization& T);       // T'(-u) T(u)
Realization coproduct(const Realization& A, const Realization& B);
Realization coaction(const Realization& S, const Realization& T);

// (spu) holds entrywise
bool check_symmetry(const Realization& S);
// the central series O(u) as a 1 x 1 operator matrix; throws if the
// defining identity has no solution of the required shape
OpMatrix compute_O(const Realization& S);

// u^0, u^-1, ..., u^-K coefficient grids
std::vector<std::vector<SpMat>> extract_coefficients(const Realization& X, int K);

}  // namespace xgn::yangian
