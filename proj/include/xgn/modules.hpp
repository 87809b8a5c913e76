#pragma once
// Concrete modules: P_z and P'_z on the Grassmann algebra, the gl_l and f_m
// Fock bimodules alpha_l and beta_m, twists of beta_m, finite tensor models of
// coinvariants, the twisted tensor product and the Olshanski realization.

#include <map>
#include <string>
#include <vector>

#include "xgn/liealg.hpp"
#include "xgn/weyl.hpp"
#include "xgn/yangian.hpp"

namespace xgn::modules {

using liealg::Case;
using liealg::FmData;
using liealg::FmElem;
using liealg::Pairing;
using liealg::Weight;
using yangian::Flavor;
using yangian::Realization;

struct GenericityError : MathError {
  using MathError::MathError;
};

// ---------------------------------------------------------------- representations

// f_m on a finite-dimensional space; F[pos(a) * 2m + pos(b)] is the image of F_ab
struct FmRep {
  FmData f;
  int dim = 0;
  std::vector<SpMat> F;

  const SpMat& at(int a, int b) const;
  SpMat image(const FmElem& x) const;
  // 2m dim x 2m dim matrix with block (pos a, pos b) = F_ab
  SpMat block_matrix() const;
};

FmRep fm_trivial(const FmData& f);
FmRep fm_defining(const FmData& f);
// G(C^m (x) C^k) through zeta_k with the standard form on C^k
FmRep fm_fock(const FmData& f, int k);
bool is_representation(const FmRep& V);

// gl_l on a finite-dimensional space; E[a * l + b] is the image of E_{a+1, b+1}
struct GlRep {
  int l = 0, dim = 0;
  std::vector<SpMat> E;
  Weight highest_weight;
  std::vector<BigRat> highest_vector;

  const SpMat& at(int a, int b) const { return E.at(static_cast<size_t>(a - 1) * l + (b - 1)); }
};

GlRep gl_trivial(int l);
GlRep gl_defining(int l);
GlRep gl_dual(int l);
GlRep gl_exterior(int l, int k);  // Lambda^k C^l inside G(C^l)

// ---------------------------------------------------------------- module records

struct ModuleSpec {
  Realization real;
  std::vector<Weight> grading;  // per basis vector, empty when absent
  RatFunc twist = RatFunc(1);   // recorded, never applied
  std::map<std::string, std::string> params;
  bool zero = false;

  std::string to_json() const;
};

// ---------------------------------------------------------------- P_z

// basis indices of G(C^n) of degree N, ascending
std::vector<int> degree_indices(int n, int N);
// restriction of every entry to an invariant coordinate subspace
Realization restrict(const Realization& X, const std::vector<int>& idx);
// conjugation of every entry by an invertible operator: W X W^{-1}
Realization conjugate(const Realization& X, const SpMat& W, const SpMat& Winv);

Realization p_module(const Pairing& pr, const BigRat& z);
Realization p_prime_module(const Pairing& pr, const BigRat& z);
// N > 0: degree N block of P_z; N < 0: degree -N block of P'_z; N = 0: trivial
Realization p_block(const Pairing& pr, const BigRat& z, int N);
Realization degree_submodule(const Realization& P, int N);

// P'_z against P_{-z-1} pushed through x_i -> theta_i d_{i~}, d_i -> theta_i x_{i~}
// and twisted by g(u) = 1 - 1/(u - z); block < 0 compares the full modules
bool p_prime_push_check(const Pairing& pr, const BigRat& z, int block = -1);

// ---------------------------------------------------------------- alpha_l

// T_ij(u) = delta_ij + sum_ab (u - E')^{-1}_ab (x) x_ai d_bj on U (x) G(C^l (x) C^n)
Realization alpha_l(const Pairing& pr, const GlRep& U);
// E_ab -> E_ab (x) 1 + 1 (x) sum_k x_ak d_bk
SpMat gl_diag_action(const Pairing& pr, const GlRep& U, int a, int b);
// Z(u) = sum_c (u + E)^{-1}_cc as a 1 x 1 operator matrix on U
OpMatrix z_series(const GlRep& U);
// prod_a (1 + 1/(u + l - a + lambda_a))
RatFunc hc_scalar(const Weight& lambda);
// 1 + Z(u) on the highest vector equals hc_scalar
bool hc_check(const GlRep& U);
// (u + E)^{-1}_da = (1 + Z(u)) (u + l + E')^{-1}_ad for all a, d
bool resolvent_transpose_check(const GlRep& U);

// ---------------------------------------------------------------- beta_m

// F(u) = (u + F)^{-1} as a 2m x 2m operator matrix (rows and columns in pos order)
OpMatrix f_resolvent(const FmRep& V);
// W(u) = sum_c F_cc(u)
OpMatrix w_series(const FmRep& V);
// S_ij(u) = delta_ij + sum_cd Fres_cd (x) p_ci q_dj for operators already on a common space
Realization beta_core(const Pairing& pr, const OpMatrix& Fres, const std::vector<SpMat>& p,
                      const std::vector<SpMat>& q, int m);
Realization beta_m(const Pairing& pr, const FmRep& V);
// X -> X (x) 1 + 1 (x) zeta_n(X) on V (x) G(C^m (x) C^n)
SpMat fm_diag_action(const Pairing& pr, const FmRep& V, int a, int b);

bool f_transpose_check(const FmRep& V);
bool w_product_check(const FmRep& V);

// coefficients w_0 = 1, w_1, ..., w_K of W~(u) with the even free coefficients set to zero
std::vector<SpMat> wtilde_coefficients(const FmRep& V, int K);
// Laurent grids of W~(u) beta_m(S(u)) up to u^-K
std::vector<std::vector<SpMat>> beta_tilde(const Pairing& pr, const FmRep& V, int K);
// theta_i theta_j S~_{j~ i~}(u) = S~_ij(-u) +- (S~_ij(u) - S~_ij(-u)) / 2u to order K
bool beta_tilde_symmetry_check(const Pairing& pr, const FmRep& V, int K);

// beta_m pushed through varpi for the sequence delta
Realization f_delta(const Pairing& pr, const FmRep& V, const std::vector<int>& delta);

// ---------------------------------------------------------------- tensor models

// nu_a = n/2 + mu_a - lambda_a
std::vector<BigRat> nu_labels(const Weight& mu, const Weight& lambda, int n);
// throws GenericityError naming the violated condition
void check_generic(const Weight& mu, Case kind);
// P^{nu_m}_{mu_m - 1/2 + rho_m} (x) ... (x) P^{nu_1}_{mu_1 - 1/2 + rho_1}
ModuleSpec verma_model(const Weight& mu, const Weight& lambda, Case kind, int n);
ModuleSpec siverma_model(const Weight& mu, const Weight& lambda, const weyl::SignedPerm& sigma, Case kind,
                         int n);
// prod_a (u - mu_a + 1/2 - rho_a) / (u - mu_a - 1/2 - rho_a)
RatFunc muprod(const Weight& mu, Case kind);
// Fock vector -> tensor model vector; row r carries degree deg[r-1]
std::vector<BigRat> fock_to_tensor(const std::vector<BigRat>& v, int m, int n, const std::vector<int>& deg);

// ---------------------------------------------------------------- twisted tensor

// coaction of alpha_l(U) shifted by z = m -+ 1/2 on beta_m(V), times 1 + Z(u - z - l) on U
Realization twisted_tensor(const Pairing& pr, const FmRep& V, const GlRep& U);
// diagonal actions on V (x) G_m (x) U (x) G_l: f_m on the first two factors, twisted gl_l on the last two
SpMat twisted_fm_action(const Pairing& pr, const FmRep& V, const GlRep& U, int a, int b);
SpMat twisted_gl_action(const Pairing& pr, const FmRep& V, const GlRep& U, int a, int b);

// ---------------------------------------------------------------- Olshanski

// f(u) = 1 - m (u - l/2 +- 1/2)^{-1}
RatFunc olshanski_f(int m, int l, Case kind);
// Schur complement A - B D^{-1} C of the (n+l) x (n+l) matrix on G(C^m (x) C^{n+l})
Realization olshanski_gamma(int m, int n, int l, Case kind);
// omega_n of the corner of omega_{n+l}(pi_{n+l})
Realization olshanski_compositional(int m, int n, int l, Case kind);
// beta_m on G(C^m (x) C^{n+l}) with f_m acting through the C^l columns, twisted by olshanski_f
Realization olshanski_beta(int m, int n, int l, Case kind);

struct OlshanskiReport {
  bool routes_agree = false;
  bool equal_to_beta = false;
  int defect_entries = 0;
  bool pass() const { return routes_agree && equal_to_beta; }
};
OlshanskiReport olshanski_check(int m, int n, int l, Case kind);

// ---------------------------------------------------------------- Howe duality

// dimension of the joint commutant of beta_m (trivial V), the g_n action and the f_m action on G(C^m (x) C^n)
int howe_commutant_dimension(int m, int n, Case kind);
// partitions with nu_1 <= m, at most n/2 rows (symp) or nu'_1 + nu'_2 <= n (orth)
int howe_partition_count(int m, int n, Case kind);
// sum over those partitions of dim L (f_1 = sp_2) times dim W (Sp_n); symp, m = 1
int howe_dimension_sum_sp(int n);

}  // namespace xgn::modules
