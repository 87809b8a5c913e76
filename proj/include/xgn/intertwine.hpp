#pragma once
// Intertwining operators between tensor models, the z_eta multipliers and the
// step-by-step verification of the composite intertwiner along reduced words.

#include <string>
#include <vector>

#include "xgn/modules.hpp"

namespace xgn::intertwine {

using liealg::Case;
using liealg::Weight;
using modules::ModuleSpec;
using weyl::Root;
using weyl::SignedPerm;
using weyl::Word;
using yangian::Realization;

struct IntertwinerProblem {
  ModuleSpec source, target;
  int src_dim = 0, tgt_dim = 0;
  int equations = 0;  // scalar equations after clearing denominators

  IntertwinerProblem(ModuleSpec s, ModuleSpec t);
};

// every Phi (target dim x source dim) with Phi S_src(u) = S_tgt(u) Phi entrywise
std::vector<SpMat> solve_commutant(IntertwinerProblem& p);
std::vector<SpMat> solve_commutant(const Realization& src, const Realization& tgt);
int schur_dimension(const ModuleSpec& M);
int schur_dimension(const Realization& M);
// block-diagonal sum of two realizations of the same flavor and pairing
Realization direct_sum(const Realization& A, const Realization& B);

struct ZetaFactor {
  Root eta;
  BigRat value;
};

// mu*, lambda* and nu indexed by a - 1
BigRat z_eta(const Root& eta, const Weight& mu_star, const Weight& lambda_star, const std::vector<int>& nu, int n,
             Case kind);
// mu* = mu + rho, lambda* = lambda + rho; nu from mu and lambda
Weight star(const Weight& w, Case kind);
std::vector<int> nu_degrees(const Weight& mu, const Weight& lambda, int n);
BigRat predicted_multiplier(const SignedPerm& sigma, const Weight& mu, const Weight& lambda, int n, Case kind);
std::vector<ZetaFactor> predicted_factors(const SignedPerm& sigma, const Weight& mu, const Weight& lambda, int n,
                                          Case kind);

enum class FactorKind { XX, DD, XD, X };
BigRat lemma_factor(FactorKind kind, int s, int t, const BigRat& H, int n);
// the eigenvalue substituted for H when eta is the root at hand
BigRat h_eigenvalue(const Root& eta, const Weight& mu_star, int n);

// f_{1 nu_1} ... f_{m nu_m} on the vacuum, row m+1-a carrying degree nu_a, in the model coordinates
std::vector<BigRat> highest_vector(const std::vector<int>& nu, int m, int n);
// the braid lift of sigma applied to that monomial, pushed through the varpi twist of sigma
std::vector<BigRat> target_vector(const SignedPerm& sigma, const std::vector<int>& nu, int m, int n, Case kind);
// signed row degrees |delta_a nu~_a| placed in row order (row r carries a = m+1-r)
std::vector<int> model_degrees(const SignedPerm& sigma, const std::vector<int>& nu, int m);
// first order coefficients S_ij with i before j in the column order kill the vector
bool annihilated_by_raising(const Realization& M, const std::vector<BigRat>& v);

// c with a = c b, or nullopt when not parallel (b nonzero)
bool parallel(const std::vector<BigRat>& a, const std::vector<BigRat>& b, BigRat& c);

struct StepReport {
  int letter = 0;
  Root eta;
  int commutant_dim = 0;
  bool explicit_map = false;
  bool parallel = false;
  BigRat z;
};

struct IsisReport {
  std::vector<Word> words;
  std::vector<std::vector<StepReport>> steps;  // per word
  std::vector<SpMat> composites;               // per word
  BigRat composite_multiplier = 0;             // first word
  BigRat predicted = 0;
  bool commutants_one = true;
  bool images_parallel = true;
  bool multiplier_ok = false;
  bool words_agree = true;
  bool zero_module = false;
  int direct_dim = 0;          // commutant between the end modules
  bool direct_agrees = true;  // one-shot intertwiner pinned on the highest vector equals the composite
  std::vector<std::string> violations;

  bool pass() const { return violations.empty(); }
  std::string to_json() const;
};

// one-shot intertwiner from the verma model to the sigma model sending the highest vector
// to predicted_multiplier times the target; dim reports the commutant size (-1 when not parallel)
SpMat direct_intertwiner(const SignedPerm& sigma, const Weight& mu, const Weight& lambda, int n, Case kind,
                         int& dim);
IsisReport verify_isis(const SignedPerm& sigma, const Weight& mu, const Weight& lambda, int n, Case kind);
// the pipeline along one given word; a letter that does not lengthen the prefix is reported
IsisReport verify_isis_word(const Word& word, const Weight& mu, const Weight& lambda, int n, Case kind);

}  // namespace xgn::intertwine
