#pragma once
// Hyperoctahedral group H_m: signed permutations, words, lengths, inversion
// sets; braid group lifts acting on f_m and on the Clifford algebra.
//
// A word (a_1, ..., a_K) denotes sigma_{a_K} ... sigma_{a_1}: the first letter acts first.

#include <functional>
#include <vector>

#include "xgn/fock.hpp"
#include "xgn/liealg.hpp"

namespace xgn::weyl {

using liealg::Case;
using liealg::FmData;
using liealg::FmElem;
using liealg::Weight;
using Word = std::vector<int>;
using Root = std::vector<int>;  // coordinates in the basis eps_1..eps_m

struct SignedPerm {
  std::vector<int> img;  // img[a-1] = sigma(a), signed

  static SignedPerm identity(int m);
  static SignedPerm generator(int m, int a);
  int m() const { return static_cast<int>(img.size()); }
  int operator()(int c) const;
  SignedPerm operator*(const SignedPerm& o) const;  // (this o o)(c) = this(o(c))
  SignedPerm inverse() const;
  bool operator==(const SignedPerm& o) const { return img == o.img; }
  bool operator<(const SignedPerm& o) const { return img < o.img; }
  // sign(sigma^{-1}(a)) for a = 1..m
  std::vector<int> delta() const;
};

SignedPerm word_to_perm(int m, const Word& w);
std::vector<SignedPerm> all_perms(int m);

std::vector<Root> positive_roots(Case kind, int m);
Root simple_root(Case kind, int m, int a);
Root act(const SignedPerm& s, const Root& r);
bool is_positive(Case kind, const Root& r);  // membership in the positive roots
std::vector<Root> inversion_set(const SignedPerm& s, Case kind);
int length(const SignedPerm& s, Case kind);
// letters other than m in a word (the orthogonal count) or all letters
int word_cost(const Word& w, Case kind, int m);

// Minimal words for sigma: first entry is deterministic; a second, different
// one is included when it exists.
std::vector<Word> reduced_words(const SignedPerm& s, Case kind, int max_words = 2);
Word reduced_word(const SignedPerm& s, Case kind);

Weight natural_action(const SignedPerm& s, const Weight& mu);
Weight shifted_action(const SignedPerm& s, Case kind, const Weight& mu);
// v~_a = v_{|sigma^{-1}(a)|}
template <class T>
std::vector<T> pull_labels(const SignedPerm& s, const std::vector<T>& v) {
  SignedPerm inv = s.inverse();
  std::vector<T> r;
  for (int a = 1; a <= s.m(); ++a) r.push_back(v.at(std::abs(inv(a)) - 1));
  return r;
}

// the permutation c -> bar-conjugate of sigma_a on -m..m used by the braid action
int braid_index_map(int m, int a, int c);
FmElem braid_letter_on_fm(const FmData& f, int a, const FmElem& x);
FmElem braid_on_fm(const FmData& f, const Word& w, const FmElem& x);

// Fock conjugators: W Y W^{-1} realizes the automorphism of the letter / word
SpMat braid_letter_on_clifford(const fock::FockSpace& fs, const liealg::Pairing& pr, int a);
SpMat braid_on_clifford(const fock::FockSpace& fs, const liealg::Pairing& pr, const Word& w);

}  // namespace xgn::weyl
