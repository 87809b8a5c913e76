#pragma once
// Grassmann algebra G(C^m (x) C^n) as a 2^{mn}-dimensional space with the
// Clifford generators x_{ai} (left multiplication) and d_{ai} (left derivation).
//
// Slots are row-major: slot(a, i) = (a-1) n + (i-1). A basis vector is a
// bitmask of occupied slots and stands for the monomial with ascending slots.

#include <vector>

#include "xgn/opmatrix.hpp"
#include "xgn/pairing.hpp"

namespace xgn::fock {

using liealg::Pairing;

struct FockSpace {
  int m = 0, n = 0;
  FockSpace(int rows, int cols);
  int dim() const { return 1 << (m * n); }
  int slot(int a, int i) const;
};

SpMat creation(const FockSpace& fs, int a, int i);
SpMat annihilation(const FockSpace& fs, int a, int i);

// p_{ci}, q_{ci} for signed row index c
SpMat p_gen(const FockSpace& fs, const Pairing& pr, int c, int i);
SpMat q_gen(const FockSpace& fs, const Pairing& pr, int c, int i);

// the column sequence 1, 3, ..., ..., 4, 2
std::vector<int> column_order(int n);
SpMat f_monomial(const FockSpace& fs, int a, int s);
SpMat g_monomial(const FockSpace& fs, const Pairing& pr, int a, int s);

SpMat row_degree(const FockSpace& fs, int a);

// Signed permutation W with W Y W^{-1} = varpi(Y): rows r = m+1-a with
// delta[a-1] = -1 get x_{ri} -> theta_i d_{r i~}, d_{ri} -> theta_i x_{r i~}.
SpMat varpi_conjugator(const FockSpace& fs, const Pairing& pr, const std::vector<int>& delta);

// W(x_{s1} ... x_{sk} 1) = img[s1] ... img[sk] vacuum_image, one image per slot
SpMat conjugator_from_images(const FockSpace& fs, const std::vector<SpMat>& img,
                             const std::vector<BigRat>& vacuum_image);

// images of generators under a conjugator (for tests): W g W^{-1}
SpMat conjugate(const SpMat& W, const SpMat& g);
// inverse of a signed permutation matrix
SpMat signed_perm_inverse(const SpMat& W);

// basis index of a monomial given as a list of slots (any order) with sign
int basis_of_slots(std::vector<int> slots, int& sign);

}  // namespace xgn::fock
