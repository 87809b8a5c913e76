#pragma once
// Bilinear-form data on C^n: signs theta_i and the involution i -> i~.

#include <string>
#include <vector>

namespace xgn::liealg {

enum class Case { Orth, Symp };

// +1 in the orthogonal case, -1 in the symplectic case ("upper" sign first)
inline int pm(Case c) { return c == Case::Orth ? 1 : -1; }
inline const char* case_name(Case c) { return c == Case::Orth ? "orth" : "symp"; }
Case parse_case(const std::string& s);

// Indices are 1-based. A composite pairing on C^{n+l} glues two blocks; tilde
// and theta never cross the block boundary.
struct Pairing {
  Case kind = Case::Orth;
  int n = 0;
  std::vector<int> tilde_;  // 1-based storage, index 0 unused
  std::vector<int> theta_;

  static Pairing standard(int n, Case kind);
  static Pairing composite(int n, int l, Case kind);

  int tilde(int i) const { return tilde_.at(i); }
  int theta(int i) const { return theta_.at(i); }
  Pairing block(int offset, int size) const;  // restriction to offset+1..offset+size
};

}  // namespace xgn::liealg
