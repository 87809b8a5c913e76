#include "xgn/weyl.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace xgn::weyl {

SignedPerm SignedPerm::identity(int m) {
  SignedPerm s;
  for (int a = 1; a <= m; ++a) s.img.push_back(a);
  return s;
}

SignedPerm SignedPerm::generator(int m, int a) {
  if (a < 1 || a > m) throw std::out_of_range("generator index out of range");
  SignedPerm s = identity(m);
  if (a < m)
    std::swap(s.img[a - 1], s.img[a]);
  else
    s.img[m - 1] = -m;
  return s;
}

int SignedPerm::operator()(int c) const {
  if (c == 0 || std::abs(c) > m()) throw std::out_of_range("signed index out of range");
  return c > 0 ? img[c - 1] : -img[-c - 1];
}

SignedPerm SignedPerm::operator*(const SignedPerm& o) const {
  SignedPerm r;
  for (int a = 1; a <= o.m(); ++a) r.img.push_back((*this)(o(a)));
  return r;
}

SignedPerm SignedPerm::inverse() const {
  SignedPerm r;
  r.img.assign(m(), 0);
  for (int a = 1; a <= m(); ++a) {
    int b = img[a - 1];
    r.img[std::abs(b) - 1] = b > 0 ? a : -a;
  }
  return r;
}

std::vector<int> SignedPerm::delta() const {
  SignedPerm inv = inverse();
  std::vector<int> d;
  for (int a = 1; a <= m(); ++a) d.push_back(inv(a) > 0 ? 1 : -1);
  return d;
}

SignedPerm word_to_perm(int m, const Word& w) {
  SignedPerm s = SignedPerm::identity(m);
  for (int a : w) s = SignedPerm::generator(m, a) * s;
  return s;
}

std::vector<SignedPerm> all_perms(int m) {
  std::vector<int> base;
  for (int a = 1; a <= m; ++a) base.push_back(a);
  std::vector<SignedPerm> r;
  do {
    for (int signs = 0; signs < (1 << m); ++signs) {
      SignedPerm s;
      for (int a = 0; a < m; ++a) s.img.push_back((signs >> a & 1) ? -base[a] : base[a]);
      r.push_back(s);
    }
  } while (std::next_permutation(base.begin(), base.end()));
  return r;
}

std::vector<Root> positive_roots(Case kind, int m) {
  std::vector<Root> r;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      Root x(m, 0), y(m, 0);
      x[a] = 1, x[b] = -1;
      y[a] = 1, y[b] = 1;
      r.push_back(x);
      r.push_back(y);
    }
  if (kind == Case::Symp)
    for (int a = 0; a < m; ++a) {
      Root x(m, 0);
      x[a] = 2;
      r.push_back(x);
    }
  return r;
}

Root simple_root(Case kind, int m, int a) {
  Root r(m, 0);
  if (a < m) {
    r[a - 1] = 1, r[a] = -1;
  } else if (kind == Case::Symp) {
    r[m - 1] = 2;
  } else {
    if (m < 2) throw std::invalid_argument("so_2 has no simple root");
    r[m - 2] = 1, r[m - 1] = 1;
  }
  return r;
}

Root act(const SignedPerm& s, const Root& r) {
  // sigma(eps_c) = eps_{sigma(c)}
  Root out(r.size(), 0);
  for (int a = 1; a <= s.m(); ++a) {
    int b = s(a);
    out[std::abs(b) - 1] += b > 0 ? r[a - 1] : -r[a - 1];
  }
  return out;
}

bool is_positive(Case kind, const Root& r) {
  auto pos = positive_roots(kind, static_cast<int>(r.size()));
  return std::find(pos.begin(), pos.end(), r) != pos.end();
}

std::vector<Root> inversion_set(const SignedPerm& s, Case kind) {
  std::vector<Root> r;
  for (auto& eta : positive_roots(kind, s.m()))
    if (!is_positive(kind, act(s, eta))) r.push_back(eta);
  return r;
}

int length(const SignedPerm& s, Case kind) { return static_cast<int>(inversion_set(s, kind).size()); }

int word_cost(const Word& w, Case kind, int m) {
  int c = 0;
  for (int a : w) c += (kind == Case::Orth && a == m) ? 0 : 1;
  return c;
}

namespace {

int letter_cost(Case kind, int m, int a) { return word_cost(Word{a}, kind, m); }

using Cost = std::pair<int, int>;  // (weighted count, total length)

std::map<SignedPerm, Cost> distances(int m, Case kind) {
  std::map<SignedPerm, Cost> dist;
  std::set<std::pair<Cost, SignedPerm>> queue;
  SignedPerm id = SignedPerm::identity(m);
  dist[id] = {0, 0};
  queue.insert({{0, 0}, id});
  while (!queue.empty()) {
    auto [c, s] = *queue.begin();
    queue.erase(queue.begin());
    for (int a = 1; a <= m; ++a) {
      SignedPerm t = SignedPerm::generator(m, a) * s;
      Cost nc{c.first + letter_cost(kind, m, a), c.second + 1};
      auto it = dist.find(t);
      if (it == dist.end() || nc < it->second) {
        if (it != dist.end()) queue.erase({it->second, t});
        dist[t] = nc;
        queue.insert({nc, t});
      }
    }
  }
  return dist;
}

}  // namespace

std::vector<Word> reduced_words(const SignedPerm& s, Case kind, int max_words) {
  const int m = s.m();
  if (m == 0) return {Word{}};
  auto dist = distances(m, kind);
  std::vector<Word> out;
  Word suffix;  // letters collected from the end
  std::function<void(const SignedPerm&)> walk = [&](const SignedPerm& t) {
    if (static_cast<int>(out.size()) >= max_words) return;
    Cost ct = dist.at(t);
    if (ct.second == 0) {
      out.emplace_back(suffix.rbegin(), suffix.rend());
      return;
    }
    for (int a = 1; a <= m; ++a) {
      SignedPerm p = SignedPerm::generator(m, a) * t;  // generators are involutions
      Cost cp = dist.at(p);
      if (cp.first + letter_cost(kind, m, a) == ct.first && cp.second + 1 == ct.second) {
        suffix.push_back(a);
        walk(p);
        suffix.pop_back();
      }
    }
  };
  walk(s);
  return out;
}

Word reduced_word(const SignedPerm& s, Case kind) { return reduced_words(s, kind, 1).at(0); }

Weight natural_action(const SignedPerm& s, const Weight& mu) {
  Weight r(mu.size());
  SignedPerm inv = s.inverse();
  for (int b = 1; b <= s.m(); ++b) {
    int a = inv(b);
    r[b - 1] = a > 0 ? mu[a - 1] : -mu[-a - 1];
  }
  return r;
}

Weight shifted_action(const SignedPerm& s, Case kind, const Weight& mu) {
  Weight rh = liealg::rho(kind, s.m());
  Weight r = natural_action(s, liealg::shifted_labels(kind, mu));
  for (size_t a = 0; a < r.size(); ++a) r[a] -= rh[a];
  return r;
}

int braid_index_map(int m, int a, int c) {
  if (a < 1 || a > m) throw std::out_of_range("generator index out of range");
  if (a == m) return std::abs(c) == 1 ? -c : c;
  SignedPerm g = SignedPerm::generator(m, a);
  return liealg::bar(m, g(liealg::bar(m, c)));
}

FmElem braid_letter_on_fm(const FmData& f, int a, const FmElem& x) {
  FmElem r;
  for (auto& [cd, k] : x) {
    auto [c, d] = cd;
    BigRat sign = 1;
    if (a == f.m && f.kind == Case::Symp) sign = ((c == 1) + (d == 1)) % 2 ? -1 : 1;
    r[{braid_index_map(f.m, a, c), braid_index_map(f.m, a, d)}] += k * sign;
  }
  return r;
}

FmElem braid_on_fm(const FmData& f, const Word& w, const FmElem& x) {
  FmElem r = x;
  for (int a : w) r = braid_letter_on_fm(f, a, r);
  return r;
}

SpMat braid_letter_on_clifford(const fock::FockSpace& fs, const liealg::Pairing& pr, int a) {
  const int m = fs.m;
  if (a < 1 || a > m) throw std::out_of_range("generator index out of range");
  if (a == m) {
    std::vector<int> delta(m, 1);
    delta[m - 1] = -1;
    return fock::varpi_conjugator(fs, pr, delta);
  }
  std::vector<SpMat> img;
  for (int r = 1; r <= m; ++r)
    for (int i = 1; i <= fs.n; ++i) img.push_back(fock::creation(fs, braid_index_map(m, a, r), i));
  std::vector<BigRat> vac(fs.dim(), 0);
  vac[0] = 1;
  return fock::conjugator_from_images(fs, img, vac);
}

SpMat braid_on_clifford(const fock::FockSpace& fs, const liealg::Pairing& pr, const Word& w) {
  SpMat W = SpMat::identity(fs.dim());
  for (int a : w) W = braid_letter_on_clifford(fs, pr, a) * W;
  return W;
}

}  // namespace xgn::weyl
