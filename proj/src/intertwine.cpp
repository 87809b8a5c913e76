#include "xgn/intertwine.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"
#include "xgn/fock.hpp"
#include "xgn/linsolve.hpp"

namespace xgn::intertwine {

using fock::FockSpace;
using liealg::Pairing;

namespace {

bool is_integer(const BigRat& q) { return q.get_den() == 1; }

SpMat coeff(const OpPoly& p, size_t k, int d) {
  if (k < p.c.size()) return p.c[k];
  return SpMat(d, d);
}

SpMat block_diag(const SpMat& a, const SpMat& b) {
  SpMat r(a.rows() + b.rows(), a.cols() + b.cols());
  for (int j = 0; j < a.cols(); ++j)
    for (auto& [i, v] : a.col(j)) r.add_to(i, j, v);
  for (int j = 0; j < b.cols(); ++j)
    for (auto& [i, v] : b.col(j)) r.add_to(a.rows() + i, a.cols() + j, v);
  return r;
}

// Fock basis indices of the model basis, in model order
std::vector<int> model_basis(int m, int n, const std::vector<int>& deg) {
  std::vector<int> out{0};
  for (int r = 0; r < m; ++r) {
    auto idx = modules::degree_indices(n, deg[r]);
    std::vector<int> next;
    for (int b : out)
      for (int x : idx) next.push_back(b | (x << (r * n)));
    out = std::move(next);
  }
  return out;
}

std::vector<BigRat> monomial_on_vacuum(const FockSpace& fs, const std::vector<int>& nu) {
  const int m = fs.m;
  SpMat F = SpMat::identity(fs.dim());
  for (int a = 1; a <= m; ++a) F = F * fock::f_monomial(fs, m + 1 - a, nu[a - 1]);
  std::vector<BigRat> vac(fs.dim(), 0);
  vac[0] = 1;
  return F.apply(vac);
}

SpMat monomial_operator(const FockSpace& fs, const std::vector<int>& nu) {
  const int m = fs.m;
  SpMat F = SpMat::identity(fs.dim());
  for (int a = 1; a <= m; ++a) F = F * fock::f_monomial(fs, m + 1 - a, nu[a - 1]);
  return F;
}

}  // namespace

// ---------------------------------------------------------------- commutants

IntertwinerProblem::IntertwinerProblem(ModuleSpec s, ModuleSpec t) : source(std::move(s)), target(std::move(t)) {
  if (source.real.n() != target.real.n() || source.real.pairing.kind != target.real.pairing.kind)
    throw std::invalid_argument("intertwiner problem needs a common pairing");
  if (source.real.flavor != target.real.flavor) throw std::invalid_argument("flavors differ");
  if (!(source.twist == target.twist)) throw std::invalid_argument("source and target twists differ");
  src_dim = source.real.dim();
  tgt_dim = target.real.dim();
}

namespace {

std::vector<std::pair<SpMat, SpMat>> commutant_equations(const Realization& src, const Realization& tgt) {
  const int n = src.n(), ds = src.dim(), dt = tgt.dim();
  std::vector<std::pair<SpMat, SpMat>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      OpPoly A = src.M.num(i, j) * tgt.M.den();
      OpPoly B = tgt.M.num(i, j) * src.M.den();
      size_t K = std::max(A.c.size(), B.c.size());
      for (size_t k = 0; k < K; ++k) {
        SpMat a = coeff(A, k, ds), b = coeff(B, k, dt);
        if (a.is_zero() && b.is_zero()) continue;
        pairs.emplace_back(std::move(a), std::move(b));
      }
    }
  return pairs;
}

}  // namespace

std::vector<SpMat> solve_commutant(const Realization& src, const Realization& tgt) {
  if (src.n() != tgt.n()) throw std::invalid_argument("realizations of different size");
  auto pairs = commutant_equations(src, tgt);
  std::vector<SpMat> out;
  for (auto& v : intertwiner_basis(pairs, tgt.dim(), src.dim())) out.push_back(unflatten(v, tgt.dim(), src.dim()));
  return out;
}

std::vector<SpMat> solve_commutant(IntertwinerProblem& p) {
  p.equations = static_cast<int>(commutant_equations(p.source.real, p.target.real).size());
  return solve_commutant(p.source.real, p.target.real);
}

int schur_dimension(const Realization& M) { return static_cast<int>(solve_commutant(M, M).size()); }
int schur_dimension(const ModuleSpec& M) { return M.zero ? 0 : schur_dimension(M.real); }

Realization direct_sum(const Realization& A, const Realization& B) {
  if (A.n() != B.n() || A.flavor != B.flavor) throw std::invalid_argument("direct sum of unlike realizations");
  const int n = A.n(), d = A.dim() + B.dim();
  OpMatrix M(n, n, d);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      OpPoly a = A.M.num(i, j) * B.M.den(), b = B.M.num(i, j) * A.M.den();
      OpPoly s(d);
      size_t K = std::max(a.c.size(), b.c.size());
      for (size_t k = 0; k < K; ++k) s.c.push_back(block_diag(coeff(a, k, A.dim()), coeff(b, k, B.dim())));
      s.trim();
      M.num(i, j) = s;
    }
  M.set_den(A.M.den() * B.M.den());
  Realization r = A;
  r.M = M.reduced();
  r.name = A.name + "+" + B.name;
  return r;
}

// ---------------------------------------------------------------- multipliers

BigRat z_eta(const Root& eta, const Weight& mu_star, const Weight& lambda_star, const std::vector<int>& nu, int n,
             Case kind) {
  const int m = static_cast<int>(eta.size());
  std::vector<int> plus, minus, two;
  for (int a = 0; a < m; ++a) {
    if (eta[a] == 1) plus.push_back(a);
    if (eta[a] == -1) minus.push_back(a);
    if (eta[a] == 2) two.push_back(a);
  }
  auto ratio = [](const BigRat& num, const BigRat& den) {
    if (den == 0) throw modules::GenericityError("z_eta has a zero denominator");
    return BigRat(num / den);
  };
  if (plus.size() == 1 && minus.size() == 1 && two.empty()) {
    int b = plus[0], c = minus[0];
    if (nu[b] > nu[c]) return ratio(lambda_star[b] - lambda_star[c], mu_star[b] - mu_star[c]);
    return 1;
  }
  if (plus.size() == 2 && minus.empty() && two.empty()) {
    int b = plus[0], c = plus[1];
    if (nu[b] + nu[c] > n) return ratio(lambda_star[b] + lambda_star[c], mu_star[b] + mu_star[c]);
    return 1;
  }
  if (two.size() == 1 && plus.empty() && minus.empty()) {
    if (kind != Case::Symp) throw std::invalid_argument("long roots occur only for sp");
    int b = two[0];
    if (2 * nu[b] > n) return ratio(lambda_star[b], mu_star[b]);
    return 1;
  }
  throw std::invalid_argument("not a positive root");
}

Weight star(const Weight& w, Case kind) {
  Weight r = liealg::rho(kind, static_cast<int>(w.size()));
  for (size_t a = 0; a < w.size(); ++a) r[a] += w[a];
  return r;
}

std::vector<int> nu_degrees(const Weight& mu, const Weight& lambda, int n) {
  std::vector<int> out;
  for (auto& v : modules::nu_labels(mu, lambda, n)) {
    if (!is_integer(v)) throw std::invalid_argument("nu is not integral");
    out.push_back(static_cast<int>(v.get_num().get_si()));
  }
  return out;
}

std::vector<ZetaFactor> predicted_factors(const SignedPerm& sigma, const Weight& mu, const Weight& lambda, int n,
                                          Case kind) {
  Weight ms = star(mu, kind), ls = star(lambda, kind);
  auto nu = nu_degrees(mu, lambda, n);
  std::vector<ZetaFactor> out;
  for (auto& eta : weyl::inversion_set(sigma, kind)) out.push_back({eta, z_eta(eta, ms, ls, nu, n, kind)});
  return out;
}

BigRat predicted_multiplier(const SignedPerm& sigma, const Weight& mu, const Weight& lambda, int n, Case kind) {
  BigRat p = 1;
  for (auto& f : predicted_factors(sigma, mu, lambda, n, kind)) p *= f.value;
  return p;
}

BigRat lemma_factor(FactorKind kind, int s, int t, const BigRat& H, int n) {
  BigRat num, den;
  switch (kind) {
    case FactorKind::XX:
      if (s <= t) return 1;
      num = H + s - t + 1, den = H + 1;
      break;
    case FactorKind::DD:
      if (s >= t) return 1;
      num = H - s + t + 1, den = H + 1;
      break;
    case FactorKind::XD:
      if (s + t <= n) return 1;
      num = H + s + t + 1, den = H + n + 1;
      break;
    case FactorKind::X:
      if (2 * s <= n) return 1;
      num = H + s + 1, den = H + rat(n, 2) + 1;
      break;
  }
  if (den == 0) throw modules::GenericityError("factor has a zero denominator");
  return num / den;
}

BigRat h_eigenvalue(const Root& eta, const Weight& mu_star, int n) {
  const int m = static_cast<int>(eta.size());
  std::vector<int> plus, minus, two;
  for (int a = 0; a < m; ++a) {
    if (eta[a] == 1) plus.push_back(a);
    if (eta[a] == -1) minus.push_back(a);
    if (eta[a] == 2) two.push_back(a);
  }
  if (plus.size() == 1 && minus.size() == 1) return -mu_star[plus[0]] + mu_star[minus[0]] - 1;
  if (plus.size() == 2) return -mu_star[plus[0]] - mu_star[plus[1]] - n - 1;
  if (two.size() == 1) return -mu_star[two[0]] - rat(n, 2) - 1;
  throw std::invalid_argument("not a positive root");
}

// ---------------------------------------------------------------- vectors

std::vector<int> model_degrees(const SignedPerm& sigma, const std::vector<int>& nu, int m) {
  auto nut = weyl::pull_labels(sigma, nu);
  std::vector<int> deg(m);
  for (int r = 1; r <= m; ++r) deg[r - 1] = nut[m - r];
  return deg;
}

std::vector<BigRat> highest_vector(const std::vector<int>& nu, int m, int n) {
  FockSpace fs(m, n);
  std::vector<int> deg(m);
  for (int r = 1; r <= m; ++r) deg[r - 1] = nu[m - r];
  return modules::fock_to_tensor(monomial_on_vacuum(fs, nu), m, n, deg);
}

std::vector<BigRat> target_vector(const SignedPerm& sigma, const std::vector<int>& nu, int m, int n, Case kind) {
  FockSpace fs(m, n);
  Pairing pr = Pairing::standard(n, kind);
  SpMat W = weyl::braid_on_clifford(fs, pr, weyl::reduced_word(sigma, kind));
  SpMat Wd = fock::varpi_conjugator(fs, pr, sigma.delta());
  SpMat X = Wd * W;
  SpMat F = fock::conjugate(X, monomial_operator(fs, nu));
  std::vector<BigRat> vac(fs.dim(), 0);
  vac[0] = 1;
  return modules::fock_to_tensor(F.apply(vac), m, n, model_degrees(sigma, nu, m));
}

bool annihilated_by_raising(const Realization& M, const std::vector<BigRat>& v) {
  const int n = M.n();
  auto co = yangian::extract_coefficients(M, 1);
  auto seq = fock::column_order(n);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      int i = seq[x], j = seq[y];
      auto w = co[1][(i - 1) * n + (j - 1)].apply(v);
      if (std::any_of(w.begin(), w.end(), [](const BigRat& q) { return q != 0; })) return false;
    }
  return true;
}

bool parallel(const std::vector<BigRat>& a, const std::vector<BigRat>& b, BigRat& c) {
  if (a.size() != b.size()) return false;
  auto it = std::find_if(b.begin(), b.end(), [](const BigRat& q) { return q != 0; });
  if (it == b.end()) return false;
  size_t k = it - b.begin();
  c = a[k] / b[k];
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != c * b[i]) return false;
  return true;
}

// ---------------------------------------------------------------- verification

namespace {

// the braid letter as a map between models, read off on the Fock space
SpMat explicit_letter_map(const SignedPerm& from, const SignedPerm& to, int letter, const std::vector<int>& nu,
                          int m, int n, Case kind) {
  FockSpace fs(m, n);
  Pairing pr = Pairing::standard(n, kind);
  SpMat B = weyl::braid_letter_on_clifford(fs, pr, letter);
  SpMat Wf = fock::varpi_conjugator(fs, pr, from.delta());
  SpMat Wt = fock::varpi_conjugator(fs, pr, to.delta());
  SpMat Phi = Wt * B * fock::signed_perm_inverse(Wf);
  auto src = model_basis(m, n, model_degrees(from, nu, m));
  auto tgt = model_basis(m, n, model_degrees(to, nu, m));
  std::vector<int> where(fs.dim(), -1);
  for (size_t i = 0; i < tgt.size(); ++i) where[tgt[i]] = static_cast<int>(i);
  SpMat out(static_cast<int>(tgt.size()), static_cast<int>(src.size()));
  for (size_t j = 0; j < src.size(); ++j)
    for (auto& [i, v] : Phi.col(src[j])) {
      if (where[i] < 0) throw MathError("braid letter leaves the target model");
      out.add_to(where[i], static_cast<int>(j), v);
    }
  return out;
}

bool intertwines(const SpMat& Phi, const Realization& src, const Realization& tgt) {
  return src.M.left_mul(Phi).equals(tgt.M.right_mul(Phi));
}

}  // namespace

IsisReport verify_isis_word(const Word& word, const Weight& mu, const Weight& lambda, int n, Case kind) {
  const int m = static_cast<int>(mu.size());
  modules::check_generic(mu, kind);
  IsisReport rep;
  rep.words = {word};
  rep.steps.emplace_back();
  auto nu_q = modules::nu_labels(mu, lambda, n);
  std::vector<int> nu;
  for (auto& q : nu_q) {
    if (!is_integer(q) || q < 0 || q > n) {
      rep.zero_module = true;
      break;
    }
    nu.push_back(static_cast<int>(q.get_num().get_si()));
  }
  if (rep.zero_module) {
    rep.multiplier_ok = true;
    return rep;
  }
  Weight ms = star(mu, kind), ls = star(lambda, kind);
  SignedPerm sigma = SignedPerm::identity(m);
  ModuleSpec cur = modules::siverma_model(mu, lambda, sigma, kind, n);
  std::vector<BigRat> v = highest_vector(nu, m, n);
  const std::vector<BigRat> v0 = v;
  if (!annihilated_by_raising(cur.real, v)) rep.violations.push_back("highest vector is not annihilated by raising");
  SpMat composite = SpMat::identity(cur.real.dim());
  BigRat mult = 1;
  for (int a : word) {
    StepReport st;
    st.letter = a;
    SignedPerm next = SignedPerm::generator(m, a) * sigma;
    ModuleSpec tgt = modules::siverma_model(mu, lambda, next, kind, n);
    auto tv = target_vector(next, nu, m, n, kind);
    SpMat Phi;
    if (kind == Case::Orth && a == m) {
      st.explicit_map = true;
      st.commutant_dim = 1;
      st.z = 1;
      Phi = explicit_letter_map(sigma, next, a, nu, m, n, kind);
      if (!intertwines(Phi, cur.real, tgt.real))
        rep.violations.push_back("explicit letter " + std::to_string(a) + " does not intertwine");
    } else {
      st.eta = weyl::act(sigma.inverse(), weyl::simple_root(kind, m, a));
      if (!weyl::is_positive(kind, st.eta)) {
        rep.violations.push_back("word is not reduced at letter " + std::to_string(a));
        rep.steps[0].push_back(st);
        break;
      }
      st.z = z_eta(st.eta, ms, ls, nu, n, kind);
      auto basis = solve_commutant(cur.real, tgt.real);
      st.commutant_dim = static_cast<int>(basis.size());
      if (basis.size() != 1) {
        rep.commutants_one = false;
        rep.violations.push_back("irreducibility: commutant of dimension " + std::to_string(basis.size()));
        rep.steps[0].push_back(st);
        break;
      }
      Phi = basis[0];
    }
    BigRat c;
    st.parallel = parallel(Phi.apply(v), tv, c) && c != 0;
    if (!st.parallel) {
      rep.images_parallel = false;
      rep.violations.push_back("highest vector image is not parallel to the target at letter " +
                               std::to_string(a));
      rep.steps[0].push_back(st);
      break;
    }
    if (!st.explicit_map) Phi = Phi * BigRat(st.z / c);
    else if (c != 1) rep.violations.push_back("explicit letter map rescales the highest vector");
    mult *= st.z;
    composite = Phi * composite;
    rep.steps[0].push_back(st);
    sigma = next;
    cur = tgt;
    v = tv;
  }
  rep.composites.push_back(composite);
  rep.composite_multiplier = mult;
  rep.predicted = predicted_multiplier(sigma, mu, lambda, n, kind);
  if (rep.pass()) {
    auto lhs = composite.apply(v0);
    auto rhs = target_vector(sigma, nu, m, n, kind);
    for (auto& q : rhs) q *= rep.predicted;
    rep.multiplier_ok = (mult == rep.predicted) && lhs == rhs;
    if (!rep.multiplier_ok) rep.violations.push_back("composite multiplier differs from the product over inversions");
  }
  return rep;
}

SpMat direct_intertwiner(const SignedPerm& sigma, const Weight& mu, const Weight& lambda, int n, Case kind,
                         int& dim) {
  const int m = static_cast<int>(mu.size());
  auto nu = nu_degrees(mu, lambda, n);
  ModuleSpec src = modules::verma_model(mu, lambda, kind, n);
  ModuleSpec tgt = modules::siverma_model(mu, lambda, sigma, kind, n);
  auto basis = solve_commutant(src.real, tgt.real);
  dim = static_cast<int>(basis.size());
  if (dim != 1) return SpMat();
  BigRat c;
  if (!parallel(basis[0].apply(highest_vector(nu, m, n)), target_vector(sigma, nu, m, n, kind), c) || c == 0) {
    dim = -1;
    return SpMat();
  }
  return basis[0] * BigRat(predicted_multiplier(sigma, mu, lambda, n, kind) / c);
}

IsisReport verify_isis(const SignedPerm& sigma, const Weight& mu, const Weight& lambda, int n, Case kind) {
  auto words = weyl::reduced_words(sigma, kind, 2);
  IsisReport rep = verify_isis_word(words.at(0), mu, lambda, n, kind);
  if (!rep.zero_module && !rep.composites.empty()) {
    int dim = 0;
    SpMat D = direct_intertwiner(sigma, mu, lambda, n, kind, dim);
    rep.direct_dim = dim;
    rep.direct_agrees = dim == 1 && D == rep.composites[0];
    if (!rep.direct_agrees) rep.violations.push_back("direct intertwiner differs from the composite");
  }
  for (size_t w = 1; w < words.size(); ++w) {
    IsisReport other = verify_isis_word(words[w], mu, lambda, n, kind);
    rep.words.push_back(words[w]);
    rep.steps.push_back(other.steps.at(0));
    for (auto& s : other.violations) rep.violations.push_back("second word: " + s);
    if (other.composites.empty()) continue;
    rep.composites.push_back(other.composites[0]);
    if (!rep.composites.empty() && !(rep.composites[0] == other.composites[0])) {
      rep.words_agree = false;
      rep.violations.push_back("composites differ between reduced words");
    }
  }
  return rep;
}

std::string IsisReport::to_json() const {
  nlohmann::json j;
  j["pass"] = pass();
  j["zero_module"] = zero_module;
  j["composite_multiplier"] = composite_multiplier.get_str();
  j["predicted"] = predicted.get_str();
  auto ws = nlohmann::json::array();
  for (size_t w = 0; w < words.size(); ++w) {
    auto st = nlohmann::json::array();
    for (auto& s : steps[w])
      st.push_back({{"letter", s.letter},
                    {"root", s.eta},
                    {"commutant_dim", s.commutant_dim},
                    {"explicit", s.explicit_map},
                    {"z", s.z.get_str()}});
    ws.push_back({{"word", words[w]}, {"steps", st}});
  }
  j["words"] = ws;
  j["words_agree"] = words_agree;
  j["direct_dim"] = direct_dim;
  j["direct_agrees"] = direct_agrees;
  j["violations"] = violations;
  return j.dump();
}

}  // namespace xgn::intertwine
