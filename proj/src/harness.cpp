#include "xgn/harness.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "json.hpp"
#include "xgn/fock.hpp"

namespace xgn::harness {

using fock::FockSpace;
using liealg::FmData;
using liealg::Pairing;
using modules::FmRep;
using yangian::Flavor;

namespace {

bool commutes(const Realization& X, const SpMat& op) {
  for (int i = 0; i < X.n(); ++i)
    for (int j = 0; j < X.n(); ++j)
      for (auto& c : X.M.num(i, j).c)
        if (!commutator(c, op).is_zero()) return false;
  return true;
}

Realization maybe(const Realization& X, bool fault) { return fault ? perturbed(X) : X; }

std::vector<SpMat> gl_defining_ops(int n) {
  std::vector<SpMat> e;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) e.push_back(SpMat::unit(n, n, i, j));
  return e;
}

std::vector<SpMat> gn_defining_ops(const Pairing& pr) {
  std::vector<SpMat> g;
  for (int i = 1; i <= pr.n; ++i)
    for (int j = 1; j <= pr.n; ++j) g.push_back(liealg::gn_matrix(pr, i, j));
  return g;
}

std::vector<SpMat> gn_fock_ops(const FockSpace& fs, const Pairing& pr) {
  std::vector<SpMat> g;
  for (int i = 1; i <= pr.n; ++i)
    for (int j = 1; j <= pr.n; ++j) g.push_back(liealg::gn_action(fs, pr, i, j));
  return g;
}

bool reflection(const Realization& S, std::string& detail) {
  auto rep = yangian::check_reflection(S);
  if (!rep.pass) detail = rep.to_json();
  return rep.pass;
}

bool rtt(const Realization& T, std::string& detail) {
  auto rep = yangian::check_rtt(T);
  if (!rep.pass) detail = rep.to_json();
  return rep.pass;
}

// O(u) O(-u) = 1 and O(u) commutes with every coefficient
bool central_series(const Realization& S, std::string& detail) {
  OpMatrix O;
  try {
    O = yangian::compute_O(S);
  } catch (const MathError& e) {
    detail = e.what();
    return false;
  }
  if (!(O * O.substitute(-1, 0)).equals(OpMatrix::identity(1, S.dim()))) {
    detail = "O(u) O(-u) differs from 1";
    return false;
  }
  for (auto& c : O.num(0, 0).c)
    if (!commutes(S, c)) {
      detail = "O(u) does not commute with the generators";
      return false;
    }
  return true;
}

std::vector<std::pair<std::vector<int>, std::vector<int>>> braid_relations(int m) {
  std::vector<std::pair<std::vector<int>, std::vector<int>>> r;
  for (int a = 1; a + 2 <= m; ++a) r.push_back({{a, a + 1, a}, {a + 1, a, a + 1}});
  for (int b = 1; b <= m; ++b)
    for (int a = 1; a + 2 <= b; ++a) r.push_back({{a, b}, {b, a}});
  if (m >= 2) r.push_back({{m - 1, m, m - 1, m}, {m, m - 1, m, m - 1}});
  return r;
}

// conjugation by W on V (x) G fixes every coefficient of beta_m
bool beta_invariant(const Realization& B, const SpMat& W, const SpMat& Winv) {
  for (int i = 0; i < B.n(); ++i)
    for (int j = 0; j < B.n(); ++j)
      for (auto& c : B.M.num(i, j).c)
        if (W * c * Winv != c) return false;
  return true;
}

std::vector<CheckItem> axioms(const SuiteConfig& cfg) {
  Pairing pr = Pairing::standard(cfg.n, cfg.kind);
  const int n = cfg.n;
  std::vector<CheckItem> v;
  v.push_back({"R-matrix unitarity", "R(u) R(-u) = 1 - u^2 and R'(u) R'(n-u) = u(n-u)", false,
               [=](bool, std::string&) {
                 OpMatrix one = OpMatrix::identity(1, n * n);
                 OpMatrix R = yangian::r_matrix(n), Rp = yangian::r_prime_matrix(pr);
                 return (R * R.substitute(-1, 0)).equals(one.scaled(RatFunc(UPoly({1, 0, -1})))) &&
                        (Rp * Rp.substitute(-1, n)).equals(one.scaled(RatFunc(UPoly({0, n, -1}))));
               }});
  v.push_back({"RTT for the evaluation homomorphism", "RTT relation, evaluation homomorphism", true,
               [=](bool fault, std::string& d) { return rtt(maybe(yangian::eval_hom(pr, gl_defining_ops(n)), fault), d); }});
  v.push_back({"RTT for P_z", "RTT relation, Grassmann module P_z at z = 1/3", false,
               [=](bool, std::string& d) { return rtt(modules::p_module(pr, rat(1, 3)), d); }});
  v.push_back({"reflection equation for pi_n", "reflection equation, pi_n on the defining representation", false,
               [=](bool, std::string& d) { return reflection(yangian::pi_n(pr, gn_defining_ops(pr)), d); }});
  v.push_back({"central series of pi_n", "O(u) = 1 on pi_n", false, [=](bool, std::string& d) {
                 auto S = yangian::pi_n(pr, gn_defining_ops(pr));
                 bool ok = yangian::compute_O(S).equals(OpMatrix::identity(1, S.dim()));
                 if (!ok) d = "O(u) differs from 1";
                 return ok;
               }});
  v.push_back({"symmetry of sym_from_T", "symmetry relation for T'(-u) T(u)", false, [=](bool, std::string&) {
                 auto T = yangian::eval_hom(pr, gl_defining_ops(n));
                 auto T2 = yangian::coproduct(yangian::tau_shift(T, rat(1, 3)), yangian::tau_shift(T, rat(2, 7)));
                 return yangian::check_symmetry(yangian::sym_from_T(T2));
               }});
  return v;
}

std::vector<CheckItem> clifford(const SuiteConfig& cfg) {
  const int m = cfg.m, n = cfg.n;
  Pairing pr = Pairing::standard(n, cfg.kind);
  Case kind = cfg.kind;
  std::vector<CheckItem> v;
  v.push_back({"canonical anticommutation relations", "Clifford relations for x_ai and d_ai", false,
               [=](bool, std::string& d) {
                 FockSpace fs(m, n);
                 SpMat I = SpMat::identity(fs.dim());
                 for (int a = 1; a <= m; ++a)
                   for (int i = 1; i <= n; ++i)
                     for (int b = 1; b <= m; ++b)
                       for (int j = 1; j <= n; ++j) {
                         SpMat x = fock::creation(fs, a, i), dd = fock::annihilation(fs, a, i);
                         SpMat y = fock::creation(fs, b, j), e = fock::annihilation(fs, b, j);
                         if (!(x * y + y * x).is_zero() || !(dd * e + e * dd).is_zero()) {
                           d = "generators do not anticommute";
                           return false;
                         }
                         SpMat ac = x * e + e * x;
                         if (ac != ((a == b && i == j) ? I : SpMat(fs.dim(), fs.dim()))) {
                           d = "x d + d x is not the Kronecker delta";
                           return false;
                         }
                       }
                 return true;
               }});
  v.push_back({"zeta_n is a homomorphism", "dual pair homomorphism into the Clifford algebra", false,
               [=](bool, std::string&) {
                 FmData f(m, kind);
                 FockSpace fs(m, n);
                 for (auto [a, b] : f.basis())
                   for (auto [c, dd] : f.basis())
                     if (commutator(liealg::zeta(f, fs, pr, a, b), liealg::zeta(f, fs, pr, c, dd)) !=
                         liealg::zeta(f, fs, pr, f.bracket(a, b, c, dd)))
                       return false;
                 return true;
               }});
  v.push_back({"zeta_n through p and q", "zeta_n(F_cd) = -delta n/2 + sum_k q_ck p_dk", false,
               [=](bool, std::string&) {
                 FmData f(m, kind);
                 FockSpace fs(m, n);
                 for (int a : f.indices())
                   for (int b : f.indices())
                     if (liealg::zeta(f, fs, pr, a, b) != liealg::zeta_pq(f, fs, pr, a, b)) return false;
                 return true;
               }});
  v.push_back({"reflection equation for pi_n on the Fock space", "pi_n through the g_n action on G(C^m (x) C^n)",
               true, [=](bool fault, std::string& d) {
                 FockSpace fs(m, n);
                 auto S = maybe(yangian::pi_n(pr, gn_fock_ops(fs, pr)), fault);
                 return reflection(S, d) && yangian::check_symmetry(S);
               }});
  return v;
}

std::vector<CheckItem> liealg_suite(const SuiteConfig& cfg) {
  const int m = cfg.m, n = cfg.n;
  Case kind = cfg.kind;
  Pairing pr = Pairing::standard(n, kind);
  std::vector<CheckItem> v;
  v.push_back({"structure relations", "[F_ab, F_cd] against matrix commutators", false, [=](bool, std::string&) {
                 FmData f(m, kind);
                 for (int a : f.indices())
                   for (int b : f.indices())
                     for (int c : f.indices())
                       for (int d : f.indices())
                         if (commutator(f.matrix(a, b), f.matrix(c, d)) != f.matrix(f.bracket(a, b, c, d)))
                           return false;
                 return true;
               }});
  v.push_back({"Jacobi identity", "Jacobi identity on the basis of f_m", false, [=](bool, std::string&) {
                 FmData f(m, kind);
                 auto B = f.basis();
                 for (auto [a, b] : B)
                   for (auto [c, d] : B)
                     for (auto [e, g] : B) {
                       auto x = FmData::basis_symbol(a, b), y = FmData::basis_symbol(c, d),
                            z = FmData::basis_symbol(e, g);
                       auto s = liealg::add(liealg::add(f.bracket(x, f.bracket(y, z)), f.bracket(y, f.bracket(z, x))),
                                            f.bracket(z, f.bracket(x, y)));
                       if (!f.equal(s, {})) return false;
                     }
                 return true;
               }});
  v.push_back({"Howe commutation of zeta_n and g_n", "[zeta_n(f_m), g_n] = 0 on the Fock space", false,
               [=](bool, std::string&) {
                 FmData f(m, kind);
                 FockSpace fs(m, n);
                 auto G = gn_fock_ops(fs, pr);
                 for (auto [a, b] : f.basis()) {
                   SpMat z = liealg::zeta(f, fs, pr, a, b);
                   for (auto& g : G)
                     if (!commutator(z, g).is_zero()) return false;
                 }
                 return true;
               }});
  v.push_back({"beta_m commutes with the diagonal f_m action", "f_m-invariance of the beta_m image", true,
               [=](bool fault, std::string&) {
                 FmData f(m, kind);
                 FmRep V = modules::fm_trivial(f);
                 auto B = maybe(modules::beta_m(pr, V), fault);
                 for (auto [a, b] : f.basis())
                   if (!commutes(B, modules::fm_diag_action(pr, V, a, b))) return false;
                 return true;
               }});
  return v;
}

std::vector<CheckItem> braid(const SuiteConfig& cfg) {
  const int m = cfg.m, n = cfg.n;
  Case kind = cfg.kind;
  Pairing pr = Pairing::standard(n, kind);
  std::vector<CheckItem> v;
  v.push_back({"braid relations on f_m", "braid group action on f_m", false, [=](bool, std::string& d) {
                 FmData f(m, kind);
                 for (auto& [a, b] : braid_relations(m))
                   for (auto [p, q] : f.basis()) {
                     auto x = FmData::basis_symbol(p, q);
                     if (!f.equal(weyl::braid_on_fm(f, a, x), weyl::braid_on_fm(f, b, x))) {
                       d = "relation fails on F_" + std::to_string(p) + "," + std::to_string(q);
                       return false;
                     }
                   }
                 return true;
               }});
  v.push_back({"braid relations on the Clifford algebra", "braid group action on the Clifford algebra", false,
               [=](bool, std::string&) {
                 FockSpace fs(m, n);
                 for (auto& [a, b] : braid_relations(m)) {
                   SpMat U = weyl::braid_on_clifford(fs, pr, a), W = weyl::braid_on_clifford(fs, pr, b);
                   for (int r = 1; r <= m; ++r)
                     for (int i = 1; i <= n; ++i)
                       for (auto g : {fock::creation(fs, r, i), fock::annihilation(fs, r, i)})
                         if (fock::conjugate(U, g) != fock::conjugate(W, g)) return false;
                 }
                 return true;
               }});
  v.push_back({"equivariance of zeta_n", "zeta_n intertwines the two braid actions", false, [=](bool, std::string&) {
                 FmData f(m, kind);
                 FockSpace fs(m, n);
                 for (int a = 1; a <= m; ++a) {
                   SpMat W = weyl::braid_letter_on_clifford(fs, pr, a);
                   for (auto [p, q] : f.basis())
                     if (fock::conjugate(W, liealg::zeta(f, fs, pr, p, q)) !=
                         liealg::zeta(f, fs, pr, weyl::braid_letter_on_fm(f, a, FmData::basis_symbol(p, q))))
                       return false;
                 }
                 return true;
               }});
  v.push_back({"beta_m is fixed by the braid lifts", "invariance of the beta_m image under the braid action", true,
               [=](bool fault, std::string& d) {
                 FmData f(m, kind);
                 FockSpace fs(m, n);
                 // V trivial, and V = G(C^m (x) C^k) carrying its own lift
                 auto B0 = maybe(modules::beta_m(pr, modules::fm_trivial(f)), fault);
                 for (int a = 1; a <= m; ++a) {
                   SpMat W = weyl::braid_letter_on_clifford(fs, pr, a);
                   if (!beta_invariant(B0, W, fock::signed_perm_inverse(W))) {
                     d = "trivial V, letter " + std::to_string(a);
                     return false;
                   }
                 }
                 const int k = kind == Case::Symp ? 2 : 1;
                 if (m * (n + k) > 8) return true;
                 FockSpace fk(m, k);
                 Pairing pk = Pairing::standard(k, kind);
                 auto B = modules::beta_m(pr, modules::fm_fock(f, k));
                 for (int a = 1; a <= m; ++a) {
                   SpMat W = kron(weyl::braid_letter_on_clifford(fk, pk, a), weyl::braid_letter_on_clifford(fs, pr, a));
                   if (!beta_invariant(B, W, fock::signed_perm_inverse(W))) {
                     d = "Fock V, letter " + std::to_string(a);
                     return false;
                   }
                 }
                 return true;
               }});
  return v;
}

std::vector<CheckItem> beta(const SuiteConfig& cfg) {
  const int m = cfg.m, n = cfg.n, l = cfg.l, K = std::min(cfg.K, 10);
  Case kind = cfg.kind;
  Pairing pr = Pairing::standard(n, kind);
  std::vector<CheckItem> v;
  v.push_back({"reflection equation for beta_m", "beta_m on V (x) G(C^m (x) C^n), V defining", true,
               [=](bool fault, std::string& d) {
                 FmData f(m, kind);
                 return reflection(maybe(modules::beta_m(pr, modules::fm_defining(f)), fault), d);
               }});
  v.push_back({"central series of beta_m", "O(u) O(-u) = 1, O central", false, [=](bool, std::string& d) {
                 FmData f(m, kind);
                 return central_series(modules::beta_m(pr, modules::fm_defining(f)), d);
               }});
  v.push_back({"transpose identity for the f_m resolvent", "F(u) transposed against F(-u - m +- 1/2)", false,
               [=](bool, std::string&) { return modules::f_transpose_check(modules::fm_defining(FmData(m, kind))); }});
  v.push_back({"product identity for W(u)", "W(u) W(-u) identity", false,
               [=](bool, std::string&) { return modules::w_product_check(modules::fm_defining(FmData(m, kind))); }});
  v.push_back({"symmetry of beta-tilde", "symmetry of W~(u) beta_m(S(u)) to order K", false, [=](bool, std::string&) {
                 return modules::beta_tilde_symmetry_check(pr, modules::fm_defining(FmData(m, kind)), K);
               }});
  v.push_back({"F_delta twists", "reflection equation for every F_delta", false, [=](bool, std::string& d) {
                 FmData f(m, kind);
                 FmRep V = modules::fm_defining(f);
                 for (int mask = 0; mask < (1 << m); ++mask) {
                   std::vector<int> delta(m);
                   for (int a = 0; a < m; ++a) delta[a] = (mask >> a) & 1 ? -1 : 1;
                   if (!reflection(modules::f_delta(pr, V, delta), d)) return false;
                 }
                 return true;
               }});
  if (l > 0) {
    v.push_back({"Harish-Chandra image of 1 + Z(u)", "1 + Z(u) on highest vectors", false, [=](bool, std::string&) {
                   for (auto& U : {modules::gl_trivial(l), modules::gl_defining(l), modules::gl_dual(l)})
                     if (!modules::hc_check(U) || !modules::resolvent_transpose_check(U)) return false;
                   return true;
                 }});
    v.push_back({"twisted tensor product", "reflection equation for the twisted coaction", false,
                 [=](bool, std::string& d) {
                   FmData f(m, kind);
                   return reflection(modules::twisted_tensor(pr, modules::fm_trivial(f), modules::gl_defining(l)), d);
                 }});
  }
  return v;
}

std::vector<CheckItem> olshanski(const SuiteConfig& cfg) {
  const int m = cfg.m, n = cfg.n, l = cfg.l;
  Case kind = cfg.kind;
  std::vector<CheckItem> v;
  v.push_back({"Schur complement against the compositional route", "two constructions of the Olshanski image", false,
               [=](bool, std::string&) {
                 return modules::olshanski_gamma(m, n, l, kind).equals(modules::olshanski_compositional(m, n, l, kind));
               }});
  v.push_back({"Olshanski image equals twisted beta_m", "zero defect between gamma_l and the f(u)-twisted beta_m",
               true, [=](bool fault, std::string& d) {
                 auto g = modules::olshanski_gamma(m, n, l, kind);
                 auto b = maybe(modules::olshanski_beta(m, n, l, kind), fault);
                 OpMatrix diff = (g.M - b.M).reduced();
                 int defects = 0;
                 for (int i = 0; i < n; ++i)
                   for (int j = 0; j < n; ++j)
                     if (!diff.num(i, j).is_zero()) ++defects;
                 d = "defect entries " + std::to_string(defects);
                 return defects == 0;
               }});
  return v;
}

std::vector<CheckItem> isis(const SuiteConfig& cfg) {
  const int m = cfg.m, n = cfg.n;
  Case kind = cfg.kind;
  if (static_cast<int>(cfg.generic.size()) < m) throw UsageError("not enough generic parameters");
  liealg::Weight mu(cfg.generic.begin(), cfg.generic.begin() + m);
  std::vector<CheckItem> v;
  v.push_back({"elementary commutant", "one-dimensional commutant for a simple reflection", true,
               [=](bool fault, std::string& d) {
                 std::vector<int> nu(m, 1);
                 nu[0] = n;
                 liealg::Weight lam;
                 for (int a = 0; a < m; ++a) lam.push_back(rat(n, 2) + mu[a] - nu[a]);
                 auto src = modules::verma_model(mu, lam, kind, n);
                 // so_2 has no solvable letter; the self-commutant stands in
                 bool solvable = kind == Case::Symp || m > 1;
                 auto sigma = solvable ? weyl::SignedPerm::generator(m, 1) : weyl::SignedPerm::identity(m);
                 auto tgt = modules::siverma_model(mu, lam, sigma, kind, n);
                 auto basis = intertwine::solve_commutant(src.real, maybe(tgt.real, fault));
                 d = "dimension " + std::to_string(basis.size());
                 return basis.size() == 1;
               }});
  v.push_back({"composite intertwiners", "image of the highest vector is the prod z_eta multiple of the target",
               false, [=](bool, std::string& d) {
                 int total = 1;
                 for (int a = 0; a < m; ++a) total *= n + 1;
                 for (int code = 0; code < total; ++code) {
                   liealg::Weight lam;
                   int c = code;
                   for (int a = 0; a < m; ++a) {
                     lam.push_back(rat(n, 2) + mu[a] - (c % (n + 1)));
                     c /= n + 1;
                   }
                   for (auto& s : weyl::all_perms(m)) {
                     auto r = intertwine::verify_isis(s, mu, lam, n, kind);
                     if (!r.pass()) {
                       d = r.to_json();
                       return false;
                     }
                   }
                 }
                 return true;
               }});
  return v;
}

}  // namespace

Realization perturbed(const Realization& X) {
  Realization r = X;
  OpMatrix b(X.n(), X.n(), X.dim());
  OpPoly p(X.dim());
  p.c = {SpMat::unit(X.dim(), X.dim(), 0, X.dim() - 1)};
  b.num(0, X.n() - 1) = p;
  b.set_den(UPoly::x());
  r.M = (X.M + b).reduced();
  return r;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"axioms", "clifford", "liealg", "braid", "beta", "olshanski", "isis"};
  return names;
}

void validate(const SuiteConfig& cfg) {
  if (cfg.m < 1 || cfg.n < 1 || cfg.l < 0) throw UsageError("m and n must be positive and l non-negative");
  if (cfg.kind == Case::Symp && cfg.n % 2) throw UsageError("symp needs even n");
  if (cfg.kind == Case::Symp && cfg.l % 2) throw UsageError("symp needs even l");
  if (cfg.m * (cfg.n + cfg.l) > 12) throw UsageError("dimension guard: 2^{m(n+l)} exceeds 2^12");
  if (cfg.K < 1) throw UsageError("truncation order must be positive");
  if (cfg.threads < 1) throw UsageError("thread count must be positive");
  for (auto& s : cfg.suites)
    if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
      throw UsageError("unknown suite " + s);
}

std::vector<CheckItem> suite_items(const std::string& suite, const SuiteConfig& cfg) {
  if (suite == "axioms") return axioms(cfg);
  if (suite == "clifford") return clifford(cfg);
  if (suite == "liealg") return liealg_suite(cfg);
  if (suite == "braid") return braid(cfg);
  if (suite == "beta") return beta(cfg);
  if (suite == "olshanski") return olshanski(cfg);
  if (suite == "isis") return isis(cfg);
  throw UsageError("unknown suite " + suite);
}

std::vector<CheckResult> run_suite(const std::string& suite, const SuiteConfig& cfg) {
  auto items = suite_items(suite, cfg);
  std::vector<CheckResult> out(items.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t k = next++; k < items.size(); k = next++) {
      auto& it = items[k];
      CheckResult r{suite, it.name, it.anchor, false, cfg.inject_fault && it.fault_target, ""};
      try {
        r.pass = it.run(r.faulted, r.detail);
      } catch (const std::exception& e) {
        r.pass = false;
        r.detail = e.what();
      }
      out[k] = std::move(r);
    }
  };
  const int workers = std::min<int>(cfg.threads, static_cast<int>(items.size()));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return out;
}

std::vector<CheckResult> run_all(const SuiteConfig& cfg) {
  std::vector<CheckResult> all;
  const auto& names = cfg.suites.empty() ? suite_names() : cfg.suites;
  for (auto& s : names) {
    auto r = run_suite(s, cfg);
    all.insert(all.end(), r.begin(), r.end());
  }
  return all;
}

bool all_pass(const std::vector<CheckResult>& r) {
  return std::all_of(r.begin(), r.end(), [](const CheckResult& c) { return c.pass; });
}

std::string report_json(const SuiteConfig& cfg, const std::vector<CheckResult>& r) {
  nlohmann::json j;
  j["schema"] = 1;
  j["case"] = liealg::case_name(cfg.kind);
  j["m"] = cfg.m;
  j["n"] = cfg.n;
  j["l"] = cfg.l;
  j["K"] = cfg.K;
  j["inject_fault"] = cfg.inject_fault;
  auto checks = nlohmann::json::array();
  for (auto& c : r) {
    nlohmann::json e{{"suite", c.suite}, {"name", c.name}, {"anchor", c.anchor}, {"pass", c.pass}};
    if (c.faulted) e["faulted"] = true;
    if (!c.detail.empty() && !c.pass) e["detail"] = c.detail;
    checks.push_back(e);
  }
  j["checks"] = checks;
  j["pass"] = all_pass(r);
  return j.dump(2);
}

}  // namespace xgn::harness
