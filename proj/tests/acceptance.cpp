// Acceptance run: every criterion exactly, one line each.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "xgn/harness.hpp"

using namespace xgn;
using harness::perturbed;
using liealg::Case;
using liealg::FmData;
using liealg::Pairing;
using yangian::Realization;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) note = what;
    pass = pass && ok;
  }
};

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

std::vector<std::pair<int, Case>> cases_up_to(int n_max, int n_min = 1) {
  std::vector<std::pair<int, Case>> r;
  for (int n = n_min; n <= n_max; ++n) {
    r.push_back({n, Case::Orth});
    if (n % 2 == 0) r.push_back({n, Case::Symp});
  }
  return r;
}

bool commutes(const Realization& X, const SpMat& op) {
  for (int i = 0; i < X.n(); ++i)
    for (int j = 0; j < X.n(); ++j)
      for (auto& c : X.M.num(i, j).c)
        if (!commutator(c, op).is_zero()) return false;
  return true;
}

bool central_ok(const Realization& S) {
  OpMatrix O;
  try {
    O = yangian::compute_O(S);
  } catch (const MathError&) {
    return false;
  }
  if (!(O * O.substitute(-1, 0)).equals(OpMatrix::identity(1, S.dim()))) return false;
  for (auto& c : O.num(0, 0).c)
    if (!commutes(S, c)) return false;
  return true;
}

std::string tag(const std::string& s, int n, Case k) { return s + " n=" + std::to_string(n) + " " + liealg::case_name(k); }

Outcome c1_unitarity() {
  Outcome o;
  for (int n = 2; n <= 4; ++n) {
    OpMatrix one = OpMatrix::identity(1, n * n);
    OpMatrix R = yangian::r_matrix(n);
    o.require((R * R.substitute(-1, 0)).equals(one.scaled(RatFunc(UPoly({1, 0, -1})))), "R n=" + std::to_string(n));
    for (auto k : {Case::Orth, Case::Symp}) {
      if (k == Case::Symp && n % 2) continue;
      OpMatrix Rp = yangian::r_prime_matrix(Pairing::standard(n, k));
      o.require((Rp * Rp.substitute(-1, n)).equals(one.scaled(RatFunc(UPoly({0, n, -1})))), tag("R'", n, k));
    }
  }
  return o;
}

Outcome c2_rtt() {
  Outcome o;
  for (auto [n, k] : cases_up_to(3)) {
    auto pr = Pairing::standard(n, k);
    o.require(yangian::check_rtt(yangian::eval_hom(pr, gl_defining_ops(n))).pass, tag("eval", n, k));
    o.require(yangian::check_rtt(modules::p_module(pr, rat(1, 3))).pass, tag("P_z", n, k));
  }
  for (auto k : {Case::Orth, Case::Symp})
    o.require(yangian::check_rtt(modules::alpha_l(Pairing::standard(2, k), modules::gl_defining(2))).pass,
              "alpha_2");
  return o;
}

Outcome c3_reflection() {
  Outcome o;
  for (auto [n, k] : std::vector<std::pair<int, Case>>{{2, Case::Orth}, {3, Case::Orth}, {2, Case::Symp}, {4, Case::Symp}}) {
    auto pr = Pairing::standard(n, k);
    o.require(yangian::check_reflection(yangian::pi_n(pr, gn_defining_ops(pr))).pass, tag("pi_n", n, k));
  }
  for (auto [n, k] : std::vector<std::pair<int, Case>>{{2, Case::Orth}, {3, Case::Orth}, {2, Case::Symp}})
    for (int m = 1; m <= 2; ++m) {
      auto pr = Pairing::standard(n, k);
      o.require(yangian::check_reflection(modules::beta_m(pr, modules::fm_defining(FmData(m, k)))).pass,
                tag("beta_" + std::to_string(m), n, k));
    }
  for (auto k : {Case::Orth, Case::Symp}) {
    auto pr = Pairing::standard(2, k);
    auto V = modules::fm_defining(FmData(2, k));
    for (auto delta : std::vector<std::vector<int>>{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}})
      o.require(yangian::check_reflection(modules::f_delta(pr, V, delta)).pass, tag("F_delta", 2, k));
    o.require(yangian::check_reflection(
                  modules::twisted_tensor(pr, modules::fm_defining(FmData(1, k)), modules::gl_defining(1)))
                  .pass,
              tag("twisted tensor", 2, k));
  }
  return o;
}

Outcome c4_central() {
  Outcome o;
  for (auto [n, k] : std::vector<std::pair<int, Case>>{{2, Case::Orth}, {3, Case::Orth}, {2, Case::Symp}, {4, Case::Symp}}) {
    auto pr = Pairing::standard(n, k);
    auto S = yangian::pi_n(pr, gn_defining_ops(pr));
    o.require(yangian::compute_O(S).equals(OpMatrix::identity(1, S.dim())), tag("O on pi_n", n, k));
  }
  for (auto [n, k] : std::vector<std::pair<int, Case>>{{2, Case::Orth}, {3, Case::Orth}, {2, Case::Symp}})
    for (int m = 1; m <= 2; ++m) {
      if (m == 2 && n == 3) continue;
      auto B = modules::beta_m(Pairing::standard(n, k), modules::fm_defining(FmData(m, k)));
      o.require(central_ok(B), tag("O on beta_" + std::to_string(m), n, k));
    }
  return o;
}

Outcome c5_symmetry() {
  Outcome o;
  for (auto [n, k] : cases_up_to(3, 2)) {
    auto pr = Pairing::standard(n, k);
    auto T = yangian::eval_hom(pr, gl_defining_ops(n));
    auto T2 = yangian::coproduct(yangian::tau_shift(T, rat(1, 3)), yangian::tau_shift(T, rat(2, 7)));
    o.require(yangian::check_symmetry(yangian::sym_from_T(T2)), tag("sym_from_T", n, k));
    o.require(yangian::check_symmetry(modules::verma_model({rat(5, 7)}, {rat(5, 7)}, k, n).real),
              tag("tensor model", n, k));
  }
  for (auto k : {Case::Orth, Case::Symp})
    o.require(modules::beta_tilde_symmetry_check(Pairing::standard(2, k), modules::fm_defining(FmData(1, k)), 10),
              tag("beta-tilde K=10", 2, k));
  return o;
}

Outcome c6_resolvent() {
  Outcome o;
  for (int m = 1; m <= 2; ++m)
    for (auto k : {Case::Orth, Case::Symp}) {
      auto V = modules::fm_defining(FmData(m, k));
      o.require(modules::f_transpose_check(V), "transpose identity m=" + std::to_string(m));
      o.require(modules::w_product_check(V), "W product m=" + std::to_string(m));
    }
  return o;
}

Outcome c7_howe_commutation() {
  Outcome o;
  for (int m = 1; m <= 2; ++m)
    for (auto [n, k] : cases_up_to(3)) {
      auto pr = Pairing::standard(n, k);
      FmData f(m, k);
      fock::FockSpace fs(m, n);
      for (auto& V : {modules::fm_trivial(f), modules::fm_defining(f)}) {
        auto B = modules::beta_m(pr, V);
        for (auto [a, b] : f.basis())
          o.require(commutes(B, modules::fm_diag_action(pr, V, a, b)), tag("beta_m vs f_m", n, k));
      }
      for (auto [a, b] : f.basis()) {
        SpMat z = liealg::zeta(f, fs, pr, a, b);
        for (int i = 1; i <= n; ++i)
          for (int j = 1; j <= n; ++j)
            o.require(commutator(z, liealg::gn_action(fs, pr, i, j)).is_zero(), tag("zeta_n vs g_n", n, k));
      }
    }
  return o;
}

Outcome c8_braid() {
  Outcome o;
  for (int m = 1; m <= 3; ++m)
    for (auto [n, k] : cases_up_to(3)) {
      harness::SuiteConfig cfg;
      cfg.kind = k, cfg.m = m, cfg.n = n;
      auto res = harness::run_suite("braid", cfg);
      for (auto& r : res) {
        o.require(r.pass, r.name + " m=" + std::to_string(m) + " " + tag("", n, k));
      }
    }
  return o;
}

Outcome c9_harish_chandra() {
  Outcome o;
  std::vector<modules::GlRep> reps = {modules::gl_trivial(1), modules::gl_defining(1), modules::gl_dual(1),
                                      modules::gl_trivial(2), modules::gl_defining(2), modules::gl_dual(2),
                                      modules::gl_exterior(2, 2)};
  for (auto& U : reps) {
    o.require(modules::hc_check(U), "highest-vector scalar, l=" + std::to_string(U.l));
    o.require(modules::resolvent_transpose_check(U), "resolvent transpose, l=" + std::to_string(U.l));
  }
  return o;
}

Outcome c10_isis(std::string& extra) {
  Outcome o;
  liealg::Weight mu{rat(5, 7), rat(2, 11)};
  int two_words = 0, sigmas = 0;
  for (auto k : {Case::Symp, Case::Orth})
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b <= 2; ++b) {
        liealg::Weight lam{1 + mu[0] - a, 1 + mu[1] - b};
        for (auto& s : weyl::all_perms(2)) {
          auto r = intertwine::verify_isis(s, mu, lam, 2, k);
          std::string where = std::string(liealg::case_name(k)) + " nu=" + std::to_string(a) + std::to_string(b);
          o.require(r.pass(), where + ": " + (r.violations.empty() ? "" : r.violations[0]));
          o.require(r.commutants_one && r.images_parallel && r.words_agree, where);
          o.require(r.direct_dim == 1 && r.direct_agrees, where + " direct route");
          o.require(r.composite_multiplier == r.predicted, where + " multiplier");
          if (k == Case::Symp && a == 0 && b == 0) {
            ++sigmas;
            if (r.words.size() == 2) ++two_words;
          }
        }
      }
  extra = std::to_string(two_words) + "/" + std::to_string(sigmas) +
          " sp elements admit a second reduced word; every element also matched the one-shot intertwiner";
  return o;
}

Outcome c11_olshanski() {
  Outcome o;
  for (auto [k, m, n, l] : std::vector<std::tuple<Case, int, int, int>>{
           {Case::Orth, 1, 2, 1}, {Case::Orth, 1, 2, 2}, {Case::Symp, 1, 2, 2}}) {
    auto r = modules::olshanski_check(m, n, l, k);
    std::string where = std::string(liealg::case_name(k)) + " l=" + std::to_string(l);
    o.require(r.routes_agree, where + " routes");
    o.require(r.equal_to_beta && r.defect_entries == 0, where + " defect");
  }
  return o;
}

Outcome c12_howe_count() {
  Outcome o;
  o.require(modules::howe_commutant_dimension(1, 2, Case::Symp) == 2, "joint commutant dimension");
  o.require(modules::howe_partition_count(1, 2, Case::Symp) == 2, "partition count");
  o.require(modules::howe_dimension_sum_sp(2) == 4 && 2 * 1 + 1 * 2 == (1 << 2), "dimension identity");
  return o;
}

Outcome c13_negative() {
  Outcome o;
  // every suite fails on exactly its perturbed check
  for (auto [k, m, n, l] : std::vector<std::tuple<Case, int, int, int>>{{Case::Symp, 1, 2, 2}, {Case::Orth, 2, 2, 1}}) {
    harness::SuiteConfig cfg;
    cfg.kind = k, cfg.m = m, cfg.n = n, cfg.l = l, cfg.inject_fault = true;
    for (auto& s : harness::suite_names()) {
      if (s == "beta" && m == 2) continue;
      auto res = harness::run_suite(s, cfg);
      int faulted = 0;
      for (auto& r : res) {
        if (r.faulted) {
          ++faulted;
          o.require(!r.pass, s + " ignored the fault");
        } else {
          o.require(r.pass, s + ": " + r.name + " failed without a fault");
        }
      }
      o.require(faulted == 1, s + " has one fault target");
    }
  }
  // the same perturbation against the criteria's own checks
  auto pr = Pairing::standard(2, Case::Symp);
  auto T = yangian::eval_hom(pr, gl_defining_ops(2));
  o.require(!yangian::check_rtt(perturbed(T)).pass, "RTT");
  o.require(!yangian::check_rtt(perturbed(modules::alpha_l(pr, modules::gl_defining(2)))).pass, "RTT alpha");
  auto B = modules::beta_m(pr, modules::fm_defining(FmData(1, Case::Symp)));
  o.require(!yangian::check_reflection(perturbed(B)).pass, "reflection");
  o.require(!yangian::check_reflection_blockwise(perturbed(B)), "reflection blockwise");
  o.require(!central_ok(perturbed(B)), "central series");
  auto Y = yangian::sym_from_T(yangian::coproduct(yangian::tau_shift(T, rat(1, 3)), T));
  o.require(!yangian::check_symmetry(perturbed(Y)), "symmetry");
  auto B0 = modules::beta_m(pr, modules::fm_trivial(FmData(1, Case::Symp)));
  bool all_commute = true;
  for (auto [a, b] : FmData(1, Case::Symp).basis())
    all_commute = all_commute && commutes(perturbed(B0), modules::fm_diag_action(pr, modules::fm_trivial(FmData(1, Case::Symp)), a, b));
  o.require(!all_commute, "Howe commutation");
  auto g = modules::olshanski_gamma(1, 2, 2, Case::Symp);
  o.require(!g.equals(perturbed(modules::olshanski_beta(1, 2, 2, Case::Symp))), "Olshanski defect");
  liealg::Weight mu{rat(5, 7), rat(2, 11)}, lam{1 + mu[0] - 2, 1 + mu[1] - 1};
  auto src = modules::verma_model(mu, lam, Case::Symp, 2);
  auto tgt = modules::siverma_model(mu, lam, weyl::SignedPerm::generator(2, 1), Case::Symp, 2);
  o.require(intertwine::solve_commutant(src.real, perturbed(tgt.real)).empty(), "elementary commutant");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    std::function<Outcome(std::string&)> run;
  };
  auto plain = [](Outcome (*f)()) { return [f](std::string&) { return f(); }; };
  std::vector<Criterion> crit = {
      {1, "R-matrix unitarity", plain(c1_unitarity)},
      {2, "RTT relation", plain(c2_rtt)},
      {3, "reflection equation", plain(c3_reflection)},
      {4, "central series", plain(c4_central)},
      {5, "symmetry relation and beta-tilde", plain(c5_symmetry)},
      {6, "resolvent transpose and W product identities", plain(c6_resolvent)},
      {7, "Howe pair commutation", plain(c7_howe_commutation)},
      {8, "braid suite", plain(c8_braid)},
      {9, "Harish-Chandra image and resolvent transpose for gl_l", plain(c9_harish_chandra)},
      {10, "intertwiners and z_eta multipliers", c10_isis},
      {11, "Olshanski realization", plain(c11_olshanski)},
      {12, "Howe commutant count", plain(c12_howe_count)},
      {13, "negative controls", plain(c13_negative)},
  };
  int failed = 0;
  for (auto& c : crit) {
    auto t0 = std::chrono::steady_clock::now();
    std::string extra;
    Outcome o;
    try {
      o = c.run(extra);
    } catch (const std::exception& e) {
      o.pass = false;
      o.note = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %2d %s [%.2fs]%s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), secs,
                o.pass ? "" : (" -- " + o.note).c_str(), extra.empty() ? "" : (" (" + extra + ")").c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(crit.size()) - failed, crit.size());
  return failed == 0 ? 0 : 1;
}
