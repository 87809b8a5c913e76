// xgn: verification suites, intertwiners, Olshanski reports, series expansions
// and module dumps. JSON on stdout, diagnostics on stderr.
//
// Exit codes: 0 pass, 1 check failure, 2 usage or guard, 3 genericity.

#include <cstdlib>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "xgn/harness.hpp"
#include "xgn/intertwine.hpp"

using namespace xgn;
using nlohmann::json;

namespace {

constexpr int kPass = 0, kFail = 1, kUsage = 2, kGeneric = 3;

std::vector<BigRat> parse_list(const std::string& s) {
  std::vector<BigRat> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) out.push_back(parse_rat(tok));
  return out;
}

std::vector<int> parse_word(const std::string& s) {
  std::vector<int> out;
  for (auto& q : parse_list(s)) {
    if (q.get_den() != 1) throw harness::UsageError("word letters must be integers");
    out.push_back(static_cast<int>(q.get_num().get_si()));
  }
  return out;
}

json matrix_json(const SpMat& A) {
  json rows = json::array();
  for (int i = 0; i < A.rows(); ++i) {
    json r = json::array();
    for (int j = 0; j < A.cols(); ++j) r.push_back(to_string(A.get(i, j)));
    rows.push_back(r);
  }
  return rows;
}

// coefficient list for a 1 x 1 operator matrix; scalars print as numbers
json series_json(const OpMatrix& M, int K) {
  auto grid = M.laurent(K);
  json out = json::array();
  for (auto& g : grid) {
    const SpMat& c = g[0];
    if (c.rows() == 1) out.push_back(to_string(c.get(0, 0)));
    else out.push_back(matrix_json(c));
  }
  return out;
}

// FNV-1a over the reduced entries
std::string realization_hash(const yangian::Realization& X) {
  OpMatrix M = X.M.reduced();
  std::ostringstream s;
  s << M.den().str() << ";";
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j) {
      const OpPoly& p = M.num(i, j);
      for (size_t k = 0; k < p.c.size(); ++k)
        for (int col = 0; col < p.c[k].cols(); ++col)
          for (auto& [row, v] : p.c[k].col(col)) s << i << "," << j << "," << k << "," << row << "," << col << "=" << v << ";";
    }
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s.str()) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  std::ostringstream hex;
  hex << std::hex << h;
  return hex.str();
}

int default_threads() {
  const char* env = std::getenv("XGN_THREADS");
  if (!env) return 1;
  int t = std::atoi(env);
  return t > 0 ? t : 1;
}

liealg::Case parse_case_or_usage(const std::string& s) {
  try {
    return liealg::parse_case(s);
  } catch (const std::exception&) {
    throw harness::UsageError("case must be orth or symp");
  }
}

modules::FmRep fm_rep(const std::string& rep, const liealg::FmData& f) {
  if (rep == "trivial") return modules::fm_trivial(f);
  if (rep == "defining") return modules::fm_defining(f);
  throw harness::UsageError("f_m representation must be trivial or defining");
}

modules::GlRep gl_rep(const std::string& rep, int l) {
  if (rep == "trivial") return modules::gl_trivial(l);
  if (rep == "defining") return modules::gl_defining(l);
  if (rep == "dual") return modules::gl_dual(l);
  throw harness::UsageError("gl_l representation must be trivial, defining or dual");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact checks for twisted Yangian realizations"};
  app.require_subcommand(1);

  std::string kind_s = "orth";
  int m = 1, n = 2, l = 0, K = 12, threads = default_threads();
  std::vector<std::string> suites;
  bool fault = false;
  std::string mu_s, lambda_s, nu_s, word_s, what, rep = "trivial", module = "verma";

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--case", kind_s, "orth or symp");
  verify->add_option("--m", m);
  verify->add_option("--n", n);
  verify->add_option("--l", l);
  verify->add_option("--K", K, "truncation order");
  verify->add_option("--suite", suites, "axioms, clifford, liealg, braid, beta, olshanski, isis");
  verify->add_option("--threads", threads);
  verify->add_flag("--inject-fault", fault, "perturb one realization entry per suite by u^-1");

  auto* inter = app.add_subcommand("intertwiner", "composite intertwiner along a word");
  inter->add_option("--case", kind_s);
  inter->add_option("--m", m);
  inter->add_option("--n", n);
  inter->add_option("--mu", mu_s, "comma-separated rationals")->required();
  inter->add_option("--lambda", lambda_s, "comma-separated rationals");
  inter->add_option("--nu", nu_s, "degrees; lambda = n/2 + mu - nu");
  inter->add_option("--word", word_s, "comma-separated letters, first acts first");

  auto* olsh = app.add_subcommand("olshanski", "Olshanski realization report");
  olsh->add_option("--case", kind_s);
  olsh->add_option("--m", m);
  olsh->add_option("--n", n);
  olsh->add_option("--l", l);

  auto* expand = app.add_subcommand("expand", "Laurent coefficients at infinity");
  expand->add_option("--what", what, "O, Z, W or f")->required();
  expand->add_option("--case", kind_s);
  expand->add_option("--m", m);
  expand->add_option("--n", n);
  expand->add_option("--l", l);
  expand->add_option("--rep", rep, "trivial, defining or dual");
  expand->add_option("--K", K);

  auto* dump = app.add_subcommand("dump", "serialize a module");
  dump->add_option("--module", module, "verma, siverma, beta, pi or p");
  dump->add_option("--case", kind_s);
  dump->add_option("--m", m);
  dump->add_option("--n", n);
  dump->add_option("--mu", mu_s);
  dump->add_option("--lambda", lambda_s);
  dump->add_option("--nu", nu_s);
  dump->add_option("--word", word_s);
  dump->add_option("--rep", rep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    liealg::Case kind = parse_case_or_usage(kind_s);
    json out;
    out["schema"] = 1;

    if (verify->parsed()) {
      harness::SuiteConfig cfg;
      cfg.kind = kind, cfg.m = m, cfg.n = n, cfg.l = l, cfg.K = K;
      cfg.suites = suites, cfg.inject_fault = fault, cfg.threads = threads;
      harness::validate(cfg);
      auto res = harness::run_all(cfg);
      std::cout << harness::report_json(cfg, res) << "\n";
      for (auto& r : res)
        if (!r.pass) std::cerr << "FAIL " << r.suite << ": " << r.name << "\n";
      return harness::all_pass(res) ? kPass : kFail;
    }

    auto labels = [&](liealg::Weight& mu, liealg::Weight& lambda) {
      mu = parse_list(mu_s);
      if (static_cast<int>(mu.size()) != m) throw harness::UsageError("mu needs m labels");
      if (!lambda_s.empty()) {
        lambda = parse_list(lambda_s);
      } else if (!nu_s.empty()) {
        auto nu = parse_list(nu_s);
        if (nu.size() != mu.size()) throw harness::UsageError("nu needs m entries");
        for (size_t a = 0; a < mu.size(); ++a) lambda.push_back(rat(n, 2) + mu[a] - nu[a]);
      } else {
        throw harness::UsageError("give --lambda or --nu");
      }
      if (lambda.size() != mu.size()) throw harness::UsageError("lambda needs m labels");
      if (kind == liealg::Case::Symp && n % 2) throw harness::UsageError("symp needs even n");
    };

    if (inter->parsed()) {
      liealg::Weight mu, lambda;
      labels(mu, lambda);
      auto word = parse_word(word_s);
      for (int a : word)
        if (a < 1 || a > m) throw harness::UsageError("letters run from 1 to m");
      auto sigma = weyl::word_to_perm(m, word);
      auto rep_i = intertwine::verify_isis_word(word, mu, lambda, n, kind);
      out["case"] = liealg::case_name(kind);
      out["word"] = word;
      out["report"] = json::parse(rep_i.to_json());
      if (!rep_i.composites.empty()) out["matrix"] = matrix_json(rep_i.composites[0]);
      json factors = json::array();
      if (!rep_i.zero_module)
        for (auto& f : intertwine::predicted_factors(sigma, mu, lambda, n, kind))
          factors.push_back({{"root", f.eta}, {"z", to_string(f.value)}});
      out["predicted_factors"] = factors;
      out["multiplier"] = to_string(rep_i.composite_multiplier);
      out["predicted"] = to_string(rep_i.predicted);
      out["pass"] = rep_i.pass();
      std::cout << out.dump(2) << "\n";
      return rep_i.pass() ? kPass : kFail;
    }

    if (olsh->parsed()) {
      harness::SuiteConfig cfg;
      cfg.kind = kind, cfg.m = m, cfg.n = n, cfg.l = l;
      harness::validate(cfg);
      auto g = modules::olshanski_gamma(m, n, l, kind);
      auto c = modules::olshanski_compositional(m, n, l, kind);
      auto rep_o = modules::olshanski_check(m, n, l, kind);
      out["case"] = liealg::case_name(kind);
      out["m"] = m, out["n"] = n, out["l"] = l;
      out["routes_agree"] = rep_o.routes_agree;
      out["defect_entries"] = rep_o.defect_entries;
      out["schur_complement_hash"] = realization_hash(g);
      out["compositional_hash"] = realization_hash(c);
      out["pass"] = rep_o.pass();
      std::cout << out.dump(2) << "\n";
      return rep_o.pass() ? kPass : kFail;
    }

    if (expand->parsed()) {
      if (K < 0) throw harness::UsageError("K must be non-negative");
      out["what"] = what;
      out["K"] = K;
      if (what == "f") {
        if (kind == liealg::Case::Symp && l % 2) throw harness::UsageError("symp needs even l");
        RatFunc f = modules::olshanski_f(m, l, kind);
        auto s = expand_at_infinity(f, K);
        json c = json::array();
        for (auto& q : s.c) c.push_back(to_string(q));
        out["function"] = f.str();
        out["coefficients"] = c;
      } else if (what == "Z") {
        if (l < 1) throw harness::UsageError("Z needs l >= 1");
        out["coefficients"] = series_json(modules::z_series(gl_rep(rep, l)), K);
      } else if (what == "W") {
        out["coefficients"] = series_json(modules::w_series(fm_rep(rep, liealg::FmData(m, kind))), K);
      } else if (what == "O") {
        harness::SuiteConfig cfg;
        cfg.kind = kind, cfg.m = m, cfg.n = n;
        harness::validate(cfg);
        auto B = modules::beta_m(liealg::Pairing::standard(n, kind), fm_rep(rep, liealg::FmData(m, kind)));
        out["coefficients"] = series_json(yangian::compute_O(B), K);
      } else {
        throw harness::UsageError("--what must be O, Z, W or f");
      }
      std::cout << out.dump(2) << "\n";
      return kPass;
    }

    if (dump->parsed()) {
      auto pr = liealg::Pairing::standard(n, kind);
      if (kind == liealg::Case::Symp && n % 2) throw harness::UsageError("symp needs even n");
      if (module == "verma" || module == "siverma") {
        liealg::Weight mu, lambda;
        labels(mu, lambda);
        auto sigma = weyl::word_to_perm(m, parse_word(word_s));
        auto ms = module == "verma" ? modules::verma_model(mu, lambda, kind, n)
                                    : modules::siverma_model(mu, lambda, sigma, kind, n);
        out["module"] = json::parse(ms.to_json());
      } else {
        modules::ModuleSpec ms;
        if (module == "beta") {
          harness::SuiteConfig cfg;
          cfg.kind = kind, cfg.m = m, cfg.n = n;
          harness::validate(cfg);
          ms.real = modules::beta_m(pr, fm_rep(rep, liealg::FmData(m, kind)));
        } else if (module == "pi") {
          std::vector<SpMat> g;
          for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) g.push_back(liealg::gn_matrix(pr, i, j));
          ms.real = yangian::pi_n(pr, g);
        } else if (module == "p") {
          ms.real = modules::p_module(pr, mu_s.empty() ? BigRat(0) : parse_rat(mu_s));
        } else {
          throw harness::UsageError("unknown module " + module);
        }
        out["module"] = json::parse(ms.to_json());
      }
      std::cout << out.dump(2) << "\n";
      return kPass;
    }
  } catch (const harness::UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const modules::GenericityError& e) {
    std::cerr << "genericity: " << e.what() << "\n";
    return kGeneric;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
