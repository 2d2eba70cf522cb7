#include "hqcf/cli.hpp"

#include <CLI11.hpp>
#include <functional>
#include <iostream>
#include <sstream>

#include "hqcf/json_io.hpp"
#include "hqcf/parse.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hqcf {

namespace {

const FieldSpec* make_field(uint32_t p, const std::string& ext_modulus) {
  if (ext_modulus.empty()) return field_prime(p);
  // the modulus is a polynomial in u over F_p; reuse the T-grammar
  std::string text = ext_modulus;
  for (char& c : text)
    if (c == 'u') c = 'T';
  TPoly m = parse_tpoly(text, field_prime(p));
  if (m.is_zero() || m.degree() != 2 || !(m.lc() == fe_from_int(*field_prime(p), 1)))
    throw std::invalid_argument("extension modulus must be monic of degree 2 in u");
  return field_ext(p, m.coeff(0)[0], m.coeff(1)[0]);
}

void print_expansion_text(std::ostream& out, const Expansion& e) {
  out << "quotients (" << e.certified << " certified, stopped: " << to_string(e.stopped)
      << "):\n";
  for (size_t i = 0; i < e.quotients.size(); ++i)
    out << "  a_" << i << " = " << e.quotients[i].to_string() << "\n";
}

// --- golden examples ------------------------------------------------------

struct Example {
  const char* id;
  std::function<void(ExampleResult&)> run;  // sets pass/detail
};

void expect(ExampleResult& r, bool cond, const std::string& what) {
  if (!cond && r.detail.empty()) {
    r.pass = false;
    r.detail = "failed: " + what;
  }
}

std::vector<TPoly> parse_list(const FieldSpec* spec, const std::vector<std::string>& texts) {
  std::vector<TPoly> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(parse_tpoly(t, spec));
  return out;
}

Expansion expand_root_of(const FieldSpec* spec, const std::string& poly, const std::string& seed,
                         size_t terms, size_t precision) {
  XPoly s = parse_xpoly(poly, spec);
  TPoly seed_poly = parse_tpoly(seed, spec);
  LaurentSeries seed_series = LaurentSeries::from_tpoly(seed_poly);
  size_t prec = precision ? precision : std::max<size_t>(64, 4 * terms);
  for (int tries = 0; tries < 16; ++tries) {
    LaurentSeries root = newton_root(s, seed_series, prec);
    Expansion e = expand_series(root, terms);
    if (e.quotients.size() >= terms || e.stopped == StopReason::Finite || precision != 0) return e;
    prec *= 2;
  }
  throw PrecisionError("could not certify the requested number of quotients");
}

std::vector<Example> example_table() {
  std::vector<Example> ex;

  ex.push_back({"f1-rational-series", [](ExampleResult& r) {
    const FieldSpec* F = field_prime(13);
    RationalFunc f(TPoly::from_int(F, 1), parse_tpoly("T-1", F));
    LaurentSeries s = series_from_rational(f, 10);
    for (long long e = -1; e >= -10; --e)
      expect(r, s.at(e) == fe_from_int(*F, 1), "coefficient at T^" + std::to_string(e));
    expect(r, s.floor() == -10 && !s.exact(), "window");
  }});

  ex.push_back({"f4-u-arithmetic", [](ExampleResult& r) {
    const FieldSpec* F = field_gf4();
    Fe u{0, 1};
    expect(r, fe_mul(*F, u, u) == Fe{1, 1}, "u*u = u+1");
    expect(r, fe_inv(*F, u) == Fe{1, 1}, "1/u = u+1");
  }});

  ex.push_back({"f13-rational", [](ExampleResult& r) {
    const FieldSpec* F = field_prime(13);
    RationalFunc f(parse_tpoly("(T^2-1)^4", F), parse_tpoly("2T^7+2T^5+T^3-T", F));
    Expansion e = expand_rational(f);
    auto want = parse_list(F, {"7T", "10T", "5T", "12T", "9T", "11T", "T", "5T"});
    expect(r, e.quotients == want, "quotient list");
    expect(r, eval_cf(e.quotients) == f, "eval_cf round-trip");
  }});

  ex.push_back({"golden-mean", [](ExampleResult& r) {
    const FieldSpec* F = field_prime(3);
    Expansion e = expand_root_of(F, "X^2-T*X-1", "T", 50, 0);
    expect(r, e.certified >= 50, "certified 50 quotients");
    TPoly t = TPoly::variable(F);
    for (size_t i = 0; i < 50; ++i) expect(r, e.quotients[i] == t, "quotient " + std::to_string(i));
    // omega = T + 1/omega: witness (T, 1, 1, 0) with r = 1
    LaurentSeries root = newton_root(parse_xpoly("X^2-T*X-1", F),
                                     LaurentSeries::from_tpoly(t), 40);
    expect(r, is_hyperquadratic_witness(root, 1, t, TPoly::from_int(F, 1), TPoly::from_int(F, 1),
                                        TPoly::zero(F)),
           "witness relation");
  }});

  ex.push_back({"f11-quad-period", [](ExampleResult& r) {
    const FieldSpec* F = field_prime(11);
    QuadTriple t = make_quad_triple(parse_tpoly("6T^2+1", F), parse_tpoly("5T^3+9T", F),
                                    parse_tpoly("9T^2+10", F));
    QuadExpansion q = quad_expand(t, LaurentSeries::from_tpoly(TPoly::variable(F)));
    expect(r, q.preperiod.empty(), "pure periodicity");
    expect(r, q.period == parse_list(F, {"T", "2T", "3T"}), "period (T, 2T, 3T)");
    QuadTriple back = periodic_to_equation({}, q.period);
    expect(r, back == t, "periodic_to_equation returns the (normalized) triple");
  }});

  ex.push_back({"frobenius-family", [](ExampleResult& r) {
    for (uint32_t p : {2u, 3u, 5u}) {
      const FieldSpec* F = field_prime(p);
      std::string poly = "X^" + std::to_string(p + 1) + "-T*X^" + std::to_string(p) + "-1";
      Expansion e = expand_root_of(F, poly, "T", 3, 0);
      expect(r, e.certified >= 3, "three quotients at p=" + std::to_string(p));
      expect(r, e.quotients[0] == TPoly::variable(F), "a_0 = T");
      expect(r, e.quotients[1] == TPoly::monomial(F, fe_from_int(*F, 1), (int)p), "a_1 = T^p");
      expect(r, e.quotients[2] == TPoly::monomial(F, fe_from_int(*F, 1), (int)(p * p)),
             "a_2 = T^p^2");
      LaurentSeries root = newton_root(parse_xpoly(poly, F),
                                       LaurentSeries::from_tpoly(TPoly::variable(F)),
                                       2 * (size_t)(p * p + p + 1) + 8);
      expect(r, is_hyperquadratic_witness(root, p, TPoly::variable(F), TPoly::from_int(F, 1),
                                          TPoly::from_int(F, 1), TPoly::zero(F)),
             "alpha = T + 1/alpha^r witness at p=" + std::to_string(p));
    }
  }});

  ex.push_back({"f2-cubic", [](ExampleResult& r) {
    const FieldSpec* F = field_prime(2);
    Expansion e = expand_root_of(F, "X^3+(T^2+1)*X^2+T", "T^2+1", 31, 0);
    std::vector<std::string> want = {"T^2+1", "T^3", "T", "T^5", "T", "T", "T", "T^9"};
    for (int i = 0; i < 7; ++i) want.push_back("T");
    want.push_back("T^17");
    for (int i = 0; i < 15; ++i) want.push_back("T");
    expect(r, e.certified >= want.size(), "certified prefix length");
    auto wq = parse_list(F, want);
    for (size_t i = 0; i < wq.size(); ++i)
      expect(r, e.quotients[i] == wq[i], "quotient " + std::to_string(i));
  }});

  ex.push_back({"f4-quintic", [](ExampleResult& r) {
    const FieldSpec* F = field_gf4();
    Expansion e = expand_root_of(F, "T^3*X^5+(u*T^4+T^2+1)*X^4+1", "u*T", 20, 0);
    std::vector<std::string> want = {"uT", "T", "T", "T", "uT"};
    for (int i = 0; i < 15; ++i) want.push_back("T");
    expect(r, e.certified >= want.size(), "certified prefix length");
    auto wq = parse_list(F, want);
    for (size_t i = 0; i < wq.size(); ++i)
      expect(r, e.quotients[i] == wq[i], "quotient " + std::to_string(i));
  }});

  ex.push_back({"rqe-root-f7", [](ExampleResult& r) {
    const FieldSpec* F = field_prime(7);
    Expansion e = rqe_expand(7, 8);
    auto want = parse_list(F, {"2T", "6T", "6T"});
    for (size_t i = 0; i < want.size(); ++i)
      expect(r, e.quotients[i] == want[i], "quotient " + std::to_string(i));
    expect(r, e.quotients[3].degree() == 3, "deg a_4 = 3");
    TPoly A1 = A_sequence(7, 2, 1)[1];
    expect(r, A1 == parse_tpoly("T^3+2T", F), "A_1 = T^3+2T");
    Fe lam = fe_div(*F, e.quotients[3].lc(), A1.lc());
    expect(r, A1.scaled(lam) == e.quotients[3], "a_4 proportional to A_1");
  }});

  ex.push_back({"rqe-h-f7", [](ExampleResult& r) {
    auto [eps, epsp] = rqe_epsilons(7);
    const FieldSpec* F = field_prime(7);
    expect(r, eps == fe_from_int(*F, 6), "epsilon = 6");
    expect(r, epsp == fe_from_int(*F, 3), "epsilon' = 3");
    XPoly H = rqe_H(7);
    expect(r, H == parse_xpoly("(T^2+1)*X^8+(5*T^3+6*T)*X^7+2*T*X+4", F), "H as displayed");
    expect(r, H.support() == std::vector<int>({0, 1, 7, 8}), "support {0,1,p,p+1}");
  }});

  ex.push_back({"rqe-divides-f7", [](ExampleResult& r) {
    DivisionCheck c = rqe_divides(7);
    expect(r, c.divides && c.remul_ok, "P | H at p=7");
  }});

  ex.push_back({"rqe-divides-f13", [](ExampleResult& r) {
    DivisionCheck c = rqe_divides(13);
    expect(r, c.divides && c.remul_ok, "P | H at p=13");
  }});

  ex.push_back({"v-seq-f7k2", [](ExampleResult& r) {
    const FieldSpec* F = field_prime(7);
    std::vector<Fe> v = v_sequence(7, 2);
    std::vector<Fe> want = {fe_from_int(*F, 3), fe_from_int(*F, 5), fe_from_int(*F, 1),
                            fe_from_int(*F, 1)};
    expect(r, v == want, "v = (3, 5, 1, 1)");
    expect(r, K_continuant(7, 2, 1, 0) == TPoly::from_int(F, 1), "K_{1,0} = 1");
    expect(r, K_continuant(7, 2, 2, 4) == parse_tpoly("5T^3+6T", F), "K_{2,4}");
    expect(r, K_continuant(7, 2, 3, 4) == parse_tpoly("T^2+1", F), "K_{3,4}");
  }});

  ex.push_back({"condition-star-f7", [](ExampleResult& r) {
    RqeData d = rqe_data(7);
    expect(r, condition_star(d.params), "condition (*) holds for the constructed tuple");
  }});

  ex.push_back({"e-family-f7", [](ExampleResult& r) {
    RqeData d = rqe_data(7);
    XPoly E = build_E_equation(d.params);
    expect(r, E.support() == std::vector<int>({0, 1, 7, 8}), "support {0,1,p,p+1}");
    expect(r, E == d.H, "E-equation coincides with H at p=7");
  }});

  ex.push_back({"mills-robbins", [](ExampleResult& r) {
    MillsRobbinsResult m = mills_robbins_check(120);
    expect(r, m.ok, "beta solves X^4+X^2-TX+1");
    expect(r, m.beta_in_prime_field, "beta has prime-field coefficients");
  }});

  return ex;
}

}  // namespace

std::vector<ExampleResult> run_examples(const std::string& only) {
  std::vector<ExampleResult> results;
  bool found = false;
  for (const Example& e : example_table()) {
    if (!only.empty() && only != e.id) continue;
    found = true;
    ExampleResult r;
    r.id = e.id;
    r.pass = true;
    try {
      e.run(r);
    } catch (const std::exception& ex) {
      r.pass = false;
      r.detail = std::string("exception: ") + ex.what();
    }
    if (!r.detail.empty()) r.pass = false;
    results.push_back(std::move(r));
  }
  if (!found) throw std::invalid_argument("unknown example id: " + only);
  return results;
}

namespace {

int run_parsed(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"continued fractions of algebraic Laurent series over finite fields"};
  app.require_subcommand(1);

  uint32_t p = 0;
  std::string ext_modulus;
  bool json = false;
  int threads = 0;
  app.add_option("--threads", threads, "worker threads (0 = library default)");

  auto add_common = [&](CLI::App* cmd, bool needs_p) {
    if (needs_p) cmd->add_option("--p", p, "prime characteristic")->required();
    cmd->add_option("--ext-modulus", ext_modulus, "monic degree-2 modulus in u, e.g. u^2+u+1");
    cmd->add_flag("--json", json, "emit one JSON document on stdout");
  };

  // expand-rational
  auto* cmd_rat = app.add_subcommand("expand-rational", "continued fraction of num/den");
  std::string num_text, den_text = "1";
  add_common(cmd_rat, true);
  cmd_rat->add_option("--num", num_text, "numerator polynomial in T")->required();
  cmd_rat->add_option("--den", den_text, "denominator polynomial in T");

  // expand-root
  auto* cmd_root = app.add_subcommand("expand-root", "expand a root of a polynomial in X");
  std::string polyx_text, seed_text;
  size_t terms = 32, precision = 0;
  add_common(cmd_root, true);
  cmd_root->add_option("--poly-x", polyx_text, "polynomial in X with T coefficients")->required();
  cmd_root->add_option("--seed-poly", seed_text, "seed polynomial selecting the branch")->required();
  cmd_root->add_option("--terms", terms, "quotients to certify");
  cmd_root->add_option("--precision", precision, "series precision (0 = auto-grow)");

  // quad-expand
  auto* cmd_quad = app.add_subcommand("quad-expand", "periodic expansion of a quadratic");
  std::string qa, qb, qc;
  add_common(cmd_quad, true);
  cmd_quad->add_option("--A", qa, "coefficient A of A x^2 + B x + C")->required();
  cmd_quad->add_option("--B", qb, "coefficient B")->required();
  cmd_quad->add_option("--C", qc, "coefficient C")->required();
  cmd_quad->add_option("--seed-poly", seed_text, "seed polynomial selecting the branch")->required();

  // examples
  auto* cmd_ex = app.add_subcommand("examples", "run the golden worked examples");
  std::string only;
  cmd_ex->add_option("--only", only, "run a single example by id");
  cmd_ex->add_flag("--json", json, "emit one JSON document on stdout");

  // rqe-verify
  auto* cmd_rqe = app.add_subcommand("rqe-verify", "check that P divides H at one prime");
  add_common(cmd_rqe, true);

  // rqe-pattern
  auto* cmd_pat = app.add_subcommand("rqe-pattern", "certify the quartic root's quotient pattern");
  add_common(cmd_pat, true);
  cmd_pat->add_option("--terms", terms, "certified quotients to check");

  // scan
  auto* cmd_scan = app.add_subcommand("scan", "verify P | H for every prime = 1 mod 3 up to pmax");
  uint32_t pmax = 199;
  bool serial = false;
  cmd_scan->add_option("--pmax", pmax, "scan bound");
  cmd_scan->add_flag("--serial", serial, "disable the parallel scan");
  cmd_scan->add_flag("--json", json, "emit one JSON document on stdout");

  // theorem1
  auto* cmd_t1 = app.add_subcommand("theorem1", "constructive sparse multiple of a quartic");
  std::string ta, tb, tc;
  add_common(cmd_t1, true);
  cmd_t1->add_option("--A", ta, "rational function A with 12A + C^2 = 0")->required();
  cmd_t1->add_option("--B", tb, "rational function B")->required();
  cmd_t1->add_option("--C", tc, "rational function C")->required();

  // mills-robbins
  auto* cmd_mr = app.add_subcommand("mills-robbins", "characteristic-13 change of variables");
  size_t mr_precision = 200;
  cmd_mr->add_option("--precision", mr_precision, "certified series precision");
  cmd_mr->add_flag("--json", json, "emit one JSON document on stdout");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  if (threads > 0) {
#ifdef _OPENMP
    omp_set_num_threads(threads);
#endif
    if (threads == 1) set_default_exec_mode(ExecMode::Serial);
  }

  if (cmd_rat->parsed()) {
    const FieldSpec* F = make_field(p, ext_modulus);
    RationalFunc f(parse_tpoly(num_text, F), parse_tpoly(den_text, F));
    Expansion e = expand_rational(f);
    if (json)
      out << expansion_to_json(e).dump(2) << "\n";
    else
      print_expansion_text(out, e);
    return 0;
  }

  if (cmd_root->parsed()) {
    const FieldSpec* F = make_field(p, ext_modulus);
    Expansion e = expand_root_of(F, polyx_text, seed_text, terms, precision);
    if (json)
      out << expansion_to_json(e).dump(2) << "\n";
    else
      print_expansion_text(out, e);
    return 0;
  }

  if (cmd_quad->parsed()) {
    const FieldSpec* F = make_field(p, ext_modulus);
    QuadTriple t = make_quad_triple(parse_tpoly(qa, F), parse_tpoly(qb, F), parse_tpoly(qc, F));
    LaurentSeries seed = LaurentSeries::from_tpoly(parse_tpoly(seed_text, F));
    QuadExpansion q = quad_expand(t, seed);
    if (json) {
      out << quad_expansion_to_json(F, q).dump(2) << "\n";
    } else {
      out << "preperiod:";
      for (const TPoly& x : q.preperiod) out << " " << x.to_string();
      out << "\nperiod:";
      for (const TPoly& x : q.period) out << " " << x.to_string();
      out << "\n";
    }
    return 0;
  }

  if (cmd_ex->parsed()) {
    auto results = run_examples(only);
    bool all = true;
    ojson ja = ojson::array();
    for (const auto& r : results) {
      all = all && r.pass;
      if (json) {
        ojson je;
        je["id"] = r.id;
        je["pass"] = r.pass;
        if (!r.detail.empty()) je["detail"] = r.detail;
        ja.push_back(std::move(je));
      } else {
        out << (r.pass ? "PASS" : "FAIL") << "  " << r.id;
        if (!r.detail.empty()) out << "  (" << r.detail << ")";
        out << "\n";
      }
    }
    if (json) {
      ojson j;
      j["examples"] = std::move(ja);
      j["all_pass"] = all;
      out << j.dump(2) << "\n";
    }
    return all ? 0 : 1;
  }

  if (cmd_rqe->parsed()) {
    DivisionCheck c = rqe_divides(p);
    if (json) {
      ojson j;
      j["p"] = p;
      j["divides"] = c.divides;
      j["remul_ok"] = c.remul_ok;
      if (!c.divides) j["remainder"] = c.remainder.to_string();
      out << j.dump(2) << "\n";
    } else {
      out << "p=" << p << ": P | H " << (c.divides ? "holds" : "FAILS") << "\n";
      if (!c.divides) out << "remainder: " << c.remainder.to_string() << "\n";
    }
    return c.divides && c.remul_ok ? 0 : 1;
  }

  if (cmd_pat->parsed()) {
    Expansion e = rqe_expand(p, terms);
    PatternReport rep = certify_pattern(p, e);
    uint32_t j = (p - 1) / 6;
    GrowthCheck g = perfect_growth_check(p, 2 * j, 3 * j, e);
    if (json) {
      out << pattern_report_to_json(rep, &g).dump(2) << "\n";
    } else {
      out << "p=" << p << " certified=" << e.certified << " shapes=" << rep.all_shapes_ok
          << " degrees=" << rep.all_degrees_ok << " lambda-law=" << rep.lambda_law_ok
          << " u-law=" << rep.u_law_ok << " condition(*)=" << rep.condition_star_ok << "\n";
      out << "growth: window-sup=" << (g.window_valid ? g.window_sup.to_string() : "n/a")
          << " target=" << g.target.to_string() << (g.attained ? " (attained)" : " (not attained)")
          << "\n";
      if (!rep.first_mismatch.empty()) out << "mismatch: " << rep.first_mismatch << "\n";
    }
    return rep.ok() ? 0 : 1;
  }

  if (cmd_scan->parsed()) {
    ScanReport rep = scan_primes(pmax, !serial);
    if (json) {
      out << scan_report_to_json(rep).dump(2) << "\n";
    } else {
      for (const ScanEntry& e : rep.entries)
        out << "p=" << e.p << "  divides=" << (e.divides ? "yes" : "NO") << "  remul="
            << (e.remul_ok ? "ok" : "NO") << "  (" << e.millis << " ms)\n";
      out << (rep.all_ok ? "all verified" : "VERIFICATION FAILED") << "  [" << rep.entries.size()
          << " primes]\n";
    }
    return rep.all_ok ? 0 : 1;
  }

  if (cmd_t1->parsed()) {
    const FieldSpec* F = make_field(p, ext_modulus);
    Theorem1Result res = theorem1_solve(parse_rational(ta, F), parse_rational(tb, F),
                                        parse_rational(tc, F), F);
    if (json) {
      ojson j;
      j["p"] = p;
      j["r"] = res.r;
      j["found"] = res.H.has_value();
      if (res.H)
        j["H"] = res.H->to_string();
      else
        j["failure"] = res.failure;
      out << j.dump(2) << "\n";
    } else {
      if (res.H)
        out << "r=" << res.r << "\nH = " << res.H->to_string() << "\n";
      else
        out << "certificate of failure: " << res.failure << "\n";
    }
    return res.H ? 0 : 1;
  }

  if (cmd_mr->parsed()) {
    MillsRobbinsResult m = mills_robbins_check(mr_precision);
    if (json) {
      ojson j;
      j["ok"] = m.ok;
      j["beta_in_prime_field"] = m.beta_in_prime_field;
      j["scaling_squared"] = m.scaling_squared;
      out << j.dump(2) << "\n";
    } else {
      out << "transformation check: " << (m.ok ? "verified" : "FAILED")
          << " (v^2 = " << m.scaling_squared << ")\n";
    }
    return m.ok ? 0 : 1;
  }

  err << "no subcommand\n";
  return 2;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return run_parsed(args, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace hqcf
