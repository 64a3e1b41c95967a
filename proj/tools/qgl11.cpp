#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

#include "qgl11/cli.hpp"
#include "qgl11/hopf.hpp"
#include "qgl11/pairing.hpp"
#include "qgl11/rmatrix.hpp"

using namespace qgl11;
using json = nlohmann::ordered_json;

namespace {

struct Settings {
  int order = -1;
  std::uint32_t seed = 0;
  std::string format = "json";
  std::string q;
  std::vector<std::string> suites;
  std::string a = "1";
  std::string chain;
  std::string left = "rho";
  std::string right = "rho";
};

// Fills in whatever the command line left unset.
void apply_config(const std::string& path, Settings& s, const CLI::App& app) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config " + path);
  const json cfg = json::parse(in);
  auto unset = [&app](const char* flag) {
    for (const CLI::App* sub : app.get_subcommands())
      if (const CLI::Option* o = sub->get_option_no_throw(flag); o && o->count()) return false;
    return true;
  };
  if (cfg.contains("order") && unset("--order")) s.order = cfg["order"].get<int>();
  if (cfg.contains("seed") && unset("--seed")) s.seed = cfg["seed"].get<std::uint32_t>();
  if (cfg.contains("format") && unset("--format")) s.format = cfg["format"].get<std::string>();
  if (cfg.contains("q") && unset("--q")) s.q = cfg["q"].get<std::string>();
  if (cfg.contains("suites") && unset("--suite")) s.suites = cfg["suites"].get<std::vector<std::string>>();
  if (cfg.contains("a") && unset("--a")) s.a = cfg["a"].get<std::string>();
  if (cfg.contains("chain") && unset("--chain")) s.chain = cfg["chain"].get<std::string>();
  if (cfg.contains("left") && unset("--left")) s.left = cfg["left"].get<std::string>();
  if (cfg.contains("right") && unset("--right")) s.right = cfg["right"].get<std::string>();
}

std::string scalar_text(const QScalar& x, const std::string& q0) {
  return q0.empty() ? x.to_string() : x.specialize(parse_rational(q0)).get_str();
}

json report_json(const std::string& suite, int order, const json& params, const Report& r, long ms) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"status", c.pass ? "pass" : "fail"},
                      {"witness", c.witness.empty() ? json(nullptr) : json(c.witness)}});
  return {{"suite", suite}, {"order", order}, {"params", params}, {"checks", checks}, {"elapsed_ms", ms}};
}

void emit(const json& doc, const std::string& format, const std::string& out) {
  std::string text;
  if (format == "text") {
    for (const auto& c : doc["checks"]) {
      text += c["status"] == "pass" ? "PASS " : c["status"] == "fail" ? "FAIL " : "ERROR ";
      text += c["name"].get<std::string>();
      if (!c["witness"].is_null()) text += ": " + c["witness"].get<std::string>();
      text += "\n";
    }
    text += doc["suite"].get<std::string>() + ": " + std::to_string(doc["elapsed_ms"].get<long>()) + " ms\n";
  } else {
    text = doc.dump(2) + "\n";
  }
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) throw std::runtime_error("cannot write " + out);
    f << text;
  }
}

int status_of(const json& doc) {
  for (const auto& c : doc["checks"])
    if (c["status"] != "pass") return c["status"] == "error" ? 2 : 1;
  return 0;
}

template <class F>
json timed(const std::string& suite, int order, const json& params, F body) {
  const auto t0 = std::chrono::steady_clock::now();
  Report r;
  json doc;
  try {
    r = body();
  } catch (const std::exception& ex) {
    const long ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    doc = report_json(suite, order, params, {}, ms);
    doc["checks"].push_back({{"name", suite}, {"status", "error"}, {"witness", ex.what()}});
    return doc;
  }
  const long ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  return report_json(suite, order, params, r, ms);
}

void print_series(const LaurentSeries<TensorElement>& s, int lo, int hi) {
  for (int k = lo; k <= hi; ++k)
    if (!s[k].is_zero()) std::cout << "z^" << k << ": " << format_element(s[k]) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qgl11: exact computations in the quantum affine superalgebra of gl(1,1)"};
  app.require_subcommand(1);
  Settings s;
  std::string config;
  app.add_option("--config", config, "JSON file presetting order, seed, format, q, suites, a, chain, left, right");

  std::string expr, expr_b, out;
  bool zflag = false, cop = false, drin = false, oracle = false, closed = false;

  auto* nf = app.add_subcommand("nf", "normal form of an expression");
  nf->add_option("expr", expr)->required();

  auto* cp = app.add_subcommand("coproduct", "coproduct of an expression");
  cp->add_option("expr", expr)->required();
  cp->add_flag("--z", zflag, "grade the left factor by z");
  cp->add_flag("--cop", cop, "opposite coproduct");
  cp->add_flag("--drinfeld", drin, "Drinfeld new coproduct of a generator");
  cp->add_option("--order", s.order, "window for --drinfeld (default 4)");

  auto* pr = app.add_subcommand("pair", "Hopf pairing of an element of A with an element of B");
  pr->add_option("a", expr)->required();
  pr->add_option("b", expr_b)->required();
  auto* o1 = pr->add_flag("--oracle", oracle, "evaluate from the pairing axioms (default)");
  pr->add_flag("--closed", closed, "evaluate in the PBW bases")->excludes(o1);
  pr->add_option("--q", s.q, "specialize q");

  auto* rm = app.add_subcommand("rmatrix", "universal R-matrix in a pair of representations");
  rm->add_option("--left", s.left, "rho, pi_a(a) or pi_cd(c,d)");
  rm->add_option("--right", s.right, "rho, pi_a(a) or pi_cd(c,d)");
  rm->add_option("--order", s.order, "truncation order (default 4)");
  rm->add_option("--q", s.q, "specialize q");
  rm->add_option("--format", s.format)->check(CLI::IsMember({"json", "text"}));

  auto add_chain_opts = [&](CLI::App* c) {
    c->add_option("--a", s.a, "rational parameter a");
    c->add_option("--chain", s.chain, "chain \"(c,d);(c,d)...\"");
    c->add_option("--order", s.order, "truncation order (default 8)");
    c->add_option("--out", out, "write the report here");
    c->add_option("--format", s.format)->check(CLI::IsMember({"json", "text"}));
  };
  auto* tr = app.add_subcommand("transfer", "transfer operators on a chain");
  add_chain_opts(tr);
  auto* bx = app.add_subcommand("baxter", "Baxter polynomiality on a chain");
  add_chain_opts(bx);

  auto* vf = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  std::vector<std::string> names = suite_names();
  names.push_back("all");
  vf->add_option("--suite", suite, "suite name")->check(CLI::IsMember(names));
  vf->add_option("--order", s.order, "truncation order");
  vf->add_option("--seed", s.seed, "seed for randomized checks");
  vf->add_option("--format", s.format)->check(CLI::IsMember({"json", "text"}));
  vf->add_option("--q", s.q, "specialize q in the report parameters");
  vf->add_option("--out", out, "write the report here");
  bool no_koszul = false;
  vf->add_flag("--no-koszul", no_koszul, "drop the Koszul sign in the braid suite (negative control)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!config.empty()) apply_config(config, s, app);
    if (!s.q.empty()) parse_rational(s.q);

    if (nf->parsed()) {
      std::cout << format_value(parse_expr(expr)) << "\n";
      return 0;
    }
    if (cp->parsed()) {
      const Element x = parse_element(expr);
      if (drin) {
        if (x.size() != 1 || !x.terms().begin()->second.is_one() || x.terms().begin()->first.letters().size() != 1)
          throw std::runtime_error("--drinfeld takes a single generator");
        const int n = s.order < 0 ? 4 : s.order;
        const auto d = drinfeld_coproduct(x.terms().begin()->first.letters().front(), n);
        print_series(d, -n, n);
      } else if (zflag) {
        const auto d = coproduct_z(x, cop);
        print_series(d, d.lo(), d.hi());
      } else {
        const TensorElement d = coproduct(x);
        std::cout << format_element(cop ? d.flipped() : d) << "\n";
      }
      return 0;
    }
    if (pr->parsed()) {
      const Element a = parse_element(expr), b = parse_element(expr_b);
      std::cout << scalar_text(closed ? pair_closed(a, b) : pair_oracle(a, b), s.q) << "\n";
      return 0;
    }
    if (rm->parsed()) {
      const Representation l = parse_rep(s.left), r = parse_rep(s.right);
      const int n = s.order < 0 ? 4 : s.order;
      std::string mode = "strict";
      MatrixSeries m;
      try {
        m = evaluate_R(l, r, n);
      } catch (const AlgebraError&) {
        mode = "projective";
        m = evaluate_R(l, r, n, KappaMode::Projective);
      }
      json doc{{"left", l.name()}, {"right", r.name()}, {"order", n}, {"kappa", mode}, {"modes", json::array()}};
      for (int k = 0; k <= n; ++k) {
        json rows = json::array();
        for (std::size_t i = 0; i < m[k].rows(); ++i) {
          json row = json::array();
          for (std::size_t j = 0; j < m[k].cols(); ++j) row.push_back(scalar_text(m[k](i, j), s.q));
          rows.push_back(row);
        }
        doc["modes"].push_back({{"k", k}, {"matrix", rows}});
      }
      if (s.format == "text") {
        std::cout << l.name() << " (x) " << r.name() << ", kappa " << mode << "\n";
        for (const auto& md : doc["modes"]) {
          std::cout << "z^" << md["k"] << ":\n";
          for (const auto& row : md["matrix"]) {
            std::string line;
            for (const auto& e : row) line += (line.empty() ? "  " : ", ") + e.get<std::string>();
            std::cout << line << "\n";
          }
        }
      } else {
        std::cout << doc.dump(2) << "\n";
      }
      return 0;
    }
    if (tr->parsed() || bx->parsed()) {
      const bool baxter = bx->parsed();
      const Rational a = parse_rational(s.a);
      if (s.chain.empty()) throw std::runtime_error("--chain is required");
      const Chain chain = parse_chain(s.chain);
      const int n = s.order < 0 ? 8 : s.order;
      const json params{{"a", a.get_str()}, {"chain", s.chain}};
      const json doc = timed(baxter ? "baxter" : "transfer", n, params,
                             [&] { return baxter ? baxter_check(a, chain, n) : transfer_check(a, chain, n); });
      emit(doc, s.format, out);
      return status_of(doc);
    }
    if (vf->parsed()) {
      std::vector<std::string> list = suite.empty() ? s.suites : std::vector<std::string>{suite};
      if (list.empty()) list = {"all"};
      SuiteOptions opt;
      if (s.order >= 0) opt.order = s.order;
      opt.seed = s.seed;
      opt.koszul = !no_koszul;
      std::string label;
      for (const auto& x : list) label += (label.empty() ? "" : ",") + x;
      const int shown = list.size() == 1 ? opt.order.value_or(suite_order(list.front())) : s.order;
      json params{{"seed", s.seed}, {"koszul", opt.koszul}};
      if (!s.q.empty()) params["q"] = s.q;
      const json doc = timed(label, shown, params, [&] {
        Report r;
        for (const auto& x : list) r.append(run_suite(x, opt), list.size() > 1 ? x + ": " : "");
        return r;
      });
      emit(doc, s.format, out);
      return status_of(doc);
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 0;
}
