#include <functional>
#include <future>
#include <map>
#include <tuple>

#include "qgl11/cli.hpp"
#include "qgl11/hopf.hpp"
#include "qgl11/pairing.hpp"
#include "qgl11/rmatrix.hpp"

namespace qgl11 {

namespace {

const QScalar q = QScalar::q();
const QScalar qi = QScalar::q_pow(-1);

Element L(const Letter& l) { return Element::letter(l); }
TensorElement T(const Element& a, const Element& b) { return TensorElement::pure(a, b); }

std::string matrix_diff(const Matrix& got, const Matrix& want) {
  for (std::size_t i = 0; i < want.rows(); ++i)
    for (std::size_t j = 0; j < want.cols(); ++j) {
      const QScalar g = got.rows() ? got(i, j) : QScalar(0);
      if (!(g == want(i, j)))
        return "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): got " + g.to_string() +
               ", want " + want(i, j).to_string();
    }
  return {};
}

void compare_modes(Report& rep, const std::string& prefix, const MatrixSeries& got, const MatrixSeries& want, int lo,
                   int hi) {
  for (int k = lo; k <= hi; ++k) {
    const std::string w = got[k] == want[k] ? std::string() : "z^" + std::to_string(k) + " " + matrix_diff(got[k], want[k]);
    rep.add(prefix + " z^" + std::to_string(k), w.empty(), w);
  }
}

std::string tensor_diff(const TensorElement& got, const TensorElement& want) {
  if (got == want) return {};
  return "residual " + (got - want).to_string();
}

Letter random_letter(std::mt19937& rng) {
  std::uniform_int_distribution<int> kind(0, 5), idx(-4, 4), nz(1, 4), sign(0, 1);
  auto nonzero = [&] { return sign(rng) ? nz(rng) : -nz(rng); };
  switch (kind(rng)) {
    case 0: return Letter::E(idx(rng));
    case 1: return Letter::F(idx(rng));
    case 2: return Letter::H(nonzero());
    case 3: return Letter::C(nonzero());
    case 4: return Letter::K1(sign(rng) ? 1 : -1);
    default: return Letter::K2(sign(rng) ? 1 : -1);
  }
}

std::vector<Letter> generators(int bound) {
  std::vector<Letter> g{Letter::K1(1), Letter::K1(-1), Letter::K2(1), Letter::K2(-1)};
  for (int n = -bound; n <= bound; ++n) {
    g.push_back(Letter::E(n));
    g.push_back(Letter::F(n));
    if (n != 0) {
      g.push_back(Letter::H(n));
      g.push_back(Letter::C(n));
    }
  }
  return g;
}

std::string chain_name(const Chain& c) {
  std::string s;
  for (const auto& [a, b] : c) s += (s.empty() ? "" : ";") + ("(" + a.get_str() + "," + b.get_str() + ")");
  return s;
}

}  // namespace

Report check_perk_schultz(int order) {
  Report rep;
  const Representation rho = rep_rho();
  compare_modes(rep, "rho*rho", evaluate_R(rho, rho, order), taylor(perk_schultz_normalized(), 4, order), 0, order);
  return rep;
}

Report check_specialized(int order) {
  Report rep;
  const Representation p1 = rep_pi_a(1);
  for (const auto& [c, d] : Chain{{2, 3}, {3, 5}}) {
    const MatrixSeries r = evaluate_R(p1, rep_pi_cd(c, d), order);
    const MatrixSeries rcd = taylor(rcd_matrix(c, d), 4, order);
    const auto f = f_series(c, d, order);
    MatrixSeries want(0, order, Matrix(4, 4));
    for (int k = 0; k <= order; ++k)
      for (int j = 0; j <= k; ++j) want.at(k) += rcd[k - j] * f[j];
    compare_modes(rep, "pi_a(1)*pi_cd(" + c.get_str() + "," + d.get_str() + ")", r, want, 0, order);
  }
  return rep;
}

Report check_intertwining(int order) {
  const std::vector<Letter> gens{Letter::K1(1), Letter::K2(1), Letter::E(-1), Letter::E(0), Letter::E(1),
                                 Letter::F(0),  Letter::F(1),  Letter::H(1),  Letter::H(2)};
  auto a = std::async(std::launch::async, [&] {
    const Representation rho = rep_rho();
    return verify_intertwining(rho, rho, gens, order);
  });
  auto b = std::async(std::launch::async, [&] {
    return verify_intertwining(rep_pi_cd(2, 3), rep_pi_cd(5, 7), gens, order, KappaMode::Projective);
  });
  Report rep;
  rep.append(a.get(), "rho*rho ");
  rep.append(b.get(), "pi_cd(2,3)*pi_cd(5,7) ");
  return rep;
}

Report check_quasitriangular(int order) {
  return verify_quasitriangular(rep_pi_a(1), rep_pi_cd(2, 3), rep_pi_cd(5, 7), order);
}

Report check_pairing(int bound, int max_len, int window) {
  Report rep;
  const auto gammas = enumerate_gamma(bound, max_len);
  std::vector<CartanExp> ks;
  for (int a1 = -1; a1 <= 1; ++a1)
    for (int a2 = -1; a2 <= 1; ++a2) ks.push_back({a1, a2});

  struct Side {
    std::size_t gamma;
    CartanExp k;
    Element x;
  };
  // Pairs of different (Z, Q)-degree vanish on both sides; only the closed
  // form needs evaluating there.
  std::map<std::pair<int, int>, std::vector<Side>> as, bs;
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    const auto [ea, fb] = pbw_products(gammas[i]);
    const Monomial& ma = ea.terms().begin()->first;
    const Monomial& mb = fb.terms().begin()->first;
    for (const CartanExp& k : ks) {
      as[{ma.zdeg(), ma.qdeg()}].push_back({i, k, cartan_element_a(k) * ea});
      bs[{-mb.zdeg(), -mb.qdeg()}].push_back({i, k, cartan_element_b(k) * fb});
    }
  }
  struct Tally {
    std::size_t matched = 0, skipped = 0;
    std::string witness;
  };
  PairingOracle oracle;
  auto group = [&](const std::pair<int, int>& g, const std::vector<Side>& xs) {
    Tally t;
    for (const auto& [g2, ys] : bs)
      if (g2 != g)
        for (const Side& x : xs)
          for (const Side& y : ys) {
            ++t.skipped;
            if (t.witness.empty() && !pair_closed(x.k, gammas[x.gamma], y.k, gammas[y.gamma]).is_zero())
              t.witness = "closed form nonzero across degrees: " + gammas[x.gamma].to_string() + " | " +
                          gammas[y.gamma].to_string();
          }
    const auto it = bs.find(g);
    if (it == bs.end()) return t;
    for (const Side& x : xs)
      for (const Side& y : it->second) {
        ++t.matched;
        const QScalar c = pair_closed(x.k, gammas[x.gamma], y.k, gammas[y.gamma]);
        const QScalar o = oracle(x.x, y.x);
        if (t.witness.empty() && !(c == o))
          t.witness = "k=(" + std::to_string(x.k.a1) + "," + std::to_string(x.k.a2) + ") " +
                      gammas[x.gamma].to_string() + " | k'=(" + std::to_string(y.k.a1) + "," +
                      std::to_string(y.k.a2) + ") " + gammas[y.gamma].to_string() + ": closed " + c.to_string() +
                      ", oracle " + o.to_string();
      }
    return t;
  };
  std::size_t matched = 0, skipped = 0;
  std::string witness;
  for (const auto& [g, xs] : as) {
    const Tally t = group(g, xs);
    matched += t.matched;
    skipped += t.skipped;
    if (witness.empty()) witness = t.witness;
  }
  rep.add("closed-vs-oracle (" + std::to_string(gammas.size()) + " functions, " + std::to_string(matched) +
              " degree-matched pairs, " + std::to_string(skipped) + " by degree)",
          witness.empty(), witness);

  // Generating series, expanded in x = w/z; only diagonal modes survive.
  auto coeff = [](const std::vector<QScalar>& num, const std::vector<QScalar>& den, int k) {
    return k < 0 ? QScalar(0) : expand_rational(num, den, k)[k];
  };
  auto kp = gauss_current(GaussId::s11, window);
  auto km = gauss_current(GaussId::t11, window);
  using Row = std::tuple<std::string, std::function<QScalar(int, int)>, std::function<QScalar(int)>, int>;
  const std::vector<Row> rows{
      {"E+F-", [&](int m, int n) { return oracle(L(Letter::E(m)), L(Letter::F(-n))); },
       [&](int k) { return coeff({qdiff()}, {1, -1}, k); }, 0},
      {"phi+K1-", [&](int m, int n) { return oracle(phi_plus(m), km[-n]); },
       [&](int k) { return coeff({1, -1}, {q, -qi}, k); }, 0},
      {"F+E-", [&](int m, int n) { return oracle(-L(Letter::F(m)), -L(Letter::E(-n))); },
       [&](int k) { return coeff({0, qi - q}, {1, -1}, k); }, 1},
      {"K1+phi-", [&](int m, int n) { return oracle(kp[m], phi_minus(-n)); },
       [&](int k) { return coeff({qi, -q}, {1, -1}, k); }, 0},
      {"K1+K1-", [&](int m, int n) { return oracle(kp[m], km[-n]); },
       [](int k) { return QScalar(k == 0 ? 1 : 0); }, 0},
      {"phi+phi-", [&](int m, int n) { return oracle(phi_plus(m), phi_minus(-n)); },
       [](int k) { return QScalar(k == 0 ? 1 : 0); }, 0},
  };
  for (const auto& [name, got, want, from] : rows) {
    std::string w;
    for (int m = from; m <= window && w.empty(); ++m)
      for (int n = from; n <= window && w.empty(); ++n) {
        const QScalar g = got(m, n);
        const QScalar x = m == n ? want(m) : QScalar(0);
        if (!(g == x)) w = "w^" + std::to_string(m) + " z^-" + std::to_string(n) + ": got " + g.to_string() + ", want " + x.to_string();
      }
    rep.add("series " + name, w.empty(), w);
  }
  return rep;
}

Report check_hopf(std::uint32_t seed, int samples, int bound, int order) {
  Report rep;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> len(1, 3);
  std::string w;
  for (int i = 0; i < samples && w.empty(); ++i) {
    Element a(QScalar(1)), b(QScalar(1));
    for (int j = len(rng); j-- > 0;) a = a * L(random_letter(rng));
    for (int j = len(rng); j-- > 0;) b = b * L(random_letter(rng));
    const std::string d = tensor_diff(coproduct(a) * coproduct(b), coproduct(a * b));
    if (!d.empty()) w = "a=" + a.to_string() + " b=" + b.to_string() + " " + d;
  }
  rep.add("morphism (" + std::to_string(samples) + " pairs, seed " + std::to_string(seed) + ")", w.empty(), w);

  std::string wa, wc;
  for (const Letter& l : generators(bound)) {
    const TensorElement d = coproduct(l);
    if (wa.empty() && !(coproduct_left(d) == coproduct_right(d))) wa = l.to_string();
    if (wc.empty() && !(counit_left(d) == L(l) && counit_right(d) == L(l))) wc = l.to_string();
  }
  rep.add("coassociativity |index| <= " + std::to_string(bound), wa.empty(), wa);
  rep.add("counit |index| <= " + std::to_string(bound), wc.empty(), wc);

  // exp(sum (q-q^-1) h_s z^s) F_n exp(-...) = sum c_m F_{n+m} z^m with
  // c(z) = (1 - q^2 z)/(1 - z).
  std::string wf;
  for (int n0 = -2; n0 <= 2 && wf.empty(); ++n0) {
    LaurentSeries<Element> hs(0, order);
    for (int s = 1; s <= order; ++s) hs.at(s) = L(Letter::H(s)) * qdiff();
    const auto up = series_exp(hs, order);
    const auto down = series_exp(-hs, order);
    LaurentSeries<Element> f(0, order);
    f.at(0) = L(Letter::F(n0));
    const auto conj = up * f * down;
    const auto c = expand_rational({1, -q * q}, {1, -1}, order);
    for (int m = 0; m <= order && wf.empty(); ++m)
      if (!(conj[m] == L(Letter::F(n0 + m)) * c[m])) wf = "F[" + std::to_string(n0) + "] mode " + std::to_string(m);
  }
  rep.add("c_m series to order " + std::to_string(order), wf.empty(), wf);

  auto x = [](int i, int l) { return QScalar::q_pow(i + 1) * qbracket(i + 1) + q * QScalar(l - i); };
  std::string wx;
  for (int j = 0; j <= 4; ++j)
    for (int k = j + 1; k <= 4; ++k)
      for (int a = 1; a <= 4; ++a)
        for (int b = a + 1; b <= 4; ++b)
          if (wx.empty() && !(-x(k, b + k - 1) + x(k, a + k - 1) + x(j, b + j - 1) - x(j, a + j - 1)).is_zero())
            wx = "j=" + std::to_string(j) + " k=" + std::to_string(k) + " a=" + std::to_string(a) + " b=" + std::to_string(b);
  for (int a = 1; a <= 4; ++a)
    for (int b = a + 1; b <= 4; ++b)
      if (wx.empty() && !(QScalar::q_pow(a + 1) * qbracket(a) + QScalar(b) == qi * x(a, a + b - 1)))
        wx = "a=" + std::to_string(a) + " b=" + std::to_string(b);
  rep.add("x_il identities", wx.empty(), wx);
  return rep;
}

Report check_braid(bool koszul) { return verify_braid(koszul); }

Report check_baxter(const Rational& a, const std::vector<Chain>& chains, int order) {
  std::vector<std::future<Report>> jobs;
  for (const Chain& c : chains)
    jobs.push_back(std::async(std::launch::async, [&a, c, order] { return baxter_check(a, c, order); }));
  Report rep;
  for (std::size_t i = 0; i < chains.size(); ++i) rep.append(jobs[i].get(), chain_name(chains[i]) + " ");
  return rep;
}

Report check_drinfeld(int window) {
  Report rep;
  const Element one(QScalar(1));
  auto run = [&](const Letter& x, const std::function<TensorElement(int)>& want) {
    const auto got = drinfeld_coproduct(x, window);
    std::string w;
    for (int k = -window; k <= window && w.empty(); ++k) {
      const std::string d = tensor_diff(got[k], want(k));
      if (!d.empty()) w = "z^" + std::to_string(k) + " " + d;
    }
    rep.add(x.to_string(), w.empty(), w);
  };
  for (int s = -3; s <= 3; ++s) {
    if (s == 0) continue;
    for (const Letter& x : {Letter::H(s), Letter::C(s)})
      run(x, [&](int k) {
        TensorElement t;
        if (k == 0) t += T(one, L(x));
        if (k == s) t += T(L(x), one);
        return t;
      });
  }
  for (int n = -1; n <= 1; ++n) {
    run(Letter::E(n), [&](int k) {
      TensorElement t;
      if (k == 0) t += T(one, L(Letter::E(n)));
      if (k >= n) t += T(L(Letter::E(k)), phi_minus(n - k));
      return t;
    });
    run(Letter::F(n), [&](int k) {
      TensorElement t;
      if (k == n) t += T(L(Letter::F(n)), one);
      if (k >= 0) t += T(phi_plus(k), L(Letter::F(n - k)));
      return t;
    });
  }
  return rep;
}

Report check_currents(int order) {
  Report rep;
  const Representation rho = rep_rho();
  const char* names[] = {"s11", "s12", "s21", "s22"};
  int i = 0;
  for (GaussId id : {GaussId::s11, GaussId::s12, GaussId::s21, GaussId::s22}) {
    const MatrixSeries got = act_series(rho, gauss_current(id, order));
    const MatrixSeries want = taylor(rho.s_currents()(id), 2, order);
    std::string w;
    for (int k = 0; k <= order && w.empty(); ++k)
      if (!(got[k] == want[k])) w = "z^" + std::to_string(k) + " " + matrix_diff(got[k], want[k]);
    rep.add(std::string("rho(") + names[i++] + ") to order " + std::to_string(order), w.empty(), w);
  }
  return rep;
}

Report check_representations(int bound) {
  const std::vector<Representation> reps{rep_rho(),         rep_pi_a(1),       rep_pi_a(2),
                                         rep_pi_cd(2, 3),   rep_pi_cd(3, 5),   rep_pi_cd(5, 7)};
  std::vector<std::future<Report>> jobs;
  for (const Representation& r : reps)
    jobs.push_back(std::async(std::launch::async, [&r, bound] { return rep_check(r, bound); }));
  Report rep;
  for (std::size_t i = 0; i < reps.size(); ++i) rep.append(jobs[i].get(), reps[i].name() + " ");
  return rep;
}

Report check_round_trip(std::uint32_t seed, int count) {
  Report rep;
  std::mt19937 rng(seed);
  std::string w;
  for (int i = 0; i < count && w.empty(); ++i) {
    Value x;
    if (i % 4 == 3) x = T(random_element(rng, 2), random_element(rng, 2)) + T(random_element(rng, 1), random_element(rng, 1));
    else x = random_element(rng);
    const std::string s = format_value(x);
    try {
      const Value y = parse_expr(s);
      if (!(y == x)) w = "parse(format(x)) != x for " + s;
      else if (format_value(y) != s) w = "format not stable for " + s;
    } catch (const std::exception& ex) {
      w = s + ": " + ex.what();
    }
  }
  rep.add("round trip (" + std::to_string(count) + " elements, seed " + std::to_string(seed) + ")", w.empty(), w);
  return rep;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"perk-schultz", "braid", "intertwine", "quasitriangular", "pairing",
                                              "hopf", "baxter", "drinfeld-coproduct", "fixtures"};
  return names;
}

int suite_order(const std::string& name) {
  static const std::map<std::string, int> orders{{"perk-schultz", 8}, {"braid", 0},   {"intertwine", 6},
                                                 {"quasitriangular", 5}, {"pairing", 4}, {"hopf", 6},
                                                 {"baxter", 8}, {"drinfeld-coproduct", 4}, {"fixtures", 8},
                                                 {"all", 0}};
  const auto it = orders.find(name);
  if (it == orders.end()) throw AlgebraError("unknown suite '" + name + "'");
  return it->second;
}

Report run_suite(const std::string& name, const SuiteOptions& opt) {
  const int n = opt.order.value_or(suite_order(name));
  if (n < 0) throw AlgebraError("order must be nonnegative");
  if (name == "all") {
    std::vector<std::future<Report>> jobs;
    for (const auto& s : suite_names()) {
      SuiteOptions o = opt;
      if (s == "braid") o.order.reset();
      jobs.push_back(std::async(std::launch::async, [s, o] { return run_suite(s, o); }));
    }
    Report rep;
    for (std::size_t i = 0; i < jobs.size(); ++i) rep.append(jobs[i].get(), suite_names()[i] + ": ");
    return rep;
  }
  if (name == "perk-schultz") {
    Report rep = check_perk_schultz(n);
    rep.append(check_specialized(n));
    return rep;
  }
  if (name == "braid") return check_braid(opt.koszul);
  if (name == "intertwine") return check_intertwining(n);
  if (name == "quasitriangular") return check_quasitriangular(n);
  if (name == "pairing") return check_pairing(3, 3, n);
  if (name == "hopf") return check_hopf(opt.seed, 200, 5, n);
  if (name == "baxter") {
    std::vector<Chain> chains = opt.chains;
    if (chains.empty()) chains = {{{2, 3}}, {{2, 3}, {3, 5}}};
    return check_baxter(opt.a, chains, n);
  }
  if (name == "drinfeld-coproduct") return check_drinfeld(n);
  if (name == "fixtures") {
    Report rep = check_currents(n);
    rep.append(check_representations(4));
    rep.append(check_round_trip(opt.seed, 100));
    return rep;
  }
  throw AlgebraError("unknown suite '" + name + "'");
}

}  // namespace qgl11
