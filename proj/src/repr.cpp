#include "qgl11/repr.hpp"

#include <regex>
#include <sstream>

namespace qgl11 {

namespace {

const QScalar& q1() {
  static const QScalar v = QScalar::q();
  return v;
}

QScalar qp(int k) { return QScalar::q_pow(k); }
QScalar rat(const Rational& r) { return QScalar(r); }

Matrix e(int i, int j) { return Matrix::unit(2, static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)); }
Matrix id2() { return Matrix::identity(2); }

const std::vector<int> kParity{0, 1};

Matrix k_matrix(const std::vector<std::array<Weight, 2>>& w, int i, int exp) {
  std::vector<QScalar> d;
  for (const auto& wv : w) {
    const Weight& x = wv[static_cast<std::size_t>(i)];
    d.push_back((x.u * qp(x.m)).pow(exp));
  }
  return diagonal(d);
}

void require_a_side(const Letter& l, const std::string& name) {
  const bool ok = (l.kind == LetterKind::E && l.index >= 0) || (l.kind == LetterKind::F && l.index >= 1) ||
                  ((l.kind == LetterKind::H || l.kind == LetterKind::C) && l.index > 0) ||
                  l.kind == LetterKind::K1 || l.kind == LetterKind::K2;
  if (!ok) throw AlgebraError(name + " is a module over the upper Borel half only; cannot act by " + l.to_string());
}

std::string show(const Letter& l) { return l.to_string(); }

}  // namespace

MatrixSeries taylor(const RationalMatrix& m, std::size_t dim, int order) {
  MatrixSeries s(0, order, Matrix(dim, dim));
  for (const auto& t : m) {
    const auto x = expand_rational(t.num, t.den, order);
    for (int k = 0; k <= order; ++k)
      if (!x[k].is_zero()) s.at(k) += t.basis * x[k];
  }
  return s;
}

Representation::Representation(std::string name, std::vector<int> parity, Action act,
                               std::vector<std::array<Weight, 2>> weight, bool a_only, Currents s_currents)
    : name_(std::move(name)),
      parity_(std::move(parity)),
      act_(std::move(act)),
      weight_(std::move(weight)),
      a_only_(a_only),
      s_currents_(std::move(s_currents)),
      cache_(std::make_shared<Cache>()) {}

Matrix Representation::act(const Letter& l) const {
  {
    std::lock_guard lock(cache_->mu);
    auto it = cache_->letters.find(l);
    if (it != cache_->letters.end()) return it->second;
  }
  Matrix m = act_(l);
  std::lock_guard lock(cache_->mu);
  cache_->letters.emplace(l, m);
  return m;
}

Matrix Representation::act(const Monomial& m) const {
  Matrix r = identity();
  for (const Letter& l : m.letters()) r = r * act(l);
  return r;
}

Matrix Representation::act(const Element& x) const {
  Matrix r = zero();
  for (const auto& [m, c] : x.terms()) r += act(m) * c;
  return r;
}

Representation rep_rho() {
  std::vector<std::array<Weight, 2>> w{{Weight{1, 1}, Weight{1, 0}}, {Weight{1, 0}, Weight{1, -1}}};
  auto act = [w](const Letter& l) -> Matrix {
    const int n = l.index;
    switch (l.kind) {
      case LetterKind::E: return e(1, 2) * (qp(-2 * n - 1) * qdiff());
      case LetterKind::F: return e(2, 1) * (qp(-2 * n + 1) * -qdiff());
      case LetterKind::C: return id2() * -(qp(-n) * qbracket(n) / QScalar(n));
      case LetterKind::H: return (e(1, 1) * qp(-2 * n) + e(2, 2)) * -(QScalar(1) / (QScalar(n) * qdiff()));
      case LetterKind::K1: return k_matrix(w, 0, n);
      case LetterKind::K2: return k_matrix(w, 1, n);
    }
    throw AlgebraError("rho: unknown letter");
  };
  auto currents = [](GaussId id) -> RationalMatrix {
    const QScalar q = q1(), qi = qp(-1);
    switch (id) {
      case GaussId::s11: return {{{q, -qi}, {1}, e(1, 1)}, {{1, -1}, {1}, e(2, 2)}};
      case GaussId::s12: return {{{qdiff()}, {1}, e(1, 2)}};
      case GaussId::s21: return {{{0, qdiff()}, {1}, e(2, 1)}};
      case GaussId::s22: return {{{1, -1}, {1}, e(1, 1)}, {{qi, -q}, {1}, e(2, 2)}};
      default: return {};
    }
  };
  return Representation("rho", kParity, act, w, false, currents);
}

Representation rep_pi_a(const Rational& a_) {
  if (a_ == 0) throw AlgebraError("pi_a: a must be nonzero");
  const QScalar a = rat(a_);
  std::vector<std::array<Weight, 2>> w{{Weight{1, 0}, Weight{1, 0}}, {Weight{1, -1}, Weight{1, -1}}};
  const std::string name = "pi_a(" + a_.get_str() + ")";
  auto act = [w, a, name](const Letter& l) -> Matrix {
    require_a_side(l, name);
    const int n = l.index;
    switch (l.kind) {
      case LetterKind::E: return n == 0 ? e(1, 2) * -qdiff() : Matrix(2, 2);
      case LetterKind::F: return n == 1 ? e(2, 1) * a : Matrix(2, 2);
      case LetterKind::H: return id2() * (a.pow(n) / (QScalar(n) * qdiff()));
      case LetterKind::C: return id2() * -(a.pow(n) / (QScalar(n) * qdiff()));
      case LetterKind::K1: return k_matrix(w, 0, n);
      case LetterKind::K2: return k_matrix(w, 1, n);
    }
    throw AlgebraError("pi_a: unknown letter");
  };
  auto currents = [a](GaussId id) -> RationalMatrix {
    const QScalar q = q1(), qi = qp(-1);
    const std::vector<QScalar> den{1, -a};
    switch (id) {
      case GaussId::s11: return {{{1}, den, e(1, 1)}, {{qi}, den, e(2, 2)}};
      case GaussId::s12: return {{{-qdiff()}, den, e(1, 2)}};
      case GaussId::s21: return {{{0, -a}, den, e(2, 1)}};
      case GaussId::s22: return {{{1}, {1}, e(1, 1)}, {{qi, -a * q}, den, e(2, 2)}};
      default: return {};
    }
  };
  return Representation(name, kParity, act, w, true, currents);
}

Representation rep_pi_cd(const Rational& c_, const Rational& d_) {
  if (c_ == 0 || c_ == 1 || c_ == -1) throw AlgebraError("pi_cd: c must avoid 0, 1 and -1");
  if (d_ == 0) throw AlgebraError("pi_cd: d must be nonzero");
  const QScalar c = rat(c_), d = rat(d_);
  std::vector<std::array<Weight, 2>> w{{Weight{c, 0}, Weight{1, 0}}, {Weight{c, -1}, Weight{1, -1}}};
  auto act = [w, c, d](const Letter& l) -> Matrix {
    const int n = l.index;
    switch (l.kind) {
      case LetterKind::E: return e(1, 2) * (-qdiff() * (d * c * c - d) * d.pow(n));
      case LetterKind::F: return e(2, 1) * (d.pow(n - 1) / c);
      case LetterKind::H: {
        const QScalar pre = d.pow(n) / (QScalar(n) * qdiff());
        return (e(1, 1) * (c.pow(2 * n) - QScalar(1)) + e(2, 2) * (c.pow(2 * n) - qp(2 * n))) * pre;
      }
      case LetterKind::C: return id2() * -(d.pow(n) * (c.pow(2 * n) - QScalar(1)) / (QScalar(n) * qdiff()));
      case LetterKind::K1: return k_matrix(w, 0, n);
      case LetterKind::K2: return k_matrix(w, 1, n);
    }
    throw AlgebraError("pi_cd: unknown letter");
  };
  auto currents = [c, d](GaussId id) -> RationalMatrix {
    const QScalar q = q1(), qi = qp(-1);
    const std::vector<QScalar> den{1, -d * c * c};
    switch (id) {
      case GaussId::s11: return {{{c, -c * d}, den, e(1, 1)}, {{c * qi, -c * d * q}, den, e(2, 2)}};
      case GaussId::s12: return {{{-c * qdiff() * (d * c * c - d)}, den, e(1, 2)}};
      case GaussId::s21: return {{{0, -1}, den, e(2, 1)}};
      case GaussId::s22: return {{{1}, {1}, e(1, 1)}, {{qi, -d * c * c * q}, den, e(2, 2)}};
      default: return {};
    }
  };
  return Representation("pi_cd(" + c_.get_str() + "," + d_.get_str() + ")", kParity, act, w, false, currents);
}

Matrix act_pair(const Representation& r1, const Representation& r2, const TensorElement& x) {
  Matrix out(r1.dim() * r2.dim(), r1.dim() * r2.dim());
  for (const auto& [k, c] : x.terms())
    out += graded_kron(r1.act(k.first), r1.parity(), r2.act(k.second), r2.parity()) * c;
  return out;
}

MatrixSeries act_pair(const Representation& r1, const Representation& r2, const LaurentSeries<TensorElement>& x) {
  const std::size_t n = r1.dim() * r2.dim();
  return x.map([&](const TensorElement& t) { return t.is_zero() ? Matrix(n, n) : act_pair(r1, r2, t); });
}

MatrixSeries act_series(const Representation& r, const LaurentSeries<Element>& x) {
  return x.map([&](const Element& t) { return t.is_zero() ? r.zero() : r.act(t); });
}

Representation tensor_rep(const Representation& r1, const Representation& r2) {
  std::vector<int> parity;
  std::vector<std::array<Weight, 2>> w;
  for (std::size_t i = 0; i < r1.dim(); ++i)
    for (std::size_t j = 0; j < r2.dim(); ++j) {
      parity.push_back((r1.parity()[i] + r2.parity()[j]) % 2);
      std::array<Weight, 2> x;
      for (std::size_t a = 0; a < 2; ++a)
        x[a] = Weight{r1.weight()[i][a].u * r2.weight()[j][a].u, r1.weight()[i][a].m + r2.weight()[j][a].m};
      w.push_back(x);
    }
  const bool a_only = r1.a_only() || r2.a_only();
  auto act = [r1, r2, a_only](const Letter& l) -> Matrix {
    if (a_only) require_a_side(l, r1.name() + "*" + r2.name());
    return act_pair(r1, r2, coproduct(l));
  };
  return Representation(r1.name() + "*" + r2.name(), parity, act, w, a_only);
}

Report rep_check(const Representation& r, int bound) {
  Report rep;
  const bool a = r.a_only();
  std::vector<Letter> es, fs, hs, cs;
  for (int n = a ? 0 : -bound; n <= bound; ++n) es.push_back(Letter::E(n));
  for (int n = a ? 1 : -bound; n <= bound; ++n) fs.push_back(Letter::F(n));
  for (int s = a ? 1 : -bound; s <= bound; ++s)
    if (s != 0) {
      hs.push_back(Letter::H(s));
      cs.push_back(Letter::C(s));
    }
  std::vector<Letter> all;
  for (const auto* v : {&es, &fs, &hs, &cs})
    for (const Letter& l : *v) all.push_back(l);

  auto run = [&rep](const std::string& name, const std::function<std::string()>& body) {
    std::string witness;
    try {
      witness = body();
    } catch (const AlgebraError& ex) {
      witness = ex.what();
    }
    rep.add(name, witness.empty(), witness);
  };

  run("weights", [&] {
    for (int i = 0; i < 2; ++i) {
      std::vector<QScalar> d;
      for (const auto& w : r.weight()) d.push_back(w[static_cast<std::size_t>(i)].u * qp(w[static_cast<std::size_t>(i)].m));
      if (!(r.act(i == 0 ? Letter::K1(1) : Letter::K2(1)) == diagonal(d))) return std::string("k") + std::to_string(i + 1);
    }
    return std::string();
  });
  run("cartan-conjugation", [&] {
    for (const Letter& k : {Letter::K1(1), Letter::K2(1)}) {
      const Matrix km = r.act(k), kinv = r.act(Letter{k.kind, -1});
      for (const Letter& x : all) {
        const int g = Monomial::from_letter(x).qdeg();
        if (!(km * r.act(x) * kinv == r.act(x) * qp(g))) return show(k) + " on " + show(x);
      }
    }
    return std::string();
  });
  run("C-central", [&] {
    for (const Letter& c : cs)
      for (const Letter& x : all)
        if (!(r.act(c) * r.act(x) == r.act(x) * r.act(c))) return show(c) + " vs " + show(x);
    return std::string();
  });
  run("h-commute", [&] {
    for (const Letter& x : hs)
      for (const Letter& y : hs)
        if (!(r.act(x) * r.act(y) == r.act(y) * r.act(x))) return show(x) + " vs " + show(y);
    return std::string();
  });
  run("h-E-F", [&] {
    for (const Letter& h : hs) {
      const int s = h.index;
      const QScalar b = qp(s) * qbracket(s) / QScalar(s);
      for (const Letter& x : es) {
        const Matrix lhs = r.act(h) * r.act(x) - r.act(x) * r.act(h);
        if (!(lhs == r.act(Letter::E(x.index + s)) * b)) return show(h) + " with " + show(x);
      }
      for (const Letter& x : fs) {
        const Matrix lhs = r.act(h) * r.act(x) - r.act(x) * r.act(h);
        if (!(lhs == r.act(Letter::F(x.index + s)) * -b)) return show(h) + " with " + show(x);
      }
    }
    return std::string();
  });
  run("E-F", [&] {
    for (const Letter& x : es)
      for (const Letter& y : fs) {
        const int p = x.index + y.index;
        const Matrix lhs = r.act(x) * r.act(y) + r.act(y) * r.act(x);
        Matrix rhs = r.zero();
        if (p >= 0) rhs += r.act(phi_plus(p));
        if (p <= 0) rhs -= r.act(phi_minus(p));
        if (!(lhs == rhs * qdiff())) return show(x) + " with " + show(y);
      }
    return std::string();
  });
  run("odd-squares", [&] {
    for (const auto* v : {&es, &fs})
      for (const Letter& x : *v)
        for (const Letter& y : *v)
          if (!(r.act(x) * r.act(y) + r.act(y) * r.act(x)).is_zero()) return show(x) + " with " + show(y);
    return std::string();
  });
  if (r.s_currents()) {
    run("s-currents", [&] {
      for (GaussId id : {GaussId::s11, GaussId::s12, GaussId::s21, GaussId::s22}) {
        const MatrixSeries got = act_series(r, gauss_current(id, bound));
        const MatrixSeries want = taylor(r.s_currents()(id), r.dim(), bound);
        for (int k = 0; k <= bound; ++k)
          if (!(got[k] == want[k])) return "current " + std::to_string(static_cast<int>(id)) + " mode " + std::to_string(k);
      }
      return std::string();
    });
  }
  return rep;
}

LaurentSeries<QScalar> f_series(const Rational& c_, const Rational& d_, int order) {
  if (c_ == 0 || d_ == 0) throw AlgebraError("f_series: parameters must be nonzero");
  const QScalar c = rat(c_), d = rat(d_);
  LaurentSeries<QScalar> x(0, order);
  for (int s = 1; s <= order; ++s)
    x.at(s) = (qp(s) + qp(-s)) * (c.pow(-2 * s) - QScalar(1)) * d.pow(-s) / (QScalar(s) * (qp(s) - qp(-s)));
  return series_exp(x, order);
}

Matrix graded_unit_pair(int i, int j, int k, int l) { return graded_kron(e(i, j), kParity, e(k, l), kParity); }

RationalMatrix rcd_matrix(const Rational& c_, const Rational& d_) {
  if (c_ == 0 || c_ == 1 || c_ == -1 || d_ == 0) throw AlgebraError("rcd_matrix: invalid parameters");
  const QScalar c = rat(c_), d = rat(d_), di = d.inverse();
  const std::vector<QScalar> den{1, -di};
  return {
      {{1}, {1}, graded_unit_pair(1, 1, 1, 1)},
      {{1}, den, graded_unit_pair(1, 1, 2, 2)},
      {{c, -di / c}, den, graded_unit_pair(2, 2, 1, 1)},
      {{c}, den, graded_unit_pair(2, 2, 2, 2)},
      {{di / c}, den, graded_unit_pair(1, 2, 2, 1)},
      {{0, QScalar(1) - c * c}, den, graded_unit_pair(2, 1, 1, 2)},
  };
}

LaurentSeries<Element> t_series(int order) {
  LaurentSeries<Element> x(0, order);
  for (int s = 1; s <= order; ++s)
    x.at(s) = (Element::letter(Letter::C(-s)) * qp(-s) - Element::letter(Letter::H(-s)) * qp(s)) * qbracket(s).inverse();
  return series_exp(x, order);
}

Chain parse_chain(const std::string& text) {
  Chain out;
  static const std::regex item(R"(\s*\(\s*([-+]?\d+(?:/\d+)?)\s*,\s*([-+]?\d+(?:/\d+)?)\s*\)\s*)");
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) {
    std::smatch m;
    if (!std::regex_match(part, m, item)) throw AlgebraError("bad chain entry '" + part + "'; expected (c,d)");
    out.emplace_back(parse_rational(m[1].str()), parse_rational(m[2].str()));
  }
  if (out.empty()) throw AlgebraError("chain must be nonempty");
  return out;
}

}  // namespace qgl11
