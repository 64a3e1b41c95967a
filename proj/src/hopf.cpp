#include "qgl11/hopf.hpp"

#include <map>

namespace qgl11 {

namespace {

Element L(const Letter& l) { return Element::letter(l); }

TensorElement pure(const Element& a, const Element& b) { return TensorElement::pure(a, b); }

TensorElement coproduct_e(int n) {
  TensorElement r = pure(Element(QScalar(1)), L(Letter::E(n)));
  if (n >= 0) {
    for (int i = 0; i <= n; ++i) r += pure(L(Letter::E(i)), phi_mode(1, n - i));
  } else {
    for (int k = 0; k <= -1 - n; ++k) r += pure(L(Letter::E(n + k)), phi_mode(-1, k));
  }
  return r;
}

TensorElement coproduct_f(int n) {
  TensorElement r = pure(L(Letter::F(n)), Element(QScalar(1)));
  if (n >= 1) {
    for (int i = 0; i <= n - 1; ++i) r += pure(phi_mode(1, i), L(Letter::F(n - i)));
  } else {
    for (int k = 0; k <= -n; ++k) r += pure(phi_mode(-1, k), L(Letter::F(n + k)));
  }
  return r;
}

TensorElement coproduct_h(int s) {
  const Element one(QScalar(1));
  const Element hs = L(Letter::H(s));
  TensorElement r = pure(one, hs) + pure(hs, one);
  const int a = s > 0 ? s : -s;
  TensorElement sum;
  if (s > 0) {
    const QScalar c = QScalar::q_pow(a) * qbracket(a) / (QScalar(a) * qdiff());
    for (int i = 0; i < a; ++i) sum += pure(L(Letter::E(i)), L(Letter::F(a - i)));
    r += sum * c;
  } else {
    const QScalar c = QScalar::q_pow(-a) * qbracket(a) / (QScalar(a) * -qdiff());
    for (int i = 0; i < a; ++i) sum += pure(L(Letter::E(-a + i)), L(Letter::F(-i)));
    r += sum * c;
  }
  return r;
}

Element monomial_element(const Monomial& m) { return Element(m); }

}  // namespace

TensorElement coproduct(const Letter& l) {
  switch (l.kind) {
    case LetterKind::E: return coproduct_e(l.index);
    case LetterKind::F: return coproduct_f(l.index);
    case LetterKind::H: return coproduct_h(l.index);
    case LetterKind::C: {
      const Element c = L(l);
      return pure(Element(QScalar(1)), c) + pure(c, Element(QScalar(1)));
    }
    case LetterKind::K1:
    case LetterKind::K2: return pure(L(l), L(l));
  }
  throw AlgebraError("coproduct: unknown letter");
}

TensorElement coproduct(const Element& x) {
  std::map<Letter, TensorElement> memo;
  auto of = [&](const Letter& l) -> const TensorElement& {
    auto it = memo.find(l);
    if (it == memo.end()) it = memo.emplace(l, coproduct(l)).first;
    return it->second;
  };
  TensorElement out;
  for (const auto& [m, c] : x.terms()) {
    TensorElement t(QScalar(1));
    for (const Letter& l : m.letters()) t = tensor_multiply(t, of(l));
    out += t * c;
  }
  return out;
}

QScalar counit(const Element& x) {
  QScalar r;
  for (const auto& [m, c] : x.terms())
    if (m.is_cartan() && m.h.empty() && m.c.empty()) r += c;
  return r;
}

LaurentSeries<TensorElement> coproduct_z(const Element& x, bool flipped, int order) {
  TensorElement d = coproduct(x);
  if (flipped) d = d.flipped();
  int lo = 0, hi = 0;
  bool first = true;
  for (const auto& [key, c] : d.terms()) {
    const int z = key.first.zdeg();
    if (first || z < lo) lo = z;
    if (first || z > hi) hi = z;
    first = false;
  }
  LaurentSeries<TensorElement> s(lo, std::max(hi, order));
  for (const auto& [key, c] : d.terms()) s.at(key.first.zdeg()).add_term(key.first, key.second, c);
  return s;
}

GaussId parse_gauss_id(const std::string& name) {
  static const std::map<std::string, GaussId> ids = {
      {"s11", GaussId::s11}, {"s12", GaussId::s12}, {"s21", GaussId::s21}, {"s22", GaussId::s22},
      {"t11", GaussId::t11}, {"t12", GaussId::t12}, {"t21", GaussId::t21}, {"t22", GaussId::t22}};
  auto it = ids.find(name);
  if (it == ids.end()) throw AlgebraError("unknown current '" + name + "'");
  return it->second;
}

LaurentSeries<Element> gauss_current(GaussId id, int order) {
  if (order < 0) throw AlgebraError("gauss_current: negative order");
  const bool s_side = id == GaussId::s11 || id == GaussId::s12 || id == GaussId::s21 || id == GaussId::s22;
  using S = LaurentSeries<Element>;
  const Orientation o = s_side ? Orientation::Ascending : Orientation::Descending;
  const int lo = s_side ? 0 : -order;
  const int hi = s_side ? order : 0;
  const int sg = s_side ? 1 : -1;

  S hsum(lo, hi, Element(), o);
  for (int s = 1; s <= order; ++s) hsum.at(sg * s) = L(Letter::H(sg * s)) * (qdiff() * QScalar(sg));
  S k(lo, hi, Element(), o);
  k.at(0) = L(Letter::K1(sg));
  const S k1 = k * series_exp(hsum, order);

  S e(lo, hi, Element(), o), f(lo, hi, Element(), o), phi(lo, hi, Element(), o);
  for (int n = 0; n <= order; ++n) {
    if (s_side) {
      e.at(n) = L(Letter::E(n));
      if (n >= 1) f.at(n) = -L(Letter::F(n));
    } else {
      if (n >= 1) e.at(-n) = -L(Letter::E(-n));
      f.at(-n) = L(Letter::F(-n));
    }
    phi.at(sg * n) = phi_mode(sg, n);
  }
  switch (id) {
    case GaussId::s11:
    case GaussId::t11: return k1;
    case GaussId::s12:
    case GaussId::t12: return k1 * e;
    case GaussId::s21:
    case GaussId::t21: return f * k1;
    // Odd matrix units pick up a Koszul sign in the graded Gauss product.
    case GaussId::s22:
    case GaussId::t22: return k1 * phi - f * k1 * e;
  }
  throw AlgebraError("gauss_current: unknown id");
}

LaurentSeries<TensorElement> r_plus_series(int order) {
  using S = LaurentSeries<TensorElement>;
  const QScalar c = QScalar(1) / -qdiff();
  S r(0, order);
  r.at(0) = TensorElement(QScalar(1));
  for (int n = 0; n <= order; ++n) {
    S factor(0, order);
    factor.at(0) = TensorElement(QScalar(1));
    factor.at(n) += pure(L(Letter::E(n)), L(Letter::F(-n))) * c;
    r = r * factor;
  }
  return r;
}

LaurentSeries<TensorElement> drinfeld_coproduct(const Letter& x, int order) {
  if (order < 0) throw AlgebraError("drinfeld_coproduct: negative order");
  using S = LaurentSeries<TensorElement>;
  S d = coproduct_z(Element::letter(x), false);
  const int m = order - std::min(d.lo(), 0);
  d = coproduct_z(Element::letter(x), false, order);
  const QScalar c = QScalar(1) / -qdiff();
  S plus(0, m), inv(0, m);
  plus.at(0) = inv.at(0) = TensorElement(QScalar(1));
  // Each factor is 1 + x_n with x_n^2 = 0, so its inverse is 1 - x_n.
  for (int n = 0; n <= m; ++n) {
    const TensorElement xn = pure(L(Letter::E(n)), L(Letter::F(-n))) * c;
    S f(0, m), g(0, m);
    f.at(0) = g.at(0) = TensorElement(QScalar(1));
    f.at(n) += xn;
    g.at(n) -= xn;
    plus = plus * f;
    inv = g * inv;
  }
  S r = plus * d * inv;
  S out(std::min(d.lo(), -order), order);
  for (int k = out.lo(); k <= order; ++k) out.at(k) = r[k];
  return out;
}

void TripleTensor::add_term(const Monomial& a, const Monomial& b, const Monomial& c, const QScalar& x) {
  if (x.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(Key{a, b, c}, x);
  if (!fresh) {
    it->second += x;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TripleTensor coproduct_left(const TensorElement& x) {
  TripleTensor r;
  for (const auto& [key, c] : x.terms())
    for (const TensorElement d = coproduct(monomial_element(key.first)); const auto& [k2, c2] : d.terms())
      r.add_term(k2.first, k2.second, key.second, c * c2);
  return r;
}

TripleTensor coproduct_right(const TensorElement& x) {
  TripleTensor r;
  for (const auto& [key, c] : x.terms())
    for (const TensorElement d = coproduct(monomial_element(key.second)); const auto& [k2, c2] : d.terms())
      r.add_term(key.first, k2.first, k2.second, c * c2);
  return r;
}

Element counit_left(const TensorElement& x) {
  Element r;
  for (const auto& [key, c] : x.terms()) r.add_term(key.second, c * counit(Element(key.first)));
  return r;
}

Element counit_right(const TensorElement& x) {
  Element r;
  for (const auto& [key, c] : x.terms()) r.add_term(key.first, c * counit(Element(key.second)));
  return r;
}

}  // namespace qgl11
