#include "qgl11/pairing.hpp"

#include <functional>

#include "qgl11/hopf.hpp"

namespace qgl11 {

namespace {

Element L(const Letter& l) { return Element::letter(l); }

int rank(BKind k) { return static_cast<int>(k); }

// Units of a monomial: single F, E, h, C letters and the whole k-part.
int units(const Monomial& m) {
  int n = static_cast<int>(m.f.size() + m.e.size()) + (m.k1 != 0 || m.k2 != 0 ? 1 : 0);
  for (auto [s, x] : m.h) n += x;
  for (auto [s, x] : m.c) n += x;
  return n;
}

void drop_one(ExpMap& m) {
  if (--m.front().second == 0) m.erase(m.begin());
}

std::pair<Monomial, Monomial> split_first(const Monomial& m) {
  Monomial unit, rest = m;
  if (!m.f.empty()) {
    unit.f.push_back(m.f.front());
    rest.f.erase(rest.f.begin());
  } else if (m.k1 != 0 || m.k2 != 0) {
    unit.k1 = m.k1;
    unit.k2 = m.k2;
    rest.k1 = rest.k2 = 0;
  } else if (!m.h.empty()) {
    unit.h.push_back({m.h.front().first, 1});
    drop_one(rest.h);
  } else if (!m.c.empty()) {
    unit.c.push_back({m.c.front().first, 1});
    drop_one(rest.c);
  } else {
    unit.e.push_back(m.e.front());
    rest.e.erase(rest.e.begin());
  }
  return {unit, rest};
}

bool is_group_like(const Monomial& m) { return m.f.empty() && m.e.empty() && m.h.empty() && m.c.empty(); }

QScalar counit_monomial(const Monomial& m) { return is_group_like(m) ? QScalar(1) : QScalar(0); }

bool cancels(const Monomial& x, const Monomial& y) {
  return x.zdeg() + y.zdeg() == 0 && x.qdeg() + y.qdeg() == 0;
}

constexpr int kMaxDepth = 256;

}  // namespace

BLetter BLetter::fneg(int s) {
  if (s < 1) throw AlgebraError("FNeg index must be >= 1");
  return {BKind::FNeg, s};
}
BLetter BLetter::h(int s) {
  if (s < 1) throw AlgebraError("H index must be >= 1");
  return {BKind::H, s};
}
BLetter BLetter::ccen(int s) {
  if (s < 1) throw AlgebraError("Ccen index must be >= 1");
  return {BKind::Ccen, s};
}
BLetter BLetter::e(int n) {
  if (n < 0) throw AlgebraError("E index must be >= 0");
  return {BKind::E, n};
}

std::string BLetter::to_string() const {
  switch (kind) {
    case BKind::FNeg: return "FNeg(" + std::to_string(index) + ")";
    case BKind::H: return "H(" + std::to_string(index) + ")";
    case BKind::Ccen: return "Ccen(" + std::to_string(index) + ")";
    case BKind::E: return "E(" + std::to_string(index) + ")";
  }
  return "?";
}

std::strong_ordering operator<=>(const BLetter& a, const BLetter& b) {
  if (a.kind != b.kind) return rank(a.kind) <=> rank(b.kind);
  if (a.kind == BKind::FNeg) return b.index <=> a.index;
  return a.index <=> b.index;
}

GammaFunction::GammaFunction(std::initializer_list<std::pair<const BLetter, int>> init) {
  for (const auto& [b, m] : init) set(b, m);
}

void GammaFunction::set(const BLetter& b, int mult) {
  if (mult < 0) throw AlgebraError("Gamma function values must be nonnegative");
  if (mult > 1 && b.is_odd()) throw AlgebraError("Gamma function exceeds 1 on odd letter " + b.to_string());
  if (mult == 0)
    f_.erase(b);
  else
    f_[b] = mult;
}

int GammaFunction::length() const {
  int n = 0;
  for (const auto& [b, m] : f_) n += m;
  return n;
}

std::string GammaFunction::to_string() const {
  std::string s = "{";
  for (const auto& [b, m] : f_) {
    if (s.size() > 1) s += ", ";
    s += b.to_string() + ":" + std::to_string(m);
  }
  return s + "}";
}

Element cartan_element_a(const CartanExp& k) { return L(Letter::K1(k.a1)) * L(Letter::K2(k.a2)); }

Element cartan_element_b(const CartanExp& k) { return L(Letter::K1(-k.a1)) * L(Letter::K2(-k.a2)); }

std::pair<Element, Element> pbw_products(const GammaFunction& f) {
  Element ef(QScalar(1)), ff(QScalar(1));
  for (const auto& [b, m] : f.support()) {
    Element x, y;
    switch (b.kind) {
      case BKind::FNeg:
        x = L(Letter::K1(1)) * L(Letter::K2(-1)) * L(Letter::F(b.index));
        y = L(Letter::K1(-1)) * L(Letter::K2(1)) * L(Letter::E(-b.index));
        break;
      case BKind::H:
        x = L(Letter::H(b.index));
        y = L(Letter::C(-b.index));
        break;
      case BKind::Ccen:
        x = L(Letter::C(b.index));
        y = L(Letter::H(-b.index));
        break;
      case BKind::E:
        x = L(Letter::E(b.index));
        y = L(Letter::F(-b.index));
        break;
    }
    ef = ef * power(x, m);
    ff = ff * power(y, m);
  }
  return {ef, ff};
}

QScalar letter_pair(const BLetter& b) {
  const int s = b.index;
  switch (b.kind) {
    case BKind::H: return QScalar::q_pow(s) * qbracket(s) / (QScalar(s) * qdiff());
    case BKind::Ccen: return QScalar::q_pow(-s) * qbracket(s) / (QScalar(s) * qdiff());
    case BKind::E: return qdiff();
    case BKind::FNeg: return -qdiff();
  }
  throw AlgebraError("letter_pair: unknown letter");
}

QScalar cartan_pair(const CartanExp& k, const CartanExp& kp) {
  static constexpr int c[2][2] = {{0, -1}, {-1, -2}};
  const int a[2] = {k.a1, k.a2};
  const int b[2] = {kp.a1, kp.a2};
  int e = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) e += a[i] * b[j] * c[i][j];
  return QScalar::q_pow(e);
}

QScalar pair_closed(const CartanExp& k, const GammaFunction& f, const CartanExp& kp, const GammaFunction& g) {
  if (!(f == g)) return QScalar(0);
  QScalar r = cartan_pair(k, kp);
  int odd = 0;
  for (const auto& [b, m] : f.support()) {
    if (b.is_odd()) odd += m;
    const QScalar lp = letter_pair(b);
    for (int i = 1; i <= m; ++i) r *= lp * QScalar(i);
  }
  if ((odd * (odd - 1) / 2) % 2) r = -r;
  return r;
}

namespace {

std::size_t letters_no_k(const Monomial& m) {
  std::size_t n = m.f.size() + m.e.size();
  for (auto [s, x] : m.h) n += static_cast<std::size_t>(x);
  for (auto [s, x] : m.c) n += static_cast<std::size_t>(x);
  return n;
}

struct BasisTerm {
  CartanExp k;
  GammaFunction f;
  QScalar coeff;
};

// Basis vector k * E(f) (A side) or k' * F(f) (B side) whose leading
// monomial is m.
std::pair<CartanExp, GammaFunction> leading(const Monomial& m, bool a_side, Element& vec) {
  GammaFunction f;
  if (a_side) {
    for (int n : m.f) f.set(BLetter::fneg(n), 1);
    for (auto [s, x] : m.h) f.set(BLetter::h(s), x);
    for (auto [s, x] : m.c) f.set(BLetter::ccen(s), x);
    for (int n : m.e) f.set(BLetter::e(n), 1);
  } else {
    for (int n : m.e) f.set(BLetter::fneg(-n), 1);
    for (auto [s, x] : m.c) f.set(BLetter::h(-s), x);
    for (auto [s, x] : m.h) f.set(BLetter::ccen(-s), x);
    for (int n : m.f) f.set(BLetter::e(-n), 1);
  }
  const auto pbw = pbw_products(f);
  const Element& base = a_side ? pbw.first : pbw.second;
  Monomial m0;
  for (const auto& [b, c] : base.terms())
    if (letters_no_k(b) == letters_no_k(m)) m0 = b;
  const int sg = a_side ? 1 : -1;
  const CartanExp k{sg * (m.k1 - m0.k1), sg * (m.k2 - m0.k2)};
  vec = (a_side ? cartan_element_a(k) : cartan_element_b(k)) * base;
  return {k, f};
}

// Expansion in the PBW basis; lower-order terms of a basis vector are
// shorter, so peeling off the longest monomial first terminates.
std::vector<BasisTerm> expand(Element x, bool a_side) {
  std::vector<BasisTerm> out;
  while (!x.is_zero()) {
    auto top = x.terms().begin();
    for (auto it = x.terms().begin(); it != x.terms().end(); ++it)
      if (letters_no_k(it->first) > letters_no_k(top->first)) top = it;
    const Monomial m = top->first;
    if (!(a_side ? in_borel_a(m) : in_borel_b(m)))
      throw AlgebraError("pair_closed: " + m.to_string() + " is not in the " + (a_side ? "upper" : "lower") +
                         " Borel half");
    Element vec;
    auto [k, f] = leading(m, a_side, vec);
    const QScalar lead = vec.coefficient(m);
    if (lead.is_zero()) throw AlgebraError("pair_closed: cannot decompose " + m.to_string());
    const QScalar c = top->second / lead;
    out.push_back({k, f, c});
    x -= vec * c;
  }
  return out;
}

}  // namespace

QScalar pair_closed(const Element& x, const Element& y) {
  const auto dx = expand(x, true), dy = expand(y, false);
  QScalar r;
  for (const auto& a : dx)
    for (const auto& b : dy) {
      const QScalar v = pair_closed(a.k, a.f, b.k, b.f);
      if (!v.is_zero()) r += a.coeff * b.coeff * v;
    }
  return r;
}

bool in_borel_a(const Monomial& m) {
  for (int n : m.e)
    if (n < 0) return false;
  for (int n : m.f)
    if (n < 1) return false;
  for (auto [s, x] : m.h)
    if (s < 0) return false;
  for (auto [s, x] : m.c)
    if (s < 0) return false;
  return true;
}

bool in_borel_b(const Monomial& m) {
  for (int n : m.e)
    if (n > -1) return false;
  for (int n : m.f)
    if (n > 0) return false;
  for (auto [s, x] : m.h)
    if (s > 0) return false;
  for (auto [s, x] : m.c)
    if (s > 0) return false;
  return true;
}

const TensorElement& PairingOracle::delta(const Monomial& m) {
  auto it = delta_.find(m);
  if (it == delta_.end()) it = delta_.emplace(m, coproduct(Element(m))).first;
  return it->second;
}

QScalar PairingOracle::base(const Monomial& x, const Monomial& y) {
  if (is_group_like(x) && is_group_like(y)) return cartan_pair({x.k1, x.k2}, {-y.k1, -y.k2});
  if (x.h.size() == 1 && y.c.size() == 1 && x.h[0].first == -y.c[0].first)
    return letter_pair(BLetter::h(x.h[0].first));
  if (x.c.size() == 1 && y.h.size() == 1 && x.c[0].first == -y.h[0].first)
    return letter_pair(BLetter::ccen(x.c[0].first));
  if (x.e.size() == 1 && y.f.size() == 1 && x.e[0] == -y.f[0]) return qdiff();
  if (x.f.size() == 1 && y.e.size() == 1 && x.f[0] == -y.e[0]) return -qdiff();
  return QScalar(0);
}

QScalar PairingOracle::compute(const Monomial& x, const Monomial& y, int depth) {
  if (!cancels(x, y)) return QScalar(0);
  if (x.is_one()) return counit_monomial(y);
  if (y.is_one()) return counit_monomial(x);
  if (depth > kMaxDepth) throw AlgebraError("pair_oracle: recursion depth exceeded");
  const auto key = std::make_pair(x, y);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  QScalar r;
  if (units(y) >= 2) {
    // phi(x, y1 y') = (-1)^{|y1||y'|} phi(x_(1), y1) phi(x_(2), y')
    const auto [y1, yr] = split_first(y);
    const TensorElement d = delta(x);
    for (const auto& [k, c] : d.terms()) {
      if (!cancels(k.first, y1)) continue;
      QScalar a = compute(k.first, y1, depth + 1);
      if (a.is_zero()) continue;
      QScalar b = compute(k.second, yr, depth + 1);
      if (!b.is_zero()) r += c * a * b;
    }
    if (y1.odd() && yr.odd()) r = -r;
  } else if (units(x) >= 2) {
    // phi(a a', y) = phi(a', y_(1)) phi(a, y_(2))
    const auto [a, ar] = split_first(x);
    const TensorElement d = delta(y);
    for (const auto& [k, c] : d.terms()) {
      if (!cancels(ar, k.first)) continue;
      QScalar u = compute(ar, k.first, depth + 1);
      if (u.is_zero()) continue;
      QScalar v = compute(a, k.second, depth + 1);
      if (!v.is_zero()) r += c * u * v;
    }
  } else {
    r = base(x, y);
  }
  memo_.emplace(key, r);
  return r;
}

QScalar PairingOracle::pair_monomials(const Monomial& x, const Monomial& y) {
  if (!in_borel_a(x)) throw AlgebraError("pair_oracle: " + x.to_string() + " is not in the upper Borel half");
  if (!in_borel_b(y)) throw AlgebraError("pair_oracle: " + y.to_string() + " is not in the lower Borel half");
  return compute(x, y, 0);
}

QScalar PairingOracle::operator()(const Element& x, const Element& y) {
  QScalar r;
  for (const auto& [mx, cx] : x.terms())
    for (const auto& [my, cy] : y.terms()) {
      const QScalar v = pair_monomials(mx, my);
      if (!v.is_zero()) r += cx * cy * v;
    }
  return r;
}

QScalar pair_oracle(const Element& x, const Element& y) {
  PairingOracle oracle;
  return oracle(x, y);
}

std::vector<GammaFunction> enumerate_gamma(int bound, int max_len) {
  std::vector<BLetter> letters;
  for (int s = bound; s >= 1; --s) letters.push_back(BLetter::fneg(s));
  for (int s = 1; s <= bound; ++s) letters.push_back(BLetter::h(s));
  for (int s = 1; s <= bound; ++s) letters.push_back(BLetter::ccen(s));
  for (int n = 0; n <= bound; ++n) letters.push_back(BLetter::e(n));
  std::vector<GammaFunction> out;
  GammaFunction cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == letters.size()) {
      out.push_back(cur);
      return;
    }
    const int cap = letters[i].is_odd() ? std::min(1, left) : left;
    for (int m = 0; m <= cap; ++m) {
      cur.set(letters[i], m);
      rec(i + 1, left - m);
    }
    cur.set(letters[i], 0);
  };
  rec(0, max_len);
  return out;
}

}  // namespace qgl11
