#include "qgl11/superalg.hpp"

#include <algorithm>
#include <numeric>

namespace qgl11 {

Letter Letter::H(int s) {
  if (s == 0) throw AlgebraError("h index must be nonzero");
  return {LetterKind::H, s};
}

Letter Letter::C(int s) {
  if (s == 0) throw AlgebraError("C index must be nonzero");
  return {LetterKind::C, s};
}

int Letter::zdeg() const {
  switch (kind) {
    case LetterKind::K1:
    case LetterKind::K2:
      return 0;
    default:
      return index;
  }
}

int Letter::qdeg() const {
  if (kind == LetterKind::E) return 1;
  if (kind == LetterKind::F) return -1;
  return 0;
}

std::string Letter::to_string() const {
  auto idx = [this] { return "[" + std::to_string(index) + "]"; };
  switch (kind) {
    case LetterKind::E: return "E" + idx();
    case LetterKind::F: return "F" + idx();
    case LetterKind::H: return "h" + idx();
    case LetterKind::C: return "C" + idx();
    case LetterKind::K1: return index == 1 ? "k1" : "k1^" + std::to_string(index);
    case LetterKind::K2: return index == 1 ? "k2" : "k2^" + std::to_string(index);
  }
  return "?";
}

// ---------------------------------------------------------------- Monomial

namespace {

// Inserts n into a strictly increasing list of odd indices. Returns the sign
// (-1)^{#entries > n} picked up by moving the new letter into place, or 0 if
// the index is already present (odd letters square to zero).
int insert_odd(std::vector<int>& v, int n) {
  auto it = std::lower_bound(v.begin(), v.end(), n);
  if (it != v.end() && *it == n) return 0;
  const auto greater = std::distance(it, v.end());
  v.insert(it, n);
  return greater % 2 ? -1 : 1;
}

void add_exp(ExpMap& m, int idx, int by) {
  auto it = std::lower_bound(m.begin(), m.end(), idx,
                             [](const std::pair<int, int>& p, int i) { return p.first < i; });
  if (it != m.end() && it->first == idx) {
    it->second += by;
    if (it->second == 0) m.erase(it);
  } else if (by != 0) {
    m.insert(it, {idx, by});
  }
}

int exp_zdeg(const ExpMap& m) {
  int z = 0;
  for (auto [s, e] : m) z += s * e;
  return z;
}

}  // namespace

Monomial Monomial::from_letter(const Letter& l) {
  Monomial m;
  switch (l.kind) {
    case LetterKind::E: m.e.push_back(l.index); break;
    case LetterKind::F: m.f.push_back(l.index); break;
    case LetterKind::H: add_exp(m.h, Letter::H(l.index).index, 1); break;
    case LetterKind::C: add_exp(m.c, Letter::C(l.index).index, 1); break;
    case LetterKind::K1: m.k1 = l.index; break;
    case LetterKind::K2: m.k2 = l.index; break;
  }
  return m;
}

int Monomial::zdeg() const {
  int z = std::accumulate(f.begin(), f.end(), 0) + std::accumulate(e.begin(), e.end(), 0);
  return z + exp_zdeg(h) + exp_zdeg(c);
}

std::vector<Letter> Monomial::letters() const {
  std::vector<Letter> out;
  for (int n : f) out.push_back(Letter::F(n));
  if (k1 != 0) out.push_back(Letter::K1(k1));
  if (k2 != 0) out.push_back(Letter::K2(k2));
  for (auto [s, x] : h)
    for (int i = 0; i < x; ++i) out.push_back({LetterKind::H, s});
  for (auto [s, x] : c)
    for (int i = 0; i < x; ++i) out.push_back({LetterKind::C, s});
  for (int n : e) out.push_back(Letter::E(n));
  return out;
}

std::size_t Monomial::length() const {
  std::size_t n = f.size() + e.size() + (k1 != 0) + (k2 != 0);
  for (auto [s, x] : h) n += static_cast<std::size_t>(x);
  for (auto [s, x] : c) n += static_cast<std::size_t>(x);
  return n;
}

std::string Monomial::to_string() const {
  if (is_one()) return "1";
  std::string out;
  auto put = [&out](const std::string& s) {
    if (!out.empty()) out += "*";
    out += s;
  };
  for (int n : f) put("F[" + std::to_string(n) + "]");
  if (k1 != 0) put(Letter::K1(k1).to_string());
  if (k2 != 0) put(Letter::K2(k2).to_string());
  for (auto [s, x] : h) put("h[" + std::to_string(s) + "]" + (x > 1 ? "^" + std::to_string(x) : ""));
  for (auto [s, x] : c) put("C[" + std::to_string(s) + "]" + (x > 1 ? "^" + std::to_string(x) : ""));
  for (int n : e) put("E[" + std::to_string(n) + "]");
  return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto r = a.zdeg() <=> b.zdeg(); r != 0) return r;
  if (auto r = a.qdeg() <=> b.qdeg(); r != 0) return r;
  if (auto r = a.f <=> b.f; r != 0) return r;
  if (auto r = a.k1 <=> b.k1; r != 0) return r;
  if (auto r = a.k2 <=> b.k2; r != 0) return r;
  if (auto r = a.h <=> b.h; r != 0) return r;
  if (auto r = a.c <=> b.c; r != 0) return r;
  return a.e <=> b.e;
}

Grading grading_data(const Monomial& m) { return m.grading(); }

// ---------------------------------------------------------------- Element

Element::Element(const QScalar& c) {
  if (!c.is_zero()) terms_.emplace(Monomial::one(), c);
}

Element::Element(const Monomial& m, const QScalar& c) {
  if (!c.is_zero()) terms_.emplace(m, c);
}

void Element::add_term(const Monomial& m, const QScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

QScalar Element::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? QScalar() : it->second;
}

Element Element::operator-() const {
  Element r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Element& Element::operator+=(const Element& b) {
  for (const auto& [m, c] : b.terms_) add_term(m, c);
  return *this;
}

Element& Element::operator-=(const Element& b) {
  for (const auto& [m, c] : b.terms_) add_term(m, -c);
  return *this;
}

Element& Element::operator*=(const QScalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

Element& Element::operator*=(const Element& b) { return *this = multiply(*this, b); }

Element operator*(const Element& a, const Element& b) { return multiply(a, b); }

std::string Element::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    bool neg = c.num().lead() < 0;
    QScalar mag = neg ? -c : c;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    std::string cs;
    if (mag.den().is_constant() && mag.den().lead() == 1) {
      const auto& coeffs = mag.num().coeffs();
      int nonzero = static_cast<int>(std::count_if(coeffs.begin(), coeffs.end(),
                                                   [](const mpz_class& x) { return x != 0; }));
      cs = nonzero == 1 ? mag.num().to_string() : "(" + mag.num().to_string() + ")";
    } else {
      cs = "(" + mag.num().to_string() + ")/(" + mag.den().to_string() + ")";
    }
    if (m.is_one()) {
      out += cs;
    } else if (mag.is_one()) {
      out += m.to_string();
    } else {
      out += cs + "*" + m.to_string();
    }
  }
  return out;
}

// ---------------------------------------------------------------- rewriting

namespace {

long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// (q - q^-1)(phi^+_p - phi^-_p): the anticommutator E_m F_n with m + n = p.
Element ef_bracket(int p) {
  Element x = phi_plus(p) - phi_minus(p);
  x *= qdiff();
  return x;
}

void mul_e(const Monomial& m, int n, const QScalar& c, Element& out) {
  Monomial r = m;
  int s = insert_odd(r.e, n);
  if (s != 0) out.add_term(r, s > 0 ? c : -c);
}

void mul_k(const Monomial& m, int a1, int a2, const QScalar& c, Element& out) {
  Monomial r = m;
  r.k1 += a1;
  r.k2 += a2;
  // E-block * k_i^a = q^{-a #E} k_i^a E-block, since (alpha, e_i) = 1.
  const int shift = -(a1 + a2) * static_cast<int>(m.e.size());
  out.add_term(r, shift == 0 ? c : c * QScalar::q_pow(shift));
}

void mul_c(const Monomial& m, int s, const QScalar& c, Element& out) {
  Monomial r = m;
  add_exp(r.c, s, 1);
  out.add_term(r, c);
}

// [h_s, E_n] = q^s [s]/s E_{n+s}.
QScalar h_on_e(int s) { return QScalar::q_pow(s) * qbracket(s) / QScalar(s); }

void mul_h(const Monomial& m, int s, const QScalar& c, Element& out) {
  Monomial r = m;
  add_exp(r.h, s, 1);
  out.add_term(r, c);
  if (m.e.empty()) return;
  // E-block * h_s = h_s * E-block - sum_j (E-block with E_{n_j} -> [h_s, E_{n_j}]).
  const QScalar b = -(c * h_on_e(s));
  for (std::size_t j = 0; j < m.e.size(); ++j) {
    Monomial t = m;
    t.e.erase(t.e.begin() + static_cast<long>(j));
    // E_{n_j + s} has to be put back into position j first; count the
    // letters it then passes relative to that slot.
    std::vector<int> word = m.e;
    word[j] += s;
    // Sort the word by adjacent transpositions, tracking the sign.
    int sign = 1;
    bool zero = false;
    for (std::size_t a = 0; a < word.size() && !zero; ++a)
      for (std::size_t bidx = a + 1; bidx < word.size(); ++bidx) {
        if (word[a] == word[bidx]) {
          zero = true;
          break;
        }
        if (word[a] > word[bidx]) sign = -sign;
      }
    if (zero) continue;
    std::sort(word.begin(), word.end());
    t.e = std::move(word);
    out.add_term(t, sign > 0 ? b : -b);
  }
}

void mul_f(const Monomial& m, int n, const QScalar& c, Element& out) {
  const int k = static_cast<int>(m.e.size());
  // Anticommutator terms: E_1..E_k F = (-1)^k F E_1..E_k
  //   + sum_j (-1)^{k-j} X_{m_j + n} E_1..^E_j..E_k with X central w.r.t. E.
  for (int j = 0; j < k; ++j) {
    const Element x = ef_bracket(m.e[static_cast<std::size_t>(j)] + n);
    if (x.is_zero()) continue;
    Monomial base = m;
    base.e.erase(base.e.begin() + j);
    const QScalar sc = ((k - (j + 1)) % 2) ? -c : c;
    for (const auto& [xm, xc] : x.terms()) {
      Monomial r = base;
      r.k1 += xm.k1;
      r.k2 += xm.k2;
      for (auto [idx, ex] : xm.c) add_exp(r.c, idx, ex);
      out.add_term(r, sc * xc);
    }
  }
  // Main term: F moves past the Cartan block. h_s^e F_n = sum_j C(e,j) b_s^j
  // F_{n+js} h_s^{e-j} with b_s = -q^s[s]/s, then K F = q^{-(a1+a2)} F K.
  const QScalar base_c = (k % 2 ? -c : c) * QScalar::q_pow(-(m.k1 + m.k2));
  std::vector<int> split(m.h.size(), 0);
  while (true) {
    int shift = 0;
    QScalar coef = base_c;
    Monomial r = m;
    r.h.clear();
    for (std::size_t i = 0; i < m.h.size(); ++i) {
      auto [s, ex] = m.h[i];
      const int j = split[i];
      if (j > 0) {
        coef *= QScalar(binomial(ex, j)) * (-h_on_e(s)).pow(j);
        shift += j * s;
      }
      if (ex - j > 0) r.h.emplace_back(s, ex - j);
    }
    int sign = insert_odd(r.f, n + shift);
    if (sign != 0) out.add_term(r, sign > 0 ? coef : -coef);
    // next split
    std::size_t i = 0;
    for (; i < split.size(); ++i) {
      if (split[i] < m.h[i].second) {
        ++split[i];
        break;
      }
      split[i] = 0;
    }
    if (i == split.size()) break;
  }
}

void mul_letter(const Monomial& m, const QScalar& c, const Letter& l, Element& out) {
  switch (l.kind) {
    case LetterKind::E: mul_e(m, l.index, c, out); break;
    case LetterKind::F: mul_f(m, l.index, c, out); break;
    case LetterKind::H: mul_h(m, l.index, c, out); break;
    case LetterKind::C: mul_c(m, l.index, c, out); break;
    case LetterKind::K1: mul_k(m, l.index, 0, c, out); break;
    case LetterKind::K2: mul_k(m, 0, l.index, c, out); break;
  }
}

Element mul_by_letter(const Element& x, const Letter& l) {
  Element out;
  for (const auto& [m, c] : x.terms()) mul_letter(m, c, l, out);
  return out;
}

Element mul_by_monomial(const Element& x, const Monomial& m) {
  if (m.is_cartan() && m.h.empty()) {
    // Only k's and central C's: a single pass per term.
    Element out;
    for (const auto& [xm, xc] : x.terms()) {
      Monomial r = xm;
      r.k1 += m.k1;
      r.k2 += m.k2;
      for (auto [idx, ex] : m.c) add_exp(r.c, idx, ex);
      const int shift = -(m.k1 + m.k2) * static_cast<int>(xm.e.size());
      out.add_term(r, shift == 0 ? xc : xc * QScalar::q_pow(shift));
    }
    return out;
  }
  Element cur = x;
  for (const Letter& l : m.letters()) {
    cur = mul_by_letter(cur, l);
    if (cur.is_zero()) break;
  }
  return cur;
}

}  // namespace

Element multiply(const Element& x, const Element& y) {
  Element out;
  if (x.is_zero() || y.is_zero()) return out;
  for (const auto& [m, c] : y.terms()) {
    Element part = mul_by_monomial(x, m);
    part *= c;
    out += part;
  }
  return out;
}

Element power(const Element& x, int n) {
  if (n < 0) throw AlgebraError("negative power of an element");
  Element r(QScalar(1));
  for (int i = 0; i < n; ++i) r = multiply(r, x);
  return r;
}

Element phi_mode(int sign, int n) {
  if (n < 0) throw AlgebraError("phi_mode: mode must be nonnegative");
  const int dir = sign > 0 ? 1 : -1;
  // Coefficients P_j of exp(sum_s a_s z^s), a_s = dir (q - q^-1) C_{dir s};
  // the C's commute, so j P_j = sum_s s a_s P_{j-s}.
  std::vector<Element> p;
  p.emplace_back(QScalar(1));
  for (int j = 1; j <= n; ++j) {
    Element acc;
    for (int s = 1; s <= j; ++s) {
      Element t = multiply(p[static_cast<std::size_t>(j - s)], Element::letter(Letter::C(dir * s)));
      t *= QScalar(s);
      acc += t;
    }
    acc *= QScalar(dir) * qdiff() / QScalar(j);
    p.push_back(std::move(acc));
  }
  Monomial k;
  k.k1 = -dir;
  k.k2 = dir;
  return multiply(Element(k), p.back());
}

Element phi_plus(int n) { return n < 0 ? Element() : phi_mode(+1, n); }
Element phi_minus(int n) { return n > 0 ? Element() : phi_mode(-1, -n); }

// ---------------------------------------------------------------- TensorElement

TensorElement::TensorElement(const QScalar& c) {
  if (!c.is_zero()) terms_.emplace(Key{Monomial::one(), Monomial::one()}, c);
}

TensorElement TensorElement::pure(const Element& a, const Element& b) {
  TensorElement t;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) t.add_term(ma, mb, ca * cb);
  return t;
}

void TensorElement::add_term(const Monomial& a, const Monomial& b, const QScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(Key{a, b}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

QScalar TensorElement::coefficient(const Monomial& a, const Monomial& b) const {
  auto it = terms_.find(Key{a, b});
  return it == terms_.end() ? QScalar() : it->second;
}

TensorElement TensorElement::operator-() const {
  TensorElement r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

TensorElement& TensorElement::operator+=(const TensorElement& b) {
  for (const auto& [k, c] : b.terms_) add_term(k.first, k.second, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& b) {
  for (const auto& [k, c] : b.terms_) add_term(k.first, k.second, -c);
  return *this;
}

TensorElement& TensorElement::operator*=(const QScalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

TensorElement& TensorElement::operator*=(const TensorElement& b) {
  return *this = tensor_multiply(*this, b);
}

TensorElement operator*(const TensorElement& a, const TensorElement& b) {
  return tensor_multiply(a, b);
}

TensorElement TensorElement::flipped() const {
  TensorElement r;
  for (const auto& [k, c] : terms_) {
    const bool neg = k.first.odd() && k.second.odd();
    r.add_term(k.second, k.first, neg ? -c : c);
  }
  return r;
}

std::string TensorElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    // Reuse the Element formatter for "coeff*a", then append "# b".
    Element left(k.first, c);
    std::string ls = left.to_string();
    bool neg = !ls.empty() && ls[0] == '-';
    if (neg) ls.erase(0, 1);
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    out += ls + " # " + k.second.to_string();
  }
  return out;
}

TensorElement tensor_multiply(const TensorElement& x, const TensorElement& y) {
  TensorElement out;
  if (x.is_zero() || y.is_zero()) return out;
  std::map<std::pair<Monomial, Monomial>, Element> left_cache;
  std::map<std::pair<Monomial, Monomial>, Element> right_cache;
  auto prod = [](auto& cache, const Monomial& a, const Monomial& b) -> const Element& {
    auto key = std::make_pair(a, b);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, multiply(Element(a), Element(b))).first;
    return it->second;
  };
  for (const auto& [kx, cx] : x.terms()) {
    for (const auto& [ky, cy] : y.terms()) {
      const bool neg = kx.second.odd() && ky.first.odd();
      const Element& ac = prod(left_cache, kx.first, ky.first);
      if (ac.is_zero()) continue;
      const Element& bd = prod(right_cache, kx.second, ky.second);
      if (bd.is_zero()) continue;
      QScalar c = cx * cy;
      if (neg) c = -c;
      for (const auto& [ma, ca] : ac.terms())
        for (const auto& [mb, cb] : bd.terms()) out.add_term(ma, mb, c * ca * cb);
    }
  }
  return out;
}

}  // namespace qgl11
