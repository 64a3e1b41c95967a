#include "qgl11/cli.hpp"

#include <cctype>
#include <regex>

namespace qgl11 {

namespace {

bool is_scalar(const Element& x) {
  return x.is_zero() || (x.size() == 1 && x.terms().begin()->first.is_one());
}

class Parser {
 public:
  explicit Parser(std::string_view src) : s_(src) {}

  Value run() {
    Value v = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return v;
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(i_, msg); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const { throw ParseError(at, msg); }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek(char c) {
    skip();
    return i_ < s_.size() && s_[i_] == c;
  }
  bool eat(char c) {
    if (!peek(c)) return false;
    ++i_;
    return true;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  mpz_class digits() {
    skip();
    const std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) fail("expected integer");
    return mpz_class(std::string(s_.substr(start, i_ - start)));
  }

  int signed_int() {
    skip();
    int sign = 1;
    if (eat('-')) sign = -1;
    else eat('+');
    const std::size_t at = i_;
    mpz_class v = digits();
    if (!v.fits_sint_p()) fail_at(at, "integer out of range");
    return sign * static_cast<int>(v.get_si());
  }

  static TensorElement lift(const Element& x) { return TensorElement(x.constant_term()); }

  Value add(const Value& a, const Value& b, bool minus, std::size_t at) {
    if (a.index() == b.index()) {
      if (a.index() == 0) return minus ? std::get<0>(a) - std::get<0>(b) : std::get<0>(a) + std::get<0>(b);
      return minus ? std::get<1>(a) - std::get<1>(b) : std::get<1>(a) + std::get<1>(b);
    }
    const Element& plain = a.index() == 0 ? std::get<0>(a) : std::get<0>(b);
    if (!is_scalar(plain)) fail_at(at, "cannot add an element and a tensor");
    TensorElement x = a.index() == 0 ? lift(std::get<0>(a)) : std::get<1>(a);
    TensorElement y = b.index() == 0 ? lift(std::get<0>(b)) : std::get<1>(b);
    return minus ? x - y : x + y;
  }

  Value mul(const Value& a, const Value& b, std::size_t at) {
    if (a.index() == 0 && b.index() == 0) return multiply(std::get<0>(a), std::get<0>(b));
    if (a.index() == 1 && b.index() == 1) return tensor_multiply(std::get<1>(a), std::get<1>(b));
    const Element& plain = a.index() == 0 ? std::get<0>(a) : std::get<0>(b);
    const TensorElement& t = a.index() == 1 ? std::get<1>(a) : std::get<1>(b);
    if (!is_scalar(plain)) fail_at(at, "cannot multiply an element and a tensor");
    return t * plain.constant_term();
  }

  Value expr() {
    Value v = tterm();
    for (;;) {
      skip();
      const std::size_t at = i_;
      if (eat('+')) v = add(v, tterm(), false, at);
      else if (eat('-')) v = add(v, tterm(), true, at);
      else return v;
    }
  }

  Value tterm() {
    skip();
    const std::size_t at = i_;
    Value v = term();
    if (!eat('#')) return v;
    Value w = term();
    if (v.index() != 0 || w.index() != 0) fail_at(at, "nested tensor");
    return TensorElement::pure(std::get<0>(v), std::get<0>(w));
  }

  Value term() {
    bool neg = false;
    for (;;) {
      if (eat('-')) neg = !neg;
      else if (!eat('+')) break;
    }
    Value v = factor();
    for (;;) {
      skip();
      const std::size_t at = i_;
      if (eat('*')) {
        v = mul(v, factor(), at);
      } else if (eat('/')) {
        Value d = factor();
        if (d.index() != 0 || !is_scalar(std::get<0>(d))) fail_at(at, "division by a non-scalar");
        const QScalar c = std::get<0>(d).constant_term();
        if (c.is_zero()) fail_at(at, "division by zero");
        v = mul(v, Element(c.inverse()), at);
      } else {
        break;
      }
    }
    if (neg) v = mul(v, Element(QScalar(-1)), 0);
    return v;
  }

  Value factor() {
    skip();
    const std::size_t at = i_;
    Value v = atom();
    if (!eat('^')) return v;
    const int n = signed_int();
    if (v.index() == 1) {
      if (n < 0) fail_at(at, "negative power of a tensor");
      TensorElement r(QScalar(1));
      for (int k = 0; k < n; ++k) r = tensor_multiply(r, std::get<1>(v));
      return r;
    }
    const Element& x = std::get<0>(v);
    if (n >= 0) return power(x, n);
    if (x.size() != 1) fail_at(at, "negative power of a non-invertible element");
    const auto& [m, c] = *x.terms().begin();
    if (!(m.is_cartan() && m.h.empty() && m.c.empty())) fail_at(at, "negative power of a non-invertible element");
    Monomial inv;
    inv.k1 = -m.k1;
    inv.k2 = -m.k2;
    return power(Element(inv, c.inverse()), -n);
  }

  int bracket_index(bool nonzero) {
    expect('[');
    skip();
    const std::size_t at = i_;
    const int n = signed_int();
    if (nonzero && n == 0) fail_at(at, "zero index");
    expect(']');
    return n;
  }

  Value atom() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) return Element(QScalar(Rational(digits())));
    if (c == '(') {
      ++i_;
      Value v = expr();
      expect(')');
      return v;
    }
    const std::size_t at = i_;
    ++i_;
    switch (c) {
      case 'q': return Element(QScalar::q());
      case 'E': return Element::letter(Letter::E(bracket_index(false)));
      case 'F': return Element::letter(Letter::F(bracket_index(false)));
      case 'h': return Element::letter(Letter::H(bracket_index(true)));
      case 'C': return Element::letter(Letter::C(bracket_index(true)));
      case 'k':
        if (i_ < s_.size() && (s_[i_] == '1' || s_[i_] == '2')) {
          const bool one = s_[i_++] == '1';
          return Element::letter(one ? Letter::K1(1) : Letter::K2(1));
        }
        break;
      default: break;
    }
    fail_at(at, "unknown symbol '" + std::string(1, c) + "'");
  }
};

}  // namespace

Value parse_expr(std::string_view src) { return Parser(src).run(); }

Element parse_element(std::string_view src) {
  Value v = parse_expr(src);
  if (v.index() != 0) throw ParseError(0, "expected an element, got a tensor");
  return std::get<0>(v);
}

TensorElement parse_tensor(std::string_view src) {
  Value v = parse_expr(src);
  if (v.index() == 1) return std::get<1>(v);
  const Element& x = std::get<0>(v);
  if (!is_scalar(x)) throw ParseError(0, "expected a tensor");
  return TensorElement(x.constant_term());
}

std::string format_element(const Element& x) { return x.to_string(); }
std::string format_element(const TensorElement& x) { return x.to_string(); }
std::string format_value(const Value& v) {
  return std::visit([](const auto& x) { return format_element(x); }, v);
}

Element random_element(std::mt19937& rng, int terms) {
  std::uniform_int_distribution<int> count(1, terms), len(1, 4), kind(0, 5), idx(-3, 3), nz(1, 3), sign(0, 1),
      coef(-3, 3), qexp(-2, 2), den(0, 3);
  auto letter = [&]() -> Letter {
    switch (kind(rng)) {
      case 0: return Letter::E(idx(rng));
      case 1: return Letter::F(idx(rng));
      case 2: return Letter::H(sign(rng) ? nz(rng) : -nz(rng));
      case 3: return Letter::C(sign(rng) ? nz(rng) : -nz(rng));
      case 4: return Letter::K1(sign(rng) ? 1 : -1);
      default: return Letter::K2(sign(rng) ? 1 : -1);
    }
  };
  Element out;
  for (int t = count(rng); t-- > 0;) {
    Element m(QScalar(1));
    for (int k = len(rng); k-- > 0;) m = m * Element::letter(letter());
    QScalar c;
    for (int k = 0; k < 2; ++k) c += QScalar(coef(rng)) * QScalar::q_pow(qexp(rng));
    if (c.is_zero()) c = QScalar(1);
    if (den(rng) == 0) c /= QScalar::q() + QScalar(coef(rng) == 0 ? 2 : 1);
    out += m * c;
  }
  return out;
}

Representation parse_rep(const std::string& text) {
  static const std::regex rho(R"(\s*rho\s*)");
  static const std::regex pa(R"(\s*pi_a\(\s*([-+]?\d+(?:/\d+)?)\s*\)\s*)");
  static const std::regex pcd(R"(\s*pi_cd\(\s*([-+]?\d+(?:/\d+)?)\s*,\s*([-+]?\d+(?:/\d+)?)\s*\)\s*)");
  std::smatch m;
  if (std::regex_match(text, rho)) return rep_rho();
  if (std::regex_match(text, m, pa)) return rep_pi_a(parse_rational(m[1].str()));
  if (std::regex_match(text, m, pcd)) return rep_pi_cd(parse_rational(m[1].str()), parse_rational(m[2].str()));
  throw AlgebraError("unknown representation '" + text + "' (expected rho, pi_a(a) or pi_cd(c,d))");
}

}  // namespace qgl11
