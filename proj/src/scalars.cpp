#include "qgl11/scalars.hpp"

#include <algorithm>
#include <functional>
#include <utility>

namespace qgl11 {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), ::isspace), s.end());
  if (s.empty()) throw AlgebraError("empty rational literal");
  bool ok = std::all_of(s.begin(), s.end(), [](char ch) {
    return std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+' || ch == '/';
  });
  if (!ok) throw AlgebraError("malformed rational literal '" + s + "'");
  if (s.front() == '+') s.erase(0, 1);
  Rational r;
  if (r.set_str(s, 10) != 0) throw AlgebraError("malformed rational literal '" + s + "'");
  if (r.get_den() == 0) throw AlgebraError("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(const mpz_class& c) {
  if (c != 0) c_.push_back(c);
}

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::monomial(const mpz_class& c, int k) {
  IntPoly p;
  if (c == 0) return p;
  p.c_.assign(static_cast<std::size_t>(k) + 1, mpz_class(0));
  p.c_.back() = c;
  return p;
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int IntPoly::low_order() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return 0;
}

mpz_class IntPoly::content() const {
  mpz_class g = 0;
  for (const auto& x : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  mpz_class g = content();
  if (lead() < 0) g = -g;
  return div_exact(g);
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  IntPoly r;
  r.c_.resize(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < r.c_.size(); ++i) {
    if (i < a.c_.size()) r.c_[i] += a.c_[i];
    if (i < b.c_.size()) r.c_[i] += b.c_[i];
  }
  r.trim();
  return r;
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  IntPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      mpz_addmul(r.c_[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
  }
  r.trim();
  return r;
}

IntPoly IntPoly::scaled(const mpz_class& k) const {
  if (k == 0) return {};
  IntPoly r = *this;
  for (auto& x : r.c_) x *= k;
  return r;
}

IntPoly IntPoly::div_exact(const mpz_class& k) const {
  IntPoly r = *this;
  if (k == 1) return r;
  for (auto& x : r.c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), k.get_mpz_t());
  return r;
}

IntPoly IntPoly::shifted_down(int k) const {
  IntPoly r;
  if (k >= static_cast<int>(c_.size())) return r;
  r.c_.assign(c_.begin() + k, c_.end());
  return r;
}

IntPoly IntPoly::div_exact(const IntPoly& b) const {
  if (b.is_zero()) throw AlgebraError("polynomial division by zero");
  if (b.degree() == 0) return div_exact(b.lead());
  std::vector<mpz_class> rem = c_;
  const int db = b.degree();
  const int dq = degree() - db;
  if (dq < 0) throw AlgebraError("inexact polynomial division");
  std::vector<mpz_class> quot(static_cast<std::size_t>(dq) + 1);
  for (int i = dq; i >= 0; --i) {
    mpz_class& top = rem[static_cast<std::size_t>(i + db)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), b.lead().get_mpz_t()))
      throw AlgebraError("inexact polynomial division");
    mpz_class qc;
    mpz_divexact(qc.get_mpz_t(), top.get_mpz_t(), b.lead().get_mpz_t());
    for (int j = 0; j <= db; ++j) {
      mpz_submul(rem[static_cast<std::size_t>(i + j)].get_mpz_t(), qc.get_mpz_t(),
                 b.c_[static_cast<std::size_t>(j)].get_mpz_t());
    }
    quot[static_cast<std::size_t>(i)] = std::move(qc);
  }
  for (const auto& x : rem)
    if (x != 0) throw AlgebraError("inexact polynomial division");
  return IntPoly(std::move(quot));
}

Rational IntPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc = acc * x + Rational(c_[i]);
  }
  acc.canonicalize();
  return acc;
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const mpz_class& c = c_[i];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    first = false;
    bool unit = (mag == 1);
    if (i == 0) {
      out += mag.get_str();
    } else {
      if (!unit) out += mag.get_str() + "*";
      out += "q";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

namespace {

// Pseudo-remainder of a by b (deg a >= deg b, b != 0).
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
  const int db = b.degree();
  std::vector<mpz_class> r = a.coeffs();
  const mpz_class& lb = b.lead();
  while (static_cast<int>(r.size()) - 1 >= db && !r.empty()) {
    const int dr = static_cast<int>(r.size()) - 1;
    mpz_class lr = r.back();
    for (auto& x : r) x *= lb;
    for (int j = 0; j <= db; ++j) {
      mpz_submul(r[static_cast<std::size_t>(dr - db + j)].get_mpz_t(), lr.get_mpz_t(),
                 b.coeffs()[static_cast<std::size_t>(j)].get_mpz_t());
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return IntPoly(std::move(r));
}

}  // namespace

IntPoly primitive_gcd(const IntPoly& a0, const IntPoly& b0) {
  if (a0.is_zero()) return b0.primitive_part();
  if (b0.is_zero()) return a0.primitive_part();
  // Split off the power of q, which is by far the most common common factor.
  const int ka = a0.low_order();
  const int kb = b0.low_order();
  const int k = std::min(ka, kb);
  IntPoly a = a0.shifted_down(ka).primitive_part();
  IntPoly b = b0.shifted_down(kb).primitive_part();
  IntPoly g;
  if (a.is_constant() || b.is_constant()) {
    g = IntPoly(mpz_class(1));
  } else if (a == b) {
    g = a;
  } else {
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
      IntPoly r = pseudo_remainder(a, b);
      a = std::move(b);
      b = r.primitive_part();
    }
    g = a.primitive_part();
  }
  if (k == 0) return g;
  std::vector<mpz_class> shifted(static_cast<std::size_t>(k), mpz_class(0));
  shifted.insert(shifted.end(), g.coeffs().begin(), g.coeffs().end());
  return IntPoly(std::move(shifted));
}

// ---------------------------------------------------------------- QScalar

QScalar::QScalar(long v) : num_(mpz_class(v)), den_(mpz_class(1)) {}

QScalar::QScalar(const Rational& r) : num_(r.get_num()), den_(r.get_den()) {}

QScalar::QScalar(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw AlgebraError("division by zero");
  normalize();
}

QScalar QScalar::q() { return q_pow(1); }

QScalar QScalar::q_pow(int k) {
  QScalar r;
  if (k >= 0) {
    r.num_ = IntPoly::monomial(1, k);
  } else {
    r.num_ = IntPoly(mpz_class(1));
    r.den_ = IntPoly::monomial(1, -k);
  }
  return r;
}

bool QScalar::is_one() const { return num_ == den_; }

Rational QScalar::as_rational() const {
  if (!is_rational()) throw AlgebraError("scalar depends on q: " + to_string());
  if (is_zero()) return 0;
  Rational r(num_.lead(), den_.lead());
  r.canonicalize();
  return r;
}

void QScalar::normalize() {
  if (num_.is_zero()) {
    den_ = IntPoly(mpz_class(1));
    return;
  }
  if (!den_.is_constant()) {
    IntPoly g = primitive_gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.div_exact(g);
      den_ = den_.div_exact(g);
    }
  }
  mpz_class c = num_.content();
  mpz_class d = den_.content();
  mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
  if (den_.lead() < 0) c = -c;
  if (c != 1) {
    num_ = num_.div_exact(c);
    den_ = den_.div_exact(c);
  }
}

QScalar QScalar::operator-() const {
  QScalar r = *this;
  r.num_ = -r.num_;
  return r;
}

QScalar& QScalar::operator+=(const QScalar& b) {
  if (b.is_zero()) return *this;
  if (is_zero()) return *this = b;
  if (den_ == b.den_) {
    num_ = num_ + b.num_;
  } else {
    num_ = num_ * b.den_ + b.num_ * den_;
    den_ = den_ * b.den_;
  }
  normalize();
  return *this;
}

QScalar& QScalar::operator-=(const QScalar& b) { return *this += -b; }

QScalar& QScalar::operator*=(const QScalar& b) {
  if (is_zero()) return *this;
  if (b.is_zero()) return *this = QScalar();
  num_ = num_ * b.num_;
  den_ = den_ * b.den_;
  normalize();
  return *this;
}

QScalar& QScalar::operator/=(const QScalar& b) {
  if (b.is_zero()) throw AlgebraError("division by zero");
  return *this *= b.inverse();
}

QScalar QScalar::inverse() const {
  if (is_zero()) throw AlgebraError("division by zero");
  QScalar r;
  r.num_ = den_;
  r.den_ = num_;
  if (r.den_.lead() < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

QScalar QScalar::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  QScalar result(1);
  QScalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Rational QScalar::specialize(const Rational& q0) const {
  if (q0 == 0) throw AlgebraError("cannot specialize at q = 0");
  Rational d = den_.evaluate(q0);
  if (d == 0) {
    throw AlgebraError("pole at q = " + q0.get_str() + ": denominator " + den_.to_string() +
                       " vanishes");
  }
  Rational r = num_.evaluate(q0) / d;
  r.canonicalize();
  return r;
}

std::string QScalar::to_string() const {
  if (den_.is_constant() && den_.lead() == 1) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::size_t QScalar::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  auto mix = [&h](const IntPoly& p) {
    for (const auto& c : p.coeffs()) {
      h ^= std::hash<long>{}(mpz_fdiv_ui(c.get_mpz_t(), 1000000007UL)) + 0x9e3779b9 + (h << 6) +
           (h >> 2);
    }
    h ^= p.coeffs().size() * 31;
  };
  mix(num_);
  mix(den_);
  return h;
}

QScalar qbracket(int s) {
  if (s == 0) throw AlgebraError("qbracket: index must be nonzero");
  if (s < 0) return -qbracket(-s);
  // [s] = q^{1-s} (1 + q^2 + ... + q^{2s-2})
  std::vector<mpz_class> c(static_cast<std::size_t>(2 * s - 1), mpz_class(0));
  for (int i = 0; i < s; ++i) c[static_cast<std::size_t>(2 * i)] = 1;
  return QScalar(IntPoly(std::move(c)), IntPoly::monomial(1, s - 1));
}

QScalar qdiff() { return QScalar::q() - QScalar::q_pow(-1); }

}  // namespace qgl11
