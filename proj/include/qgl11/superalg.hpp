#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qgl11/scalars.hpp"

namespace qgl11 {

/// Drinfeld generators. For K1/K2 the index is the exponent of
/// s_11^(0) (resp. s_22^(0)); for H and C it must be nonzero.
enum class LetterKind { E, F, H, C, K1, K2 };

struct Letter {
  LetterKind kind;
  int index;

  static Letter E(int n) { return {LetterKind::E, n}; }
  static Letter F(int n) { return {LetterKind::F, n}; }
  static Letter H(int s);
  static Letter C(int s);
  static Letter K1(int e = 1) { return {LetterKind::K1, e}; }
  static Letter K2(int e = 1) { return {LetterKind::K2, e}; }

  bool is_odd() const { return kind == LetterKind::E || kind == LetterKind::F; }
  int zdeg() const;
  int qdeg() const;
  std::string to_string() const;

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Root datum of gl(1,1): (e_i, e_j) = delta_ij d_i with d = (1, -1).
/// The Q-degree of an element is an integer multiple of alpha = e_1 - e_2.
struct RootDatum {
  static constexpr int d(int i) { return i == 1 ? 1 : -1; }
  static constexpr int form(int i, int j) { return i == j ? d(i) : 0; }
  /// (alpha, e_i); equals 1 for both i.
  static constexpr int alpha_pair(int i) { return form(1, i) - form(2, i); }
};

enum class Parity { Even = 0, Odd = 1 };

struct Grading {
  int zdeg;
  int qdeg;  // coefficient of alpha
  Parity parity;
  friend bool operator==(const Grading&, const Grading&) = default;
};

using ExpMap = std::vector<std::pair<int, int>>;  // sorted (index, exponent>=1)

/// PBW word in normal order: F-block (ascending), k1^a k2^b, h's, C's,
/// E-block (ascending). The coefficient-one monomial is literally the
/// ordered product of its letters.
struct Monomial {
  std::vector<int> f;
  int k1 = 0;
  int k2 = 0;
  ExpMap h;
  ExpMap c;
  std::vector<int> e;

  static Monomial one() { return {}; }
  static Monomial from_letter(const Letter& l);

  bool is_one() const { return f.empty() && e.empty() && h.empty() && c.empty() && k1 == 0 && k2 == 0; }
  bool is_cartan() const { return f.empty() && e.empty(); }
  int zdeg() const;
  int qdeg() const { return static_cast<int>(e.size()) - static_cast<int>(f.size()); }
  Parity parity() const { return (f.size() + e.size()) % 2 ? Parity::Odd : Parity::Even; }
  bool odd() const { return parity() == Parity::Odd; }
  Grading grading() const { return {zdeg(), qdeg(), parity()}; }
  /// Letters in normal order; powers of h/C are repeated, k's appear as
  /// single K1/K2 letters carrying the full exponent.
  std::vector<Letter> letters() const;
  std::size_t length() const;
  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Deterministic order: by Z-degree, then Q-degree, then lexicographic.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
};

Grading grading_data(const Monomial& m);

/// Sparse linear combination of normal-ordered monomials.
class Element {
 public:
  using Terms = std::map<Monomial, QScalar>;

  Element() = default;
  Element(const QScalar& c);  // NOLINT(google-explicit-constructor)
  explicit Element(const Monomial& m, const QScalar& c = QScalar(1));
  static Element letter(const Letter& l) { return Element(Monomial::from_letter(l)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Adds c*m, dropping the entry if the coefficient cancels.
  void add_term(const Monomial& m, const QScalar& c);
  QScalar coefficient(const Monomial& m) const;
  /// Coefficient of the identity monomial.
  QScalar constant_term() const { return coefficient(Monomial::one()); }

  Element operator-() const;
  Element& operator+=(const Element& b);
  Element& operator-=(const Element& b);
  Element& operator*=(const QScalar& s);
  Element& operator*=(const Element& b);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const QScalar& s) { return a *= s; }
  friend Element operator*(const QScalar& s, Element a) { return a *= s; }
  friend Element operator*(const Element& a, const Element& b);
  friend bool operator==(const Element&, const Element&) = default;

  std::string to_string() const;

 private:
  Terms terms_;
};

/// Product in U, returned in normal form.
Element multiply(const Element& x, const Element& y);
Element power(const Element& x, int n);

/// phi^+_n (sign > 0) or phi^-_{-n} (sign < 0), n >= 0.
Element phi_mode(int sign, int n);
/// phi^+_n for any integer n: zero for n < 0; phi^-_n likewise zero for n > 0.
Element phi_plus(int n);
Element phi_minus(int n);

/// Element of U (x) U; multiplication carries the Koszul sign.
class TensorElement {
 public:
  using Key = std::pair<Monomial, Monomial>;
  using Terms = std::map<Key, QScalar>;

  TensorElement() = default;
  TensorElement(const QScalar& c);  // NOLINT(google-explicit-constructor)
  static TensorElement pure(const Element& a, const Element& b);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  void add_term(const Monomial& a, const Monomial& b, const QScalar& c);
  QScalar coefficient(const Monomial& a, const Monomial& b) const;

  TensorElement operator-() const;
  TensorElement& operator+=(const TensorElement& b);
  TensorElement& operator-=(const TensorElement& b);
  TensorElement& operator*=(const QScalar& s);
  TensorElement& operator*=(const TensorElement& b);
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  friend TensorElement operator*(TensorElement a, const QScalar& s) { return a *= s; }
  friend TensorElement operator*(const QScalar& s, TensorElement a) { return a *= s; }
  friend TensorElement operator*(const TensorElement& a, const TensorElement& b);
  friend bool operator==(const TensorElement&, const TensorElement&) = default;

  /// Koszul flip a (x) b -> (-1)^{|a||b|} b (x) a.
  TensorElement flipped() const;
  std::string to_string() const;

 private:
  Terms terms_;
};

TensorElement tensor_multiply(const TensorElement& x, const TensorElement& y);

}  // namespace qgl11
