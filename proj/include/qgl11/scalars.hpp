#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qgl11 {

/// Raised for mathematically undefined operations (division by zero,
/// evaluation at a pole, invalid indices, ...).
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Rational = mpq_class;

/// Parses "n" or "n/m" (optionally signed) into a canonical rational.
Rational parse_rational(std::string_view text);

/// Dense integer polynomial in q, coefficients stored lowest degree first.
/// The zero polynomial has no coefficients; otherwise the top coefficient is
/// nonzero.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(const mpz_class& c);
  explicit IntPoly(std::vector<mpz_class> coeffs);

  /// c * q^k for k >= 0.
  static IntPoly monomial(const mpz_class& c, int k);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const mpz_class& lead() const { return c_.back(); }
  const std::vector<mpz_class>& coeffs() const { return c_; }
  /// Multiplicity of q as a factor (0 for the zero polynomial).
  int low_order() const;
  bool is_constant() const { return c_.size() <= 1; }

  mpz_class content() const;
  IntPoly primitive_part() const;

  IntPoly operator-() const;
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  IntPoly scaled(const mpz_class& k) const;
  /// Exact division by a nonzero integer that divides every coefficient.
  IntPoly div_exact(const mpz_class& k) const;
  /// Exact division by a polynomial dividing this one with integral quotient.
  IntPoly div_exact(const IntPoly& b) const;
  IntPoly shifted_down(int k) const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;
  friend auto operator<=>(const IntPoly& a, const IntPoly& b) {
    if (a.c_.size() != b.c_.size()) return a.c_.size() <=> b.c_.size();
    for (std::size_t i = a.c_.size(); i-- > 0;) {
      int r = cmp(a.c_[i], b.c_[i]);
      if (r != 0) return r <=> 0;
    }
    return 0 <=> 0;
  }

  Rational evaluate(const Rational& x) const;
  std::string to_string() const;

 private:
  void trim();
  std::vector<mpz_class> c_;
};

/// Primitive gcd with positive leading coefficient (over Q[q], normalized
/// into Z[q]). gcd(0, 0) = 0.
IntPoly primitive_gcd(const IntPoly& a, const IntPoly& b);

/// Exact element of Q(q), stored as num/den in lowest terms with integer
/// coefficients, joint content one and positive leading denominator
/// coefficient. Two QScalars are equal iff their representations coincide.
class QScalar {
 public:
  QScalar() : den_(mpz_class(1)) {}
  QScalar(long v);  // NOLINT(google-explicit-constructor)
  explicit QScalar(const Rational& r);
  QScalar(IntPoly num, IntPoly den);

  /// The deformation parameter q.
  static QScalar q();
  /// q^k for any integer k.
  static QScalar q_pow(int k);

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  /// True if the value does not depend on q.
  bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
  Rational as_rational() const;

  QScalar operator-() const;
  QScalar& operator+=(const QScalar& b);
  QScalar& operator-=(const QScalar& b);
  QScalar& operator*=(const QScalar& b);
  QScalar& operator/=(const QScalar& b);
  friend QScalar operator+(QScalar a, const QScalar& b) { return a += b; }
  friend QScalar operator-(QScalar a, const QScalar& b) { return a -= b; }
  friend QScalar operator*(QScalar a, const QScalar& b) { return a *= b; }
  friend QScalar operator/(QScalar a, const QScalar& b) { return a /= b; }
  friend bool operator==(const QScalar&, const QScalar&) = default;

  QScalar inverse() const;
  QScalar pow(int e) const;

  /// Evaluates at q = q0. Throws AlgebraError at q0 = 0 or at a pole.
  Rational specialize(const Rational& q0) const;

  std::string to_string() const;
  std::size_t hash() const;

 private:
  void normalize();
  IntPoly num_;
  IntPoly den_;
};

/// The quantum integer [s] = (q^s - q^-s)/(q - q^-1); s must be nonzero.
QScalar qbracket(int s);

/// q - q^-1, which shows up in nearly every structure constant.
QScalar qdiff();

}  // namespace qgl11
