#pragma once

#include <algorithm>
#include <climits>
#include <string>
#include <utility>
#include <vector>

#include "qgl11/scalars.hpp"
#include "qgl11/superalg.hpp"

namespace qgl11 {

/// Power series in z (Ascending: exact zeros below lo, reliable through hi)
/// or in z^-1 (Descending: exact zeros above hi, reliable down to lo).
enum class Orientation { Ascending, Descending };

/// Default truncation order.
inline constexpr int kDefaultOrder = 8;

// Ring hooks used by the series algorithms. Overloads for other carriers
// live next to those types and are found by argument-dependent lookup.
inline QScalar unit_like(const QScalar&) { return QScalar(1); }
inline Element unit_like(const Element&) { return Element(QScalar(1)); }
inline TensorElement unit_like(const TensorElement&) { return TensorElement(QScalar(1)); }
inline bool is_zero_value(const QScalar& x) { return x.is_zero(); }
inline bool is_zero_value(const Element& x) { return x.is_zero(); }
inline bool is_zero_value(const TensorElement& x) { return x.is_zero(); }
inline QScalar inverse_unit(const QScalar& x) {
  if (x.is_zero()) throw AlgebraError("series_invert: leading coefficient is not invertible");
  return x.inverse();
}

namespace detail {
// Inverse of c*(1 + n) with n nilpotent: c^-1 sum_k (-n)^k.
template <class T>
T nilpotent_inverse(const T& x) {
  const T one = unit_like(x);
  T scalar_part;
  QScalar c;
  for (const auto& [key, coeff] : x.terms()) {
    if (key == typename T::Terms::key_type{}) c = coeff;
  }
  if (c.is_zero()) throw AlgebraError("series_invert: leading coefficient is not invertible");
  T n = x * c.inverse() - one;
  T result = one;
  T term = one;
  for (int k = 1; k <= 64; ++k) {
    term = term * (-n);
    if (is_zero_value(term)) return result * c.inverse();
    result += term;
  }
  throw AlgebraError("series_invert: leading coefficient is not unit-plus-nilpotent");
}
}  // namespace detail

inline Element inverse_unit(const Element& x) { return detail::nilpotent_inverse(x); }
inline TensorElement inverse_unit(const TensorElement& x) { return detail::nilpotent_inverse(x); }

template <class T>
class LaurentSeries {
 public:
  LaurentSeries() : LaurentSeries(0, -1, T{}) {}
  /// All-zero series on the window [lo, hi].
  LaurentSeries(int lo, int hi, T zero = T{}, Orientation o = Orientation::Ascending)
      : orient_(o), lo_(lo), hi_(hi), zero_(std::move(zero)) {
    if (hi_ >= lo_) c_.assign(static_cast<std::size_t>(hi_ - lo_ + 1), zero_);
  }

  /// A finite Laurent polynomial (coeffs for degrees lo, lo+1, ...) viewed as
  /// an exact series on the window [lo, hi]; entries beyond coeffs are zero.
  static LaurentSeries polynomial(int lo, const std::vector<T>& coeffs, int hi, T zero = T{},
                                  Orientation o = Orientation::Ascending) {
    LaurentSeries s(lo, hi, zero, o);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      const int k = lo + static_cast<int>(i);
      if (k <= hi) s.at(k) = coeffs[i];
    }
    return s;
  }

  Orientation orientation() const { return orient_; }
  int lo() const { return lo_; }
  int hi() const { return hi_; }
  bool in_window(int k) const { return k >= lo_ && k <= hi_; }
  const T& zero() const { return zero_; }

  /// Coefficient of z^k. Outside the window: exact zero on the supported
  /// side, AlgebraError on the truncated side.
  const T& operator[](int k) const {
    if (in_window(k)) return c_[static_cast<std::size_t>(k - lo_)];
    if ((orient_ == Orientation::Ascending && k < lo_) ||
        (orient_ == Orientation::Descending && k > hi_))
      return zero_;
    throw AlgebraError("coefficient z^" + std::to_string(k) + " lies beyond the truncation window [" +
                       std::to_string(lo_) + ", " + std::to_string(hi_) + "]");
  }
  T& at(int k) {
    if (!in_window(k)) throw AlgebraError("coefficient z^" + std::to_string(k) + " outside window");
    return c_[static_cast<std::size_t>(k - lo_)];
  }

  /// Restricts the window to [lo, min(hi, new_hi)] (ascending) or
  /// [max(lo, new_lo), hi] (descending).
  LaurentSeries truncated(int bound) const {
    LaurentSeries r = *this;
    if (orient_ == Orientation::Ascending) {
      if (bound < r.hi_) r.resize(r.lo_, bound);
    } else if (bound > r.lo_) {
      r.resize(bound, r.hi_);
    }
    return r;
  }

  /// Multiplication by z^k.
  LaurentSeries shifted(int k) const {
    LaurentSeries r = *this;
    r.lo_ += k;
    r.hi_ += k;
    return r;
  }

  template <class F>
  auto map(F&& f) const {
    using U = decltype(f(zero_));
    LaurentSeries<U> r(lo_, hi_, f(zero_), orient_);
    for (int k = lo_; k <= hi_; ++k) r.at(k) = f((*this)[k]);
    return r;
  }

  LaurentSeries operator-() const {
    LaurentSeries r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    check_compatible(a, b);
    int lo, hi;
    if (a.orient_ == Orientation::Ascending) {
      lo = std::min(a.lo_, b.lo_);
      hi = std::min(a.hi_, b.hi_);
    } else {
      lo = std::max(a.lo_, b.lo_);
      hi = std::max(a.hi_, b.hi_);
    }
    LaurentSeries r(lo, hi, a.zero_, a.orient_);
    for (int k = lo; k <= hi; ++k) r.at(k) = a[k] + b[k];
    return r;
  }
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    check_compatible(a, b);
    int lo, hi;
    if (a.orient_ == Orientation::Ascending) {
      lo = a.lo_ + b.lo_;
      hi = std::min(a.hi_ + b.lo_, b.hi_ + a.lo_);
    } else {
      hi = a.hi_ + b.hi_;
      lo = std::max(a.lo_ + b.hi_, b.lo_ + a.hi_);
    }
    LaurentSeries r(lo, hi, a.zero_, a.orient_);
    for (int i = a.lo_; i <= a.hi_; ++i) {
      const T& x = a[i];
      if (is_zero_value(x)) continue;
      for (int j = b.lo_; j <= b.hi_; ++j) {
        const int k = i + j;
        if (k < lo || k > hi) continue;
        const T& y = b[j];
        if (is_zero_value(y)) continue;
        r.at(k) += x * y;
      }
    }
    return r;
  }

  friend LaurentSeries operator*(const LaurentSeries& a, const QScalar& s) {
    LaurentSeries r = a;
    for (auto& x : r.c_) x = x * s;
    return r;
  }

  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
    if (a.orient_ != b.orient_ || a.lo_ != b.lo_ || a.hi_ != b.hi_) return false;
    return a.c_ == b.c_;
  }

  static void check_compatible(const LaurentSeries& a, const LaurentSeries& b) {
    if (a.orient_ != b.orient_) throw AlgebraError("series of opposite orientation cannot be combined");
  }

 private:
  void resize(int lo, int hi) {
    std::vector<T> c;
    for (int k = lo; k <= hi; ++k) c.push_back((*this)[k]);
    lo_ = lo;
    hi_ = hi;
    c_ = std::move(c);
  }

  Orientation orient_;
  int lo_;
  int hi_;
  std::vector<T> c_;
  T zero_;
};

template <class T>
LaurentSeries<T> series_add(const LaurentSeries<T>& x, const LaurentSeries<T>& y) {
  return x + y;
}

template <class T>
LaurentSeries<T> series_mul(const LaurentSeries<T>& x, const LaurentSeries<T>& y) {
  return x * y;
}

/// exp(X) = sum_k X^k/k!, X without constant (or opposite-side) terms.
template <class T>
LaurentSeries<T> series_exp(const LaurentSeries<T>& x, int order) {
  const bool asc = x.orientation() == Orientation::Ascending;
  for (int k = x.lo(); k <= x.hi(); ++k) {
    const bool bad = asc ? k <= 0 : k >= 0;
    if (bad && !is_zero_value(x[k]))
      throw AlgebraError("series_exp: argument has a nonzero term in degree " + std::to_string(k));
  }
  const int lo = asc ? 0 : std::max(-order, x.lo());
  const int hi = asc ? std::min(order, x.hi()) : 0;
  // Work on a window starting at the constant term.
  LaurentSeries<T> base(lo, hi, x.zero(), x.orientation());
  for (int k = lo; k <= hi; ++k)
    if (x.in_window(k)) base.at(k) = x[k];
  LaurentSeries<T> result(lo, hi, x.zero(), x.orientation());
  result.at(0) = unit_like(x.zero());
  LaurentSeries<T> term = result;
  const int steps = hi - lo;
  for (int n = 1; n <= steps; ++n) {
    term = term * base;
    term = term * (QScalar(1) / QScalar(n));
    result = result + term;
  }
  return result;
}

/// Inverse of a series whose lowest coefficient is a unit (degree 0).
template <class T>
LaurentSeries<T> series_invert(const LaurentSeries<T>& x, int order) {
  const bool asc = x.orientation() == Orientation::Ascending;
  if ((asc && x.lo() != 0) || (!asc && x.hi() != 0))
    throw AlgebraError("series_invert: leading degree must be 0");
  const T inv0 = inverse_unit(x[0]);
  const int span = asc ? std::min(order, x.hi()) : std::min(order, -x.lo());
  const int lo = asc ? 0 : -span;
  const int hi = asc ? span : 0;
  LaurentSeries<T> y(lo, hi, x.zero(), x.orientation());
  const int dir = asc ? 1 : -1;
  y.at(0) = inv0;
  for (int k = 1; k <= span; ++k) {
    T acc = x.zero();
    for (int j = 1; j <= k; ++j) {
      const T& xj = x[dir * j];
      if (is_zero_value(xj)) continue;
      acc += xj * y[dir * (k - j)];
    }
    y.at(dir * k) = -(inv0 * acc);
  }
  return y;
}

/// Taylor expansion of num(z)/den(z) to order N; den(0) must be nonzero.
LaurentSeries<QScalar> expand_rational(const std::vector<QScalar>& num, const std::vector<QScalar>& den,
                                       int order);

}  // namespace qgl11
