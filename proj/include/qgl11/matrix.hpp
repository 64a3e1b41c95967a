#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "qgl11/scalars.hpp"
#include "qgl11/series.hpp"

namespace qgl11 {

/// Dense matrix over a commutative coefficient ring. A 0x0 matrix acts as
/// an untyped zero in sums.
template <class T>
class BasicMatrix {
 public:
  BasicMatrix() = default;
  BasicMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

  static BasicMatrix identity(std::size_t n) {
    BasicMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(QScalar(1));
    return m;
  }
  static BasicMatrix unit(std::size_t n, std::size_t i, std::size_t j) {
    BasicMatrix m(n, n);
    m(i, j) = T(QScalar(1));
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  T& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!is_zero_value(x)) return false;
    return true;
  }

  BasicMatrix operator-() const {
    BasicMatrix m = *this;
    for (auto& x : m.a_) x = -x;
    return m;
  }
  BasicMatrix& operator+=(const BasicMatrix& b) {
    if (b.r_ == 0) return *this;
    if (r_ == 0) return *this = b;
    check_same(b);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += b.a_[i];
    return *this;
  }
  BasicMatrix& operator-=(const BasicMatrix& b) { return *this += -b; }
  friend BasicMatrix operator+(BasicMatrix a, const BasicMatrix& b) { return a += b; }
  friend BasicMatrix operator-(BasicMatrix a, const BasicMatrix& b) { return a -= b; }
  friend BasicMatrix operator*(BasicMatrix a, const QScalar& s) {
    for (auto& x : a.a_) x = x * s;
    return a;
  }
  friend BasicMatrix operator*(const BasicMatrix& a, const BasicMatrix& b) {
    if (a.r_ == 0 || b.r_ == 0) return BasicMatrix();
    if (a.c_ != b.r_) throw AlgebraError("matrix product: dimension mismatch");
    BasicMatrix m(a.r_, b.c_);
    for (std::size_t i = 0; i < a.r_; ++i)
      for (std::size_t k = 0; k < a.c_; ++k) {
        const T& x = a(i, k);
        if (is_zero_value(x)) continue;
        for (std::size_t j = 0; j < b.c_; ++j) {
          const T& y = b(k, j);
          if (!is_zero_value(y)) m(i, j) += x * y;
        }
      }
    return m;
  }
  BasicMatrix& operator*=(const BasicMatrix& b) { return *this = *this * b; }
  friend bool operator==(const BasicMatrix& a, const BasicMatrix& b) {
    if (a.r_ == 0) return b.is_zero();
    if (b.r_ == 0) return a.is_zero();
    return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
  }

  /// Graded tensor product: entry ((i,k),(j,l)) = (-1)^{(|k|+|l|)|j|} A_ij B_kl.
  friend BasicMatrix graded_kron(const BasicMatrix& a, const std::vector<int>& pa, const BasicMatrix& b,
                                 const std::vector<int>& pb) {
    BasicMatrix m(a.r_ * b.r_, a.c_ * b.c_);
    for (std::size_t i = 0; i < a.r_; ++i)
      for (std::size_t j = 0; j < a.c_; ++j) {
        const T& x = a(i, j);
        if (is_zero_value(x)) continue;
        for (std::size_t k = 0; k < b.r_; ++k)
          for (std::size_t l = 0; l < b.c_; ++l) {
            const T& y = b(k, l);
            if (is_zero_value(y)) continue;
            const bool neg = ((pb[k] + pb[l]) * pa[j]) % 2 != 0;
            m(i * b.r_ + k, j * b.c_ + l) = neg ? -(x * y) : x * y;
          }
      }
    return m;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < r_; ++i) {
      s += i ? ", [" : "[";
      for (std::size_t j = 0; j < c_; ++j) s += (j ? ", " : "") + (*this)(i, j).to_string();
      s += "]";
    }
    return s + "]";
  }

 private:
  void check_same(const BasicMatrix& b) const {
    if (r_ != b.r_ || c_ != b.c_) throw AlgebraError("matrix sum: dimension mismatch");
  }
  std::size_t r_ = 0;
  std::size_t c_ = 0;
  std::vector<T> a_;
};

using Matrix = BasicMatrix<QScalar>;
using MatrixSeries = LaurentSeries<Matrix>;

Matrix inverse(const Matrix& m);
Matrix diagonal(const std::vector<QScalar>& d);

inline bool is_zero_value(const Matrix& m) { return m.is_zero(); }
inline Matrix unit_like(const Matrix& zero) { return Matrix::identity(zero.rows()); }
inline Matrix inverse_unit(const Matrix& m) { return inverse(m); }

/// Polynomial in three commuting variables over Q(q).
class MPoly {
 public:
  using Exps = std::array<int, 3>;

  MPoly() = default;
  MPoly(const QScalar& c);  // NOLINT(google-explicit-constructor)
  static MPoly var(int i, const QScalar& c = QScalar(1));

  bool is_zero() const { return t_.empty(); }
  const std::map<Exps, QScalar>& terms() const { return t_; }
  MPoly operator-() const;
  MPoly& operator+=(const MPoly& b);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a += -b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const QScalar& s);
  friend bool operator==(const MPoly&, const MPoly&) = default;

  QScalar evaluate(const std::array<QScalar, 3>& at) const;
  std::string to_string() const;

 private:
  std::map<Exps, QScalar> t_;
};

inline bool is_zero_value(const MPoly& p) { return p.is_zero(); }

using PolyMatrix = BasicMatrix<MPoly>;

}  // namespace qgl11
