#include "qgl11/matrix.hpp"

namespace qgl11 {

Matrix inverse(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw AlgebraError("inverse: matrix is not square");
  Matrix a = m, inv = Matrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col).is_zero()) ++piv;
    if (piv == n) throw AlgebraError("inverse: matrix is singular");
    if (piv != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    const QScalar p = a(col, col).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) *= p;
      inv(col, j) *= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col).is_zero()) continue;
      const QScalar f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

Matrix diagonal(const std::vector<QScalar>& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

MPoly::MPoly(const QScalar& c) {
  if (!c.is_zero()) t_[{0, 0, 0}] = c;
}

MPoly MPoly::var(int i, const QScalar& c) {
  MPoly p;
  Exps e{0, 0, 0};
  e.at(static_cast<std::size_t>(i)) = 1;
  if (!c.is_zero()) p.t_[e] = c;
  return p;
}

MPoly MPoly::operator-() const {
  MPoly p = *this;
  for (auto& [e, c] : p.t_) c = -c;
  return p;
}

MPoly& MPoly::operator+=(const MPoly& b) {
  for (const auto& [e, c] : b.t_) {
    auto [it, fresh] = t_.try_emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r;
  for (const auto& [ea, ca] : a.t_)
    for (const auto& [eb, cb] : b.t_) {
      MPoly m;
      m.t_[{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}] = ca * cb;
      r += m;
    }
  return r;
}

MPoly operator*(MPoly a, const QScalar& s) {
  if (s.is_zero()) return MPoly();
  for (auto& [e, c] : a.t_) c *= s;
  return a;
}

QScalar MPoly::evaluate(const std::array<QScalar, 3>& at) const {
  QScalar r;
  for (const auto& [e, c] : t_) {
    QScalar m = c;
    for (std::size_t i = 0; i < 3; ++i) m *= at[i].pow(e[i]);
    r += m;
  }
  return r;
}

std::string MPoly::to_string() const {
  if (t_.empty()) return "0";
  static const char* names[3] = {"z1", "z2", "z3"};
  std::string s;
  for (const auto& [e, c] : t_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")";
    for (std::size_t i = 0; i < 3; ++i)
      if (e[i]) s += std::string("*") + names[i] + (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
  }
  return s;
}

}  // namespace qgl11
