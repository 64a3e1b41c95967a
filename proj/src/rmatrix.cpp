#include "qgl11/rmatrix.hpp"

namespace qgl11 {

namespace {

Element L(const Letter& l) { return Element::letter(l); }
QScalar qp(int k) { return QScalar::q_pow(k); }

Element phi0_plus_inv() { return L(Letter::K1(1)) * L(Letter::K2(-1)); }
Element phi0_minus_inv() { return L(Letter::K1(-1)) * L(Letter::K2(1)); }

TensorElement minus_term(int s) {
  return TensorElement::pure(phi0_plus_inv() * L(Letter::F(s)), phi0_minus_inv() * L(Letter::E(-s))) *
         qdiff().inverse();
}
TensorElement plus_term(int n) {
  return TensorElement::pure(L(Letter::E(n)), L(Letter::F(-n))) * (-qdiff()).inverse();
}
TensorElement zero_term(int s) {
  const TensorElement t = TensorElement::pure(L(Letter::H(s)), L(Letter::C(-s))) * qp(-s) +
                          TensorElement::pure(L(Letter::C(s)), L(Letter::H(-s))) * qp(s);
  return t * (qdiff() * QScalar(s) / qbracket(s));
}

template <class T>
LaurentSeries<T> one_plus(const T& zero, const T& one, const T& x, int deg, int order) {
  LaurentSeries<T> f(0, order, zero);
  f.at(0) = one;
  if (deg <= order) f.at(deg) += x;
  return f;
}

std::string mode_witness(const char* what, int k) { return std::string(what) + " differs at z^" + std::to_string(k); }

}  // namespace

LaurentSeries<TensorElement> build_factor(RFactor which, int order) {
  if (order < 0) throw AlgebraError("build_factor: negative order");
  using S = LaurentSeries<TensorElement>;
  const TensorElement one(QScalar(1));
  S r = one_plus(TensorElement(), one, TensorElement(), 0, order);
  switch (which) {
    case RFactor::Minus:
      for (int s = order; s >= 1; --s) r = r * one_plus(TensorElement(), one, minus_term(s), s, order);
      return r;
    case RFactor::Zero: {
      S x(0, order);
      for (int s = 1; s <= order; ++s) x.at(s) = zero_term(s);
      return series_exp(x, order);
    }
    case RFactor::Plus:
      for (int n = 0; n <= order; ++n) r = r * one_plus(TensorElement(), one, plus_term(n), n, order);
      return r;
  }
  throw AlgebraError("build_factor: unknown factor");
}

Matrix kappa(const Representation& left, const Representation& right, KappaMode mode) {
  static constexpr int M[2][2] = {{-2, 1}, {1, 0}};
  const auto& wl = left.weight();
  const auto& wr = right.weight();
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      if (M[a][b] == 0) continue;
      bool lt = false, rt = false, lu = true, ru = true;
      for (const auto& w : wl) {
        lt = lt || !w[a].u.is_one();
        lu = lu && w[a].u == wl.front()[a].u;
      }
      for (const auto& w : wr) {
        rt = rt || !w[b].u.is_one();
        ru = ru && w[b].u == wr.front()[b].u;
      }
      if (!(lt && rt)) continue;
      if (mode == KappaMode::Strict)
        throw AlgebraError("kappa: " + left.name() + " and " + right.name() +
                           " both carry logarithmic prefactors on a coupled weight pair");
      if (!lu || !ru)
        throw AlgebraError("kappa: projective form needs uniform prefactors on " + left.name() + " and " +
                           right.name());
    }
  std::vector<QScalar> d;
  for (const auto& v : wl)
    for (const auto& w : wr) {
      int e = 0;
      QScalar f(1);
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          if (M[a][b] == 0) continue;
          e += M[a][b] * v[a].m * w[b].m;
          f *= v[a].u.pow(M[a][b] * w[b].m) * w[b].u.pow(M[a][b] * v[a].m);
        }
      d.push_back(f * qp(e));
    }
  return diagonal(d);
}

MatrixSeries evaluate_R(const Representation& left, const Representation& right, int order, KappaMode mode) {
  if (order < 0) throw AlgebraError("evaluate_R: negative order");
  const std::size_t n = left.dim() * right.dim();
  const Matrix zero(n, n), one = Matrix::identity(n);
  MatrixSeries r = one_plus(zero, kappa(left, right, mode), zero, 0, order);
  for (int s = order; s >= 1; --s)
    r = r * one_plus(zero, one, act_pair(left, right, minus_term(s)), s, order);
  MatrixSeries x(0, order, zero);
  for (int s = 1; s <= order; ++s) x.at(s) = act_pair(left, right, zero_term(s));
  r = r * series_exp(x, order);
  for (int k = 0; k <= order; ++k) r = r * one_plus(zero, one, act_pair(left, right, plus_term(k)), k, order);
  return r;
}

PolyMatrix perk_schultz(int zvar, int wvar) {
  const std::vector<int> par{0, 1};
  auto unit = [&](int i, int j, int k, int l) {
    PolyMatrix a(2, 2), b(2, 2);
    a(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = MPoly(QScalar(1));
    b(static_cast<std::size_t>(k - 1), static_cast<std::size_t>(l - 1)) = MPoly(QScalar(1));
    return graded_kron(a, par, b, par);
  };
  auto scale = [](const PolyMatrix& m, const MPoly& p) {
    PolyMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j) * p;
    return r;
  };
  const MPoly z = MPoly::var(zvar), w = MPoly::var(wvar);
  const QScalar q = QScalar::q(), qi = qp(-1);
  PolyMatrix r = scale(unit(1, 1, 1, 1), z * q - w * qi);
  r += scale(unit(2, 2, 2, 2), z * qi - w * q);
  r += scale(unit(1, 1, 2, 2), z - w);
  r += scale(unit(2, 2, 1, 1), z - w);
  r += scale(unit(2, 1, 1, 2), z * qdiff());
  r += scale(unit(1, 2, 2, 1), w * -qdiff());
  return r;
}

RationalMatrix perk_schultz_normalized() {
  const QScalar q = QScalar::q(), qi = qp(-1);
  const std::vector<QScalar> den{-q, qi};
  return {
      {{-qi, q}, den, graded_unit_pair(1, 1, 1, 1)},
      {{-q, qi}, den, graded_unit_pair(2, 2, 2, 2)},
      {{-1, 1}, den, graded_unit_pair(1, 1, 2, 2)},
      {{-1, 1}, den, graded_unit_pair(2, 2, 1, 1)},
      {{0, qdiff()}, den, graded_unit_pair(2, 1, 1, 2)},
      {{-qdiff()}, den, graded_unit_pair(1, 2, 2, 1)},
  };
}

Matrix super_flip(bool koszul) {
  const int par[2] = {0, 1};
  Matrix p(4, 4);
  for (int v = 0; v < 2; ++v)
    for (int w = 0; w < 2; ++w) {
      const bool neg = koszul && par[v] * par[w] % 2;
      p(static_cast<std::size_t>(w * 2 + v), static_cast<std::size_t>(v * 2 + w)) = QScalar(neg ? -1 : 1);
    }
  return p;
}

Report verify_braid(bool koszul) {
  const std::vector<int> par{0, 1}, par2{0, 1, 1, 0};
  PolyMatrix flip(4, 4);
  const Matrix p = super_flip(koszul);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) flip(i, j) = MPoly(p(i, j));
  auto check = [&](int a, int b) { return flip * perk_schultz(a, b); };
  const PolyMatrix id2 = PolyMatrix::identity(2);
  auto left = [&](const PolyMatrix& m) { return graded_kron(m, par2, id2, par); };
  auto right = [&](const PolyMatrix& m) { return graded_kron(id2, par, m, par2); };
  const PolyMatrix lhs = left(check(1, 2)) * right(check(0, 2)) * left(check(0, 1));
  const PolyMatrix rhs = right(check(0, 1)) * left(check(0, 2)) * right(check(1, 2));
  const PolyMatrix res = lhs - rhs;
  Report rep;
  std::string witness;
  for (std::size_t i = 0; i < 8 && witness.empty(); ++i)
    for (std::size_t j = 0; j < 8 && witness.empty(); ++j)
      if (!res(i, j).is_zero())
        witness = "residual entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " + res(i, j).to_string();
  rep.add(koszul ? "braid-symbolic" : "braid-symbolic-unsigned-flip", res.is_zero(), witness);
  // Spot check at q = 2, (z1, z2, z3) = (2, 3, 5).
  bool numeric = true;
  const std::array<QScalar, 3> at{QScalar(2), QScalar(3), QScalar(5)};
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j)
      if (res(i, j).evaluate(at).specialize(2) != 0) numeric = false;
  rep.add(koszul ? "braid-numeric" : "braid-numeric-unsigned-flip", numeric, numeric ? "" : "nonzero at q=2, z=(2,3,5)");
  return rep;
}

Matrix embed_legs(const Matrix& m, const std::vector<std::vector<int>>& legs, std::size_t i, std::size_t j) {
  if (!(i < j && j < legs.size())) throw AlgebraError("embed_legs: bad leg indices");
  const std::size_t dj = legs[j].size();
  std::vector<std::size_t> dims, stride(legs.size());
  std::size_t total = 1;
  for (const auto& l : legs) dims.push_back(l.size());
  for (std::size_t k = legs.size(); k-- > 0;) {
    stride[k] = total;
    total *= dims[k];
  }
  if (m.rows() != dims[i] * dj) throw AlgebraError("embed_legs: operator size mismatch");
  Matrix out(total, total);
  std::vector<std::size_t> digit(legs.size());
  for (std::size_t col = 0; col < total; ++col) {
    std::size_t rem = col;
    for (std::size_t k = 0; k < legs.size(); ++k) {
      digit[k] = rem / stride[k];
      rem %= stride[k];
    }
    int between = 0;
    for (std::size_t k = i + 1; k < j; ++k) between += legs[k][digit[k]];
    const std::size_t mc = digit[i] * dj + digit[j];
    for (std::size_t ri = 0; ri < dims[i]; ++ri)
      for (std::size_t rj = 0; rj < dj; ++rj) {
        const QScalar& x = m(ri * dj + rj, mc);
        if (x.is_zero()) continue;
        if ((legs[i][ri] + legs[j][rj] + legs[i][digit[i]] + legs[j][digit[j]]) % 2)
          throw AlgebraError("embed_legs: operator is not even");
        const int cpar = (legs[j][rj] + legs[j][digit[j]]) % 2;
        const std::size_t row = col + (ri - digit[i]) * stride[i] + (rj - digit[j]) * stride[j];
        out(row, col) = (cpar * between) % 2 ? -x : x;
      }
  }
  return out;
}

Report verify_intertwining(const Representation& left, const Representation& right, const std::vector<Letter>& gens,
                           int order, KappaMode mode) {
  Report rep;
  for (const Letter& g : gens) {
    const Element x = Element::letter(g);
    const auto dz = coproduct_z(x, false, order);
    const auto dc = coproduct_z(x, true, order);
    const int lo = std::min({dz.lo(), dc.lo(), 0});
    const MatrixSeries r = evaluate_R(left, right, order - lo, mode);
    const MatrixSeries lhs = r * act_pair(left, right, dz);
    const MatrixSeries rhs = act_pair(left, right, dc) * r;
    std::string witness;
    for (int k = lo; k <= order && witness.empty(); ++k)
      if (!(lhs[k] == rhs[k])) witness = mode_witness("R.Delta_z vs Delta_z^cop.R", k);
    rep.add("intertwine " + g.to_string() + " on " + left.name() + "," + right.name(), witness.empty(), witness);
  }
  return rep;
}

Report verify_quasitriangular(const Representation& a, const Representation& b, const Representation& c, int order,
                              bool reversed) {
  Report rep;
  const std::vector<std::vector<int>> legs{a.parity(), b.parity(), c.parity()};
  const KappaMode km = KappaMode::Projective;
  auto place = [&](const MatrixSeries& s, std::size_t i, std::size_t j) {
    return s.map([&](const Matrix& m) { return embed_legs(m, legs, i, j); });
  };
  const MatrixSeries r12 = place(evaluate_R(a, b, order, km), 0, 1);
  const MatrixSeries r13 = place(evaluate_R(a, c, order, km), 0, 2);
  const MatrixSeries r23 = place(evaluate_R(b, c, order, km), 1, 2);
  {
    const MatrixSeries lhs = evaluate_R(a, tensor_rep(b, c), order, km);
    const MatrixSeries rhs = reversed ? r12 * r13 : r13 * r12;
    std::string witness;
    for (int k = 0; k <= order && witness.empty(); ++k)
      if (!(lhs[k] == rhs[k])) witness = mode_witness("(Id x Delta)R vs R13 R12", k);
    rep.add(std::string(reversed ? "reversed " : "") + "(id x coproduct) display", witness.empty(), witness);
  }
  {
    const MatrixSeries lhs = evaluate_R(tensor_rep(a, b), c, order, km);
    const MatrixSeries rhs = reversed ? r23 * r13 : r13 * r23;
    std::string witness;
    for (int k = 0; k <= order && witness.empty(); ++k)
      if (!(lhs[k] == rhs[k])) witness = mode_witness("(Delta x Id)R vs R13 R23", k);
    rep.add(std::string(reversed ? "reversed " : "") + "(coproduct x id) display", witness.empty(), witness);
  }
  return rep;
}

}  // namespace qgl11
