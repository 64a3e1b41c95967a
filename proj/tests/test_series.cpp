#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qgl11/series.hpp"

using namespace qgl11;

namespace {
const QScalar q = QScalar::q();
const QScalar qi = QScalar::q_pow(-1);

LaurentSeries<QScalar> poly(std::vector<QScalar> c, int hi) {
  return LaurentSeries<QScalar>::polynomial(0, c, hi);
}
}  // namespace

TEST_CASE("arithmetic windows") {
  auto a = poly({1, 1}, 2);
  auto b = poly({1, -1}, 2);
  auto p = a * b;
  CHECK(p.lo() == 0);
  CHECK(p.hi() == 2);
  CHECK(p[0] == QScalar(1));
  CHECK(p[1].is_zero());
  CHECK(p[2] == QScalar(-1));
  CHECK_THROWS_AS(p[3], AlgebraError);
  CHECK(p[-1].is_zero());

  auto c = LaurentSeries<QScalar>::polynomial(1, {1}, 5);
  auto s = poly({1}, 3) + c;
  CHECK(s.lo() == 0);
  CHECK(s.hi() == 3);

  // A genuinely Laurent factor shrinks the reliable window.
  auto l = LaurentSeries<QScalar>::polynomial(-1, {1}, 4);
  auto m = l * poly({1, 1}, 4);
  CHECK(m.lo() == -1);
  CHECK(m.hi() == 3);

  auto desc = LaurentSeries<QScalar>(-3, 0, QScalar(), Orientation::Descending);
  CHECK_THROWS_AS(desc + poly({1}, 3), AlgebraError);
}

TEST_CASE("exp") {
  const int n = 3;
  LaurentSeries<QScalar> x(0, n);
  for (int s = 1; s <= n; ++s) x.at(s) = (QScalar(1) - QScalar::q_pow(2 * s)) / QScalar(s);
  auto e = series_exp(x, n);
  auto expected = expand_rational({1, -q * q}, {1, -1}, n);
  for (int k = 0; k <= n; ++k) CHECK(e[k] == expected[k]);

  auto zero = series_exp(LaurentSeries<QScalar>(0, 4), 4);
  CHECK(zero[0].is_one());
  for (int k = 1; k <= 4; ++k) CHECK(zero[k].is_zero());

  CHECK_THROWS_AS(series_exp(poly({1, 1}, 3), 3), AlgebraError);

  // Element carrier: exp(z (q - q^-1) C_1) to order 2.
  const Element c1 = Element::letter(Letter::C(1));
  LaurentSeries<Element> xe(0, 2);
  xe.at(1) = c1 * qdiff();
  auto ee = series_exp(xe, 2);
  CHECK(ee[0] == Element(QScalar(1)));
  CHECK(ee[1] == c1 * qdiff());
  CHECK(ee[2] == multiply(c1, c1) * (qdiff() * qdiff() / QScalar(2)));

  // Descending orientation: exp of a z^-1 series.
  LaurentSeries<QScalar> d(-3, 0, QScalar(), Orientation::Descending);
  d.at(-1) = QScalar(1);
  auto ed = series_exp(d, 3);
  CHECK(ed[-3] == QScalar(1) / QScalar(6));
  CHECK(ed[1].is_zero());
}

TEST_CASE("invert") {
  auto inv = series_invert(poly({1, -1}, 3), 3);
  for (int k = 0; k <= 3; ++k) CHECK(inv[k].is_one());

  // 1 + x0 with x0 = E_0 (x) F_0 squaring to zero.
  TensorElement x0 = TensorElement::pure(Element::letter(Letter::E(0)), Element::letter(Letter::E(0)));
  CHECK((x0 * x0).is_zero());
  auto t = LaurentSeries<TensorElement>::polynomial(0, {TensorElement(QScalar(1)) + x0}, 2);
  auto ti = series_invert(t, 2);
  CHECK(ti[0] == TensorElement(QScalar(1)) - x0);

  CHECK_THROWS_AS(series_invert(LaurentSeries<QScalar>::polynomial(1, {1}, 3), 3), AlgebraError);
  CHECK_THROWS_AS(series_invert(poly({0, 1}, 3), 3), AlgebraError);
}

TEST_CASE("expand_rational") {
  auto e = expand_rational({1, -q * q}, {1, -1}, 3);
  CHECK(e[0].is_one());
  for (int k = 1; k <= 3; ++k) CHECK(e[k] == QScalar(1) - q * q);
  auto g = expand_rational({1}, {1, -1}, 5);
  for (int k = 0; k <= 5; ++k) CHECK(g[k].is_one());
  auto h = expand_rational({1, -1}, {q, -qi}, 2);
  CHECK(h[0] == qi);
  CHECK(h[1] == QScalar::q_pow(-3) - qi);
  CHECK(h[2] == QScalar::q_pow(-5) - QScalar::q_pow(-3));
  CHECK_THROWS_AS(expand_rational({1}, {0, 1}, 3), AlgebraError);
}

TEST_CASE("ring properties and round trips") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> coef(-3, 3);
  auto rnd = [&](int lo) {
    LaurentSeries<QScalar> s(lo, 6);
    for (int k = lo; k <= 6; ++k) s.at(k) = QScalar(coef(rng)) * QScalar::q_pow(coef(rng));
    return s;
  };
  for (int i = 0; i < 20; ++i) {
    auto a = rnd(0), b = rnd(0), c = rnd(0);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    a.at(0) = QScalar(1) + QScalar::q_pow(coef(rng));
    if (a[0].is_zero()) continue;
    auto prod = a * series_invert(a, 6);
    CHECK(prod[0].is_one());
    for (int k = 1; k <= 6; ++k) CHECK(prod[k].is_zero());
    // num/den times den gives num back.
    std::vector<QScalar> num{coef(rng), coef(rng)}, den{QScalar(1) + q, coef(rng)};
    auto r = expand_rational(num, den, 6) * LaurentSeries<QScalar>::polynomial(0, den, 6);
    CHECK(r[0] == num[0]);
    CHECK(r[1] == num[1]);
    for (int k = 2; k <= 6; ++k) CHECK(r[k].is_zero());
  }
}
