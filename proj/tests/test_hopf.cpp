#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qgl11/hopf.hpp"

using namespace qgl11;

namespace {
const QScalar q = QScalar::q();
const QScalar qi = QScalar::q_pow(-1);
const Element one(QScalar(1));

Element L(const Letter& l) { return Element::letter(l); }
Element E(int n) { return L(Letter::E(n)); }
Element F(int n) { return L(Letter::F(n)); }
Element h(int s) { return L(Letter::H(s)); }
Element C(int s) { return L(Letter::C(s)); }
Element k1(int e = 1) { return L(Letter::K1(e)); }
Element k2(int e = 1) { return L(Letter::K2(e)); }
TensorElement T(const Element& a, const Element& b) { return TensorElement::pure(a, b); }

Grading total(const Monomial& a, const Monomial& b) {
  return {a.zdeg() + b.zdeg(), a.qdeg() + b.qdeg(), a.odd() != b.odd() ? Parity::Odd : Parity::Even};
}

Letter random_letter(std::mt19937& rng) {
  std::uniform_int_distribution<int> kind(0, 5), idx(-4, 4), nz(1, 4), sign(0, 1);
  auto nonzero = [&] { return sign(rng) ? nz(rng) : -nz(rng); };
  switch (kind(rng)) {
    case 0: return Letter::E(idx(rng));
    case 1: return Letter::F(idx(rng));
    case 2: return Letter::H(nonzero());
    case 3: return Letter::C(nonzero());
    case 4: return Letter::K1(sign(rng) ? 1 : -1);
    default: return Letter::K2(sign(rng) ? 1 : -1);
  }
}

std::vector<Letter> generators(int bound) {
  std::vector<Letter> g{Letter::K1(1), Letter::K1(-1), Letter::K2(1), Letter::K2(-1)};
  for (int n = -bound; n <= bound; ++n) {
    g.push_back(Letter::E(n));
    g.push_back(Letter::F(n));
    if (n != 0) {
      g.push_back(Letter::H(n));
      g.push_back(Letter::C(n));
    }
  }
  return g;
}
}  // namespace

TEST_CASE("coproduct of generators") {
  CHECK(coproduct(Letter::H(1)) == T(one, h(1)) + T(h(1), one) + T(E(0), F(1)) * (q / qdiff()));
  CHECK(coproduct(Letter::E(0)) == T(one, E(0)) + T(E(0), phi_plus(0)));
  const Element phi1 = k1(-1) * k2() * C(1) * qdiff();
  CHECK(phi_plus(1) == phi1);
  CHECK(coproduct(Letter::E(1)) == T(one, E(1)) + T(E(0), phi1) + T(E(1), phi_plus(0)));
  CHECK(coproduct(Letter::E(-1)) == T(one, E(-1)) + T(E(-1), phi_minus(0)));
  CHECK(coproduct(Letter::C(-3)) == T(one, C(-3)) + T(C(-3), one));
  CHECK(coproduct(k1(-1) * k2()) == T(k1(-1) * k2(), k1(-1) * k2()));
}

TEST_CASE("counit") {
  CHECK(counit(k1()).is_one());
  CHECK(counit(E(5)).is_zero());
  CHECK(counit(one + q * h(1) * C(2)).is_one());
}

TEST_CASE("z-graded and flipped coproduct") {
  auto dh = coproduct_z(h(1), false);
  CHECK(dh[0] == T(one, h(1)) + T(E(0), F(1)) * (q / qdiff()));
  CHECK(dh[1] == T(h(1), one));
  auto dc = coproduct_z(C(2), false);
  CHECK(dc[0] == T(one, C(2)));
  CHECK(dc[1].is_zero());
  CHECK(dc[2] == T(C(2), one));
  auto cop = coproduct_z(E(0), true);
  CHECK(cop[0] == T(E(0), one) + T(phi_plus(0), E(0)));
  auto neg = coproduct_z(F(-1), false);
  CHECK(neg.lo() == -1);
  CHECK(neg[-1] == T(F(-1), one) + T(phi_minus(-1), F(0)));
  CHECK(neg[0] == T(phi_minus(0), F(-1)));
}

TEST_CASE("gradings and parity are preserved") {
  for (const Letter& l : generators(4)) {
    const Monomial m = Monomial::from_letter(l);
    for (const TensorElement d = coproduct(l); const auto& [key, c] : d.terms()) CHECK(total(key.first, key.second) == m.grading());
  }
}

TEST_CASE("morphism on random pairs") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> len(1, 3);
  for (int i = 0; i < 200; ++i) {
    Element a = one, b = one;
    for (int j = len(rng); j-- > 0;) a = a * L(random_letter(rng));
    for (int j = len(rng); j-- > 0;) b = b * L(random_letter(rng));
    REQUIRE(coproduct(a * b) == coproduct(a) * coproduct(b));
  }
}

TEST_CASE("coassociativity and counit") {
  for (const Letter& l : generators(5)) {
    const TensorElement d = coproduct(l);
    CHECK(coproduct_left(d) == coproduct_right(d));
    CHECK(counit_left(d) == L(l));
    CHECK(counit_right(d) == L(l));
  }
}

TEST_CASE("gauss currents") {
  auto s11 = gauss_current(GaussId::s11, 3);
  CHECK(s11[0] == k1());
  CHECK(s11[1] == k1() * h(1) * qdiff());
  CHECK(gauss_current(GaussId::s12, 3)[0] == k1() * E(0));
  CHECK(gauss_current(GaussId::t12, 3)[0].is_zero());
  CHECK(gauss_current(GaussId::s21, 3)[0].is_zero());
  CHECK(gauss_current(GaussId::t11, 3)[0] == k1(-1));
  CHECK(gauss_current(GaussId::s22, 3)[0] == k2());
  CHECK(gauss_current(GaussId::t22, 3)[0] == k2(-1));
  CHECK(gauss_current(GaussId::t21, 3)[0] == F(0) * k1(-1));
  CHECK_THROWS_AS(parse_gauss_id("s13"), AlgebraError);
}

TEST_CASE("conjugation by exp of the h current") {
  const int n0 = 1, order = 6;
  LaurentSeries<Element> hs(0, order);
  for (int s = 1; s <= order; ++s) hs.at(s) = h(s) * qdiff();
  auto up = series_exp(hs, order);
  auto down = series_exp(-hs, order);
  LaurentSeries<Element> f(0, order);
  f.at(0) = F(n0);
  auto conj = up * f * down;
  auto c = expand_rational({1, -q * q}, {1, -1}, order);
  for (int m = 0; m <= order; ++m) CHECK(conj[m] == F(n0 + m) * c[m]);
}

TEST_CASE("x_il fixture") {
  auto x = [](int i, int l) { return QScalar::q_pow(i + 1) * qbracket(i + 1) + q * QScalar(l - i); };
  for (int j = 0; j <= 4; ++j)
    for (int k = j + 1; k <= 4; ++k)
      for (int a = 1; a <= 4; ++a)
        for (int b = a + 1; b <= 4; ++b)
          CHECK((-x(k, b + k - 1) + x(k, a + k - 1) + x(j, b + j - 1) - x(j, a + j - 1)).is_zero());
  for (int a = 1; a <= 4; ++a)
    for (int b = a + 1; b <= 4; ++b)
      CHECK(QScalar::q_pow(a + 1) * qbracket(a) + QScalar(b) == qi * x(a, a + b - 1));
}

TEST_CASE("drinfeld coproduct") {
  const int n = 4;
  auto dh = drinfeld_coproduct(Letter::H(1), n);
  for (int k = -n; k <= n; ++k) {
    TensorElement want;
    if (k == 0) want = T(one, h(1));
    if (k == 1) want = T(h(1), one);
    CHECK(dh[k] == want);
  }
  auto dc = drinfeld_coproduct(Letter::C(2), n);
  CHECK(dc[0] == T(one, C(2)));
  CHECK(dc[2] == T(C(2), one));
  CHECK(dc[1].is_zero());
  auto de = drinfeld_coproduct(Letter::E(0), n);
  for (int k = 0; k <= n; ++k) {
    TensorElement want = T(E(k), phi_minus(-k));
    if (k == 0) want += T(one, E(0));
    CHECK(de[k] == want);
  }
}
