#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qgl11/superalg.hpp"

using namespace qgl11;

namespace {
const QScalar q = QScalar::q();
const QScalar qi = QScalar::q_pow(-1);

Element L(const Letter& l) { return Element::letter(l); }
Element E(int n) { return L(Letter::E(n)); }
Element F(int n) { return L(Letter::F(n)); }
Element h(int s) { return L(Letter::H(s)); }
Element C(int s) { return L(Letter::C(s)); }
Element k1(int e = 1) { return L(Letter::K1(e)); }
Element k2(int e = 1) { return L(Letter::K2(e)); }

Letter random_letter(std::mt19937& rng) {
  std::uniform_int_distribution<int> kind(0, 5), idx(-2, 2), nz(1, 2), sign(0, 1);
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

Element random_element(std::mt19937& rng) {
  std::uniform_int_distribution<int> terms(1, 2), len(0, 3), coef(-2, 2);
  Element x;
  for (int t = terms(rng); t-- > 0;) {
    Element m(QScalar(coef(rng)) + q);
    for (int i = len(rng); i-- > 0;) m = m * L(random_letter(rng));
    x += m;
  }
  return x;
}

Element anticomm(const Element& a, const Element& b) { return a * b + b * a; }
Element comm(const Element& a, const Element& b) { return a * b - b * a; }
}  // namespace

TEST_CASE("normal order basics") {
  CHECK((E(0) * E(0)).is_zero());
  CHECK((F(2) * F(2)).is_zero());
  CHECK(E(1) * E(0) == -(E(0) * E(1)));
  CHECK((E(1) * E(0)).size() == 1);
  CHECK(k1() * k1(-1) == Element(QScalar(1)));
  CHECK(k2(-1) * k1(1) == k1() * k2(-1));
  CHECK(comm(C(3), E(1)).is_zero());
  CHECK(comm(C(-2), F(0)).is_zero());
  CHECK(comm(h(1), h(-2)).is_zero());
}

TEST_CASE("defining relations") {
  // k_i E k_i^-1 = q^{(alpha, eps_i)} E
  CHECK(k1() * E(2) * k1(-1) == q * E(2));
  CHECK(k2() * E(-1) * k2(-1) == q * E(-1));
  CHECK(k1() * F(0) * k1(-1) == qi * F(0));
  CHECK(k2() * F(3) * k2(-1) == qi * F(3));
  // [E_m, F_n] = (q - q^-1)(phi+_{m+n} - phi-_{m+n})
  for (int m = -2; m <= 2; ++m)
    for (int n = -2; n <= 2; ++n)
      CHECK(anticomm(E(m), F(n)) == qdiff() * (phi_plus(m + n) - phi_minus(m + n)));
  CHECK(anticomm(E(0), F(0)) == qdiff() * (k1(-1) * k2() - k1() * k2(-1)));
  // [h_s, E_n] = q^s[s]/s E_{n+s},  [h_s, F_n] = -q^s[s]/s F_{n+s}
  for (int s : {-2, -1, 1, 2, 3}) {
    const QScalar b = QScalar::q_pow(s) * qbracket(s) / QScalar(s);
    CHECK(comm(h(s), E(1)) == b * E(1 + s));
    CHECK(comm(h(s), F(-1)) == -(b * F(-1 + s)));
  }
  CHECK(anticomm(E(0), E(1)).is_zero());
  CHECK(anticomm(F(-1), F(2)).is_zero());
}

TEST_CASE("worked products") {
  CHECK(E(0) * F(0) == -(F(0) * E(0)) + qdiff() * (k1(-1) * k2() - k1() * k2(-1)));
  CHECK(E(1) * h(1) == h(1) * E(1) - q * E(2));
}

TEST_CASE("phi modes") {
  CHECK(phi_plus(0) == k1(-1) * k2());
  CHECK(phi_minus(0) == k1() * k2(-1));
  CHECK(phi_plus(-1).is_zero());
  CHECK(phi_minus(1).is_zero());
  CHECK(phi_plus(1) == k1(-1) * k2() * C(1) * qdiff());
  CHECK(phi_minus(-1) == -(k1() * k2(-1) * C(-1) * qdiff()));
  const QScalar d2 = qdiff() * qdiff();
  CHECK(phi_plus(2) == k1(-1) * k2() * (C(2) * qdiff() + C(1) * C(1) * (d2 / QScalar(2))));
}

TEST_CASE("monomial data") {
  const Monomial m = (F(1) * k1(-1) * h(2) * h(2) * C(1) * E(0)).terms().begin()->first;
  CHECK(m.to_string() == "F[1]*k1^-1*h[2]^2*C[1]*E[0]");
  CHECK(m.zdeg() == 6);
  CHECK(m.qdeg() == 0);
  CHECK(m.parity() == Parity::Even);
  CHECK(m.length() == 6);
  CHECK(Monomial::from_letter(Letter::E(-1)).grading() == Grading{-1, 1, Parity::Odd});
  CHECK_THROWS_AS(Letter::H(0), AlgebraError);
  CHECK_THROWS_AS(Letter::C(0), AlgebraError);
}

TEST_CASE("associativity on random triples") {
  std::mt19937 rng(11);
  for (int i = 0; i < 500; ++i) {
    Element a = random_element(rng), b = random_element(rng), c = random_element(rng);
    REQUIRE((a * b) * c == a * (b * c));
  }
}

TEST_CASE("tensor product signs") {
  TensorElement a = TensorElement::pure(E(0), F(1));
  TensorElement b = TensorElement::pure(F(0), E(1));
  // (a1 x a2)(b1 x b2) = (-1)^{|a2||b1|} a1 b1 x a2 b2
  CHECK(a * b == TensorElement::pure(E(0) * F(0), F(1) * E(1)) * QScalar(-1));
  CHECK(a.flipped() == TensorElement::pure(F(1), E(0)) * QScalar(-1));
  CHECK(a.flipped().flipped() == a);
  std::mt19937 rng(5);
  for (int i = 0; i < 50; ++i) {
    TensorElement x = TensorElement::pure(random_element(rng), random_element(rng));
    TensorElement y = TensorElement::pure(random_element(rng), random_element(rng));
    TensorElement z = TensorElement::pure(random_element(rng), random_element(rng));
    CHECK((x * y) * z == x * (y * z));
  }
}
