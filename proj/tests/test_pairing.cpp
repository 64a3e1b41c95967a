#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qgl11/hopf.hpp"
#include "qgl11/pairing.hpp"

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

// Coefficient of x^k in num(x)/den(x).
QScalar coeff(const std::vector<QScalar>& num, const std::vector<QScalar>& den, int k) {
  return expand_rational(num, den, k)[k];
}
}  // namespace

TEST_CASE("letter order") {
  CHECK(BLetter::fneg(3) < BLetter::fneg(1));
  CHECK(BLetter::fneg(1) < BLetter::h(5));
  CHECK(BLetter::h(2) < BLetter::ccen(1));
  CHECK(BLetter::ccen(9) < BLetter::e(0));
  CHECK(BLetter::e(0) < BLetter::e(1));
  GammaFunction f;
  CHECK_THROWS_AS(f.set(BLetter::e(0), 2), AlgebraError);
  CHECK_THROWS_AS(BLetter::h(0), AlgebraError);
}

TEST_CASE("pbw products") {
  auto [e0, f0] = pbw_products({{BLetter::e(0), 1}});
  CHECK(e0 == E(0));
  CHECK(f0 == F(0));
  auto [e1, f1] = pbw_products({{BLetter::fneg(2), 1}});
  CHECK(e1 == k1() * k2(-1) * F(2));
  CHECK(f1 == k1(-1) * k2() * E(-2));
  auto [e2, f2] = pbw_products({{BLetter::h(1), 2}, {BLetter::e(0), 1}});
  CHECK(e2 == h(1) * h(1) * E(0));
  CHECK(f2 == C(-1) * C(-1) * F(0));
}

TEST_CASE("generator values") {
  CHECK(letter_pair(BLetter::h(1)) == q / qdiff());
  CHECK(letter_pair(BLetter::e(3)) == qdiff());
  CHECK(letter_pair(BLetter::fneg(2)) == qi - q);
  CHECK(cartan_pair({1, 0}, {1, 0}).is_one());
  CHECK(cartan_pair({0, 1}, {0, 1}) == QScalar::q_pow(-2));
  CHECK(cartan_pair({-1, 1}, {-1, 1}).is_one());
}

TEST_CASE("closed form") {
  const CartanExp triv;
  const GammaFunction e0{{BLetter::e(0), 1}};
  const GammaFunction e01{{BLetter::e(0), 1}, {BLetter::e(1), 1}};
  CHECK(pair_closed(triv, e0, triv, e0) == qdiff());
  CHECK(pair_closed(triv, e01, triv, e01) == -(qdiff() * qdiff()));
  CHECK(pair_closed(triv, e0, triv, GammaFunction{{BLetter::e(1), 1}}).is_zero());
  const GammaFunction h2{{BLetter::h(1), 2}};
  CHECK(pair_closed(triv, h2, triv, h2) == QScalar(2) * (q / qdiff()) * (q / qdiff()));
}

TEST_CASE("oracle examples") {
  CHECK(pair_oracle(E(0), F(0)) == qdiff());
  CHECK(pair_oracle(E(0) * E(1), F(0) * F(-1)) == -(qdiff() * qdiff()));
  CHECK(pair_oracle(h(1), h(-1)).is_zero());
  CHECK(pair_oracle(C(2), C(-2)).is_zero());
  CHECK(pair_oracle(F(2), E(-2)) == qi - q);
  CHECK(pair_oracle(Element(QScalar(1)), k1()).is_one());
  CHECK_THROWS_AS(pair_oracle(E(-1), F(0)), AlgebraError);
  CHECK_THROWS_AS(pair_oracle(E(0), F(1)), AlgebraError);
}

TEST_CASE("closed form agrees with the oracle on small functions") {
  const auto gammas = enumerate_gamma(2, 2);
  PairingOracle oracle;
  std::vector<std::pair<Element, Element>> pbw;
  for (const auto& f : gammas) pbw.push_back(pbw_products(f));
  for (const CartanExp k : {CartanExp{0, 0}, CartanExp{1, -1}, CartanExp{-1, 0}})
    for (const CartanExp kp : {CartanExp{0, 0}, CartanExp{0, 1}, CartanExp{1, 1}})
      for (std::size_t i = 0; i < gammas.size(); ++i)
        for (std::size_t j = 0; j < gammas.size(); ++j) {
          const QScalar closed = pair_closed(k, gammas[i], kp, gammas[j]);
          const QScalar direct =
              oracle(cartan_element_a(k) * pbw[i].first, cartan_element_b(kp) * pbw[j].second);
          INFO(gammas[i].to_string(), " ", gammas[j].to_string());
          REQUIRE(closed == direct);
        }
}

TEST_CASE("generating series") {
  const int w = 4;
  PairingOracle oracle;
  auto kp = gauss_current(GaussId::s11, w);
  auto km = gauss_current(GaussId::t11, w);
  for (int m = 0; m <= w; ++m)
    for (int n = 0; n <= w; ++n) {
      const int k = m == n ? m : -1;
      auto at = [&](const std::vector<QScalar>& num, const std::vector<QScalar>& den) {
        return k < 0 ? QScalar(0) : coeff(num, den, k);
      };
      // The expansions are in x = w/z; only diagonal modes survive.
      CHECK(oracle(E(m), F(-n)) == at({qdiff()}, {1, -1}));
      CHECK(oracle(phi_plus(m), km[-n]) == at({1, -1}, {q, -qi}));
      if (m >= 1 && n >= 1) CHECK(oracle(-F(m), -E(-n)) == at({0, qi - q}, {1, -1}));
      CHECK(oracle(kp[m], phi_minus(-n)) == at({qi, -q}, {1, -1}));
      CHECK(oracle(kp[m], km[-n]) == at({1}, {1}) * QScalar(k == 0 ? 1 : 0));
      CHECK(oracle(phi_plus(m), phi_minus(-n)) == at({1}, {1}) * QScalar(k == 0 ? 1 : 0));
    }
}

TEST_CASE("products of Cartan letters are orthogonal to single letters") {
  std::vector<Element> b0, b0minus;
  for (int s = 1; s <= 3; ++s) {
    b0.push_back(h(s));
    b0.push_back(C(s));
    b0minus.push_back(C(-s));
    b0minus.push_back(h(-s));
  }
  PairingOracle oracle;
  for (const auto& y : b0minus)
    for (std::size_t i = 0; i < b0.size(); ++i)
      for (std::size_t j = i; j < b0.size(); ++j) {
        CHECK(oracle(b0[i] * b0[j], y).is_zero());
        for (std::size_t l = j; l < b0.size(); ++l) CHECK(oracle(b0[i] * b0[j] * b0[l], y).is_zero());
      }
}

TEST_CASE("grading orthogonality") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> idx(1, 3), pick(0, 3);
  auto a_letter = [&]() -> Element {
    switch (pick(rng)) {
      case 0: return E(idx(rng) - 1);
      case 1: return F(idx(rng));
      case 2: return h(idx(rng));
      default: return C(idx(rng));
    }
  };
  auto b_letter = [&]() -> Element {
    switch (pick(rng)) {
      case 0: return E(-idx(rng));
      case 1: return F(1 - idx(rng));
      case 2: return h(-idx(rng));
      default: return C(-idx(rng));
    }
  };
  PairingOracle oracle;
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    Element x = a_letter() * a_letter(), y = b_letter() * b_letter();
    if (x.is_zero() || y.is_zero()) continue;
    const Monomial mx = x.terms().begin()->first, my = y.terms().begin()->first;
    if (mx.zdeg() + my.zdeg() == 0 && mx.qdeg() + my.qdeg() == 0) continue;
    CHECK(oracle(x, y).is_zero());
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("enumeration") {
  CHECK(enumerate_gamma(0, 1).size() == 2);
  CHECK(enumerate_gamma(1, 1).size() == 6);
}
