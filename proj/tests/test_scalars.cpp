#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qgl11/scalars.hpp"

using namespace qgl11;

namespace {

const QScalar q = QScalar::q();
const QScalar qi = QScalar::q_pow(-1);

QScalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> deg(0, 3);
  auto poly = [&] {
    std::vector<mpz_class> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = coef(rng);
    return IntPoly(c);
  };
  IntPoly den = poly();
  while (den.is_zero()) den = poly();
  return QScalar(poly(), den) * QScalar::q_pow(std::uniform_int_distribution<int>(-2, 2)(rng));
}

}  // namespace

TEST_CASE("field operations") {
  CHECK((q + (-q)).is_zero());
  CHECK((q - qi) * q == q * q - QScalar(1));
  // (q^2 - 1)/(q - 1) reduces by the common factor q - 1.
  QScalar quotient = (q * q - QScalar(1)) / (q - QScalar(1));
  CHECK(quotient == q + QScalar(1));
  CHECK(quotient.den().degree() == 0);
  CHECK_THROWS_AS(q / QScalar(0), AlgebraError);
}

TEST_CASE("canonical form") {
  QScalar a(IntPoly({mpz_class(-2), mpz_class(0), mpz_class(2)}), IntPoly({mpz_class(-4), mpz_class(4)}));
  // (2q^2 - 2)/(4q - 4) = (q + 1)/2
  CHECK(a.num() == IntPoly({mpz_class(1), mpz_class(1)}));
  CHECK(a.den() == IntPoly(mpz_class(2)));
  QScalar b(IntPoly(mpz_class(3)), IntPoly({mpz_class(0), mpz_class(-6)}));
  CHECK(b.den().lead() > 0);
  CHECK(b == -(QScalar(1) / (QScalar(2) * q)));
}

TEST_CASE("qbracket") {
  CHECK(qbracket(1).is_one());
  CHECK(qbracket(2) == q + qi);
  CHECK(qbracket(-3) == -qbracket(3));
  CHECK_THROWS_AS(qbracket(0), AlgebraError);
  for (int s = -20; s <= 20; ++s) {
    if (s == 0) continue;
    CHECK(qbracket(s) * (q - qi) == QScalar::q_pow(s) - QScalar::q_pow(-s));
  }
}

TEST_CASE("specialization") {
  CHECK(qbracket(2).specialize(2) == Rational(5, 2));
  CHECK((q * q - QScalar(1)).specialize(3) == 8);
  CHECK_THROWS_AS((QScalar(1) / (q - qi)).specialize(1), AlgebraError);
  CHECK_THROWS_AS(q.specialize(0), AlgebraError);
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), AlgebraError);
}

TEST_CASE("field axioms on random samples") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    QScalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    if (!b.is_zero()) CHECK(a * b / b == a);
  }
}
