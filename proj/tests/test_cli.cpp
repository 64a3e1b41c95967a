#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgl11/cli.hpp"
#include "qgl11/hopf.hpp"
#include "qgl11/pairing.hpp"

using namespace qgl11;

namespace {
const QScalar q = QScalar::q();
Element L(const Letter& l) { return Element::letter(l); }

std::size_t error_col(const std::string& s) {
  try {
    parse_expr(s);
  } catch (const ParseError& e) {
    return e.pos();
  }
  return std::string::npos;
}
}  // namespace

TEST_CASE("evaluation goes through the product") {
  const Element x = parse_element("E[0]*F[0]");
  CHECK(x == L(Letter::E(0)) * L(Letter::F(0)));
  CHECK(x == -(L(Letter::F(0)) * L(Letter::E(0))) +
                 qdiff() * (L(Letter::K1(-1)) * L(Letter::K2(1)) - L(Letter::K1(1)) * L(Letter::K2(-1))));
  CHECK(parse_element("(q - q^-1)*h[1]") == L(Letter::H(1)) * qdiff());
  CHECK(parse_element("k1^-2 * k1^2") == Element(QScalar(1)));
  CHECK(parse_element("E[1]^2").is_zero());
  CHECK(parse_element("  h[ -2 ] / (q+1) ") == L(Letter::H(-2)) * (q + QScalar(1)).inverse());
  CHECK(parse_element("-3 - -q") == QScalar(-3) + q);
}

TEST_CASE("tensors") {
  const TensorElement d = parse_tensor("1 # C[1] + C[1] # 1");
  CHECK(d == coproduct(Letter::C(1)));
  CHECK(format_element(coproduct(Letter::C(1))) == "1 # C[1] + C[1] # 1");
  CHECK(parse_tensor("(E[0] # 1)*(1 # F[0])") == TensorElement::pure(L(Letter::E(0)), L(Letter::F(0))));
  CHECK(parse_tensor("(1 # E[0])*(F[0] # 1)") == -TensorElement::pure(L(Letter::F(0)), L(Letter::E(0))));
  CHECK(parse_tensor("2") == TensorElement(QScalar(2)));
  CHECK(parse_tensor("q*E[0] # F[0] - 1") ==
        TensorElement::pure(L(Letter::E(0)) * q, L(Letter::F(0))) - TensorElement(QScalar(1)));
}

TEST_CASE("errors carry positions") {
  CHECK(error_col("h[0]") == 2);
  CHECK(error_col("C[0]") == 2);
  CHECK(error_col("E[0] / F[1]") == 5);
  CHECK(error_col("1 / (q - q)") == 2);
  CHECK(error_col("E[0] + 1 # F[0]") == 5);
  CHECK(error_col("x") == 0);
  CHECK(error_col("(E[0]") == 5);
  CHECK(error_col("E[0] # F[0] # E[1]") == 12);
  CHECK(error_col("h[1]^-1") == 0);
  CHECK(error_col("") == 0);
  CHECK_THROWS_AS(parse_element("1 # 1"), ParseError);
}

TEST_CASE("format") {
  CHECK(format_element(Element()) == "0");
  CHECK(format_element(TensorElement()) == "0");
  std::mt19937 rng(5);
  for (int i = 0; i < 50; ++i) {
    const Element x = random_element(rng);
    CHECK(parse_element(format_element(x)) == x);
  }
  CHECK(check_round_trip(1, 100).ok());
}

TEST_CASE("closed pairing on elements") {
  const Element a = parse_element("k1*E[0]*E[1] + 3*h[1]*h[2] + q*C[2]*F[1]");
  const Element b = parse_element("k2^-1*F[0]*F[-1] + k1*C[-1]*C[-2] + h[-2]*E[-1] + 1");
  CHECK(pair_closed(a, b) == pair_oracle(a, b));
  CHECK_THROWS_AS(pair_closed(parse_element("E[-1]"), parse_element("F[0]")), AlgebraError);
}

TEST_CASE("representation names") {
  CHECK(parse_rep("rho").dim() == 2);
  CHECK(parse_rep("pi_cd(2, 3)").dim() == 2);
  CHECK(parse_rep("pi_a(1/2)").a_only());
  CHECK_THROWS_AS(parse_rep("pi(2)"), AlgebraError);
}

TEST_CASE("suites") {
  CHECK(run_suite("braid", {}).ok());
  SuiteOptions bad;
  bad.koszul = false;
  CHECK_FALSE(run_suite("braid", bad).ok());
  CHECK_THROWS_AS(run_suite("nope", {}), AlgebraError);
  SuiteOptions small;
  small.order = 2;
  CHECK(run_suite("drinfeld-coproduct", small).ok());
}
