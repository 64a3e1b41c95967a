#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgl11/repr.hpp"
#include "qgl11/rmatrix.hpp"

using namespace qgl11;

namespace {
const QScalar q = QScalar::q();
const QScalar qi = QScalar::q_pow(-1);

Matrix e(int i, int j) { return Matrix::unit(2, static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)); }

std::string failures(const Report& r) {
  std::string s;
  for (const auto& c : r.checks)
    if (!c.pass) s += c.name + ": " + c.witness + "\n";
  return s;
}
}  // namespace

TEST_CASE("rho action") {
  const Representation rho = rep_rho();
  CHECK(rho.act(Letter::E(0)) == e(1, 2) * (qi * qdiff()));
  CHECK(rho.act(Letter::C(2)) == Matrix::identity(2) * -(QScalar::q_pow(-2) * qbracket(2) / QScalar(2)));
  const MatrixSeries s11 = act_series(rho, gauss_current(GaussId::s11, 4));
  CHECK(s11[0] == e(1, 1) * q + e(2, 2));
  CHECK(s11[1] == e(1, 1) * -qi - e(2, 2));
  for (int k = 2; k <= 4; ++k) CHECK(s11[k].is_zero());
}

TEST_CASE("pi_a action") {
  const Representation pa = rep_pi_a(2);
  CHECK(pa.act(Letter::E(1)).is_zero());
  CHECK(pa.act(Letter::H(2)) == Matrix::identity(2) * (QScalar(4) / (QScalar(2) * qdiff())));
  CHECK(pa.act(Letter::F(1)) == e(2, 1) * QScalar(2));
  CHECK_THROWS_AS(pa.act(Letter::E(-1)), AlgebraError);
  CHECK_THROWS_AS(rep_pi_a(0), AlgebraError);
}

TEST_CASE("pi_cd action") {
  const Representation p = rep_pi_cd(2, 3);
  const QScalar c(2), d(3);
  CHECK(p.act(Letter::E(1)) == e(1, 2) * (-qdiff() * (d * c * c - d) * d));
  CHECK(p.act(phi_plus(0)) == Matrix::identity(2) * c.inverse());
  CHECK(p.act(phi_minus(0)) == Matrix::identity(2) * c);
  CHECK(p.act(Letter::C(1)) == Matrix::identity(2) * -(d * (c * c - QScalar(1)) / qdiff()));
  CHECK_THROWS_AS(rep_pi_cd(1, 3), AlgebraError);
  CHECK_THROWS_AS(rep_pi_cd(2, 0), AlgebraError);
}

TEST_CASE("relations hold in the representations") {
  for (const Representation& r : {rep_rho(), rep_pi_a(1), rep_pi_a(2), rep_pi_cd(2, 3)}) {
    const Report rep = rep_check(r, 3);
    INFO(r.name(), "\n", failures(rep));
    CHECK(rep.ok());
  }
}

TEST_CASE("rep_check catches a corrupted action") {
  const Representation rho = rep_rho();
  Representation bad("bad", rho.parity(), [rho](const Letter& l) {
    Matrix m = rho.act(l);
    return l == Letter::E(0) ? m * QScalar(2) : m;
  }, rho.weight(), false);
  const Report rep = rep_check(bad, 3);
  CHECK_FALSE(rep.ok());
  bool ef_failed = false;
  for (const auto& c : rep.checks)
    if (c.name == "E-F" && !c.pass) ef_failed = true;
  CHECK(ef_failed);
}

TEST_CASE("tensor products") {
  const Representation a = rep_pi_cd(2, 3), b = rep_pi_cd(5, 7);
  const Representation ab = tensor_rep(a, b);
  CHECK(ab.dim() == 4);
  const Matrix i2 = Matrix::identity(2);
  const std::vector<int> par{0, 1};
  CHECK(ab.act(Letter::C(2)) == graded_kron(a.act(Letter::C(2)), par, i2, par) + graded_kron(i2, par, b.act(Letter::C(2)), par));
  CHECK(ab.act(Letter::E(0)) == graded_kron(i2, par, b.act(Letter::E(0)), par) +
                                    graded_kron(a.act(Letter::E(0)), par, b.act(phi_plus(0)), par));
  const Report rep = rep_check(ab, 2);
  INFO(failures(rep));
  CHECK(rep.ok());
}

TEST_CASE("series helpers") {
  auto f = f_series(2, 3, 3);
  CHECK(f[0].is_one());
  CHECK(f[1] == (q + qi) * (QScalar(Rational(1, 4)) - QScalar(1)) / (QScalar(3) * qdiff()));
  auto one = taylor(rcd_matrix(2, 3), 4, 3);
  Matrix z0 = diagonal({1, 1, 2, 2}) + graded_unit_pair(1, 2, 2, 1) * QScalar(Rational(1, 6));
  CHECK(one[0] == z0);
  auto t = t_series(3);
  CHECK(t[0] == Element(QScalar(1)));
  CHECK(t[1] == Element::letter(Letter::C(-1)) * qi - Element::letter(Letter::H(-1)) * q);
  CHECK(parse_chain("(2,3);(3,5)").size() == 2);
  CHECK_THROWS_AS(parse_chain("(2,3"), AlgebraError);
}

TEST_CASE("kappa") {
  const Representation rho = rep_rho();
  CHECK(kappa(rho, rho) == diagonal({QScalar::q_pow(-2), qi, qi, 1}));
  CHECK(kappa(rep_pi_a(1), rep_pi_cd(2, 3))(2, 2) == QScalar(2));
  CHECK_THROWS_AS(kappa(rep_pi_cd(2, 3), rep_pi_cd(5, 7)), AlgebraError);
  CHECK_NOTHROW(kappa(rep_pi_cd(2, 3), rep_pi_cd(5, 7), KappaMode::Projective));
}

TEST_CASE("factors") {
  auto minus = build_factor(RFactor::Minus, 3);
  const Element k = Element::letter(Letter::K1(1)) * Element::letter(Letter::K2(-1));
  const Element ki = Element::letter(Letter::K1(-1)) * Element::letter(Letter::K2(1));
  CHECK(minus[1] == TensorElement::pure(k * Element::letter(Letter::F(1)), ki * Element::letter(Letter::E(-1))) *
                        qdiff().inverse());
  auto zero = build_factor(RFactor::Zero, 2);
  CHECK(zero[1] == (TensorElement::pure(Element::letter(Letter::H(1)), Element::letter(Letter::C(-1))) * qi +
                    TensorElement::pure(Element::letter(Letter::C(1)), Element::letter(Letter::H(-1))) * q) *
                       qdiff());
  auto plus = build_factor(RFactor::Plus, 2);
  CHECK(plus[0] == TensorElement(QScalar(1)) +
                       TensorElement::pure(Element::letter(Letter::E(0)), Element::letter(Letter::F(0))) * (-qdiff()).inverse());
  // Factor-level evaluation agrees with the matrix-level one.
  const Representation rho = rep_rho();
  const MatrixSeries direct = evaluate_R(rho, rho, 3);
  MatrixSeries via(0, 3, Matrix(4, 4));
  via.at(0) = kappa(rho, rho);
  via = via * act_pair(rho, rho, build_factor(RFactor::Minus, 3)) * act_pair(rho, rho, build_factor(RFactor::Zero, 3)) *
        act_pair(rho, rho, build_factor(RFactor::Plus, 3));
  for (int k = 0; k <= 3; ++k) CHECK(direct[k] == via[k]);
}

TEST_CASE("R-matrix specializations") {
  const Representation rho = rep_rho();
  const MatrixSeries r = evaluate_R(rho, rho, 6);
  const MatrixSeries ps = taylor(perk_schultz_normalized(), 4, 6);
  for (int k = 0; k <= 6; ++k) CHECK(r[k] == ps[k]);
  const MatrixSeries r2 = evaluate_R(rep_pi_a(1), rep_pi_cd(2, 3), 5);
  const MatrixSeries rcd = taylor(rcd_matrix(2, 3), 4, 5);
  const auto f = f_series(2, 3, 5);
  for (int k = 0; k <= 5; ++k) {
    Matrix want(4, 4);
    for (int j = 0; j <= k; ++j) want += rcd[k - j] * f[j];
    CHECK(r2[k] == want);
  }
}

TEST_CASE("braid relation") {
  const Report good = verify_braid(true);
  INFO(failures(good));
  CHECK(good.ok());
  CHECK_FALSE(verify_braid(false).ok());
}

TEST_CASE("intertwining and quasi-triangularity") {
  const Representation rho = rep_rho();
  const std::vector<Letter> gens{Letter::K1(1), Letter::E(0), Letter::F(1), Letter::H(1), Letter::E(-1)};
  Report r = verify_intertwining(rho, rho, gens, 3);
  INFO(failures(r));
  CHECK(r.ok());
  Report r2 = verify_intertwining(rep_pi_cd(2, 3), rep_pi_cd(5, 7), {Letter::H(1), Letter::F(0)}, 3, KappaMode::Projective);
  INFO(failures(r2));
  CHECK(r2.ok());
  Report qt = verify_quasitriangular(rep_pi_a(1), rep_pi_cd(2, 3), rep_pi_cd(5, 7), 3);
  INFO(failures(qt));
  CHECK(qt.ok());
  CHECK(verify_quasitriangular(rep_pi_a(1), rep_pi_cd(2, 3), rep_pi_cd(5, 7), 0).ok());
  CHECK_FALSE(verify_quasitriangular(rep_pi_a(1), rep_pi_cd(2, 3), rep_pi_cd(5, 7), 3, true).ok());
}

TEST_CASE("transfer operators and Baxter polynomiality") {
  const Report t = transfer_check(1, {{2, 3}, {3, 5}}, 4);
  INFO(failures(t));
  CHECK(t.ok());
  for (const auto& c : t.checks)
    if (c.name == "A11-vs-T") CHECK(c.witness == "A_11(z) = 1 * T(z) on W");
  const Report b = baxter_check(1, {{2, 3}}, 5);
  INFO(failures(b));
  CHECK(b.ok());
  CHECK_FALSE(baxter_check(1, {{2, 3}}, 5, false).ok());
}
