#pragma once

#include <map>
#include <string>
#include <tuple>

#include "qgl11/series.hpp"
#include "qgl11/superalg.hpp"

namespace qgl11 {

/// Coproduct, extended to products as a superalgebra morphism.
TensorElement coproduct(const Element& x);
TensorElement coproduct(const Letter& l);

QScalar counit(const Element& x);

/// Delta (or Delta^cop) with each left factor v scaled by z^{zDeg(v)}.
/// The result is an exact Laurent polynomial; `order` only widens the
/// window it is reported on.
LaurentSeries<TensorElement> coproduct_z(const Element& x, bool flipped, int order = 0);

enum class GaussId { s11, s12, s21, s22, t11, t12, t21, t22 };
GaussId parse_gauss_id(const std::string& name);

/// Matrix entry of the Gauss-decomposed L-operators, to order N in z
/// (s side) or z^-1 (t side).
LaurentSeries<Element> gauss_current(GaussId id, int order);

/// Ordered product over n = 0..N of (1 + z^n E_n (x) F_-n / (q^-1 - q)).
LaurentSeries<TensorElement> r_plus_series(int order);

/// R_+ Delta_z(x) R_+^-1 reported exactly on [-N, N].
LaurentSeries<TensorElement> drinfeld_coproduct(const Letter& x, int order);

/// Element of U (x) U (x) U, used for coassociativity checks.
class TripleTensor {
 public:
  using Key = std::tuple<Monomial, Monomial, Monomial>;
  using Terms = std::map<Key, QScalar>;

  void add_term(const Monomial& a, const Monomial& b, const Monomial& c, const QScalar& x);
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  friend bool operator==(const TripleTensor&, const TripleTensor&) = default;

 private:
  Terms terms_;
};

TripleTensor coproduct_left(const TensorElement& x);   // (Delta (x) id)
TripleTensor coproduct_right(const TensorElement& x);  // (id (x) Delta)
Element counit_left(const TensorElement& x);            // (eps (x) id)
Element counit_right(const TensorElement& x);           // (id (x) eps)

}  // namespace qgl11
