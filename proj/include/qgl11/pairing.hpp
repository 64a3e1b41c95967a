#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qgl11/superalg.hpp"

namespace qgl11 {

enum class BKind { FNeg, H, Ccen, E };

/// Letter of the ordered set used for the PBW bases of the Borel halves.
/// FNeg(s) stands for (phi_0^+)^-1 F_s.
struct BLetter {
  BKind kind;
  int index;

  static BLetter fneg(int s);
  static BLetter h(int s);
  static BLetter ccen(int s);
  static BLetter e(int n);

  bool is_odd() const { return kind == BKind::FNeg || kind == BKind::E; }
  std::string to_string() const;

  friend bool operator==(const BLetter&, const BLetter&) = default;
  /// FNeg descending in s, then H, Ccen and E ascending.
  friend std::strong_ordering operator<=>(const BLetter& a, const BLetter& b);
};

/// Finite map BLetter -> positive multiplicity; at most 1 on odd letters.
class GammaFunction {
 public:
  GammaFunction() = default;
  GammaFunction(std::initializer_list<std::pair<const BLetter, int>> init);

  void set(const BLetter& b, int mult);
  const std::map<BLetter, int>& support() const { return f_; }
  int length() const;
  std::string to_string() const;

  friend bool operator==(const GammaFunction&, const GammaFunction&) = default;

 private:
  std::map<BLetter, int> f_;
};

/// Exponents of s_11^(0), s_22^(0) (A side) or of t_11^(0), t_22^(0) (B side).
struct CartanExp {
  int a1 = 0;
  int a2 = 0;
};

/// k1^a1 k2^a2 as an element of U.
Element cartan_element_a(const CartanExp& k);
/// t_11^b1 t_22^b2 = k1^-b1 k2^-b2 as an element of U.
Element cartan_element_b(const CartanExp& k);

/// (E(f), F(f)) in engine normal form.
std::pair<Element, Element> pbw_products(const GammaFunction& f);

QScalar letter_pair(const BLetter& b);
QScalar cartan_pair(const CartanExp& k, const CartanExp& kp);
QScalar pair_closed(const CartanExp& k, const GammaFunction& f, const CartanExp& kp, const GammaFunction& g);
/// Closed form on arbitrary elements of A and B, by expansion in the PBW bases.
QScalar pair_closed(const Element& x, const Element& y);

/// Pairing evaluated recursively from the Hopf pairing axioms and the
/// generator values. Results are memoized per instance.
class PairingOracle {
 public:
  QScalar operator()(const Element& x, const Element& y);
  QScalar pair_monomials(const Monomial& x, const Monomial& y);
  std::size_t memo_size() const { return memo_.size(); }

 private:
  QScalar compute(const Monomial& x, const Monomial& y, int depth);
  QScalar base(const Monomial& x, const Monomial& y);
  const TensorElement& delta(const Monomial& m);

  std::map<std::pair<Monomial, Monomial>, QScalar> memo_;
  std::map<Monomial, TensorElement> delta_;
};

QScalar pair_oracle(const Element& x, const Element& y);

bool in_borel_a(const Monomial& m);
bool in_borel_b(const Monomial& m);

/// Every Gamma function on letters with index <= bound and length <= max_len.
std::vector<GammaFunction> enumerate_gamma(int bound, int max_len);

}  // namespace qgl11
