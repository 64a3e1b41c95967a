#pragma once

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "qgl11/hopf.hpp"
#include "qgl11/matrix.hpp"
#include "qgl11/report.hpp"

namespace qgl11 {

/// q^{delta_i} acts on a basis vector as u * q^m.
struct Weight {
  QScalar u = QScalar(1);
  int m = 0;
};

/// num(z)/den(z) times a constant matrix.
struct RationalTerm {
  std::vector<QScalar> num;
  std::vector<QScalar> den;
  Matrix basis;
};
using RationalMatrix = std::vector<RationalTerm>;

MatrixSeries taylor(const RationalMatrix& m, std::size_t dim, int order);

class Representation {
 public:
  using Action = std::function<Matrix(const Letter&)>;
  using Currents = std::function<RationalMatrix(GaussId)>;

  Representation(std::string name, std::vector<int> parity, Action act,
                 std::vector<std::array<Weight, 2>> weight, bool a_only, Currents s_currents = {});

  const std::string& name() const { return name_; }
  std::size_t dim() const { return parity_.size(); }
  const std::vector<int>& parity() const { return parity_; }
  const std::vector<std::array<Weight, 2>>& weight() const { return weight_; }
  bool a_only() const { return a_only_; }
  /// Displayed s-current matrices, when known in closed form.
  const Currents& s_currents() const { return s_currents_; }

  Matrix act(const Letter& l) const;
  Matrix act(const Monomial& m) const;
  Matrix act(const Element& x) const;
  Matrix zero() const { return Matrix(dim(), dim()); }
  Matrix identity() const { return Matrix::identity(dim()); }

 private:
  struct Cache {
    std::mutex mu;
    std::map<Letter, Matrix> letters;
  };
  std::string name_;
  std::vector<int> parity_;
  Action act_;
  std::vector<std::array<Weight, 2>> weight_;
  bool a_only_;
  Currents s_currents_;
  std::shared_ptr<Cache> cache_;
};

Representation rep_rho();
Representation rep_pi_a(const Rational& a);
Representation rep_pi_cd(const Rational& c, const Rational& d);
Representation tensor_rep(const Representation& r1, const Representation& r2);

/// (r1 (x) r2) applied to a tensor, with Koszul signs.
Matrix act_pair(const Representation& r1, const Representation& r2, const TensorElement& x);
MatrixSeries act_pair(const Representation& r1, const Representation& r2, const LaurentSeries<TensorElement>& x);
MatrixSeries act_series(const Representation& r, const LaurentSeries<Element>& x);

Report rep_check(const Representation& r, int bound);

LaurentSeries<QScalar> f_series(const Rational& c, const Rational& d, int order);
RationalMatrix rcd_matrix(const Rational& c, const Rational& d);
LaurentSeries<Element> t_series(int order);

/// Basis matrices E_ij (x) E_kl on V (x) V with V of parity (even, odd).
Matrix graded_unit_pair(int i, int j, int k, int l);

using Chain = std::vector<std::pair<Rational, Rational>>;
Chain parse_chain(const std::string& text);

struct TransferOps {
  MatrixSeries a11, a12, a21, a22;
  std::vector<int> w_parity;
  std::vector<int> v1_count;  // number of v_1 factors of each basis tensor of W
  Representation w;
};

TransferOps transfer_ops(const Rational& a, const Chain& chain, int order);
Report transfer_check(const Rational& a, const Chain& chain, int order);
/// `normalize` = false drops the f-normalization (negative control).
Report baxter_check(const Rational& a, const Chain& chain, int order, bool normalize = true);

}  // namespace qgl11
