#include "qgl11/repr.hpp"
#include "qgl11/rmatrix.hpp"

namespace qgl11 {

namespace {

MatrixSeries rescale(const MatrixSeries& s, const Rational& a) {
  MatrixSeries r = s;
  const QScalar inv = QScalar(a).inverse();
  for (int k = s.lo(); k <= s.hi(); ++k) r.at(k) = s[k] * inv.pow(k);
  return r;
}

Matrix restrict(const Matrix& m, const std::vector<std::size_t>& idx) {
  Matrix r(idx.size(), idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) r(i, j) = m(idx[i], idx[j]);
  return r;
}

std::string mode(int k) { return "z^" + std::to_string(k); }

}  // namespace

TransferOps transfer_ops(const Rational& a, const Chain& chain, int order) {
  if (chain.empty()) throw AlgebraError("transfer_ops: empty chain");
  const Representation pa = rep_pi_a(a);
  std::vector<Representation> sites;
  for (const auto& [c, d] : chain) sites.push_back(rep_pi_cd(c, d));
  std::vector<std::vector<int>> legs{pa.parity()};
  for (const auto& s : sites) legs.push_back(s.parity());

  Representation w = sites.front();
  for (std::size_t j = 1; j < sites.size(); ++j) w = tensor_rep(w, sites[j]);
  const std::size_t dw = w.dim(), n = 2 * dw;

  // (Id x Delta^(n)) R = R_{0n} ... R_{01}
  MatrixSeries full(0, order, Matrix(n, n));
  full.at(0) = Matrix::identity(n);
  for (std::size_t j = 1; j <= sites.size(); ++j) {
    const MatrixSeries rj =
        evaluate_R(pa, sites[j - 1], order).map([&](const Matrix& m) { return embed_legs(m, legs, 0, j); });
    full = rj * full;
  }

  std::vector<int> count;
  for (std::size_t k = 0; k < dw; ++k) {
    int ones = 0;
    std::size_t rem = k;
    for (std::size_t j = sites.size(); j-- > 0;) {
      if (rem % 2 == 0) ++ones;
      rem /= 2;
    }
    count.push_back(ones);
  }

  auto block = [&](std::size_t i, std::size_t j) {
    return full.map([&](const Matrix& m) {
      Matrix b(dw, dw);
      for (std::size_t k = 0; k < dw; ++k)
        for (std::size_t l = 0; l < dw; ++l) {
          const QScalar& x = m(i * dw + k, j * dw + l);
          b(k, l) = (w.parity()[k] + w.parity()[l]) * pa.parity()[j] % 2 ? -x : x;
        }
      return b;
    });
  };
  return TransferOps{rescale(block(0, 0), a), rescale(block(0, 1), a), rescale(block(1, 0), a),
                     rescale(block(1, 1), a), w.parity(), count, w};
}

Report transfer_check(const Rational& a, const Chain& chain, int order) {
  Report rep;
  const TransferOps ops = transfer_ops(a, chain, order);
  const std::size_t dw = ops.w.dim();

  if (chain.size() >= 2) {
    // Route through the tensor product module.
    const MatrixSeries direct = evaluate_R(rep_pi_a(a), ops.w, order);
    const Representation pa = rep_pi_a(a);
    std::string witness;
    const std::vector<std::vector<int>> legs{pa.parity(), ops.w.parity()};
    MatrixSeries blocks(0, order, Matrix(2 * dw, 2 * dw));
    const MatrixSeries* parts[2][2] = {{&ops.a11, &ops.a12}, {&ops.a21, &ops.a22}};
    for (int k = 0; k <= order && witness.empty(); ++k) {
      Matrix m(2 * dw, 2 * dw);
      const QScalar ak = QScalar(a).pow(k);
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
          const Matrix& b = (*parts[i][j])[k];
          for (std::size_t r = 0; r < dw; ++r)
            for (std::size_t c = 0; c < dw; ++c) {
              const QScalar x = b(r, c) * ak;
              m(i * dw + r, j * dw + c) = (ops.w_parity[r] + ops.w_parity[c]) * pa.parity()[j] % 2 ? -x : x;
            }
        }
      if (!(m == direct[k])) witness = "ordered product vs tensor module route differ at " + mode(k);
    }
    rep.add("routes-agree", witness.empty(), witness);
  }

  std::string stab;
  for (const MatrixSeries* s : {&ops.a11, &ops.a22})
    for (int k = 0; k <= order && stab.empty(); ++k)
      for (std::size_t r = 0; r < dw; ++r)
        for (std::size_t c = 0; c < dw; ++c)
          if (ops.v1_count[r] != ops.v1_count[c] && !(*s)[k](r, c).is_zero())
            stab = "A_ii leaks between W_m at " + mode(k);
  rep.add("W_m-stability", stab.empty(), stab);

  // A_11 against the Cartan series T(z) acting on W.
  const MatrixSeries t = act_series(ops.w, t_series(order));
  const Matrix& a0 = ops.a11[0];
  QScalar ratio = a0(0, 0) / t[0](0, 0);
  std::string witness;
  for (int k = 0; k <= order && witness.empty(); ++k)
    if (!(ops.a11[k] == t[k] * ratio)) witness = "A_11 is not a scalar multiple of T(z) at " + mode(k);
  rep.add("A11-vs-T", witness.empty(), witness.empty() ? "A_11(z) = " + ratio.to_string() + " * T(z) on W" : witness);
  return rep;
}

Report baxter_check(const Rational& a, const Chain& chain, int order, bool normalize) {
  Report rep;
  const TransferOps ops = transfer_ops(a, chain, order);
  LaurentSeries<QScalar> p = LaurentSeries<QScalar>::polynomial(0, {QScalar(1)}, order);
  for (const auto& [c, d] : chain) {
    p = p * LaurentSeries<QScalar>::polynomial(0, {QScalar(1), -QScalar(d).inverse()}, order);
    if (normalize) p = p * series_invert(f_series(c, d, order), order);
  }
  const std::size_t n = chain.size();
  for (std::size_t m = 0; m <= n; ++m) {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < ops.v1_count.size(); ++k)
      if (ops.v1_count[k] == static_cast<int>(m)) idx.push_back(k);
    for (int i = 1; i <= 2; ++i) {
      const MatrixSeries& aii = i == 1 ? ops.a11 : ops.a22;
      MatrixSeries block = aii.map([&](const Matrix& x) { return restrict(x, idx); });
      MatrixSeries scaled(0, order, Matrix(idx.size(), idx.size()));
      for (int k = 0; k <= order; ++k)
        for (int j = 0; j <= k; ++j)
          if (!p[j].is_zero()) scaled.at(k) += block[k - j] * p[j];
      std::string witness;
      for (int k = static_cast<int>(m) + 1; k <= order && witness.empty(); ++k)
        if (!scaled[k].is_zero()) witness = "nonzero coefficient at " + mode(k);
      rep.add("A" + std::to_string(i) + std::to_string(i) + " on W_" + std::to_string(m) + " degree <= " +
                  std::to_string(m),
              witness.empty(), witness);
    }
  }
  std::string stab;
  for (const MatrixSeries* s : {&ops.a11, &ops.a22})
    for (int k = 0; k <= order && stab.empty(); ++k)
      for (std::size_t r = 0; r < ops.v1_count.size(); ++r)
        for (std::size_t c = 0; c < ops.v1_count.size(); ++c)
          if (ops.v1_count[r] != ops.v1_count[c] && !(*s)[k](r, c).is_zero()) stab = "leak at " + mode(k);
  rep.add("W_m-stability", stab.empty(), stab);
  return rep;
}

}  // namespace qgl11
