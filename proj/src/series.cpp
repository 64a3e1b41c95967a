#include "qgl11/series.hpp"

namespace qgl11 {

LaurentSeries<QScalar> expand_rational(const std::vector<QScalar>& num, const std::vector<QScalar>& den,
                                       int order) {
  if (den.empty() || den.front().is_zero())
    throw AlgebraError("expand_rational: denominator vanishes at z = 0");
  const QScalar inv0 = den.front().inverse();
  LaurentSeries<QScalar> out(0, order);
  for (int k = 0; k <= order; ++k) {
    QScalar acc = static_cast<std::size_t>(k) < num.size() ? num[static_cast<std::size_t>(k)] : QScalar();
    for (int j = 1; j <= k && static_cast<std::size_t>(j) < den.size(); ++j)
      acc -= den[static_cast<std::size_t>(j)] * out[k - j];
    out.at(k) = acc * inv0;
  }
  return out;
}

}  // namespace qgl11
