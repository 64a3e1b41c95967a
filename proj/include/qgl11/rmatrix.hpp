#pragma once

#include <string>
#include <vector>

#include "qgl11/matrix.hpp"
#include "qgl11/report.hpp"
#include "qgl11/repr.hpp"

namespace qgl11 {

enum class RFactor { Minus, Zero, Plus };

/// One of the three z-graded factors of the universal R-matrix, window [0, N].
LaurentSeries<TensorElement> build_factor(RFactor which, int order);

/// Strict: the exact Cartan factor, refusing pairs whose logarithmic
/// prefactors couple. Projective: drops the global transcendental scalar
/// q^{sum M l l'} in that case, which needs uniform prefactors on each side.
enum class KappaMode { Strict, Projective };

Matrix kappa(const Representation& left, const Representation& right, KappaMode mode = KappaMode::Strict);

MatrixSeries evaluate_R(const Representation& left, const Representation& right, int order,
                        KappaMode mode = KappaMode::Strict);

/// R(z,w) with z, w the given MPoly variables (0, 1 or 2).
PolyMatrix perk_schultz(int zvar, int wvar);
/// R(z,1)/(q^-1 z - q) as a rational matrix in z.
RationalMatrix perk_schultz_normalized();

/// Signed flip on V (x) V; `koszul` = false drops the sign (negative control).
Matrix super_flip(bool koszul = true);
Report verify_braid(bool koszul = true);

/// Embeds an even operator on legs (i, j), i < j, of a multi-leg space.
Matrix embed_legs(const Matrix& m, const std::vector<std::vector<int>>& legs, std::size_t i, std::size_t j);

Report verify_intertwining(const Representation& left, const Representation& right, const std::vector<Letter>& gens,
                           int order, KappaMode mode = KappaMode::Strict);
/// Both quasi-triangularity displays on A (x) B (x) C. `reversed` swaps the
/// order of the right-hand products (negative control).
Report verify_quasitriangular(const Representation& a, const Representation& b, const Representation& c, int order,
                              bool reversed = false);

}  // namespace qgl11
