#pragma once

#include <vector>

#include "novbi/presentation.hpp"

namespace novbi::testing {

/// p/q as a rational scalar.
Scalar frac(long p, long q = 1);
/// Rational vector from integer entries.
Tensor ivec(std::vector<long> entries);
/// Square rational matrix from integer rows (row i = coefficients of e_i).
LinMap imat(std::vector<std::vector<long>> rows);

/// Two-dimensional commutative and cocommutative differential ASI bialgebra:
/// e1e1 = e1, e1e2 = e2e1 = e2, D = diag(0, 1), Q = diag(1, 0), delta(e2) = e2 (x) e2.
Presentation exnov1();

/// Three-dimensional Zinbiel algebra e1<>e1 = e2, e1<>e2 = 2e3, e2<>e1 = e3 with
/// D = diag(1, 2, 3) and the derivation Q(e1) = -e1 + e3, Q(e2) = -2e2, Q(e3) = -3e3.
Presentation zinb_deriv();

/// Same Zinbiel algebra and D with the admissible non-derivation
/// Q(e1) = 3e1 + e3, Q(e2) = 2e2, Q(e3) = e3.
Presentation zinb_nonderiv();

}  // namespace novbi::testing
