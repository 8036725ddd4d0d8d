#pragma once

#include <optional>
#include <string>
#include <vector>

#include "novbi/constructions.hpp"

namespace novbi {

/// A presentation on A (+) A*: the first dim_a basis vectors span A.
struct SplitPresentation {
  Presentation total;
  std::size_t dim_a = 0;
};

/// ASI_1/2, the admissible quadruple, COASSOC, COCOMM, CODERIV for Q and CO_ADMISS.
ReportBundle check_diff_asi_bialgebra(const Presentation& p, const Bindings& bindings = {});

/// NOV_LSYM, NOV_RCOMM, NOV_COALG_1/2 and NOV_BIALG_1..3 for (circ, Delta).
ReportBundle check_novikov_bialgebra(const Bilinear& circ, const Coproduct& Delta);

/// BIALG_Q_1..3 of a differential ASI bialgebra at the given q.
ReportBundle bialg_q_residuals(const Presentation& p, const Scalar& q, const Bindings& bindings = {});

/// The induced pair (circ_q, Delta_q) of a differential ASI bialgebra.
struct InducedPair {
  Bilinear circ;
  Coproduct Delta;
};
InducedPair induce_pair(const Presentation& p, const Scalar& q, const Bindings& bindings = {});

/// The q at which the induced pair is a Novikov bialgebra.
QLocus novikov_bialgebra_locus(const Presentation& p, const Bindings& bindings = {});

/// The hyperbolic pairing B(a + f, b + g) = f(b) + g(a) on A (+) A*.
Tensor standard_form(std::size_t dim_a);

/// The map M^ with B(M a, b) = B(a, M^ b).
LinMap adjoint_map(const LinMap& m, const Tensor& form);

/// Commutative Frobenius double of (A, ., delta, D, Q): products of A and of
/// the dual of delta, mixed products a.f = sum f(a1) a2 - L*(a) f, maps
/// D + Q* and Q + D*, and the standard form under the name "B".
SplitPresentation double_construction(const Presentation& p, const Bindings& bindings = {},
                                      Verify verify = Verify::No);

/// The Novikov algebra on A (+) A* for which A and A* are subalgebras and the
/// standard form is invariant, given (A, circ, Delta).
Bilinear novikov_double(const Bilinear& circ, const Coproduct& Delta);

/// (a + f)(b + g) = ab + l1(a)g + r1(b)f + fg + l2(f)b + r2(g)a on A (+) B,
/// where l1, r1 are actions of A on B and l2, r2 actions of B on A.
Bilinear matched_pair(const Bilinear& op_a, const Bilinear& l1, const Bilinear& r1, const Bilinear& op_b,
                      const Bilinear& l2, const Bilinear& r2);

/// Block closure of A and A*, the Novikov axioms, and invariance of the standard form.
ReportBundle check_manin_triple(const SplitPresentation& sp, const Bilinear& circ);

/// FORM_SYM, FORM_NONDEG and BILIN_INV_NOV.
ReportBundle quadratic_novikov_check(const Bilinear& circ, const Tensor& form);

}  // namespace novbi
