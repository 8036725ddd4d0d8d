#pragma once

#include "novbi/bialgebra.hpp"

namespace novbi {

/// The element a t^m of A (x) k[t, 1/t].
struct LaurentVector {
  Tensor base;
  long degree = 0;
};

/// Degrees deg_min..deg_max of t, and the value of q.
struct WindowSpec {
  long deg_min = 0, deg_max = 0;
  Scalar q;
};

/// [a t^m, b t^n] = m (a o b) t^(m+n-1) - n (b o a) t^(m+n-1).
LaurentVector affine_bracket(const LaurentVector& a, const LaurentVector& b, const Bilinear& circ);

/// Coefficient of t^j (x) t^k in the cobracket of a t^m built from the
/// Novikov coproduct Delta; zero unless j + k = m - 2.
Tensor cobracket_component(const Tensor& a, long m, long j, long k, const Coproduct& Delta);

/// Same, for the cobracket of a differential ASI bialgebra at q: Delta is
/// (id (x) (Q + qD)) delta.
Tensor cobracket_component(const Tensor& a, long m, long j, long k, const Coproduct& delta, const LinMap& D,
                           const LinMap& Q, const Scalar& q);

/// Lie bialgebra identities of (A (x) k[t, 1/t], [,]_q, delta_q) restricted to
/// a degree window. Jacobi triples whose inner brackets leave the window are
/// skipped and counted. Throws PreconditionFailed unless p is a differential
/// ASI bialgebra whose compatibility residuals vanish at w.q.
ReportBundle window_lie_bialgebra_check(const Presentation& p, const WindowSpec& w, const Bindings& bindings = {});

/// Same identities for a Novikov bialgebra (circ, Delta).
ReportBundle window_lie_bialgebra_check(const Bilinear& circ, const Coproduct& Delta, long deg_min, long deg_max);

/// x^m o x^n = (1 - q) n x^(m+n-1) and Delta(x^n) = (q - 1) sum_{i=1}^{n-1} i x^(n-1-i) (x) x^(i-1)
/// on the span of 1, x, ..., x^N. Products landing above x^N are dropped; the
/// window check never evaluates them.
InducedPair polyalg_family(unsigned N, const Scalar& q);

/// Novikov, Novikov coalgebra and Novikov bialgebra identities of the family
/// on all basis tuples of total degree at most N.
ReportBundle polyalg_window_check(unsigned N, const Scalar& q);

}  // namespace novbi
