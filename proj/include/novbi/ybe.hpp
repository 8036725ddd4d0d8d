#pragma once

#include <vector>

#include "novbi/bialgebra.hpp"

namespace novbi {

/// r13.r12 + r13.r23 - r12.r23.
Tensor aybe_residual(const Tensor& r, const Bilinear& dot);
/// r13 o r23 + r12 star r23 + r13 o r12.
Tensor nybe_residual(const Tensor& r, const Bilinear& circ);

/// Both conditions (D (x) id - id (x) Q)r = 0 and (id (x) D - Q (x) id)r = 0.
AxiomReport r_admissibility(const Tensor& r, const LinMap& D, const LinMap& Q);

bool is_antisymmetric(const Tensor& r);

/// delta_r(a) = (id (x) L(a) - L(a) (x) id) r.
Coproduct delta_r(const Tensor& r, const Bilinear& dot);
/// Delta_r(a) = (L(a) (x) id + id (x) L_star(a)) r.
Coproduct Delta_r(const Tensor& r, const Bilinear& circ);

/// T(u) o T(v) = T(l(Tu)v + r(Tv)u) for T: V -> A.
AxiomReport oop_check(const LinMap& T, const Bilinear& circ, const RepNov& rep);
/// T(u).T(v) = T(l(Tu)v + l(Tv)u), D T = T alpha and Q T = T beta.
ReportBundle oop_check(const LinMap& T, const DiffAlgebra& alg, const RepAdmDiff& rep);

/// T^r: A* -> A with <f, T^r(g)> = <f (x) g, r>.
LinMap T_from_r(const Tensor& r);
/// r_T = sum_j T(v_j) (x) v_j* on A (+) V*, A block first.
Tensor r_T(const LinMap& T);
/// r_T - tau r_T.
Tensor r_from_T(const LinMap& T);
/// sum_i e_i (x) e_i* - e_i* (x) e_i on A (+) A*.
Tensor canonical_r(std::size_t dim_a);

/// The commutative and cocommutative differential ASI bialgebra
/// (A x_{-L*} A*, ., delta, D + Q*, Q + D*) of an admissible differential
/// Zinbiel algebra, with delta the coboundary of minus the canonical r. The
/// presentation carries product "dot", coproduct "delta", maps "D", "Q", the
/// standard form "B" and the canonical r-element "r".
SplitPresentation zinbiel_double(const DiffAlgebra& zinbiel, const Space& space, Verify verify = Verify::No);

/// The Novikov bialgebra A x_{L*(|>) + R*(<|), -R*(<|)} A* with the coboundary
/// coproduct of the canonical r.
InducedPair pre_novikov_double(const PreNovikov& pn);

/// For each point of the locus: whether the pair induced from the Zinbiel
/// double agrees with the pre-Novikov double there.
struct LocusPoint {
  Rational q;
  bool double_induced = false;
};
std::vector<LocusPoint> annotate_zinbiel_locus(const DiffAlgebra& zinbiel, const QLocus& locus);

}  // namespace novbi
