#pragma once

#include <string>

#include "novbi/axioms.hpp"
#include "novbi/presentation.hpp"

namespace novbi {

/// Representation (V, l, r) of a Novikov algebra. Both actions are bilinear
/// maps A x V -> V: left(i, j, k) is the e_k coefficient of l(a_i) v_j.
struct RepNov {
  Bilinear left, right;
  std::size_t carrier_dim() const { return left.right_dim(); }
};

/// Representation (V, l, alpha, beta) of an admissible commutative differential algebra.
struct RepAdmDiff {
  Bilinear left;
  LinMap alpha, beta;
  std::size_t carrier_dim() const { return left.right_dim(); }
};

/// A product together with two linear maps: (A, ., D, Q) or (A, <>, D, Q).
struct DiffAlgebra {
  Bilinear op;
  LinMap D, Q;
};

/// Two products of a pre-Novikov algebra.
struct PreNovikov {
  Bilinear lhd, rhd;
};

/// Whether a construction checks its preconditions first.
enum class Verify { No, Yes };

/// p*D + q*Q in the ring of q.
LinMap combine(const LinMap& D, const LinMap& Q, const Scalar& p, const Scalar& q);

/// (x, y) -> op(f(x), g(y)).
Bilinear precompose(const Bilinear& op, const LinMap& f, const LinMap& g);

/// a o b = a . (pD + qQ)(b). With p = 1 this is the induced family.
Bilinear induce_novikov(const Bilinear& dot, const LinMap& D, const LinMap& Q, const Rational& p, const Scalar& q,
                        Verify verify = Verify::No);
Bilinear induce_novikov(const Bilinear& dot, const LinMap& D, const LinMap& Q, const Scalar& q,
                        Verify verify = Verify::No);

/// Delta_q = (id (x) (Q + qD)) delta.
Coproduct induce_nov_coalg(const Coproduct& delta, const LinMap& Q, const LinMap& D, const Scalar& q,
                           Verify verify = Verify::No);

/// a star b = a o b + b o a.
Bilinear star(const Bilinear& circ);
/// a o b = a <| b + a |> b.
Bilinear descendent_novikov(const Bilinear& lhd, const Bilinear& rhd);
/// a . b = a <> b + b <> a.
Bilinear descendent_commdiff(const Bilinear& diamond);

/// a <|_q b = (D + qQ)(b) <> a and a |>_q b = a <> (D + qQ)(b).
PreNovikov pre_novikov_from_zinbiel(const Bilinear& diamond, const LinMap& D, const LinMap& Q, const Scalar& q,
                                    Verify verify = Verify::No);

/// (A, L, R).
RepNov regular_rep(const Bilinear& circ);
/// (A, L, D, Q).
RepAdmDiff regular_rep(const Bilinear& dot, const LinMap& D, const LinMap& Q);

/// The action on V* with <phi*(a) f, v> = -<f, phi(a) v>.
Bilinear dual_action(const Bilinear& action);

/// (V*, l* + r*, -r*).
RepNov dual_rep_novikov(const RepNov& rep);
/// (V*, -l*, beta*, alpha*).
RepAdmDiff dual_rep_admdiff(const RepAdmDiff& rep);

/// l(a) = l_A(a)(alpha + q beta), r(a) = l_A((D + qQ)a).
RepNov induced_rep_q(const RepAdmDiff& rep, const LinMap& D, const LinMap& Q, const Scalar& q,
                     Verify verify = Verify::No);

/// (a + u)(b + v) = ab + l(a)v + r(b)u on A (+) V, A block first.
Bilinear semidirect_product(const Bilinear& op, const Bilinear& left, const Bilinear& right);
Bilinear semidirect_novikov(const Bilinear& circ, const RepNov& rep, Verify verify = Verify::No);
/// Product a.b + l(a)v + l(b)u with maps D + alpha and Q + beta.
DiffAlgebra semidirect_admdiff(const DiffAlgebra& alg, const RepAdmDiff& rep, Verify verify = Verify::No);

/// u <> v = l(T u) v.
Bilinear zinbiel_from_oop(const LinMap& T, const Bilinear& left);
/// u |> v = l(T u) v and u <| v = r(T v) u.
PreNovikov pre_novikov_from_oop(const LinMap& T, const RepNov& rep);

/// The infinitesimal deformation conditions for circ + q f.
ReportBundle deformation_family_check(const Bilinear& circ, const Bilinear& f);

/// Env holding an algebra on A and, optionally, a representation on V.
Env algebra_env(const std::map<std::string, Bilinear>& products, const std::map<std::string, LinMap>& maps = {});
Env rep_env(const std::map<std::string, Bilinear>& products, const std::map<std::string, LinMap>& maps,
            const std::map<std::string, Bilinear>& actions, std::size_t carrier_dim);

/// Names of the A (+) V basis: A names first, then V names.
Space direct_sum_space(const Space& a, const std::vector<std::string>& v_names);

/// Throws PreconditionFailed naming the first failing axiom.
void require(const ReportBundle& b, const std::string& what);

}  // namespace novbi
