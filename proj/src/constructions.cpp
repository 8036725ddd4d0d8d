#include "novbi/constructions.hpp"

#include "novbi/error.hpp"

namespace novbi {

namespace {

Ring join(Ring a, Ring b) { return (a == Ring::Poly || b == Ring::Poly) ? Ring::Poly : Ring::Rational; }

void require_square(const LinMap& m, std::size_t n, const char* what) {
  if (m.dom() != n || m.cod() != n) throw DimensionMismatch(std::string(what) + " has the wrong size");
}

}  // namespace

void require(const ReportBundle& b, const std::string& what) {
  for (const auto& r : b.reports)
    if (!r.holds()) throw PreconditionFailed(what + ": " + r.axiom_id + " does not hold");
}

Env algebra_env(const std::map<std::string, Bilinear>& products, const std::map<std::string, LinMap>& maps) {
  Env env;
  if (!products.empty()) env.spaces["A"] = products.begin()->second.out_dim();
  else if (!maps.empty()) env.spaces["A"] = maps.begin()->second.dom();
  env.bilinears = products;
  env.maps = maps;
  return env;
}

Env rep_env(const std::map<std::string, Bilinear>& products, const std::map<std::string, LinMap>& maps,
            const std::map<std::string, Bilinear>& actions, std::size_t carrier_dim) {
  Env env = algebra_env(products, maps);
  env.spaces["V"] = carrier_dim;
  for (const auto& [k, v] : actions) env.bilinears.insert_or_assign(k, v);
  return env;
}

Space direct_sum_space(const Space& a, const std::vector<std::string>& v_names) {
  Space s = a;
  s.names.insert(s.names.end(), v_names.begin(), v_names.end());
  s.validate();
  return s;
}

LinMap combine(const LinMap& D, const LinMap& Q, const Scalar& p, const Scalar& q) {
  if (D.dom() != Q.dom() || D.cod() != Q.cod()) throw DimensionMismatch("combined maps differ in shape");
  Ring r = join(join(D.ring(), Q.ring()), join(p.ring(), q.ring()));
  return D.in_ring(r).scaled(p.in_ring(r)) + Q.in_ring(r).scaled(q.in_ring(r));
}

Bilinear precompose(const Bilinear& op, const LinMap& f, const LinMap& g) {
  if (f.cod() != op.left_dim() || g.cod() != op.right_dim()) throw DimensionMismatch("precompose: shapes differ");
  Ring r = join(op.ring(), join(f.ring(), g.ring()));
  Bilinear o = op.in_ring(r);
  LinMap fr = f.in_ring(r), gr = g.in_ring(r);
  Bilinear out(f.dom(), g.dom(), op.out_dim(), r);
  for (std::size_t i = 0; i < f.dom(); ++i)
    for (std::size_t j = 0; j < g.dom(); ++j)
      for (std::size_t a = 0; a < op.left_dim(); ++a) {
        if (fr(a, i).is_zero()) continue;
        for (std::size_t b = 0; b < op.right_dim(); ++b) {
          if (gr(b, j).is_zero()) continue;
          Scalar c = fr(a, i) * gr(b, j);
          for (std::size_t k = 0; k < op.out_dim(); ++k)
            if (!o(a, b, k).is_zero()) out.set(i, j, k, out(i, j, k) + c * o(a, b, k));
        }
      }
  return out;
}

Bilinear induce_novikov(const Bilinear& dot, const LinMap& D, const LinMap& Q, const Rational& p, const Scalar& q,
                        Verify verify) {
  std::size_t n = dot.out_dim();
  require_square(D, n, "D");
  require_square(Q, n, "Q");
  if (verify == Verify::Yes) {
    Env env = algebra_env({{"dot", dot}}, {{"D", D}, {"Q", Q}});
    require(check_axioms("induce", {"ADMISS"}, env), "induce_novikov");
  }
  LinMap m = combine(D, Q, Scalar(p), q);
  return precompose(dot, LinMap::identity(n, m.ring()), m);
}

Bilinear induce_novikov(const Bilinear& dot, const LinMap& D, const LinMap& Q, const Scalar& q, Verify verify) {
  return induce_novikov(dot, D, Q, Rational(1), q, verify);
}

Coproduct induce_nov_coalg(const Coproduct& delta, const LinMap& Q, const LinMap& D, const Scalar& q, Verify verify) {
  std::size_t n = delta.in_dim();
  require_square(D, n, "D");
  require_square(Q, n, "Q");
  if (verify == Verify::Yes) {
    Env env = algebra_env({}, {{"D", D}, {"Q", Q}});
    env.coproducts["delta"] = delta;
    require(check_axioms("induce", {"CO_ADMISS"}, env), "induce_nov_coalg");
  }
  LinMap m = combine(Q, D, Scalar(1), q);
  Ring r = join(delta.ring(), m.ring());
  Coproduct d = delta.in_ring(r);
  Coproduct out(n, delta.out1_dim(), delta.out2_dim(), r);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < d.out1_dim(); ++j)
      for (std::size_t k = 0; k < d.out2_dim(); ++k) {
        if (d(i, j, k).is_zero()) continue;
        for (std::size_t l = 0; l < d.out2_dim(); ++l)
          if (!m(l, k).is_zero()) out.set(i, j, l, out(i, j, l) + d(i, j, k) * m(l, k));
      }
  return out;
}

Bilinear star(const Bilinear& circ) { return circ + circ.opposite(); }

Bilinear descendent_novikov(const Bilinear& lhd, const Bilinear& rhd) { return lhd.in_ring(join(lhd.ring(), rhd.ring())) + rhd.in_ring(join(lhd.ring(), rhd.ring())); }

Bilinear descendent_commdiff(const Bilinear& diamond) { return star(diamond); }

PreNovikov pre_novikov_from_zinbiel(const Bilinear& diamond, const LinMap& D, const LinMap& Q, const Scalar& q,
                                    Verify verify) {
  std::size_t n = diamond.out_dim();
  require_square(D, n, "D");
  require_square(Q, n, "Q");
  if (verify == Verify::Yes) {
    Env env = algebra_env({{"diamond", diamond}}, {{"D", D}, {"Q", Q}});
    require(check_axioms("zinbiel", {"ZINBIEL", "ZINB_ADMISS"}, env), "pre_novikov_from_zinbiel");
    env.bindings["dot"] = "diamond";
    require(check_axioms("zinbiel", {"DERIV"}, env), "pre_novikov_from_zinbiel");
  }
  LinMap m = combine(D, Q, Scalar(1), q);
  LinMap id = LinMap::identity(n, m.ring());
  PreNovikov out;
  out.rhd = precompose(diamond, id, m);
  out.lhd = precompose(diamond.opposite(), id, m);
  return out;
}

RepNov regular_rep(const Bilinear& circ) { return RepNov{circ, circ.opposite()}; }

RepAdmDiff regular_rep(const Bilinear& dot, const LinMap& D, const LinMap& Q) { return RepAdmDiff{dot, D, Q}; }

Bilinear dual_action(const Bilinear& action) {
  Bilinear out(action.left_dim(), action.out_dim(), action.right_dim(), action.ring());
  for (std::size_t i = 0; i < action.left_dim(); ++i)
    for (std::size_t j = 0; j < action.right_dim(); ++j)
      for (std::size_t k = 0; k < action.out_dim(); ++k)
        if (!action(i, j, k).is_zero()) out.set(i, k, j, -action(i, j, k));
  return out;
}

RepNov dual_rep_novikov(const RepNov& rep) {
  Bilinear r = dual_action(rep.right);
  return RepNov{dual_action(rep.left) + r, Bilinear(-r.constants())};
}

RepAdmDiff dual_rep_admdiff(const RepAdmDiff& rep) {
  return RepAdmDiff{Bilinear(-dual_action(rep.left).constants()), rep.beta.transpose(), rep.alpha.transpose()};
}

RepNov induced_rep_q(const RepAdmDiff& rep, const LinMap& D, const LinMap& Q, const Scalar& q, Verify verify) {
  std::size_t n = rep.left.left_dim(), v = rep.carrier_dim();
  require_square(D, n, "D");
  require_square(Q, n, "Q");
  require_square(rep.alpha, v, "alpha");
  require_square(rep.beta, v, "beta");
  if (verify == Verify::Yes) {
    Env env = rep_env({}, {{"D", D}, {"Q", Q}, {"alpha", rep.alpha}, {"beta", rep.beta}}, {{"lact", rep.left}}, v);
    env.spaces["A"] = n;
    require(check_axioms("rep", {"REP_DIFF", "REP_ADM"}, env), "induced_rep_q");
  }
  LinMap ab = combine(rep.alpha, rep.beta, Scalar(1), q);
  LinMap dq = combine(D, Q, Scalar(1), q);
  RepNov out;
  out.left = precompose(rep.left, LinMap::identity(n, ab.ring()), ab);
  out.right = precompose(rep.left, dq, LinMap::identity(v, dq.ring()));
  return out;
}

Bilinear semidirect_product(const Bilinear& op, const Bilinear& left, const Bilinear& right) {
  std::size_t n = op.out_dim(), v = left.right_dim();
  if (left.left_dim() != n || right.left_dim() != n || right.right_dim() != v || left.out_dim() != v ||
      right.out_dim() != v)
    throw DimensionMismatch("semidirect product: action shapes differ");
  Ring r = join(op.ring(), join(left.ring(), right.ring()));
  Bilinear out(n + v, r);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out.set(i, j, k, op(i, j, k).in_ring(r));
    for (std::size_t j = 0; j < v; ++j)
      for (std::size_t k = 0; k < v; ++k) {
        out.set(i, n + j, n + k, left(i, j, k).in_ring(r));   // a . v = l(a)v
        out.set(n + j, i, n + k, right(i, j, k).in_ring(r));  // u . b = r(b)u
      }
  }
  return out;
}

Bilinear semidirect_novikov(const Bilinear& circ, const RepNov& rep, Verify verify) {
  if (verify == Verify::Yes) {
    Env env = rep_env({{"circ", circ}}, {}, {{"lact", rep.left}, {"ract", rep.right}}, rep.carrier_dim());
    require(check_axioms("rep", {"REP_NOV_1", "REP_NOV_2", "REP_NOV_3", "REP_NOV_4"}, env), "semidirect_novikov");
  }
  return semidirect_product(circ, rep.left, rep.right);
}

DiffAlgebra semidirect_admdiff(const DiffAlgebra& alg, const RepAdmDiff& rep, Verify verify) {
  if (verify == Verify::Yes) {
    Env env = rep_env({{"dot", alg.op}}, {{"D", alg.D}, {"Q", alg.Q}, {"alpha", rep.alpha}, {"beta", rep.beta}},
                      {{"lact", rep.left}}, rep.carrier_dim());
    require(check_axioms("rep", {"REP_ASSOC", "REP_DIFF", "REP_ADM"}, env), "semidirect_admdiff");
  }
  DiffAlgebra out;
  out.op = semidirect_product(alg.op, rep.left, rep.left);
  out.D = direct_sum(alg.D, rep.alpha);
  out.Q = direct_sum(alg.Q, rep.beta);
  return out;
}

Bilinear zinbiel_from_oop(const LinMap& T, const Bilinear& left) {
  std::size_t v = left.right_dim();
  return precompose(left, T, LinMap::identity(v, T.ring()));
}

PreNovikov pre_novikov_from_oop(const LinMap& T, const RepNov& rep) {
  std::size_t v = rep.carrier_dim();
  LinMap id = LinMap::identity(v, T.ring());
  PreNovikov out;
  out.rhd = precompose(rep.left, T, id);
  // u <| v = r(T v) u: swap the arguments of r(T(.))(.).
  out.lhd = precompose(rep.right, T, id).opposite();
  return out;
}

ReportBundle deformation_family_check(const Bilinear& circ, const Bilinear& f) {
  Env env = algebra_env({{"circ", circ}, {"f", f}});
  return check_axioms("deformation", {"DEFORM_1", "DEFORM_2", "DEFORM_3", "DEFORM_4"}, env);
}

}  // namespace novbi
