#include "novbi/ybe.hpp"

#include "novbi/error.hpp"

namespace novbi {

namespace {

Tensor residual_of(const std::string& id, const Env& env) {
  AxiomReport rep = check_axiom(id, env);
  return rep.residuals.front();
}

Env r_env(const Tensor& r, const std::string& role, const Bilinear& op) {
  Env env = algebra_env({{role, op}});
  env.tensors["r"] = r;
  return env;
}

void require_square_r(const Tensor& r, std::size_t n) {
  if (r.order() != 2 || r.dims()[0] != n || r.dims()[1] != n) throw DimensionMismatch("r has the wrong shape");
}

}  // namespace

Tensor aybe_residual(const Tensor& r, const Bilinear& dot) {
  require_square_r(r, dot.out_dim());
  return residual_of("AYBE", r_env(r, "dot", dot));
}

Tensor nybe_residual(const Tensor& r, const Bilinear& circ) {
  require_square_r(r, circ.out_dim());
  return residual_of("NYBE", r_env(r, "circ", circ));
}

AxiomReport r_admissibility(const Tensor& r, const LinMap& D, const LinMap& Q) {
  require_square_r(r, D.dom());
  Env env = algebra_env({}, {{"D", D}, {"Q", Q}});
  env.tensors["r"] = r;
  return check_axiom("R_ADMISS", env);
}

bool is_antisymmetric(const Tensor& r) { return (r + r.flipped()).is_zero(); }

Coproduct delta_r(const Tensor& r, const Bilinear& dot) {
  std::size_t n = dot.out_dim();
  require_square_r(r, n);
  Env env = r_env(r, "dot", dot);
  using namespace expr;
  Expr x = in(0), rr = constant("r");
  Expr e = lmul("dot", x, rr, 1) - lmul("dot", x, rr, 0);
  std::vector<std::string> spaces{"A"};
  Ring ring = env.ring();
  Coproduct out(n, ring);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> t{i};
    out.set_image(i, evaluate(e, env, t, spaces, Scalar(0)));
  }
  return out;
}

Coproduct Delta_r(const Tensor& r, const Bilinear& circ) {
  std::size_t n = circ.out_dim();
  require_square_r(r, n);
  Env env = r_env(r, "circ", circ);
  using namespace expr;
  Expr x = in(0), rr = constant("r");
  Expr e = lmul("circ", x, rr, 0) + lmul("circ", x, rr, 1) + rmul("circ", rr, 1, x);
  std::vector<std::string> spaces{"A"};
  Coproduct out(n, env.ring());
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> t{i};
    out.set_image(i, evaluate(e, env, t, spaces, Scalar(0)));
  }
  return out;
}

AxiomReport oop_check(const LinMap& T, const Bilinear& circ, const RepNov& rep) {
  Env env = rep_env({{"circ", circ}}, {{"T", T}}, {{"lact", rep.left}, {"ract", rep.right}}, rep.carrier_dim());
  return check_axiom("OOP_NOV", env);
}

ReportBundle oop_check(const LinMap& T, const DiffAlgebra& alg, const RepAdmDiff& rep) {
  Env env = rep_env({{"dot", alg.op}}, {{"T", T}, {"D", alg.D}, {"Q", alg.Q}, {"alpha", rep.alpha}, {"beta", rep.beta}},
                    {{"lact", rep.left}}, rep.carrier_dim());
  return check_axioms("O-operator", {"OOP_COMM", "OOP_D", "OOP_Q"}, env);
}

LinMap T_from_r(const Tensor& r) {
  if (r.order() != 2) throw DimensionMismatch("r must be an order-2 tensor");
  // T(e_j*) = sum_i r(i, j) e_i: the matrix of T is r itself.
  return LinMap(r);
}

Tensor r_T(const LinMap& T) {
  std::size_t n = T.cod(), v = T.dom();
  Tensor out({n + v, n + v}, T.ring());
  for (std::size_t j = 0; j < v; ++j)
    for (std::size_t i = 0; i < n; ++i)
      if (!T(i, j).is_zero()) out.set({i, n + j}, T(i, j));
  return out;
}

Tensor r_from_T(const LinMap& T) {
  Tensor r = r_T(T);
  return r - r.flipped();
}

Tensor canonical_r(std::size_t dim_a) {
  if (dim_a == 0) throw DimensionMismatch("canonical_r needs a nonzero dimension");
  return r_from_T(LinMap::identity(dim_a));
}

SplitPresentation zinbiel_double(const DiffAlgebra& z, const Space& space, Verify verify) {
  std::size_t n = z.op.out_dim();
  if (space.dim() != n) throw DimensionMismatch("zinbiel_double: space and product differ in dimension");
  if (verify == Verify::Yes) {
    Env env = algebra_env({{"diamond", z.op}}, {{"D", z.D}, {"Q", z.Q}});
    require(check_axioms("zinbiel", {"ZINBIEL", "ZINB_ADMISS"}, env), "zinbiel_double");
    env.bindings["dot"] = "diamond";
    require(check_axioms("zinbiel", {"DERIV"}, env), "zinbiel_double");
  }
  RepAdmDiff dual = dual_rep_admdiff(RepAdmDiff{z.op, z.D, z.Q});
  DiffAlgebra total = semidirect_admdiff(DiffAlgebra{descendent_commdiff(z.op), z.D, z.Q}, dual);
  Tensor r = canonical_r(n).in_ring(total.op.ring());

  SplitPresentation sp;
  sp.dim_a = n;
  sp.total.space = direct_sum_space(space, dual_names(space));
  sp.total.ring = total.op.ring();
  sp.total.products["dot"] = total.op;
  sp.total.coproducts["delta"] = delta_r(-r, total.op);
  sp.total.maps["D"] = total.D;
  sp.total.maps["Q"] = total.Q;
  sp.total.forms["B"] = standard_form(n);
  sp.total.relements["r"] = r;
  sp.total = sp.total.in_ring(sp.total.ring);
  return sp;
}

InducedPair pre_novikov_double(const PreNovikov& pn) {
  std::size_t n = pn.lhd.out_dim();
  Bilinear circ = descendent_novikov(pn.lhd, pn.rhd);
  // (V*, L*(|>) + R*(<|), -R*(<|)) with the dual sign convention.
  Bilinear l = dual_action(pn.rhd) + dual_action(pn.lhd.opposite());
  Bilinear r = Bilinear(-dual_action(pn.lhd.opposite()).constants());
  InducedPair out;
  out.circ = semidirect_product(circ, l, r);
  out.Delta = Delta_r(canonical_r(n).in_ring(out.circ.ring()), out.circ);
  return out;
}

std::vector<LocusPoint> annotate_zinbiel_locus(const DiffAlgebra& z, const QLocus& locus) {
  std::vector<LocusPoint> out;
  if (locus.kind != QLocus::Kind::FiniteSet) return out;
  SplitPresentation sp = zinbiel_double(z, numbered_space(z.op.out_dim()));
  for (const auto& q0 : locus.points) {
    Scalar q(q0);
    InducedPair induced = induce_pair(sp.total, q);
    InducedPair direct = pre_novikov_double(pre_novikov_from_zinbiel(z.op, z.D, z.Q, q));
    out.push_back({q0, induced.circ == direct.circ && induced.Delta == direct.Delta});
  }
  return out;
}

}  // namespace novbi
