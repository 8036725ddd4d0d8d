#include "novbi/bialgebra.hpp"

#include "novbi/error.hpp"
#include "novbi/linalg.hpp"

namespace novbi {

namespace {

Ring join(Ring a, Ring b) { return (a == Ring::Poly || b == Ring::Poly) ? Ring::Poly : Ring::Rational; }

// The transpose action: <act^T(a) f, v> = <f, act(a) v>.
Bilinear transpose_action(const Bilinear& act) { return Bilinear(-dual_action(act).constants()); }

AxiomReport block_closure(const std::string& id, const Bilinear& circ, std::size_t lo, std::size_t hi) {
  AxiomReport rep;
  rep.axiom_id = id;
  rep.ring = circ.ring();
  rep.input_spaces = {"A", "A"};
  std::size_t n = circ.out_dim();
  Tensor res({n, n, n}, rep.ring);
  for (std::size_t i = lo; i < hi; ++i)
    for (std::size_t j = lo; j < hi; ++j) {
      ++rep.tuples_checked;
      Tensor out({n}, rep.ring);
      for (std::size_t k = 0; k < n; ++k) {
        if (k >= lo && k < hi) continue;
        const Scalar& c = circ(i, j, k);
        if (c.is_zero()) continue;
        out.set({k}, c);
        res.set({i, j, k}, c);
      }
      if (!rep.witness && !out.is_zero()) rep.witness = Witness{{i, j}, 0, out};
    }
  rep.residuals.push_back(res);
  finalize_report(rep);
  return rep;
}

}  // namespace

ReportBundle check_diff_asi_bialgebra(const Presentation& p, const Bindings& bindings) {
  return check_axioms("differential ASI bialgebra",
                      {"ASI_1", "ASI_2", "COMM", "ASSOC", "DERIV", "ADMISS", "COASSOC", "COCOMM", "CODERIV", "CO_ADMISS"},
                      make_env(p, bindings));
}

ReportBundle check_novikov_bialgebra(const Bilinear& circ, const Coproduct& Delta) {
  Env env = algebra_env({{"circ", circ}});
  env.coproducts["Delta"] = Delta;
  return check_axioms("Novikov bialgebra",
                      {"NOV_LSYM", "NOV_RCOMM", "NOV_COALG_1", "NOV_COALG_2", "NOV_BIALG_1", "NOV_BIALG_2", "NOV_BIALG_3"},
                      env);
}

ReportBundle bialg_q_residuals(const Presentation& p, const Scalar& q, const Bindings& bindings) {
  CheckOptions opt;
  opt.q = q;
  return check_axioms("compatibility residuals", {"BIALG_Q_1", "BIALG_Q_2", "BIALG_Q_3"}, make_env(p, bindings), opt);
}

InducedPair induce_pair(const Presentation& p, const Scalar& q, const Bindings& bindings) {
  Env env = make_env(p, bindings);
  InducedPair out;
  out.circ = induce_novikov(env.bilinear("dot"), env.map("D"), env.map("Q"), q);
  out.Delta = induce_nov_coalg(env.coproduct("delta"), env.map("Q"), env.map("D"), q);
  return out;
}

QLocus novikov_bialgebra_locus(const Presentation& p, const Bindings& bindings) {
  InducedPair pair = induce_pair(p, Scalar::symbol(), bindings);
  return check_novikov_bialgebra(pair.circ, pair.Delta).locus();
}

Tensor standard_form(std::size_t dim_a) {
  Tensor b({2 * dim_a, 2 * dim_a});
  for (std::size_t i = 0; i < dim_a; ++i) {
    b.set({i, dim_a + i}, 1);
    b.set({dim_a + i, i}, 1);
  }
  return b;
}

LinMap adjoint_map(const LinMap& m, const Tensor& form) {
  if (form.order() != 2 || form.dims()[0] != m.dom() || form.dims()[1] != m.dom() || m.dom() != m.cod())
    throw DimensionMismatch("adjoint_map: form and map sizes differ");
  LinMap g(form);
  return inverse(g).compose(m.transpose().compose(g));
}

Bilinear matched_pair(const Bilinear& op_a, const Bilinear& l1, const Bilinear& r1, const Bilinear& op_b,
                      const Bilinear& l2, const Bilinear& r2) {
  std::size_t n = op_a.out_dim(), m = op_b.out_dim();
  Ring r = join(join(op_a.ring(), op_b.ring()), join(join(l1.ring(), r1.ring()), join(l2.ring(), r2.ring())));
  Bilinear out(n + m, r);
  auto add = [&](std::size_t i, std::size_t j, std::size_t k, const Scalar& c) {
    if (!c.is_zero()) out.set(i, j, k, out(i, j, k) + c.in_ring(r));
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) add(i, j, k, op_a(i, j, k));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) add(n + i, n + j, n + k, op_b(i, j, k));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t f = 0; f < m; ++f) {
      // a . f = l1(a) f + r2(f) a
      for (std::size_t k = 0; k < m; ++k) add(a, n + f, n + k, l1(a, f, k));
      for (std::size_t k = 0; k < n; ++k) add(a, n + f, k, r2(f, a, k));
      // f . a = r1(a) f + l2(f) a
      for (std::size_t k = 0; k < m; ++k) add(n + f, a, n + k, r1(a, f, k));
      for (std::size_t k = 0; k < n; ++k) add(n + f, a, k, l2(f, a, k));
    }
  return out;
}

SplitPresentation double_construction(const Presentation& p, const Bindings& bindings, Verify verify) {
  if (verify == Verify::Yes) require(check_diff_asi_bialgebra(p, bindings), "double_construction");
  Env env = make_env(p, bindings);
  const Bilinear& dot = env.bilinear("dot");
  const Bilinear dual = dual_product(env.coproduct("delta"));
  const LinMap& D = env.map("D");
  const LinMap& Q = env.map("Q");
  Bilinear on_dual = transpose_action(dot);
  Bilinear on_a = transpose_action(dual);

  SplitPresentation sp;
  sp.dim_a = p.dim();
  sp.total.space = direct_sum_space(p.space, dual_names(p.space));
  sp.total.products["dot"] = matched_pair(dot, on_dual, on_dual, dual, on_a, on_a);
  sp.total.maps["D"] = direct_sum(D, Q.transpose());
  sp.total.maps["Q"] = direct_sum(Q, D.transpose());
  sp.total.forms["B"] = standard_form(p.dim());
  sp.total.ring = sp.total.products["dot"].ring();
  sp.total = sp.total.in_ring(sp.total.ring);
  return sp;
}

Bilinear novikov_double(const Bilinear& circ, const Coproduct& Delta) {
  Bilinear dual = dual_product(Delta);
  RepNov on_dual = dual_rep_novikov(regular_rep(circ));
  RepNov on_a = dual_rep_novikov(regular_rep(dual));
  return matched_pair(circ, on_dual.left, on_dual.right, dual, on_a.left, on_a.right);
}

ReportBundle check_manin_triple(const SplitPresentation& sp, const Bilinear& circ) {
  std::size_t n = sp.dim_a, total = circ.out_dim();
  if (total != 2 * n) throw DimensionMismatch("check_manin_triple: product is not on A (+) A*");
  ReportBundle b;
  b.name = "Manin triple";
  b.reports.push_back(block_closure("BLOCK_A", circ, 0, n));
  b.reports.push_back(block_closure("BLOCK_DUAL", circ, n, total));
  Env env = algebra_env({{"circ", circ}});
  env.tensors["B"] = standard_form(n);
  b.append(check_axioms("", {"NOV_LSYM", "NOV_RCOMM", "BILIN_INV_NOV"}, env));
  return b;
}

ReportBundle quadratic_novikov_check(const Bilinear& circ, const Tensor& form) {
  Env env = algebra_env({{"circ", circ}});
  env.tensors["B"] = form;
  return check_axioms("quadratic Novikov algebra", {"FORM_SYM", "FORM_NONDEG", "BILIN_INV_NOV"}, env);
}

}  // namespace novbi
