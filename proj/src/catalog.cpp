#include <algorithm>

#include "novbi/axioms.hpp"
#include "novbi/error.hpp"

namespace novbi {

using namespace expr;

namespace {

const Poly q = Poly::q();

AxiomSpec entry(std::string id, std::string description, std::vector<std::string> inputs, std::vector<Expr> parts) {
  AxiomSpec s;
  s.id = std::move(id);
  s.description = std::move(description);
  s.input_spaces = std::move(inputs);
  s.parts = std::move(parts);
  return s;
}

// Operations bound to a fixed role name.
auto op(const std::string& role) {
  return [role](Expr x, Expr y) { return mul(role, std::move(x), std::move(y)); };
}

// L_star(x) applied on a leg, with x star y = x o y + y o x.
Expr star_on_leg(const std::string& circ, const Expr& x, const Expr& t, std::size_t leg) {
  return lmul(circ, x, t, leg) + rmul(circ, t, leg, x);
}

std::vector<AxiomSpec> build() {
  std::vector<AxiomSpec> c;
  const Expr a = in(0), b = in(1), cc = in(2);
  const std::vector<std::string> A1{"A"}, A2{"A", "A"}, A3{"A", "A", "A"};
  const MapExpr D = map("D"), Q = map("Q");

  // Novikov algebras.
  {
    auto o = op("circ");
    c.push_back(entry("NOV_LSYM", "left symmetry of the associator of circ", A3,
                      {o(o(a, b), cc) - o(a, o(b, cc)) - o(o(b, a), cc) + o(b, o(a, cc))}));
    c.push_back(entry("NOV_RCOMM", "right commutativity (a o b) o c = (a o c) o b", A3, {o(o(a, b), cc) - o(o(a, cc), b)}));
  }

  // Commutative differential algebras.
  {
    auto d = op("dot");
    c.push_back(entry("COMM", "commutativity of dot", A2, {d(a, b) - d(b, a)}));
    c.push_back(entry("ASSOC", "associativity of dot", A3, {d(d(a, b), cc) - d(a, d(b, cc))}));
    c.push_back(entry("DERIV", "D is a derivation of dot", A2, {apply_map(D, d(a, b)) - d(apply_map(D, a), b) - d(a, apply_map(D, b))}));
    c.push_back(entry("ADMISS", "Q(a.b) = Q(a).b - a.D(b)", A2, {apply_map(Q, d(a, b)) - d(apply_map(Q, a), b) + d(a, apply_map(D, b))}));
  }

  // Zinbiel algebras.
  {
    auto z = op("diamond");
    c.push_back(entry("ZINBIEL", "a<>(b<>c) = (b<>a)<>c + (a<>b)<>c", A3, {z(a, z(b, cc)) - z(z(b, a), cc) - z(z(a, b), cc)}));
    c.push_back(entry("ZINB_ADMISS", "Q(a<>b) = Q(a)<>b - a<>D(b) = a<>Q(b) - D(a)<>b", A2,
                      {apply_map(Q, z(a, b)) - z(apply_map(Q, a), b) + z(a, apply_map(D, b)),
                       apply_map(Q, z(a, b)) - z(a, apply_map(Q, b)) + z(apply_map(D, a), b)}));
  }

  // Pre-Novikov algebras.
  {
    auto L = op("lhd"), R = op("rhd");
    auto sum = [&](Expr x, Expr y) { return L(x, y) + R(x, y); };
    c.push_back(entry("PRE_NOV_1", "a>(b>c) = (a>b + a<b)>c + b>(a>c) - (b>a + b<a)>c", A3,
                      {R(a, R(b, cc)) - R(sum(a, b), cc) - R(b, R(a, cc)) + R(sum(b, a), cc)}));
    c.push_back(entry("PRE_NOV_2", "a>(b<c) = (a>b)<c + b<(a<c + a>c) - (b<a)<c", A3,
                      {R(a, L(b, cc)) - L(R(a, b), cc) - L(b, sum(a, cc)) + L(L(b, a), cc)}));
    c.push_back(entry("PRE_NOV_3", "(a<b + a>b)>c = (a>c)<b", A3, {R(sum(a, b), cc) - L(R(a, cc), b)}));
    c.push_back(entry("PRE_NOV_4", "(a<b)<c = (a<c)<b", A3, {L(L(a, b), cc) - L(L(a, cc), b)}));
  }

  // Coalgebras.
  {
    Expr x = co("delta", a);
    c.push_back(entry("COASSOC", "(delta (x) id)delta = (id (x) delta)delta", A1, {co_leg("delta", x, 0) - co_leg("delta", x, 1)}));
    c.push_back(entry("COCOMM", "delta = tau delta", A1, {x - flip(x)}));
    c.push_back(entry("CODERIV", "delta Q = (id (x) Q + Q (x) id) delta", A1,
                      {co("delta", apply_map(Q, a)) - map_leg(Q, x, 1) - map_leg(Q, x, 0)}));
    c.push_back(entry("CO_ADMISS", "(D (x) id - id (x) Q)delta = delta D", A1,
                      {map_leg(D, x, 0) - map_leg(Q, x, 1) - co("delta", apply_map(D, a))}));
  }

  // Novikov coalgebras.
  {
    Expr x = co("Delta", a);
    Expr right = co_leg("Delta", x, 1);
    Expr left = co_leg("Delta", x, 0);
    auto tau12 = [](Expr t) { return permute(std::move(t), {1, 0, 2}); };
    c.push_back(entry("NOV_COALG_1", "coassociator of Delta is symmetric in its first two legs", A1,
                      {right - tau12(right) - left + tau12(left)}));
    c.push_back(entry("NOV_COALG_2", "(tau (x) id)(id (x) Delta)tau Delta = (Delta (x) id)Delta", A1,
                      {tau12(co_leg("Delta", flip(x), 1)) - left}));
  }

  // ASI bialgebras.
  {
    auto d = op("dot");
    auto twist = [&](Expr x, Expr y) {
      // (L(y) (x) id - id (x) R(y)) delta(x)
      Expr dx = co("delta", x);
      return lmul("dot", y, dx, 0) - rmul("dot", dx, 1, y);
    };
    c.push_back(entry("ASI_1", "delta(ab) = (id (x) L(a))delta(b) + (R(b) (x) id)delta(a)", A2,
                      {co("delta", d(a, b)) - lmul("dot", a, co("delta", b), 1) - rmul("dot", co("delta", a), 0, b)}));
    c.push_back(entry("ASI_2", "(L(b) (x) id - id (x) R(b))delta(a) + tau of the same with a, b swapped", A2,
                      {twist(a, b) + flip(twist(b, a))}));
  }

  // Novikov bialgebras.
  {
    auto o = op("circ");
    Expr da = co("Delta", a), db = co("Delta", b);
    Expr sa = da + flip(da), sb = db + flip(db);
    c.push_back(entry("NOV_BIALG_1", "Delta(a o b) = (R(b) (x) id)Delta(a) + (id (x) L_star(a))(Delta(b) + tau Delta(b))", A2,
                      {co("Delta", o(a, b)) - rmul("circ", da, 0, b) - star_on_leg("circ", a, sb, 1)}));
    auto lb6 = [&](const Expr& x, const Expr& dy) { return star_on_leg("circ", x, dy, 0) - star_on_leg("circ", x, flip(dy), 1); };
    c.push_back(entry("NOV_BIALG_2", "(L_star(a) (x) id)Delta(b) - (id (x) L_star(a))tau Delta(b) is symmetric in a, b", A2,
                      {lb6(a, db) - lb6(b, da)}));
    auto lb7 = [&](const Expr& x, const Expr& sy) { return rmul("circ", sy, 1, x) - rmul("circ", sy, 0, x); };
    c.push_back(entry("NOV_BIALG_3", "(id (x) R(a) - R(a) (x) id)(Delta(b) + tau Delta(b)) is symmetric in a, b", A2,
                      {lb7(a, sb) - lb7(b, sa)}));
  }

  // Representations. Actions are bilinear maps A x V -> V.
  {
    auto o = op("circ");
    auto l = op("lact"), r = op("ract");
    const Expr v = in(2);
    const std::vector<std::string> AAV{"A", "A", "V"};
    c.push_back(entry("REP_NOV_1", "l(a o b - b o a) = [l(a), l(b)]", AAV,
                      {l(o(a, b) - o(b, a), v) - l(a, l(b, v)) + l(b, l(a, v))}));
    c.push_back(entry("REP_NOV_2", "l(a)r(b) - r(b)l(a) = r(a o b) - r(b)r(a)", AAV,
                      {l(a, r(b, v)) - r(b, l(a, v)) - r(o(a, b), v) + r(b, r(a, v))}));
    c.push_back(entry("REP_NOV_3", "l(a o b) = r(b)l(a)", AAV, {l(o(a, b), v) - r(b, l(a, v))}));
    c.push_back(entry("REP_NOV_4", "r(a)r(b) = r(b)r(a)", AAV, {r(a, r(b, v)) - r(b, r(a, v))}));
    auto d = op("dot");
    c.push_back(entry("REP_ASSOC", "l(a.b) = l(a)l(b)", AAV, {l(d(a, b), v) - l(a, l(b, v))}));
    const Expr w = in(1);
    const std::vector<std::string> AV{"A", "V"};
    const MapExpr alpha = map("alpha"), beta = map("beta");
    c.push_back(entry("REP_DIFF", "alpha(l(a)v) = l(D a)v + l(a)alpha(v)", AV,
                      {apply_map(alpha, l(a, w)) - l(apply_map(D, a), w) - l(a, apply_map(alpha, w))}));
    c.push_back(entry("REP_ADM", "beta(l(a)v) = l(a)beta(v) - l(D a)v = l(Q a)v - l(a)alpha(v)", AV,
                      {apply_map(beta, l(a, w)) - l(a, apply_map(beta, w)) + l(apply_map(D, a), w),
                       apply_map(beta, l(a, w)) - l(apply_map(Q, a), w) + l(a, apply_map(alpha, w))}));
  }

  // O-operators T: V -> A.
  {
    const Expr u = in(0), v = in(1);
    const MapExpr T = map("T");
    auto Tx = [&](Expr x) { return apply_map(T, std::move(x)); };
    auto l = op("lact"), r = op("ract");
    const std::vector<std::string> VV{"V", "V"}, V1{"V"};
    c.push_back(entry("OOP_NOV", "T(u) o T(v) = T(l(Tu)v + r(Tv)u)", VV,
                      {mul("circ", Tx(u), Tx(v)) - Tx(l(Tx(u), v) + r(Tx(v), u))}));
    c.push_back(entry("OOP_COMM", "T(u).T(v) = T(l(Tu)v + l(Tv)u)", VV,
                      {mul("dot", Tx(u), Tx(v)) - Tx(l(Tx(u), v) + l(Tx(v), u))}));
    c.push_back(entry("OOP_D", "D T = T alpha", V1, {apply_map(D * T, u) - apply_map(T * map("alpha"), u)}));
    c.push_back(entry("OOP_Q", "Q T = T beta", V1, {apply_map(Q * T, u) - apply_map(T * map("beta"), u)}));
  }

  // Infinitesimal deformations of circ by f.
  {
    auto o = op("circ"), f = op("f");
    c.push_back(entry("DEFORM_1", "f satisfies left symmetry", A3,
                      {f(f(a, b), cc) - f(a, f(b, cc)) - f(f(b, a), cc) + f(b, f(a, cc))}));
    c.push_back(entry("DEFORM_2", "mixed left-symmetry of circ and f", A3,
                      {f(a, o(b, cc)) - f(o(a, b), cc) + f(o(b, a), cc) - f(b, o(a, cc)) + o(a, f(b, cc)) -
                       o(f(a, b), cc) + o(f(b, a), cc) - o(b, f(a, cc))}));
    c.push_back(entry("DEFORM_3", "f is right commutative", A3, {f(f(a, b), cc) - f(f(a, cc), b)}));
    c.push_back(entry("DEFORM_4", "mixed right commutativity of circ and f", A3,
                      {o(f(a, b), cc) - o(f(a, cc), b) + f(o(a, b), cc) - f(o(a, cc), b)}));
  }

  // Conditions making a.Q(b) a deformation of the Gelfand product.
  {
    auto d = op("dot");
    auto Qx = [&](Expr x) { return apply_map(Q, std::move(x)); };
    auto Dx = [&](Expr x) { return apply_map(D, std::move(x)); };
    c.push_back(entry("SPEC_DEF_5", "(a.Qb).Qc - a.Q(b.Qc) is symmetric in a, b", A3,
                      {d(d(a, Qx(b)), Qx(cc)) - d(a, Qx(d(b, Qx(cc)))) - d(d(b, Qx(a)), Qx(cc)) + d(b, Qx(d(a, Qx(cc))))}));
    c.push_back(entry("SPEC_DEF_6", "(a.Qb).Dc - a.Q(b.Dc) is symmetric in a, b", A3,
                      {d(d(a, Qx(b)), Dx(cc)) - d(a, Qx(d(b, Dx(cc)))) - d(d(b, Qx(a)), Dx(cc)) + d(b, Qx(d(a, Dx(cc))))}));
  }

  // Compatibility residuals of the induced pair (circ_q, Delta_q).
  {
    const MapExpr QD = Q + D;
    Expr x = co("delta", a);
    auto on2 = [&](const Expr& left, const MapExpr& m, const Expr& t) { return lmul("dot", left, map_leg(m, t, 1), 1); };
    Expr body = (q * q - q - 1) * on2(apply_map(D, b), QD, x) - on2(apply_map(QD, b), Q, x) +
                (q * q) * (on2(apply_map(D, b), Q, x) - rmul("dot", map_leg(D, x, 1), 1, apply_map(Q, b))) +
                (q * q - 2 * q - 1) * on2(b, D * QD, x) + (q * q - q) * (on2(b, D * Q, x) - on2(b, Q * D, x)) -
                (2 * q) * on2(b, Q * QD, x) + (1 - 2 * q * q + q) * on2(b, QD, map_leg(D, x, 0));
    c.push_back(entry("BIALG_Q_1", "first compatibility residual of the induced Novikov bialgebra", A2, {body}));

    const MapExpr QqD = Q + q * D;
    auto y = [&](const Expr& s, const Expr& t) {
      Expr dt = co("delta", t);
      Expr w = apply_map(D + Q, s);
      return lmul("dot", w, map_leg(QqD, dt, 1), 0) - lmul("dot", w, map_leg(QqD, dt, 0), 1);
    };
    c.push_back(entry("BIALG_Q_2", "second compatibility residual of the induced Novikov bialgebra", A2,
                      {(1 + 2 * q) * (y(a, b) - y(b, a))}));

    const MapExpr DqQ = D + q * Q;
    auto z = [&](const Expr& s, const Expr& t) {
      Expr w = map_leg(D + Q, co("delta", t), 1);
      Expr g = apply_map(DqQ, s);
      return lmul("dot", g, w, 1) - lmul("dot", g, w, 0);
    };
    c.push_back(entry("BIALG_Q_3", "third compatibility residual of the induced Novikov bialgebra", A2,
                      {(1 + 2 * q) * (z(a, b) - z(b, a))}));
  }

  {
    auto d = op("dot");
    c.push_back(entry("COND_A", "a.Q(b) = -a.D(b)", A2, {d(a, apply_map(Q, b)) + d(a, apply_map(D, b))}));
    Expr x = co("delta", a);
    c.push_back(entry("COND_B", "(id (x) Q)delta = -(id (x) D)delta", A1, {map_leg(Q, x, 1) + map_leg(D, x, 1)}));
  }

  // Bilinear forms.
  {
    auto o = op("circ"), d = op("dot");
    c.push_back(entry("BILIN_INV_NOV", "B(a o b, c) = -B(b, a star c)", A3,
                      {pair("B", o(a, b), cc) + pair("B", b, o(a, cc) + o(cc, a))}));
    c.push_back(entry("BILIN_INV_ASSOC", "B(a.b, c) = B(a, b.c)", A3, {pair("B", d(a, b), cc) - pair("B", a, d(b, cc))}));
    c.push_back(entry("FORM_SYM", "B(a, b) = B(b, a)", A2, {pair("B", a, b) - pair("B", b, a)}));
    AxiomSpec nd;
    nd.id = "FORM_NONDEG";
    nd.description = "B has trivial kernel";
    nd.kind = AxiomSpec::Kind::Nondegenerate;
    nd.form_role = "B";
    c.push_back(nd);
  }

  // Yang-Baxter equations on a constant r = sum x_i (x) y_i.
  {
    Expr rr = outer(constant("r"), constant("r"));  // legs x_i, y_i, x_j, y_j
    auto r13r23 = [&](const std::string& o) { return fuse(o, rr, 1, 3, 2); };
    auto r12r23 = [&](const std::string& o) { return fuse(o, rr, 1, 2, 1); };
    auto r13r12 = [&](const std::string& o) { return permute(fuse(o, rr, 0, 2, 0), {0, 2, 1}); };
    c.push_back(entry("AYBE", "r13.r12 + r13.r23 - r12.r23 = 0", {}, {r13r12("dot") + r13r23("dot") - r12r23("dot")}));
    // r12 star r23 puts y_i star x_j in the middle leg.
    Expr r12_star_r23 = fuse("circ", rr, 1, 2, 1) + fuse("circ", rr, 2, 1, 1);
    c.push_back(entry("NYBE", "r13 o r23 + r12 star r23 + r13 o r12 = 0", {}, {r13r23("circ") + r12_star_r23 + r13r12("circ")}));
    Expr r = constant("r");
    c.push_back(entry("R_ADMISS", "(D (x) id - id (x) Q)r = 0 and (id (x) D - Q (x) id)r = 0", {},
                      {map_leg(D, r, 0) - map_leg(Q, r, 1), map_leg(D, r, 1) - map_leg(Q, r, 0)}));
    c.push_back(entry("R_ANTISYM", "r + tau r = 0", {}, {r + flip(r)}));
  }
  return c;
}

}  // namespace

const std::vector<AxiomSpec>& catalog() {
  static const std::vector<AxiomSpec> c = build();
  return c;
}

const AxiomSpec& axiom(const std::string& id) {
  const auto& c = catalog();
  auto it = std::find_if(c.begin(), c.end(), [&](const AxiomSpec& s) { return s.id == id; });
  if (it == c.end()) throw Error("unknown axiom '" + id + "'");
  return *it;
}

}  // namespace novbi
