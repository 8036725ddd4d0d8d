#include "novbi/expr.hpp"

namespace novbi::expr {

MapExpr map(const std::string& name) { return MapExpr{{MapTerm{Poly(1), {name}}}}; }

MapExpr operator+(MapExpr a, const MapExpr& b) {
  a.terms.insert(a.terms.end(), b.terms.begin(), b.terms.end());
  return a;
}

MapExpr operator-(MapExpr a, const MapExpr& b) { return std::move(a) + Poly(-1) * b; }

MapExpr operator*(const Poly& c, MapExpr m) {
  for (auto& t : m.terms) t.coef = c * t.coef;
  return m;
}

MapExpr operator*(const MapExpr& a, const MapExpr& b) {
  MapExpr out;
  for (const auto& x : a.terms)
    for (const auto& y : b.terms) {
      MapTerm t{x.coef * y.coef, x.chain};
      t.chain.insert(t.chain.end(), y.chain.begin(), y.chain.end());
      out.terms.push_back(std::move(t));
    }
  return out;
}

namespace {

Expr make(Node n) { return std::make_shared<const Node>(std::move(n)); }

}  // namespace

Expr in(std::size_t k) {
  Node n;
  n.kind = Kind::Input;
  n.index = k;
  return make(std::move(n));
}

Expr constant(const std::string& role) {
  Node n;
  n.kind = Kind::Const;
  n.name = role;
  return make(std::move(n));
}

Expr outer(Expr a, Expr b) {
  Node n;
  n.kind = Kind::Outer;
  n.a = std::move(a);
  n.b = std::move(b);
  return make(std::move(n));
}

Expr fuse(const std::string& op, Expr t, std::size_t i, std::size_t j, std::size_t dest) {
  Node n;
  n.kind = Kind::Fuse;
  n.name = op;
  n.a = std::move(t);
  n.i = i;
  n.j = j;
  n.dest = dest;
  return make(std::move(n));
}

Expr map_leg(const MapExpr& m, Expr t, std::size_t leg) {
  Node n;
  n.kind = Kind::MapLeg;
  n.maps = m;
  n.a = std::move(t);
  n.i = leg;
  return make(std::move(n));
}

Expr co_leg(const std::string& coop, Expr t, std::size_t leg) {
  Node n;
  n.kind = Kind::CoLeg;
  n.name = coop;
  n.a = std::move(t);
  n.i = leg;
  return make(std::move(n));
}

Expr permute(Expr t, std::vector<std::size_t> perm) {
  Node n;
  n.kind = Kind::Permute;
  n.a = std::move(t);
  n.perm = std::move(perm);
  return make(std::move(n));
}

Expr pair_legs(const std::string& form, Expr t, std::size_t i, std::size_t j) {
  Node n;
  n.kind = Kind::Pair;
  n.name = form;
  n.a = std::move(t);
  n.i = i;
  n.j = j;
  return make(std::move(n));
}

namespace {

Expr sum_of(std::vector<std::pair<Poly, Expr>> terms) {
  Node n;
  n.kind = Kind::Sum;
  // Flatten nested sums so long identities stay shallow.
  for (auto& [c, e] : terms) {
    if (e->kind == Kind::Sum) {
      for (const auto& [c2, e2] : e->terms) n.terms.emplace_back(c * c2, e2);
    } else {
      n.terms.emplace_back(c, e);
    }
  }
  return make(std::move(n));
}

}  // namespace

Expr operator+(const Expr& a, const Expr& b) { return sum_of({{Poly(1), a}, {Poly(1), b}}); }
Expr operator-(const Expr& a, const Expr& b) { return sum_of({{Poly(1), a}, {Poly(-1), b}}); }
Expr operator-(const Expr& a) { return sum_of({{Poly(-1), a}}); }
Expr operator*(const Poly& c, const Expr& a) { return sum_of({{c, a}}); }

Expr mul(const std::string& op, Expr x, Expr y) { return fuse(op, outer(std::move(x), std::move(y)), 0, 1, 0); }
Expr apply_map(const MapExpr& m, Expr x) { return map_leg(m, std::move(x), 0); }
Expr co(const std::string& coop, Expr x) { return co_leg(coop, std::move(x), 0); }
Expr pair(const std::string& form, Expr x, Expr y) { return pair_legs(form, outer(std::move(x), std::move(y)), 0, 1); }

Expr lmul(const std::string& op, Expr x, Expr t, std::size_t leg) {
  return fuse(op, outer(std::move(x), std::move(t)), 0, leg + 1, leg);
}

Expr rmul(const std::string& op, Expr t, std::size_t leg, Expr x) {
  return fuse(op, outer(std::move(t), std::move(x)), leg, kLast, leg);
}

Expr flip(Expr t) { return permute(std::move(t), {1, 0}); }

}  // namespace novbi::expr
