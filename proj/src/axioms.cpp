#include "novbi/axioms.hpp"

#include <algorithm>

#include "novbi/error.hpp"
#include "novbi/linalg.hpp"

namespace novbi {

// ---- Env ----

std::string Env::resolve(const std::string& role) const {
  auto it = bindings.find(role);
  return it == bindings.end() ? role : it->second;
}

namespace {

template <class T>
const T& find_component(const std::map<std::string, T>& m, const Env& env, const std::string& role, const char* kind) {
  std::string name = env.resolve(role);
  auto it = m.find(name);
  if (it == m.end()) {
    std::string msg = std::string("missing ") + kind + " for role '" + role + "'";
    if (name != role) msg += " (bound to '" + name + "')";
    throw MissingBinding(msg);
  }
  return it->second;
}

}  // namespace

const Bilinear& Env::bilinear(const std::string& role) const { return find_component(bilinears, *this, role, "bilinear map"); }
const Coproduct& Env::coproduct(const std::string& role) const { return find_component(coproducts, *this, role, "coproduct"); }
const LinMap& Env::map(const std::string& role) const { return find_component(maps, *this, role, "linear map"); }
const Tensor& Env::tensor(const std::string& role) const { return find_component(tensors, *this, role, "tensor"); }

std::size_t Env::space(const std::string& name) const {
  auto it = spaces.find(name);
  if (it == spaces.end()) throw MissingBinding("missing dimension for space '" + name + "'");
  return it->second;
}

Ring Env::ring() const {
  for (const auto& [k, v] : bilinears)
    if (v.ring() == Ring::Poly) return Ring::Poly;
  for (const auto& [k, v] : coproducts)
    if (v.ring() == Ring::Poly) return Ring::Poly;
  for (const auto& [k, v] : maps)
    if (v.ring() == Ring::Poly) return Ring::Poly;
  for (const auto& [k, v] : tensors)
    if (v.ring() == Ring::Poly) return Ring::Poly;
  return Ring::Rational;
}

Env Env::in_ring(Ring r) const {
  Env out;
  out.spaces = spaces;
  out.bindings = bindings;
  for (const auto& [k, v] : bilinears) out.bilinears.emplace(k, v.in_ring(r));
  for (const auto& [k, v] : coproducts) out.coproducts.emplace(k, v.in_ring(r));
  for (const auto& [k, v] : maps) out.maps.emplace(k, v.in_ring(r));
  for (const auto& [k, v] : tensors) out.tensors.emplace(k, v.in_ring(r));
  return out;
}

Env make_env(const Presentation& p, const Bindings& bindings) {
  Env env;
  env.spaces["A"] = p.dim();
  env.bilinears = p.products;
  env.coproducts = p.coproducts;
  env.maps = p.maps;
  env.tensors = p.relements;
  for (const auto& [k, v] : p.forms) env.tensors.insert_or_assign(k, v);
  env.bindings = bindings;
  return env;
}

// ---- verdicts and loci ----

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::HoldsOnLocus: return "holds_on_locus";
  }
  return "?";
}

bool QLocus::contains(const Rational& q0) const {
  if (kind == Kind::AllQ) return true;
  return std::find(points.begin(), points.end(), q0) != points.end();
}

std::string QLocus::str() const {
  if (kind == Kind::AllQ) return "all q";
  std::string s = "{";
  for (std::size_t i = 0; i < points.size(); ++i) s += (i ? ", " : "") + to_string(points[i]);
  return s + "}";
}

QLocus locus_of(const Poly& g) {
  QLocus l;
  if (g.is_zero()) return l;
  if (g.is_constant()) {
    l.kind = QLocus::Kind::Empty;
    return l;
  }
  auto rr = rational_roots(g);
  l.points = rr.roots;
  l.nonrational_flag = rr.has_nonrational_factor;
  l.kind = l.points.empty() ? QLocus::Kind::Empty : QLocus::Kind::FiniteSet;
  return l;
}

Verdict ReportBundle::verdict() const {
  bool all_hold = true;
  for (const auto& r : reports) {
    if (r.holds()) continue;
    all_hold = false;
    if (r.ring == Ring::Rational) return Verdict::Fails;
  }
  if (all_hold) return Verdict::Holds;
  return locus().kind == QLocus::Kind::FiniteSet ? Verdict::HoldsOnLocus : Verdict::Fails;
}

QLocus ReportBundle::locus() const {
  Poly g;
  for (const auto& r : reports) {
    if (r.holds()) continue;
    if (r.ring == Ring::Rational) {
      QLocus empty;
      empty.kind = QLocus::Kind::Empty;
      return empty;
    }
    g = gcd(g, r.residual_gcd);
  }
  return locus_of(g);
}

const AxiomReport& ReportBundle::report(const std::string& id) const {
  for (const auto& r : reports)
    if (r.axiom_id == id) return r;
  throw Error("bundle '" + name + "' has no report for " + id);
}

void ReportBundle::append(const ReportBundle& other) {
  reports.insert(reports.end(), other.reports.begin(), other.reports.end());
}

// ---- evaluation ----

namespace {

void collect_roles(const expr::Expr& e, AxiomRoles& out) {
  using expr::Kind;
  auto add = [](std::vector<std::string>& v, const std::string& s) {
    if (std::find(v.begin(), v.end(), s) == v.end()) v.push_back(s);
  };
  switch (e->kind) {
    case Kind::Input: return;
    case Kind::Const: add(out.tensors, e->name); return;
    case Kind::Sum:
      for (const auto& [c, t] : e->terms) collect_roles(t, out);
      return;
    case Kind::Outer:
      collect_roles(e->a, out);
      collect_roles(e->b, out);
      return;
    case Kind::Fuse: add(out.bilinears, e->name); break;
    case Kind::MapLeg:
      for (const auto& t : e->maps.terms)
        for (const auto& m : t.chain) add(out.maps, m);
      break;
    case Kind::CoLeg: add(out.coproducts, e->name); break;
    case Kind::Permute: break;
    case Kind::Pair: add(out.tensors, e->name); break;
  }
  collect_roles(e->a, out);
}

bool uses_q(const expr::Expr& e) {
  using expr::Kind;
  switch (e->kind) {
    case Kind::Input:
    case Kind::Const: return false;
    case Kind::Sum:
      for (const auto& [c, t] : e->terms)
        if (!c.is_constant() || uses_q(t)) return true;
      return false;
    case Kind::Outer: return uses_q(e->a) || uses_q(e->b);
    case Kind::MapLeg:
      for (const auto& t : e->maps.terms)
        if (!t.coef.is_constant()) return true;
      return uses_q(e->a);
    default: return uses_q(e->a);
  }
}

struct Evaluator {
  const Env& env;
  std::span<const std::size_t> tuple;
  std::span<const std::string> input_spaces;
  Scalar q;
  Ring ring;

  Tensor run(const expr::Expr& e) const {
    using expr::Kind;
    switch (e->kind) {
      case Kind::Input: {
        if (e->index >= tuple.size()) throw Error("expression refers to a missing input");
        return Tensor::unit(env.space(input_spaces[e->index]), tuple[e->index], ring);
      }
      case Kind::Const: return env.tensor(e->name);
      case Kind::Sum: return sum(*e);
      case Kind::Outer: return outer(run(e->a), run(e->b));
      case Kind::Fuse: return fuse(*e);
      case Kind::MapLeg: return map_leg(*e);
      case Kind::CoLeg: return co_leg(*e);
      case Kind::Permute: return run(e->a).permuted(e->perm);
      case Kind::Pair: return pair(*e);
    }
    throw Error("unknown expression node");
  }

  Tensor sum(const expr::Node& n) const {
    std::optional<Tensor> acc;
    for (const auto& [c, t] : n.terms) {
      Tensor v = run(t);
      Scalar coef = substitute(c, q);
      v = v.scaled(coef);
      if (!acc) {
        acc = std::move(v);
      } else {
        *acc += v;
      }
    }
    if (!acc) throw Error("empty sum");
    return *acc;
  }

  static std::size_t leg(std::size_t l, const Tensor& t) { return l == expr::kLast ? t.order() - 1 : l; }

  Tensor fuse(const expr::Node& n) const {
    Tensor t = run(n.a);
    const Bilinear& op = env.bilinear(n.name);
    std::size_t i = leg(n.i, t), j = leg(n.j, t);
    if (i >= t.order() || j >= t.order() || i == j) throw DimensionMismatch("bad legs for '" + n.name + "'");
    if (t.dims()[i] != op.left_dim() || t.dims()[j] != op.right_dim())
      throw DimensionMismatch("operation '" + n.name + "' applied to legs of the wrong dimension");
    std::vector<std::size_t> rest;
    std::vector<std::size_t> rest_dims;
    for (std::size_t k = 0; k < t.order(); ++k)
      if (k != i && k != j) {
        rest.push_back(k);
        rest_dims.push_back(t.dims()[k]);
      }
    std::vector<std::size_t> out_dims = rest_dims;
    out_dims.insert(out_dims.begin() + static_cast<long>(n.dest), op.out_dim());
    Tensor out(out_dims, ring);
    std::vector<std::size_t> idx(t.order()), oidx(out_dims.size());
    for (std::size_t f = 0; f < t.size(); ++f) {
      if (t[f].is_zero()) continue;
      t.unflatten(f, idx);
      std::size_t p = 0;
      for (std::size_t k = 0; k < oidx.size(); ++k) {
        if (k == n.dest) continue;
        oidx[k] = idx[rest[p++]];
      }
      for (std::size_t k = 0; k < op.out_dim(); ++k) {
        const Scalar& c = op(idx[i], idx[j], k);
        if (c.is_zero()) continue;
        oidx[n.dest] = k;
        out.add(oidx, t[f] * c);
      }
    }
    return out;
  }

  LinMap resolve_map(const expr::MapExpr& m) const {
    std::optional<LinMap> acc;
    for (const auto& term : m.terms) {
      if (term.chain.empty()) throw Error("map term without maps");
      LinMap x = env.map(term.chain.front());
      for (std::size_t k = 1; k < term.chain.size(); ++k) x = x.compose(env.map(term.chain[k]));
      x = x.scaled(substitute(term.coef, q));
      if (!acc) {
        acc = std::move(x);
      } else {
        if (acc->dom() != x.dom() || acc->cod() != x.cod()) throw DimensionMismatch("sum of maps of different shapes");
        acc = *acc + x;
      }
    }
    if (!acc) throw Error("empty map expression");
    return *acc;
  }

  Tensor map_leg(const expr::Node& n) const {
    Tensor t = run(n.a);
    LinMap m = resolve_map(n.maps);
    std::size_t l = leg(n.i, t);
    if (l >= t.order() || t.dims()[l] != m.dom()) throw DimensionMismatch("map applied to a leg of the wrong dimension");
    std::vector<std::size_t> od = t.dims();
    od[l] = m.cod();
    Tensor out(od, ring);
    std::vector<std::size_t> idx(t.order()), oidx(t.order());
    for (std::size_t f = 0; f < t.size(); ++f) {
      if (t[f].is_zero()) continue;
      t.unflatten(f, idx);
      oidx = idx;
      for (std::size_t r = 0; r < m.cod(); ++r) {
        const Scalar& c = m(r, idx[l]);
        if (c.is_zero()) continue;
        oidx[l] = r;
        out.add(oidx, t[f] * c);
      }
    }
    return out;
  }

  Tensor co_leg(const expr::Node& n) const {
    Tensor t = run(n.a);
    const Coproduct& d = env.coproduct(n.name);
    std::size_t l = leg(n.i, t);
    if (l >= t.order() || t.dims()[l] != d.in_dim()) throw DimensionMismatch("coproduct applied to a leg of the wrong dimension");
    std::vector<std::size_t> od;
    for (std::size_t k = 0; k < t.order(); ++k) {
      if (k == l) {
        od.push_back(d.out1_dim());
        od.push_back(d.out2_dim());
      } else {
        od.push_back(t.dims()[k]);
      }
    }
    Tensor out(od, ring);
    std::vector<std::size_t> idx(t.order()), oidx(od.size());
    for (std::size_t f = 0; f < t.size(); ++f) {
      if (t[f].is_zero()) continue;
      t.unflatten(f, idx);
      for (std::size_t k = 0, p = 0; k < t.order(); ++k) {
        if (k == l) {
          p += 2;
          continue;
        }
        oidx[p++] = idx[k];
      }
      for (std::size_t x = 0; x < d.out1_dim(); ++x)
        for (std::size_t y = 0; y < d.out2_dim(); ++y) {
          const Scalar& c = d(idx[l], x, y);
          if (c.is_zero()) continue;
          oidx[l] = x;
          oidx[l + 1] = y;
          out.add(oidx, t[f] * c);
        }
    }
    return out;
  }

  Tensor pair(const expr::Node& n) const {
    Tensor t = run(n.a);
    const Tensor& form = env.tensor(n.name);
    std::size_t i = leg(n.i, t), j = leg(n.j, t);
    if (form.order() != 2 || t.dims()[i] != form.dims()[0] || t.dims()[j] != form.dims()[1])
      throw DimensionMismatch("form '" + n.name + "' paired with legs of the wrong dimension");
    std::vector<std::size_t> rest, rest_dims;
    for (std::size_t k = 0; k < t.order(); ++k)
      if (k != i && k != j) {
        rest.push_back(k);
        rest_dims.push_back(t.dims()[k]);
      }
    Tensor out(rest_dims, ring);
    std::vector<std::size_t> idx(t.order()), oidx(rest.size());
    for (std::size_t f = 0; f < t.size(); ++f) {
      if (t[f].is_zero()) continue;
      t.unflatten(f, idx);
      const Scalar& c = form.at({idx[i], idx[j]});
      if (c.is_zero()) continue;
      for (std::size_t k = 0; k < rest.size(); ++k) oidx[k] = idx[rest[k]];
      out.add(oidx, t[f] * c);
    }
    return out;
  }
};

// A symbolic q is never substituted when the identity has constant coefficients.
Scalar q_in_ring(const Scalar& q, Ring r) {
  if (r == Ring::Rational && !q.is_constant()) return Scalar::zero(Ring::Rational);
  return q.in_ring(r);
}

Ring working_ring(const AxiomSpec& spec, const Env& env, const Scalar& q) {
  if (env.ring() == Ring::Poly) return Ring::Poly;
  if (q.ring() == Ring::Poly && !q.is_constant())
    for (const auto& p : spec.parts)
      if (uses_q(p)) return Ring::Poly;
  return Ring::Rational;
}

void finish(AxiomReport& rep) {
  finalize_report(rep);
}

}  // namespace

void finalize_report(AxiomReport& rep) {
  int deg = -1;
  Poly g;
  for (const auto& t : rep.residuals) {
    deg = std::max(deg, t.max_degree());
    for (std::size_t f = 0; f < t.size(); ++f)
      if (!t[f].is_zero()) g = gcd(g, t[f].value());
  }
  rep.residual_degree = deg;
  rep.residual_gcd = g;
  if (!rep.witness) {
    rep.verdict = Verdict::Holds;
    if (rep.ring == Ring::Poly) rep.locus = QLocus{};
    return;
  }
  if (rep.ring == Ring::Rational) {
    rep.verdict = Verdict::Fails;
    return;
  }
  rep.locus = locus_of(g);
  rep.verdict = rep.locus->kind == QLocus::Kind::FiniteSet ? Verdict::HoldsOnLocus : Verdict::Fails;
}

namespace {

AxiomReport check_nondegenerate(const AxiomSpec& spec, const Env& env) {
  AxiomReport rep;
  rep.axiom_id = spec.id;
  const Tensor& form = env.tensor(spec.form_role);
  rep.ring = form.ring();
  rep.tuples_checked = 1;
  if (auto k = kernel_vector(form)) {
    rep.witness = Witness{{}, 0, *k};
    rep.verdict = Verdict::Fails;
    rep.residual_degree = k->max_degree();
    rep.residual_gcd = Poly(1);
    if (rep.ring == Ring::Poly) {
      rep.locus = QLocus{};
      rep.locus->kind = QLocus::Kind::Empty;
    }
  } else if (rep.ring == Ring::Poly) {
    rep.locus = QLocus{};
    rep.note = "nondegenerate over the field of rational functions in q";
  }
  return rep;
}

}  // namespace

AxiomRoles roles_of(const AxiomSpec& spec) {
  AxiomRoles r;
  for (const auto& p : spec.parts) collect_roles(p, r);
  if (spec.kind == AxiomSpec::Kind::Nondegenerate) r.tensors.push_back(spec.form_role);
  return r;
}

Tensor evaluate(const expr::Expr& e, const Env& env, std::span<const std::size_t> tuple,
                std::span<const std::string> input_spaces, const Scalar& q) {
  Ring ring = env.ring();
  if (q.ring() == Ring::Poly && !q.is_constant()) ring = Ring::Poly;
  Env work = env.in_ring(ring);
  Evaluator ev{work, tuple, input_spaces, q_in_ring(q, ring), ring};
  return ev.run(e);
}

AxiomReport check_axiom(const std::string& id, const Env& env, const CheckOptions& opt) {
  const AxiomSpec& spec = axiom(id);
  // Resolve every role up front so a missing binding is reported before any work.
  AxiomRoles roles = roles_of(spec);
  for (const auto& r : roles.bilinears) env.bilinear(r);
  for (const auto& r : roles.coproducts) env.coproduct(r);
  for (const auto& r : roles.maps) env.map(r);
  for (const auto& r : roles.tensors) env.tensor(r);
  for (const auto& s : spec.input_spaces) env.space(s);

  if (spec.kind == AxiomSpec::Kind::Nondegenerate) return check_nondegenerate(spec, env);

  AxiomReport rep;
  rep.axiom_id = spec.id;
  rep.input_spaces = spec.input_spaces;
  rep.ring = working_ring(spec, env, opt.q);
  Env work = env.in_ring(rep.ring);
  Scalar q = q_in_ring(opt.q, rep.ring);

  std::vector<std::size_t> in_dims;
  std::size_t total = 1;
  for (const auto& s : spec.input_spaces) {
    in_dims.push_back(work.space(s));
    total *= in_dims.back();
  }
  std::vector<std::size_t> tuple(in_dims.size());
  rep.residuals.resize(spec.parts.size());
  std::vector<bool> allocated(spec.parts.size(), false);
  for (std::size_t f = 0; f < total; ++f) {
    for (std::size_t k = in_dims.size(), rem = f; k-- > 0;) {
      tuple[k] = rem % in_dims[k];
      rem /= in_dims[k];
    }
    if (opt.tuple_filter && !opt.tuple_filter(tuple)) {
      ++rep.tuples_skipped;
      continue;
    }
    ++rep.tuples_checked;
    Evaluator ev{work, tuple, spec.input_spaces, q, rep.ring};
    for (std::size_t p = 0; p < spec.parts.size(); ++p) {
      Tensor value = ev.run(spec.parts[p]);
      if (!allocated[p]) {
        std::vector<std::size_t> dims = in_dims;
        dims.insert(dims.end(), value.dims().begin(), value.dims().end());
        rep.residuals[p] = Tensor(dims, rep.ring);
        allocated[p] = true;
      }
      std::size_t block = value.size();
      for (std::size_t k = 0; k < block; ++k)
        if (!value[k].is_zero()) rep.residuals[p].set_flat(f * block + k, value[k]);
      if (!rep.witness && !value.is_zero()) rep.witness = Witness{tuple, p, value};
    }
  }
  finish(rep);
  return rep;
}

AxiomReport check_axiom(const std::string& id, const Presentation& p, const Bindings& bindings, const CheckOptions& opt) {
  return check_axiom(id, make_env(p, bindings), opt);
}

ReportBundle check_axioms(const std::string& name, const std::vector<std::string>& ids, const Env& env,
                          const CheckOptions& opt) {
  ReportBundle b;
  b.name = name;
  for (const auto& id : ids) b.reports.push_back(check_axiom(id, env, opt));
  return b;
}

ReportBundle is_admissible_quadruple(const Presentation& p, const Bindings& bindings) {
  Env env = make_env(p, bindings);
  return check_axioms("admissible quadruple", {"COMM", "ASSOC", "DERIV", "ADMISS"}, env);
}

}  // namespace novbi
