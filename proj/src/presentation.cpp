#include "novbi/presentation.hpp"

#include <set>

#include "novbi/error.hpp"

namespace novbi {

std::optional<std::size_t> Space::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return i;
  return std::nullopt;
}

void Space::validate() const {
  if (names.empty()) throw Error("space must have dimension at least 1");
  std::set<std::string> seen;
  for (const auto& n : names)
    if (!seen.insert(n).second) throw Error("basis name '" + n + "' repeated");
}

namespace {

template <class T>
const T& lookup(const std::map<std::string, T>& m, const std::string& name, const char* kind) {
  auto it = m.find(name);
  if (it == m.end()) throw MissingBinding(std::string("no ") + kind + " named '" + name + "'");
  return it->second;
}

void check(bool ok, const std::string& what) {
  if (!ok) throw DimensionMismatch(what);
}

}  // namespace

const Bilinear& Presentation::product(const std::string& name) const { return lookup(products, name, "product"); }
const Coproduct& Presentation::coproduct(const std::string& name) const {
  return lookup(coproducts, name, "coproduct");
}
const LinMap& Presentation::map(const std::string& name) const { return lookup(maps, name, "map"); }
const Tensor& Presentation::form(const std::string& name) const { return lookup(forms, name, "form"); }
const Tensor& Presentation::relement(const std::string& name) const { return lookup(relements, name, "relement"); }

void Presentation::validate() const {
  space.validate();
  std::size_t n = dim();
  auto ring_ok = [&](Ring r, const std::string& what) {
    if (r != ring) throw RingMismatch(what + " is not over " + to_string(ring));
  };
  for (const auto& [name, b] : products) {
    check(b.left_dim() == n && b.right_dim() == n && b.out_dim() == n, "product '" + name + "' has wrong size");
    ring_ok(b.ring(), "product '" + name + "'");
  }
  for (const auto& [name, c] : coproducts) {
    check(c.in_dim() == n && c.out1_dim() == n && c.out2_dim() == n, "coproduct '" + name + "' has wrong size");
    ring_ok(c.ring(), "coproduct '" + name + "'");
  }
  for (const auto& [name, m] : maps) {
    check(m.dom() == n && m.cod() == n, "map '" + name + "' has wrong size");
    ring_ok(m.ring(), "map '" + name + "'");
  }
  for (const auto* group : {&forms, &relements}) {
    for (const auto& [name, t] : *group) {
      check(t.dims() == std::vector<std::size_t>{n, n}, "tensor '" + name + "' has wrong size");
      ring_ok(t.ring(), "tensor '" + name + "'");
    }
  }
}

Presentation Presentation::in_ring(Ring r) const {
  Presentation out;
  out.space = space;
  out.ring = r;
  for (const auto& [k, v] : products) out.products.emplace(k, v.in_ring(r));
  for (const auto& [k, v] : coproducts) out.coproducts.emplace(k, v.in_ring(r));
  for (const auto& [k, v] : maps) out.maps.emplace(k, v.in_ring(r));
  for (const auto& [k, v] : forms) out.forms.emplace(k, v.in_ring(r));
  for (const auto& [k, v] : relements) out.relements.emplace(k, v.in_ring(r));
  return out;
}

Presentation specialize(const Presentation& p, const Rational& q0) {
  Presentation out;
  out.space = p.space;
  out.ring = Ring::Rational;
  for (const auto& [k, v] : p.products) out.products.emplace(k, eval_q(v, q0));
  for (const auto& [k, v] : p.coproducts) out.coproducts.emplace(k, eval_q(v, q0));
  for (const auto& [k, v] : p.maps) out.maps.emplace(k, eval_q(v, q0));
  for (const auto& [k, v] : p.forms) out.forms.emplace(k, eval_q(v, q0));
  for (const auto& [k, v] : p.relements) out.relements.emplace(k, eval_q(v, q0));
  return out;
}

Space numbered_space(std::size_t n, const std::string& prefix) {
  Space s;
  for (std::size_t i = 1; i <= n; ++i) s.names.push_back(prefix + std::to_string(i));
  return s;
}

std::vector<std::string> dual_names(const Space& s) {
  std::vector<std::string> out;
  for (const auto& n : s.names) out.push_back(n + "'");
  return out;
}

Presentation dualize(const Presentation& p) {
  Presentation out;
  out.space = p.space;
  out.ring = p.ring;
  for (const auto& [k, v] : p.products) out.coproducts.emplace(k, dual_coproduct(v));
  for (const auto& [k, v] : p.coproducts) out.products.emplace(k, dual_product(v));
  for (const auto& [k, v] : p.maps) out.maps.emplace(k, v.transpose());
  out.forms = p.forms;
  out.relements = p.relements;
  return out;
}

}  // namespace novbi
