#pragma once

#include <limits>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "novbi/poly.hpp"

/// Multilinear expression trees over named operations.
///
/// An expression denotes a tensor built from input basis vectors, named
/// constant tensors, and named bilinear maps, coproducts, linear maps and
/// forms applied to chosen legs. Coefficients are polynomials in q and get
/// specialised when the expression is evaluated.
namespace novbi::expr {

/// Leg index meaning "the last leg", resolved at evaluation time.
inline constexpr std::size_t kLast = std::numeric_limits<std::size_t>::max();

/// One summand c(q) * (M1 o M2 o ... ), the rightmost map applied first.
struct MapTerm {
  Poly coef;
  std::vector<std::string> chain;
};

/// A linear combination of compositions of named maps.
struct MapExpr {
  std::vector<MapTerm> terms;
};

MapExpr map(const std::string& name);
MapExpr operator+(MapExpr a, const MapExpr& b);
MapExpr operator-(MapExpr a, const MapExpr& b);
MapExpr operator*(const Poly& c, MapExpr m);
/// Composition: (a * b)(x) = a(b(x)).
MapExpr operator*(const MapExpr& a, const MapExpr& b);

enum class Kind { Input, Const, Sum, Outer, Fuse, MapLeg, CoLeg, Permute, Pair };

struct Node;
using Expr = std::shared_ptr<const Node>;

struct Node {
  Kind kind = Kind::Input;
  std::size_t index = 0;                       // Input: which argument
  std::string name;                            // Const, Fuse, CoLeg, Pair: role name
  std::vector<std::pair<Poly, Expr>> terms;    // Sum
  Expr a, b;                                   // operands
  std::size_t i = 0, j = 0, dest = 0;          // legs for Fuse, MapLeg, CoLeg, Pair
  MapExpr maps;                                // MapLeg
  std::vector<std::size_t> perm;               // Permute
};

/// The k-th argument, a basis vector of its declared space.
Expr in(std::size_t k);
/// A named constant tensor such as an r-element.
Expr constant(const std::string& role);
Expr outer(Expr a, Expr b);
/// Combine legs i and j with bilinear `op` (leg i on the left); the result leg
/// is inserted at position `dest` among the remaining legs.
Expr fuse(const std::string& op, Expr t, std::size_t i, std::size_t j, std::size_t dest);
Expr map_leg(const MapExpr& m, Expr t, std::size_t leg);
/// Replace `leg` by the two legs of the coproduct of its value.
Expr co_leg(const std::string& coop, Expr t, std::size_t leg);
/// Leg k of the result is leg perm[k] of t.
Expr permute(Expr t, std::vector<std::size_t> perm);
/// Contract legs i and j with a bilinear form.
Expr pair_legs(const std::string& form, Expr t, std::size_t i, std::size_t j);

Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);
Expr operator*(const Poly& c, const Expr& a);

// Shorthands for vectors (order-1 expressions).

/// op(x, y).
Expr mul(const std::string& op, Expr x, Expr y);
Expr apply_map(const MapExpr& m, Expr x);
Expr co(const std::string& coop, Expr x);
Expr pair(const std::string& form, Expr x, Expr y);

// Shorthands acting on one leg of a tensor.

/// Leg <- op(x, leg), i.e. the left multiplication L(x) on that leg.
Expr lmul(const std::string& op, Expr x, Expr t, std::size_t leg);
/// Leg <- op(leg, x), i.e. the right multiplication R(x) on that leg.
Expr rmul(const std::string& op, Expr t, std::size_t leg, Expr x);
/// Swap the first two legs.
Expr flip(Expr t);

}  // namespace novbi::expr
