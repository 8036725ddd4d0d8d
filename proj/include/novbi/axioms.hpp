#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "novbi/expr.hpp"
#include "novbi/presentation.hpp"

namespace novbi {

/// Role name used by an axiom -> component name in a presentation.
using Bindings = std::map<std::string, std::string>;

/// Everything an axiom can refer to, keyed by component name.
///
/// `spaces` gives the dimension of each input space ("A", "V", ...). Roles are
/// resolved through `bindings` first and fall back to the role name itself.
struct Env {
  std::map<std::string, std::size_t> spaces;
  std::map<std::string, Bilinear> bilinears;
  std::map<std::string, Coproduct> coproducts;
  std::map<std::string, LinMap> maps;
  std::map<std::string, Tensor> tensors;
  Bindings bindings;

  std::string resolve(const std::string& role) const;
  const Bilinear& bilinear(const std::string& role) const;
  const Coproduct& coproduct(const std::string& role) const;
  const LinMap& map(const std::string& role) const;
  const Tensor& tensor(const std::string& role) const;
  std::size_t space(const std::string& name) const;

  /// Q[q] if any component is polynomial.
  Ring ring() const;
  Env in_ring(Ring r) const;
};

/// Env with space "A" and every component of the presentation under its own name.
Env make_env(const Presentation& p, const Bindings& bindings = {});

enum class Verdict { Holds, Fails, HoldsOnLocus };
std::string to_string(Verdict v);

/// The set of q at which a family of polynomials vanishes, restricted to Q-points.
struct QLocus {
  enum class Kind { AllQ, FiniteSet, Empty };
  Kind kind = Kind::AllQ;
  std::vector<Rational> points;  // descending
  bool nonrational_flag = false;

  bool contains(const Rational& q0) const;
  /// "all q", "{}" or "{-1/2, -1}".
  std::string str() const;
  friend bool operator==(const QLocus&, const QLocus&) = default;
};

/// Common vanishing locus of everything divisible by g (g = 0 means all q).
QLocus locus_of(const Poly& g);

struct Witness {
  std::vector<std::size_t> tuple;  // basis index of each input
  std::size_t part = 0;            // which residual of a multi-part axiom
  Tensor residual;
};

struct AxiomReport {
  std::string axiom_id;
  Verdict verdict = Verdict::Holds;
  Ring ring = Ring::Rational;
  int residual_degree = -1;  // -1 when the residual vanishes identically
  std::optional<Witness> witness;
  std::optional<QLocus> locus;
  std::vector<std::string> input_spaces;
  /// One tensor per part; legs are the inputs followed by the output legs.
  std::vector<Tensor> residuals;
  /// gcd of all residual entries in Q[q]; zero when the residual vanishes.
  Poly residual_gcd;
  std::size_t tuples_checked = 0;
  std::size_t tuples_skipped = 0;
  std::string note;

  bool holds() const { return verdict == Verdict::Holds; }
};

struct ReportBundle {
  std::string name;
  std::vector<AxiomReport> reports;

  /// Holds if every report holds; otherwise the common locus decides.
  Verdict verdict() const;
  bool holds() const { return verdict() == Verdict::Holds; }
  QLocus locus() const;
  const AxiomReport& report(const std::string& id) const;
  void append(const ReportBundle& other);
};

/// One identity of the catalog: inputs are basis vectors of the listed spaces,
/// and the identity holds when every part evaluates to zero on every tuple.
struct AxiomSpec {
  enum class Kind { Multilinear, Nondegenerate };
  std::string id;
  std::string description;
  std::vector<std::string> input_spaces;
  std::vector<expr::Expr> parts;
  Kind kind = Kind::Multilinear;
  /// For Nondegenerate: the role of the form.
  std::string form_role;
};

const std::vector<AxiomSpec>& catalog();
/// Throws Error for an unknown id.
const AxiomSpec& axiom(const std::string& id);

/// Role names an axiom refers to, grouped by kind.
struct AxiomRoles {
  std::vector<std::string> bilinears, coproducts, maps, tensors;
};
AxiomRoles roles_of(const AxiomSpec& spec);

struct CheckOptions {
  /// Value substituted for q in the identity's coefficients.
  Scalar q = Scalar::symbol();
  /// Tuples rejected by the filter are skipped and counted.
  std::function<bool(std::span<const std::size_t>)> tuple_filter;
};

/// Evaluate one expression on the given input basis indices.
Tensor evaluate(const expr::Expr& e, const Env& env, std::span<const std::size_t> tuple,
                std::span<const std::string> input_spaces, const Scalar& q);

AxiomReport check_axiom(const std::string& id, const Env& env, const CheckOptions& opt = {});
AxiomReport check_axiom(const std::string& id, const Presentation& p, const Bindings& bindings = {},
                        const CheckOptions& opt = {});
ReportBundle check_axioms(const std::string& name, const std::vector<std::string>& ids, const Env& env,
                          const CheckOptions& opt = {});

/// Fill verdict, degree, gcd and locus of a report whose residuals and witness are set.
void finalize_report(AxiomReport& rep);

/// COMM, ASSOC, DERIV for D and ADMISS for Q on roles dot, D, Q.
ReportBundle is_admissible_quadruple(const Presentation& p, const Bindings& bindings = {});

}  // namespace novbi
