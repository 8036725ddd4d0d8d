#include "properties.hpp"

#include <sstream>

#include "fixtures.hpp"
#include "novbi/bialgebra.hpp"
#include "novbi/ybe.hpp"
#include "oracle.hpp"
#include "random.hpp"

namespace novbi::testing {

std::string PropertyStats::summary() const {
  std::ostringstream os;
  os << name << ": " << cases << " cases, " << positives << " positive, " << negatives << " negative, "
     << failures.size() << " failures";
  for (std::size_t i = 0; i < failures.size() && i < 5; ++i) os << "\n  " << failures[i];
  return os.str();
}

Env specialize_env(const Env& env, const Rational& q0) {
  Env out = env;
  for (auto& [k, v] : out.bilinears) v = eval_q(v, q0);
  for (auto& [k, v] : out.coproducts) v = eval_q(v, q0);
  for (auto& [k, v] : out.maps) v = eval_q(v, q0);
  for (auto& [k, v] : out.tensors) v = eval_q(v, q0);
  return out;
}

namespace {

bool all_hold(const std::vector<std::string>& ids, const Env& env, const CheckOptions& opt = {}) {
  for (const auto& id : ids)
    if (!check_axiom(id, env, opt).holds()) return false;
  return true;
}

Rational random_rational(Gen& g) { return g.rational().to_rational(); }

const std::vector<std::string> kNovikov = {"NOV_LSYM", "NOV_RCOMM"};
const std::vector<std::string> kRep = {"REP_NOV_1", "REP_NOV_2", "REP_NOV_3", "REP_NOV_4"};

}  // namespace

PropertyStats induced_family_property(std::uint64_t seed, std::size_t cases) {
  PropertyStats s{"induced family"};
  Gen g(seed);
  for (std::size_t c = 0; c < cases; ++c) {
    std::size_t n = static_cast<std::size_t>(g.integer(1, 3));
    Presentation p = g.admissible_quadruple(n);
    ++s.cases;
    if (!is_admissible_quadruple(p).holds()) {
      s.failures.push_back("case " + std::to_string(c) + ": generator produced a non-admissible quadruple");
      continue;
    }
    ++s.positives;
    const Bilinear& dot = p.product("dot");
    const LinMap& D = p.map("D");
    const LinMap& Q = p.map("Q");
    Bilinear circ = induce_novikov(dot, D, Q, Scalar::symbol());
    for (const auto& id : kNovikov) {
      AxiomReport rep = check_axiom(id, algebra_env({{"circ", circ}}));
      if (!rep.holds() || rep.ring != Ring::Poly)
        s.failures.push_back("case " + std::to_string(c) + ": " + id + " " + to_string(rep.verdict));
    }

    // The dual coalgebra is co-admissible with D^T as its Q and Q^T as its D.
    Coproduct delta = dual_coproduct(dot);
    LinMap coD = Q.transpose(), coQ = D.transpose();
    Env coenv;
    coenv.spaces["A"] = n;
    coenv.coproducts["delta"] = delta;
    coenv.maps["D"] = coD;
    coenv.maps["Q"] = coQ;
    if (!check_axiom("CO_ADMISS", coenv).holds()) {
      s.failures.push_back("case " + std::to_string(c) + ": dual coalgebra not co-admissible");
      continue;
    }
    Coproduct Delta = induce_nov_coalg(delta, coQ, coD, Scalar::symbol());
    Env nenv;
    nenv.spaces["A"] = n;
    nenv.coproducts["Delta"] = Delta;
    for (const char* id : {"NOV_COALG_1", "NOV_COALG_2"}) {
      AxiomReport rep = check_axiom(id, nenv);
      if (!rep.holds()) s.failures.push_back("case " + std::to_string(c) + ": " + id + " " + to_string(rep.verdict));
    }
  }
  return s;
}

PropertyStats semidirect_iff_property(std::uint64_t seed, std::size_t cases) {
  PropertyStats s{"semidirect iff"};
  Gen g(seed);
  for (std::size_t c = 0; c < cases; ++c) {
    std::size_t n = static_cast<std::size_t>(g.integer(1, 3));
    Presentation p = g.admissible_quadruple(n);
    const Bilinear& dot = p.product("dot");
    const LinMap& D = p.map("D");
    const LinMap& Q = p.map("Q");
    Scalar q = g.rational();
    Bilinear circ = induce_novikov(dot, D, Q, q);

    RepNov rep;
    switch (g.integer(0, 3)) {
      case 0:
        rep = regular_rep(circ);
        break;
      case 1:
        rep = dual_rep_novikov(regular_rep(circ));
        break;
      case 2:
        rep = induced_rep_q(regular_rep(dot, D, Q), D, Q, q);
        break;
      default: {
        std::size_t m = static_cast<std::size_t>(g.integer(1, 2));
        rep = RepNov{Bilinear(n, m, m), Bilinear(n, m, m)};
      }
    }
    if (g.coin()) {
      std::size_t m = rep.carrier_dim();
      Bilinear noise = g.bilinear(n, m, m, 0.8);
      if (g.coin()) rep.left = rep.left + noise;
      else rep.right = rep.right + noise;
    }

    bool rep_ok = all_hold(kRep, rep_env({{"circ", circ}}, {}, {{"lact", rep.left}, {"ract", rep.right}},
                                         rep.carrier_dim()));
    Bilinear semi = semidirect_novikov(circ, rep);
    bool semi_ok = all_hold(kNovikov, algebra_env({{"circ", semi}}));
    ++s.cases;
    (rep_ok ? s.positives : s.negatives) += 1;
    if (rep_ok != semi_ok)
      s.failures.push_back("case " + std::to_string(c) + ": rep " + (rep_ok ? "holds" : "fails") +
                           " but semidirect product " + (semi_ok ? "holds" : "fails"));
  }
  return s;
}

namespace {

// Novikov side: NYBE(r) = 0 against T^r being an O-operator for (A*, L*star, -R*circ).
void nybe_case(PropertyStats& s, std::size_t c, const Bilinear& circ, const Tensor& r) {
  bool ybe = nybe_residual(r, circ).is_zero();
  RepNov coregular = dual_rep_novikov(regular_rep(circ));
  bool oop = oop_check(T_from_r(r), circ, coregular).holds();
  ++s.cases;
  (ybe ? s.positives : s.negatives) += 1;
  if (ybe != oop)
    s.failures.push_back("NYBE case " + std::to_string(c) + ": residual " + (ybe ? "zero" : "nonzero") +
                         " but O-operator check " + (oop ? "holds" : "fails"));
}

// Commutative side: AYBE(r) = 0 with both admissibility conditions, against
// T^r being an O-operator of (A, ., D, Q) for (A*, -L*, Q*, D*).
void aybe_case(PropertyStats& s, std::size_t c, const DiffAlgebra& alg, const Tensor& r) {
  bool ybe = aybe_residual(r, alg.op).is_zero() && r_admissibility(r, alg.D, alg.Q).holds();
  RepAdmDiff coregular = dual_rep_admdiff(regular_rep(alg.op, alg.D, alg.Q));
  bool oop = oop_check(T_from_r(r), alg, coregular).holds();
  ++s.cases;
  (ybe ? s.positives : s.negatives) += 1;
  if (ybe != oop)
    s.failures.push_back("AYBE case " + std::to_string(c) + ": admissible solution " + (ybe ? "yes" : "no") +
                         " but O-operator check " + (oop ? "holds" : "fails"));
}

Tensor perturb(Gen& g, const Tensor& r) {
  std::size_t n = r.dims()[0];
  Tensor noise({n, n});
  std::size_t i = static_cast<std::size_t>(g.integer(0, static_cast<long>(n) - 1));
  std::size_t j = static_cast<std::size_t>(g.integer(0, static_cast<long>(n) - 1));
  if (i == j) j = (j + 1) % n;
  Scalar v = g.coin() ? Scalar(1) : Scalar(-1);
  noise.set({i, j}, v);
  noise.set({j, i}, -v);
  return r + noise;
}

}  // namespace

PropertyStats oop_ybe_property(std::uint64_t seed, std::size_t cases) {
  PropertyStats s{"O-operator and Yang-Baxter"};
  Gen g(seed);
  const Presentation zinbs[2] = {zinb_deriv(), zinb_nonderiv()};
  for (std::size_t c = 0; c < cases; ++c) {
    long mode = g.integer(0, 2);
    if (mode < 2) {
      // Fixtures: the canonical r on the pre-Novikov and Zinbiel doubles of
      // the two Zinbiel algebras, and perturbations of it.
      bool deriv = g.coin();
      const Presentation& z = zinbs[deriv ? 0 : 1];
      DiffAlgebra zin{z.product("diamond"), z.map("D"), z.map("Q")};
      Scalar q = deriv ? g.rational() : Scalar(Rational(-1, 2));
      PreNovikov pn = pre_novikov_from_zinbiel(zin.op, zin.D, zin.Q, q);
      Bilinear circ = pre_novikov_double(pn).circ;
      SplitPresentation dbl = zinbiel_double(zin, z.space);
      DiffAlgebra alg{dbl.total.product("dot"), dbl.total.map("D"), dbl.total.map("Q")};
      Tensor r = canonical_r(3);
      if (mode == 1) r = perturb(g, r);
      nybe_case(s, c, circ, r);
      aybe_case(s, c, alg, r);
    } else {
      std::size_t n = static_cast<std::size_t>(g.integer(1, 3));
      Presentation p = g.admissible_quadruple(n);
      DiffAlgebra alg{p.product("dot"), p.map("D"), p.map("Q")};
      Bilinear circ = induce_novikov(alg.op, alg.D, alg.Q, g.rational());
      Tensor r = g.antisymmetric(n, 0.6);
      nybe_case(s, c, circ, r);
      aybe_case(s, c, alg, r);
    }
  }
  return s;
}

PropertyStats oracle_property(std::uint64_t seed, std::size_t cases) {
  PropertyStats s{"oracle equivalence"};
  Gen g(seed);
  const std::vector<std::string> ids = oracle_ids();
  for (std::size_t c = 0; c < cases; ++c) {
    std::size_t dim_a = static_cast<std::size_t>(g.integer(1, 3));
    std::size_t dim_v = static_cast<std::size_t>(g.integer(1, 2));
    bool symbolic = g.coin(0.3);
    Env env = g.wild_env(dim_a, dim_v, symbolic);
    Scalar q = (symbolic || g.coin()) ? Scalar::symbol() : g.rational();
    CheckOptions opt;
    opt.q = q;
    ++s.cases;
    for (const auto& id : ids) {
      AxiomReport rep = check_axiom(id, env, opt);
      rep.holds() ? ++s.positives : ++s.negatives;
      for (std::size_t part = 0; part < rep.residuals.size(); ++part) {
        const Tensor& full = rep.residuals[part];
        std::size_t n_in = rep.input_spaces.size();
        std::vector<std::size_t> tuple(n_in, 0);
        std::size_t count = 1;
        for (std::size_t k = 0; k < n_in; ++k) count *= full.dims()[k];
        for (std::size_t t = 0; t < count; ++t) {
          std::size_t rest = t;
          for (std::size_t k = n_in; k-- > 0;) {
            tuple[k] = rest % full.dims()[k];
            rest /= full.dims()[k];
          }
          Tensor got = residual_block(rep, part, tuple);
          Tensor want = oracle_residual(id, env, tuple, part, q);
          Ring common = (got.ring() == Ring::Poly || want.ring() == Ring::Poly) ? Ring::Poly : Ring::Rational;
          if (got.in_ring(common) != want.in_ring(common)) {
            s.failures.push_back("case " + std::to_string(c) + ": " + id + " part " + std::to_string(part) +
                                 " tuple " + std::to_string(t) + " differs from the naive expansion");
            break;
          }
        }
      }
    }
    if (!symbolic) {
      bool nondeg = check_axiom("FORM_NONDEG", env).holds();
      if (nondeg != oracle_nondegenerate(env.tensor("B")))
        s.failures.push_back("case " + std::to_string(c) + ": FORM_NONDEG disagrees with elimination");
    }
  }
  return s;
}

PropertyStats specialization_property(std::uint64_t seed, std::size_t cases) {
  PropertyStats s{"specialization soundness"};
  Gen g(seed);
  const auto& cat = catalog();
  for (std::size_t c = 0; c < cases; ++c) {
    ++s.cases;
    // A structured family that holds for all q, and a random one.
    std::size_t n = static_cast<std::size_t>(g.integer(1, 3));
    Presentation p = g.admissible_quadruple(n);
    Env family = algebra_env({{"circ", induce_novikov(p.product("dot"), p.map("D"), p.map("Q"), Scalar::symbol())}});
    Env wild = g.wild_env(static_cast<std::size_t>(g.integer(1, 2)), 1, true);

    std::vector<std::pair<std::string, const Env*>> checks;
    for (const auto& id : kNovikov) checks.emplace_back(id, &family);
    for (int k = 0; k < 4; ++k) {
      const AxiomSpec* spec;
      do {
        spec = &cat[static_cast<std::size_t>(g.integer(0, static_cast<long>(cat.size()) - 1))];
      } while (spec->kind != AxiomSpec::Kind::Multilinear);
      checks.emplace_back(spec->id, &wild);
    }

    std::vector<Rational> points;
    for (int k = 0; k < 20; ++k) points.push_back(random_rational(g));
    for (const auto& [id, env] : checks) {
      AxiomReport sym = check_axiom(id, *env);
      QLocus locus = sym.holds() ? QLocus{} : (sym.locus ? *sym.locus : QLocus{QLocus::Kind::Empty, {}, false});
      sym.holds() ? ++s.positives : ++s.negatives;
      std::vector<Rational> at = points;
      at.insert(at.end(), locus.points.begin(), locus.points.end());
      for (const auto& q0 : at) {
        CheckOptions opt;
        opt.q = Scalar(q0);
        bool holds = check_axiom(id, specialize_env(*env, q0), opt).holds();
        bool expected = sym.holds() || locus.contains(q0);
        if (holds != expected) {
          s.failures.push_back("case " + std::to_string(c) + ": " + id + " at q = " + q0.get_str() + " gives " +
                               (holds ? "holds" : "fails") + ", symbolic verdict " + to_string(sym.verdict));
          break;
        }
      }
    }
  }
  return s;
}

}  // namespace novbi::testing
