#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "novbi/bialgebra.hpp"
#include "novbi/error.hpp"

using namespace novbi;
using namespace novbi::testing;

TEST(Catalog, IdsAreUniqueAndResolvable) {
  std::set<std::string> seen;
  for (const auto& spec : catalog()) {
    EXPECT_TRUE(seen.insert(spec.id).second) << spec.id;
    EXPECT_EQ(&axiom(spec.id), &spec);
  }
  EXPECT_THROW(axiom("NO_SUCH_AXIOM"), Error);
  AxiomRoles roles = roles_of(axiom("ADMISS"));
  EXPECT_EQ(roles.bilinears, (std::vector<std::string>{"dot"}));
  // Roles are listed in order of first appearance: Q(a.b) - Q(a).b + a.D(b).
  EXPECT_EQ(roles.maps, (std::vector<std::string>{"Q", "D"}));
}

TEST(Axioms, InducedProductOfExNov1IsRightCommutative) {
  Presentation p = exnov1();
  Bilinear circ = induce_novikov(p.product("dot"), p.map("D"), p.map("Q"), Scalar(Rational(-1, 2)));
  EXPECT_TRUE(check_axiom("NOV_RCOMM", algebra_env({{"circ", circ}})).holds());
  EXPECT_TRUE(check_axiom("NOV_LSYM", algebra_env({{"circ", circ}})).holds());
}

TEST(Axioms, ZeroProductIsAssociative) {
  AxiomReport rep = check_axiom("ASSOC", algebra_env({{"dot", Bilinear(3)}}));
  EXPECT_TRUE(rep.holds());
  EXPECT_EQ(rep.residual_degree, -1);
  EXPECT_EQ(rep.tuples_checked, 27u);
}

TEST(Axioms, LeftSymmetryWitness) {
  Bilinear circ(2);
  circ.set(0, 1, 0, 1);
  AxiomReport rep = check_axiom("NOV_LSYM", algebra_env({{"circ", circ}}));
  EXPECT_EQ(rep.verdict, Verdict::Fails);
  ASSERT_TRUE(rep.witness.has_value());
  EXPECT_EQ(rep.witness->tuple, (std::vector<std::size_t>{0, 1, 1}));
  EXPECT_EQ(rep.witness->residual, ivec({1, 0}));
}

TEST(Axioms, AdmissibleQuadruples) {
  Presentation p = exnov1();
  EXPECT_TRUE(is_admissible_quadruple(p).holds());

  Presentation minus = p;
  minus.maps["Q"] = -p.map("D");
  EXPECT_TRUE(is_admissible_quadruple(minus).holds());

  Presentation id = p;
  id.maps["Q"] = LinMap::identity(2);
  ReportBundle b = is_admissible_quadruple(id);
  EXPECT_FALSE(b.holds());
  const AxiomReport& adm = b.report("ADMISS");
  ASSERT_TRUE(adm.witness.has_value());
  EXPECT_EQ(adm.witness->tuple, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(adm.witness->residual, ivec({0, 1}));
  EXPECT_TRUE(b.report("COMM").holds());
}

TEST(Axioms, BindingsRenameRoles) {
  Presentation z = zinb_deriv();
  Presentation p;
  p.space = z.space;
  p.products["star_product"] = descendent_commdiff(z.product("diamond"));
  p.maps = z.maps;
  EXPECT_THROW(check_axiom("COMM", p), MissingBinding);
  EXPECT_TRUE(check_axiom("COMM", p, {{"dot", "star_product"}}).holds());
}

TEST(Axioms, SymbolicResidualLocus) {
  // Compatibility residuals of exnov1 vanish at q = 0 and q = -1/2 only.
  Presentation p = exnov1();
  ReportBundle b = bialg_q_residuals(p, Scalar::symbol());
  EXPECT_EQ(b.verdict(), Verdict::HoldsOnLocus);
  EXPECT_EQ(b.locus().str(), "{0, -1/2}");
  const AxiomReport& first = b.report("BIALG_Q_1");
  EXPECT_EQ(first.ring, Ring::Poly);
  EXPECT_EQ(first.residual_gcd, (Poly::q() * (Poly::q() + Poly(Rational(1, 2)))));
}

TEST(Axioms, TupleFilterCountsSkips) {
  CheckOptions opt;
  opt.tuple_filter = [](std::span<const std::size_t> t) { return t[0] == 0; };
  AxiomReport rep = check_axiom("ASSOC", algebra_env({{"dot", exnov1().product("dot")}}), opt);
  EXPECT_EQ(rep.tuples_checked, 4u);
  EXPECT_EQ(rep.tuples_skipped, 4u);
}

TEST(Locus, Rendering) {
  EXPECT_EQ(locus_of(Poly()).str(), "all q");
  EXPECT_EQ(locus_of(Poly(3)).str(), "{}");
  QLocus l = locus_of((Poly::q() + Poly(Rational(1, 2))) * (Poly::q() + Poly(1)));
  EXPECT_EQ(l.str(), "{-1/2, -1}");
  EXPECT_TRUE(l.contains(Rational(-1)));
  EXPECT_FALSE(l.contains(Rational(0)));
  EXPECT_FALSE(l.nonrational_flag);
  QLocus irr = locus_of(Poly::q() * Poly::q() - Poly(2));
  EXPECT_EQ(irr.kind, QLocus::Kind::Empty);
  EXPECT_TRUE(irr.nonrational_flag);
}

TEST(Presentation, DualizeExNov1) {
  Presentation p = exnov1();
  Presentation d = dualize(p);
  const Bilinear& prod = d.product("delta");
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) EXPECT_EQ(prod(i, j, k), Scalar(i == 1 && j == 1 && k == 1 ? 1 : 0));
  EXPECT_EQ(d.map("D"), p.map("D").transpose());
  EXPECT_EQ(dualize(d), p);
}

TEST(Presentation, ValidateAndSpecialize) {
  Presentation p = exnov1();
  EXPECT_NO_THROW(p.validate());
  Presentation bad = p;
  bad.maps["D"] = LinMap::identity(3);
  EXPECT_THROW(bad.validate(), Error);

  Presentation sym = p.in_ring(Ring::Poly);
  sym.products["circ"] = induce_novikov(sym.product("dot"), sym.map("D"), sym.map("Q"), Scalar::symbol());
  Presentation at = specialize(sym, Rational(-1, 2));
  EXPECT_EQ(at.ring, Ring::Rational);
  EXPECT_EQ(at.product("circ"),
            induce_novikov(p.product("dot"), p.map("D"), p.map("Q"), Scalar(Rational(-1, 2))));
}
