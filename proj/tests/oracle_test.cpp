#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "random.hpp"

using namespace novbi;
using namespace novbi::testing;

TEST(Oracle, CoversEveryMultilinearIdentity) {
  auto ids = oracle_ids();
  std::set<std::string> have(ids.begin(), ids.end());
  for (const auto& spec : catalog())
    if (spec.kind == AxiomSpec::Kind::Multilinear) EXPECT_TRUE(have.count(spec.id)) << spec.id;
}

TEST(Oracle, HandExpandedLeftSymmetry) {
  Bilinear circ(2);
  circ.set(0, 1, 0, 1);
  Env env = algebra_env({{"circ", circ}});
  std::vector<std::size_t> t{0, 1, 1};
  EXPECT_EQ(oracle_residual("NOV_LSYM", env, t, 0, Scalar(1)), ivec({1, 0}));
  std::vector<std::size_t> u{0, 1, 0};
  EXPECT_TRUE(oracle_residual("NOV_LSYM", env, u, 0, Scalar(1)).is_zero());
}

TEST(Oracle, ExampleBialgebraResidualsCarryQ) {
  // The first compatibility residual of exnov1 has gcd q(q + 1/2).
  Env env = make_env(exnov1());
  bool nonzero = false;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) {
      std::vector<std::size_t> t{a, b};
      Tensor r = oracle_residual("BIALG_Q_1", env, t, 0, Scalar::symbol());
      EXPECT_EQ(r.ring(), Ring::Poly);
      Tensor at_zero = eval_q(r, Rational(0)), at_half = eval_q(r, Rational(-1, 2));
      EXPECT_TRUE(at_zero.is_zero());
      EXPECT_TRUE(at_half.is_zero());
      nonzero = nonzero || !r.is_zero();
    }
  EXPECT_TRUE(nonzero);
}

TEST(Oracle, NondegenerateByElimination) {
  EXPECT_TRUE(oracle_nondegenerate(LinMap::identity(3).matrix()));
  EXPECT_FALSE(oracle_nondegenerate(imat({{1, 2}, {2, 4}}).matrix()));
  EXPECT_TRUE(oracle_nondegenerate(imat({{0, 1}, {1, 0}}).matrix()));
}

TEST(Oracle, TransportKeepsAdmissibility) {
  Gen g(5);
  for (int k = 0; k < 20; ++k) EXPECT_TRUE(is_admissible_quadruple(g.admissible_quadruple(3)).holds());
}
