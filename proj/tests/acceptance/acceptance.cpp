// One pass/fail line per acceptance criterion, with wall-clock timings.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "negative.hpp"
#include "novbi/cli.hpp"
#include "novbi/io.hpp"
#include "novbi/liewindow.hpp"
#include "novbi/ybe.hpp"
#include "properties.hpp"

using namespace novbi;
using namespace novbi::testing;

namespace {

std::string fixture(const std::string& name) { return std::string(NOVBI_FIXTURE_DIR) + "/" + name; }

// Collects the reasons a criterion failed.
struct Check {
  std::vector<std::string> problems;
  void expect(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
};

struct Criterion {
  int number;
  std::string title;
  double budget_seconds;
  std::function<void(Check&)> body;
};

Scalar lin(long a, long b) { return Scalar::poly(Poly(a) + Poly(b) * Poly::q()); }

void exnov1_golden(Check& c) {
  std::ostringstream out, err;
  c.expect(run_cli({"verify", fixture("exnov1"), "--profile", "diff-asi"}, out, err) == 0, "verify diff-asi");

  std::ostringstream induced, err2;
  c.expect(run_cli({"induce", fixture("exnov1"), "--q", "-1/2"}, induced, err2) == 0, "induce exit code");
  Presentation p = parse_presentation(induced.str());
  const Bilinear& circ = p.product("circ");
  const Coproduct& Delta = p.coproduct("Delta");
  Bilinear want_circ(2);
  want_circ.set(0, 0, 0, frac(-1, 2));
  want_circ.set(0, 1, 1, Scalar(1));
  want_circ.set(1, 0, 1, frac(-1, 2));
  Coproduct want_Delta(2);
  want_Delta.set(1, 1, 1, frac(-1, 2));
  c.expect(circ == want_circ, "circ table");
  c.expect(Delta == want_Delta, "Delta table");
}

void examp2_locus(Check& c) {
  Presentation z = zinb_nonderiv();
  DiffAlgebra zin{z.product("diamond"), z.map("D"), z.map("Q")};
  SplitPresentation d = zinbiel_double(zin, z.space, Verify::Yes);
  QLocus locus = novikov_bialgebra_locus(d.total);
  c.expect(locus.kind == QLocus::Kind::FiniteSet && locus.str() == "{-1/2, -1}", "locus " + locus.str());
  c.expect(!locus.nonrational_flag, "nonrational flag");
  auto pts = annotate_zinbiel_locus(zin, locus);
  c.expect(pts.size() == 2 && pts[0].q == Rational(-1, 2) && pts[0].double_induced, "coincidence at -1/2");
  c.expect(pts.size() == 2 && pts[1].q == Rational(-1) && !pts[1].double_induced, "no coincidence at -1");
}

void zinb_deriv_all_q(Check& c) {
  Presentation z = zinb_deriv();
  DiffAlgebra zin{z.product("diamond"), z.map("D"), z.map("Q")};
  SplitPresentation d = zinbiel_double(zin, z.space, Verify::Yes);
  c.expect(novikov_bialgebra_locus(d.total).kind == QLocus::Kind::AllQ, "locus is all q");
  Scalar q = Scalar::symbol();
  InducedPair right = induce_pair(d.total, q);
  InducedPair down = pre_novikov_double(pre_novikov_from_zinbiel(zin.op, zin.D, zin.Q, q));
  c.expect(right.circ == down.circ, "products agree");
  c.expect(right.Delta == down.Delta, "coproducts agree");
  c.expect(right.circ(0, 0, 1) == lin(2, -2), "a sample entry is 2-2q");
}

void canonical_r_nybe(Check& c) {
  Presentation zd = zinb_deriv(), zn = zinb_nonderiv();
  Bilinear sym = pre_novikov_double(
                     pre_novikov_from_zinbiel(zd.product("diamond"), zd.map("D"), zd.map("Q"), Scalar::symbol()))
                     .circ;
  c.expect(nybe_residual(canonical_r(3).in_ring(Ring::Poly), sym).is_zero(), "derivation fixture, symbolic q");
  Bilinear half =
      pre_novikov_double(pre_novikov_from_zinbiel(zn.product("diamond"), zn.map("D"), zn.map("Q"), frac(-1, 2)))
          .circ;
  c.expect(nybe_residual(canonical_r(3), half).is_zero(), "non-derivation fixture, q = -1/2");
}

void polyalg(Check& c) {
  ReportBundle b = polyalg_window_check(8, Scalar::symbol());
  for (const auto& r : b.reports) c.expect(r.verdict == Verdict::Holds, r.axiom_id);
  c.expect(b.reports.size() == 7, "seven identities");
}

void lie_window(Check& c) {
  InducedPair pair = induce_pair(exnov1(), frac(-1, 2));
  Tensor e1 = Tensor::unit(2, 0), e2 = Tensor::unit(2, 1);
  for (long m = -3; m <= 3; ++m)
    for (long n = -3; n <= 3; ++n) {
      LaurentVector b = affine_bracket({e1, m}, {e2, n}, pair.circ);
      c.expect(b.degree == m + n - 1 && b.base == e2.scaled(frac(2 * m + n, 2)),
               "bracket at m=" + std::to_string(m) + " n=" + std::to_string(n));
    }
  for (long m = -3; m <= 3; ++m)
    for (long i = -5; i <= 1; ++i) {
      Tensor want({2, 2});
      want.set({1, 1}, frac(-2 * (i + 1) - m, 2));
      c.expect(cobracket_component(e2, m, -i - 2, m + i, pair.Delta) == want,
               "cobracket at m=" + std::to_string(m) + " i=" + std::to_string(i));
    }
  c.expect(window_lie_bialgebra_check(exnov1(), WindowSpec{-3, 3, frac(-1, 2)}).holds(), "window identities");
}

void properties(Check& c) {
  const std::size_t cases = 200;
  std::vector<PropertyStats> all = {induced_family_property(11, cases), semidirect_iff_property(23, cases),
                                    oop_ybe_property(37, cases), oracle_property(41, cases),
                                    specialization_property(53, cases)};
  for (const auto& s : all) {
    std::printf("      %s\n", s.summary().c_str());
    c.expect(s.ok() && s.cases >= cases, s.name);
  }
}

void negatives(Check& c) {
  std::vector<std::string> covered;
  for (const auto& nc : negative_controls()) {
    AxiomReport a = check_axiom(nc.axiom_id, nc.env, CheckOptions{nc.q});
    AxiomReport b = check_axiom(nc.axiom_id, nc.env, CheckOptions{nc.q});
    bool ok = a.verdict == Verdict::Fails && a.witness.has_value() && b.witness.has_value() &&
              a.witness->tuple == b.witness->tuple && a.witness->part == b.witness->part &&
              a.witness->residual == b.witness->residual;
    if (ok && nc.tuple) ok = a.witness->tuple == *nc.tuple;
    if (ok && nc.residual) ok = a.witness->residual == *nc.residual;
    c.expect(ok, nc.name);
    covered.push_back(nc.axiom_id);
  }
  for (const auto& spec : catalog())
    c.expect(std::find(covered.begin(), covered.end(), spec.id) != covered.end(), "no control for " + spec.id);
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "exnov1 golden tables", 0.1, exnov1_golden},
      {2, "non-derivation double locus {-1/2, -1}", 5, examp2_locus},
      {3, "derivation double: all q, two paths agree", 5, zinb_deriv_all_q},
      {4, "canonical r solves the NYBE", 2, canonical_r_nybe},
      {5, "polynomial algebra window N=8", 10, polyalg},
      {6, "completed Lie bialgebra window [-3, 3]", 2, lie_window},
      {7, "property suites", 60, properties},
      {8, "negative controls", 60, negatives},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check check;
    auto start = std::chrono::steady_clock::now();
    try {
      cr.body(check);
    } catch (const std::exception& e) {
      check.problems.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > cr.budget_seconds)
      check.problems.push_back("over budget (" + std::to_string(cr.budget_seconds) + " s)");
    bool ok = check.problems.empty();
    failed += !ok;
    std::printf("[%s] criterion %d: %s (%.3f s)\n", ok ? "PASS" : "FAIL", cr.number, cr.title.c_str(), secs);
    for (const auto& p : check.problems) std::printf("      - %s\n", p.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
