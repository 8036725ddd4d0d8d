#include "novbi/liewindow.hpp"

#include <numeric>

#include "novbi/error.hpp"

namespace novbi {

namespace {

Scalar num(long v, Ring r) { return Scalar(v).in_ring(r); }

std::string degree_name(std::size_t basis, long degree) {
  return "e" + std::to_string(basis + 1) + " t^" + std::to_string(degree);
}

// Collects residuals of one windowed identity into a report.
struct Collector {
  AxiomReport rep;

  Collector(std::string id, Ring ring) {
    rep.axiom_id = std::move(id);
    rep.ring = ring;
    rep.note = "window-partial";
  }

  void add(std::vector<std::size_t> tuple, const Tensor& residual, const std::string& where) {
    ++rep.tuples_checked;
    if (residual.is_zero()) return;
    rep.residuals.push_back(residual);
    if (!rep.witness) {
      rep.witness = Witness{std::move(tuple), 0, residual};
      rep.note += "; first failure at " + where;
    }
  }

  AxiomReport done() {
    finalize_report(rep);
    return rep;
  }
};

// Apply a linear map to one leg of an order-2 tensor.
Tensor map_on_leg(const Tensor& t, const LinMap& m, std::size_t leg) {
  std::size_t n = t.dims()[0], p = t.dims()[1];
  Tensor out(leg == 0 ? std::vector<std::size_t>{m.cod(), p} : std::vector<std::size_t>{n, m.cod()}, t.ring());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < p; ++b) {
      const Scalar& c = t.at({a, b});
      if (c.is_zero()) continue;
      std::size_t src = leg == 0 ? a : b;
      for (std::size_t r = 0; r < m.cod(); ++r) {
        if (m(r, src).is_zero()) continue;
        if (leg == 0) out.add({r, b}, c * m(r, src));
        else out.add({a, r}, c * m(r, src));
      }
    }
  return out;
}

// ad_{a t^m} on an element of degree d: u -> m a o u - d u o a.
LinMap ad(const Bilinear& circ, const Tensor& a, long m, long d) {
  Ring r = circ.ring();
  return circ.left_mult(a).scaled(num(m, r)) - circ.right_mult(a).scaled(num(d, r));
}

// The cobracket restricted to one output bidegree, applied to one leg of an
// order-2 tensor whose leg has degree `deg`. Legs (j, k) replace that leg.
Tensor cobracket_on_leg(const Tensor& t, std::size_t leg, long deg, long j, long k, const Coproduct& Delta) {
  std::size_t n = Delta.in_dim();
  Tensor out({n, n, n}, t.ring());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Scalar& c = t.at({a, b});
      if (c.is_zero()) continue;
      std::size_t src = leg == 0 ? a : b;
      Tensor comp = cobracket_component(Tensor::unit(n, src, t.ring()), deg, j, k, Delta);
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
          const Scalar& v = comp.at({x, y});
          if (v.is_zero()) continue;
          if (leg == 0) out.add({x, y, b}, c * v);
          else out.add({a, x, y}, c * v);
        }
    }
  return out;
}

}  // namespace

LaurentVector affine_bracket(const LaurentVector& a, const LaurentVector& b, const Bilinear& circ) {
  Ring r = circ.ring();
  Tensor x = a.base.in_ring(r), y = b.base.in_ring(r);
  LaurentVector out;
  out.degree = a.degree + b.degree - 1;
  out.base = circ.apply(x, y).scaled(num(a.degree, r)) - circ.apply(y, x).scaled(num(b.degree, r));
  return out;
}

Tensor cobracket_component(const Tensor& a, long m, long j, long k, const Coproduct& Delta) {
  Ring r = Delta.ring();
  std::size_t n = Delta.in_dim();
  if (j + k != m - 2) return Tensor({n, n}, r);
  Tensor d = Delta.apply(a.in_ring(r));
  // i = -j-2 gives (i+1) a1 t^j (x) a2 t^k; i = -k-2 gives the flipped summand.
  return d.scaled(num(-(j + 1), r)) + d.flipped().scaled(num(k + 1, r));
}

Tensor cobracket_component(const Tensor& a, long m, long j, long k, const Coproduct& delta, const LinMap& D,
                           const LinMap& Q, const Scalar& q) {
  return cobracket_component(a, m, j, k, induce_nov_coalg(delta, Q, D, q));
}

ReportBundle window_lie_bialgebra_check(const Bilinear& circ_in, const Coproduct& Delta_in, long lo, long hi) {
  if (lo > hi) throw PreconditionFailed("empty degree window");
  Ring ring = (circ_in.ring() == Ring::Poly || Delta_in.ring() == Ring::Poly) ? Ring::Poly : Ring::Rational;
  Bilinear circ = circ_in.in_ring(ring);
  Coproduct Delta = Delta_in.in_ring(ring);
  std::size_t n = circ.out_dim();
  auto in_window = [&](long d) { return d >= lo && d <= hi; };
  auto off = [&](long d) { return static_cast<std::size_t>(d - lo); };
  auto unit = [&](std::size_t i) { return Tensor::unit(n, i, ring); };
  auto br = [&](const Tensor& x, long m, const Tensor& y, long p) {
    return affine_bracket({x, m}, {y, p}, circ).base;
  };

  Collector skew("LIE_SKEW", ring), jacobi("LIE_JACOBI", ring), coskew("COBRACKET_SKEW", ring),
      cojacobi("CO_JACOBI", ring), cocycle("COCYCLE", ring);

  for (std::size_t a = 0; a < n; ++a)
    for (long m = lo; m <= hi; ++m)
      for (std::size_t b = 0; b < n; ++b)
        for (long p = lo; p <= hi; ++p) {
          Tensor res = br(unit(a), m, unit(b), p) + br(unit(b), p, unit(a), m);
          skew.add({a, b, off(m), off(p)}, res, degree_name(a, m) + ", " + degree_name(b, p));
        }

  for (std::size_t a = 0; a < n; ++a)
    for (long m = lo; m <= hi; ++m)
      for (std::size_t b = 0; b < n; ++b)
        for (long p = lo; p <= hi; ++p)
          for (std::size_t c = 0; c < n; ++c)
            for (long s = lo; s <= hi; ++s) {
              if (!in_window(p + s - 1) || !in_window(s + m - 1) || !in_window(m + p - 1)) {
                ++jacobi.rep.tuples_skipped;
                continue;
              }
              Tensor x = unit(a), y = unit(b), z = unit(c);
              Tensor res = br(x, m, br(y, p, z, s), p + s - 1) + br(y, p, br(z, s, x, m), s + m - 1) +
                           br(z, s, br(x, m, y, p), m + p - 1);
              jacobi.add({a, b, c, off(m), off(p), off(s)}, res,
                         degree_name(a, m) + ", " + degree_name(b, p) + ", " + degree_name(c, s));
            }

  for (std::size_t a = 0; a < n; ++a)
    for (long m = lo; m <= hi; ++m) {
      Tensor x = unit(a);
      for (long j = lo; j <= hi; ++j) {
        long k = m - 2 - j;
        if (!in_window(k)) continue;
        Tensor res = cobracket_component(x, m, j, k, Delta) + cobracket_component(x, m, k, j, Delta).flipped();
        coskew.add({a, off(m), off(j), off(k)}, res,
                   degree_name(a, m) + " in bidegree (" + std::to_string(j) + ", " + std::to_string(k) + ")");
      }
      for (long j = lo; j <= hi; ++j)
        for (long k = lo; k <= hi; ++k) {
          long l = m - 4 - j - k;
          if (!in_window(l)) continue;
          // (id (x) delta)delta at (j, k, l) passes through degree k + l + 2 in the second leg.
          auto right_then = [&](long dj, long dk, long dl) {
            return cobracket_on_leg(cobracket_component(x, m, dj, dk + dl + 2, Delta), 1, dk + dl + 2, dk, dl, Delta);
          };
          Tensor first = right_then(j, k, l);
          Tensor swapped = right_then(k, j, l).permuted({1, 0, 2});
          Tensor left = cobracket_on_leg(cobracket_component(x, m, j + k + 2, l, Delta), 0, j + k + 2, j, k, Delta);
          cojacobi.add({a, off(m), off(j), off(k), off(l)}, first - swapped - left,
                       degree_name(a, m) + " in tridegree (" + std::to_string(j) + ", " + std::to_string(k) + ", " +
                           std::to_string(l) + ")");
        }
    }

  for (std::size_t a = 0; a < n; ++a)
    for (long m = lo; m <= hi; ++m)
      for (std::size_t b = 0; b < n; ++b)
        for (long p = lo; p <= hi; ++p) {
          Tensor x = unit(a), y = unit(b);
          Tensor xy = br(x, m, y, p);
          for (long j = lo; j <= hi; ++j) {
            long k = m + p - 3 - j;
            if (!in_window(k)) continue;
            Tensor lhs = cobracket_component(xy, m + p - 1, j, k, Delta);
            // (ad_u (x) 1 + 1 (x) ad_u) delta(v) in bidegree (j, k).
            auto acted = [&](const Tensor& u, long du, const Tensor& v, long dv) {
              long j1 = j - du + 1, k1 = k - du + 1;
              Tensor t1 = map_on_leg(cobracket_component(v, dv, j1, k, Delta), ad(circ, u, du, j1), 0);
              Tensor t2 = map_on_leg(cobracket_component(v, dv, j, k1, Delta), ad(circ, u, du, k1), 1);
              return t1 + t2;
            };
            Tensor res = lhs - acted(x, m, y, p) + acted(y, p, x, m);
            cocycle.add({a, b, off(m), off(p), off(j), off(k)}, res,
                        degree_name(a, m) + ", " + degree_name(b, p) + " in bidegree (" + std::to_string(j) + ", " +
                            std::to_string(k) + ")");
          }
        }

  ReportBundle bundle;
  bundle.name = "completed Lie bialgebra on degrees " + std::to_string(lo) + ".." + std::to_string(hi) + " (window-partial)";
  bundle.reports = {skew.done(), jacobi.done(), coskew.done(), cojacobi.done(), cocycle.done()};
  return bundle;
}

ReportBundle window_lie_bialgebra_check(const Presentation& p, const WindowSpec& w, const Bindings& bindings) {
  require(check_diff_asi_bialgebra(p, bindings), "window_lie_bialgebra_check");
  require(bialg_q_residuals(p, w.q, bindings), "window_lie_bialgebra_check at q = " + w.q.str());
  InducedPair pair = induce_pair(p, w.q, bindings);
  return window_lie_bialgebra_check(pair.circ, pair.Delta, w.deg_min, w.deg_max);
}

InducedPair polyalg_family(unsigned N, const Scalar& q) {
  Ring r = q.ring();
  std::size_t dim = N + 1;
  Scalar one = Scalar::one(r);
  InducedPair out{Bilinear(dim, r), Coproduct(dim, r)};
  for (std::size_t m = 0; m < dim; ++m)
    for (std::size_t n = 1; n < dim; ++n)
      if (m + n - 1 <= N) out.circ.set(m, n, m + n - 1, (one - q) * num(static_cast<long>(n), r));
  for (std::size_t n = 2; n < dim; ++n)
    for (std::size_t i = 1; i < n; ++i) out.Delta.set(n, n - 1 - i, i - 1, (q - one) * num(static_cast<long>(i), r));
  return out;
}

ReportBundle polyalg_window_check(unsigned N, const Scalar& q) {
  if (N < 2) throw PreconditionFailed("polyalg_window_check needs N >= 2");
  InducedPair fam = polyalg_family(N, q);
  Env env = algebra_env({{"circ", fam.circ}});
  env.coproducts["Delta"] = fam.Delta;
  CheckOptions opt;
  opt.tuple_filter = [N](std::span<const std::size_t> t) {
    return std::accumulate(t.begin(), t.end(), std::size_t{0}) <= N;
  };
  ReportBundle b = check_axioms("polynomial algebra up to degree " + std::to_string(N) + " (window-partial)",
                                {"NOV_LSYM", "NOV_RCOMM", "NOV_COALG_1", "NOV_COALG_2", "NOV_BIALG_1", "NOV_BIALG_2",
                                 "NOV_BIALG_3"},
                                env, opt);
  for (auto& r : b.reports) r.note = "window-partial";
  return b;
}

}  // namespace novbi
