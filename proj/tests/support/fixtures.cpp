#include "fixtures.hpp"

namespace novbi::testing {

Scalar frac(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return Scalar(r);
}

Tensor ivec(std::vector<long> entries) {
  std::vector<Scalar> s(entries.begin(), entries.end());
  return Tensor::vector(s);
}

LinMap imat(std::vector<std::vector<long>> rows) {
  std::vector<std::vector<Scalar>> s;
  for (const auto& r : rows) s.emplace_back(r.begin(), r.end());
  return LinMap::from_rows(s);
}

Presentation exnov1() {
  Presentation p;
  p.space = numbered_space(2);
  Bilinear dot(2);
  dot.set(0, 0, 0, 1);
  dot.set(0, 1, 1, 1);
  dot.set(1, 0, 1, 1);
  p.products["dot"] = dot;
  Coproduct delta(2);
  delta.set(1, 1, 1, 1);
  p.coproducts["delta"] = delta;
  p.maps["D"] = imat({{0, 0}, {0, 1}});
  p.maps["Q"] = imat({{1, 0}, {0, 0}});
  return p;
}

namespace {

Presentation zinbiel_base() {
  Presentation p;
  p.space = numbered_space(3);
  Bilinear z(3);
  z.set(0, 0, 1, 1);
  z.set(0, 1, 2, 2);
  z.set(1, 0, 2, 1);
  p.products["diamond"] = z;
  p.maps["D"] = imat({{1, 0, 0}, {0, 2, 0}, {0, 0, 3}});
  return p;
}

}  // namespace

Presentation zinb_deriv() {
  Presentation p = zinbiel_base();
  // Columns are images: Q(e1) = -e1 + e3.
  p.maps["Q"] = imat({{-1, 0, 0}, {0, -2, 0}, {1, 0, -3}});
  return p;
}

Presentation zinb_nonderiv() {
  Presentation p = zinbiel_base();
  p.maps["Q"] = imat({{3, 0, 0}, {0, 2, 0}, {1, 0, 1}});
  return p;
}

}  // namespace novbi::testing
