#include "novbi/linalg.hpp"

#include "novbi/error.hpp"

namespace novbi {

namespace {

using Rows = std::vector<std::vector<Scalar>>;

Rows to_rows(const Tensor& m) {
  if (m.order() != 2) throw DimensionMismatch("expected an order-2 matrix");
  Rows rows(m.dims()[0], std::vector<Scalar>(m.dims()[1]));
  for (std::size_t i = 0; i < m.dims()[0]; ++i)
    for (std::size_t j = 0; j < m.dims()[1]; ++j) rows[i][j] = m.at({i, j});
  return rows;
}

// Divide a row by the gcd of its entries so fraction-free elimination stays small.
void strip_content(std::vector<Scalar>& row) {
  Poly g;
  for (const auto& s : row) g = gcd(g, s.value());
  if (g.is_zero() || g == Poly(1)) return;
  for (auto& s : row) s = Scalar::poly(divmod(s.value(), g).quotient).in_ring(s.ring());
}

// Gauss-Jordan elimination: each pivot column is zero outside its pivot row.
// Over Q pivots are scaled to one; over Q[q] rows are cross-multiplied.
std::vector<std::size_t> reduce(Rows& a, std::size_t cols, Ring ring) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c].is_zero()) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    if (ring == Ring::Rational) {
      Scalar inv(Rational(1 / a[r][c].to_rational()));
      for (auto& x : a[r]) x *= inv;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      Scalar f = a[i][c];
      Scalar piv = a[r][c];
      for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] = piv * a[i][j] - f * a[r][j];
      if (ring == Ring::Poly) strip_content(a[i]);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::vector<Tensor> nullspace(const Tensor& matrix) {
  if (matrix.ring() != Ring::Rational) throw RingMismatch("nullspace basis needs rational entries");
  Rows a = to_rows(matrix);
  std::size_t cols = matrix.dims()[1];
  auto pivots = reduce(a, cols, Ring::Rational);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Tensor> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Tensor v({cols});
    v.set({f}, Scalar(1));
    for (std::size_t r = 0; r < pivots.size(); ++r)
      if (!a[r][f].is_zero()) v.set({pivots[r]}, -a[r][f]);
    basis.push_back(v);
  }
  return basis;
}

std::size_t rank(const Tensor& matrix) {
  Rows a = to_rows(matrix);
  return reduce(a, matrix.dims()[1], matrix.ring()).size();
}

std::optional<Tensor> kernel_vector(const Tensor& matrix) {
  Ring ring = matrix.ring();
  Rows a = to_rows(matrix);
  std::size_t cols = matrix.dims()[1];
  auto pivots = reduce(a, cols, ring);
  if (pivots.size() == cols) return std::nullopt;
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::size_t free_col = 0;
  while (is_pivot[free_col]) ++free_col;
  std::vector<Scalar> x(cols, Scalar::zero(ring));
  Scalar all = Scalar::one(ring);
  for (std::size_t r = 0; r < pivots.size(); ++r) all *= a[r][pivots[r]];
  x[free_col] = all;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    Scalar others = Scalar::one(ring);
    for (std::size_t s = 0; s < pivots.size(); ++s)
      if (s != r) others *= a[s][pivots[s]];
    x[pivots[r]] = -(a[r][free_col] * others);
  }
  if (ring == Ring::Poly) strip_content(x);
  return Tensor::vector(x, ring);
}

LinMap inverse(const LinMap& m) {
  if (m.dom() != m.cod()) throw DimensionMismatch("inverse of a non-square map");
  std::size_t n = m.dom();
  Rows a(n, std::vector<Scalar>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Scalar(m(i, j).to_rational());
    a[i][n + i] = Scalar(1);
  }
  auto pivots = reduce(a, n, Ring::Rational);
  if (pivots.size() != n) throw DegenerateForm("matrix is singular");
  LinMap out(n, n, Ring::Rational);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.set(i, j, a[i][n + j]);
  return out.in_ring(m.ring());
}

}  // namespace novbi
