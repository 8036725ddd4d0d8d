#include "novbi/tensor.hpp"

#include <numeric>

#include "novbi/error.hpp"

namespace novbi {

namespace {

std::string dims_str(const std::vector<std::size_t>& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

}  // namespace

Tensor::Tensor(std::vector<std::size_t> dims, Ring ring) : dims_(std::move(dims)), ring_(ring) {
  std::size_t n = std::accumulate(dims_.begin(), dims_.end(), std::size_t{1}, std::multiplies<>());
  data_.assign(n, Scalar::zero(ring));
}

Tensor Tensor::unit(std::size_t dim, std::size_t i, Ring ring) {
  Tensor t({dim}, ring);
  t.data_.at(i) = Scalar::one(ring);
  return t;
}

Tensor Tensor::vector(std::vector<Scalar> entries, Ring ring) {
  Tensor t({entries.size()}, ring);
  for (std::size_t i = 0; i < entries.size(); ++i) t.set_flat(i, entries[i].in_ring(ring));
  return t;
}

std::size_t Tensor::flat(std::span<const std::size_t> idx) const {
  if (idx.size() != dims_.size()) throw DimensionMismatch("index order does not match tensor order");
  std::size_t f = 0;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (idx[k] >= dims_[k]) throw DimensionMismatch("index out of range for dims " + dims_str(dims_));
    f = f * dims_[k] + idx[k];
  }
  return f;
}

void Tensor::unflatten(std::size_t f, std::span<std::size_t> out) const {
  for (std::size_t k = dims_.size(); k-- > 0;) {
    out[k] = f % dims_[k];
    f /= dims_[k];
  }
}

void Tensor::set(std::span<const std::size_t> idx, const Scalar& v) { set_flat(flat(idx), v); }

void Tensor::add(std::span<const std::size_t> idx, const Scalar& v) { add_flat(flat(idx), v); }

void Tensor::set_flat(std::size_t f, const Scalar& v) {
  if (v.ring() != ring_) throw RingMismatch("entry ring does not match tensor ring");
  data_.at(f) = v;
}

void Tensor::add_flat(std::size_t f, const Scalar& v) { data_.at(f) += v; }

Tensor Tensor::permuted(std::span<const std::size_t> perm) const {
  if (perm.size() != dims_.size()) throw DimensionMismatch("permutation size does not match tensor order");
  std::vector<std::size_t> nd(dims_.size());
  for (std::size_t k = 0; k < perm.size(); ++k) nd[k] = dims_.at(perm[k]);
  Tensor out(nd, ring_);
  std::vector<std::size_t> idx(dims_.size()), nidx(dims_.size());
  for (std::size_t f = 0; f < data_.size(); ++f) {
    if (data_[f].is_zero()) continue;
    unflatten(f, idx);
    for (std::size_t k = 0; k < perm.size(); ++k) nidx[k] = idx[perm[k]];
    out.data_[out.flat(nidx)] = data_[f];
  }
  return out;
}

Tensor Tensor::flipped() const {
  if (order() != 2) throw DimensionMismatch("flip needs an order-2 tensor");
  return permuted({1, 0});
}

Tensor Tensor::in_ring(Ring r) const {
  if (r == ring_) return *this;
  Tensor out(dims_, r);
  for (std::size_t f = 0; f < data_.size(); ++f) out.data_[f] = data_[f].in_ring(r);
  return out;
}

bool Tensor::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

int Tensor::max_degree() const {
  int d = -1;
  for (const auto& s : data_) d = std::max(d, s.degree());
  return d;
}

void Tensor::require_like(const Tensor& o) const {
  if (dims_ != o.dims_) throw DimensionMismatch("tensor dims " + dims_str(dims_) + " vs " + dims_str(o.dims_));
  if (ring_ != o.ring_) throw RingMismatch("tensor arithmetic across rings");
}

Tensor& Tensor::operator+=(const Tensor& o) {
  require_like(o);
  for (std::size_t f = 0; f < data_.size(); ++f)
    if (!o.data_[f].is_zero()) data_[f] += o.data_[f];
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
  require_like(o);
  for (std::size_t f = 0; f < data_.size(); ++f)
    if (!o.data_[f].is_zero()) data_[f] -= o.data_[f];
  return *this;
}

Tensor Tensor::operator-() const {
  Tensor t = *this;
  for (auto& s : t.data_) s = -s;
  return t;
}

Tensor Tensor::scaled(const Scalar& s) const {
  Tensor t = *this;
  for (auto& x : t.data_)
    if (!x.is_zero()) x *= s;
  if (s.is_zero()) t = Tensor(dims_, ring_);
  return t;
}

Tensor outer(const Tensor& a, const Tensor& b) {
  if (a.ring() != b.ring()) throw RingMismatch("outer product across rings");
  std::vector<std::size_t> d = a.dims();
  d.insert(d.end(), b.dims().begin(), b.dims().end());
  Tensor out(d, a.ring());
  std::size_t nb = b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < nb; ++j) {
      if (b[j].is_zero()) continue;
      out.set_flat(i * nb + j, a[i] * b[j]);
    }
  }
  return out;
}

Tensor eval_q(const Tensor& t, const Rational& q0) {
  Tensor out(t.dims(), Ring::Rational);
  for (std::size_t f = 0; f < t.size(); ++f) out.set_flat(f, eval_q(t[f], q0));
  return out;
}

// ---- LinMap ----

LinMap::LinMap(std::size_t dom, std::size_t cod, Ring ring) : m_({cod, dom}, ring) {}

LinMap::LinMap(Tensor matrix) : m_(std::move(matrix)) {
  if (m_.order() != 2) throw DimensionMismatch("a linear map needs an order-2 matrix");
}

LinMap LinMap::identity(std::size_t n, Ring ring) {
  LinMap m(n, n, ring);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar::one(ring));
  return m;
}

LinMap LinMap::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  std::size_t cod = rows.size();
  std::size_t dom = cod ? rows[0].size() : 0;
  Ring ring = Ring::Rational;
  for (const auto& r : rows)
    for (const auto& s : r)
      if (s.ring() == Ring::Poly) ring = Ring::Poly;
  LinMap m(dom, cod, ring);
  for (std::size_t i = 0; i < cod; ++i) {
    if (rows[i].size() != dom) throw DimensionMismatch("ragged matrix rows");
    for (std::size_t j = 0; j < dom; ++j) m.set(i, j, rows[i][j].in_ring(ring));
  }
  return m;
}

Tensor LinMap::apply(const Tensor& v) const {
  if (v.order() != 1 || v.dims()[0] != dom()) throw DimensionMismatch("linear map applied to a vector of wrong size");
  if (v.ring() != ring()) throw RingMismatch("linear map applied across rings");
  Tensor out({cod()}, ring());
  for (std::size_t j = 0; j < dom(); ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < cod(); ++i) {
      const Scalar& a = (*this)(i, j);
      if (!a.is_zero()) out.add_flat(i, a * v[j]);
    }
  }
  return out;
}

LinMap LinMap::compose(const LinMap& inner) const {
  if (inner.cod() != dom()) throw DimensionMismatch("composition of incompatible maps");
  if (inner.ring() != ring()) throw RingMismatch("composition across rings");
  LinMap out(inner.dom(), cod(), ring());
  for (std::size_t i = 0; i < cod(); ++i)
    for (std::size_t k = 0; k < dom(); ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < inner.dom(); ++j) {
        const Scalar& b = inner(k, j);
        if (!b.is_zero()) out.m_.add({i, j}, a * b);
      }
    }
  return out;
}

LinMap LinMap::transpose() const { return LinMap(m_.flipped()); }

LinMap eval_q(const LinMap& m, const Rational& q0) { return LinMap(eval_q(m.matrix(), q0)); }

LinMap direct_sum(const LinMap& a, const LinMap& b) {
  if (a.ring() != b.ring()) throw RingMismatch("direct sum across rings");
  LinMap out(a.dom() + b.dom(), a.cod() + b.cod(), a.ring());
  for (std::size_t i = 0; i < a.cod(); ++i)
    for (std::size_t j = 0; j < a.dom(); ++j) out.set(i, j, a(i, j));
  for (std::size_t i = 0; i < b.cod(); ++i)
    for (std::size_t j = 0; j < b.dom(); ++j) out.set(a.cod() + i, a.dom() + j, b(i, j));
  return out;
}

// ---- Bilinear ----

Bilinear::Bilinear(std::size_t left, std::size_t right, std::size_t out, Ring ring) : c_({left, right, out}, ring) {}

Bilinear::Bilinear(Tensor constants) : c_(std::move(constants)) {
  if (c_.order() != 3) throw DimensionMismatch("a bilinear map needs order-3 constants");
}

void Bilinear::set_product(std::size_t i, std::size_t j, const Tensor& value) {
  if (value.order() != 1 || value.dims()[0] != out_dim()) throw DimensionMismatch("product value has wrong size");
  for (std::size_t k = 0; k < out_dim(); ++k) set(i, j, k, value[k].in_ring(ring()));
}

Tensor Bilinear::product(std::size_t i, std::size_t j) const {
  Tensor out({out_dim()}, ring());
  for (std::size_t k = 0; k < out_dim(); ++k) out.set_flat(k, (*this)(i, j, k));
  return out;
}

Tensor Bilinear::apply(const Tensor& x, const Tensor& y) const {
  if (x.order() != 1 || y.order() != 1 || x.dims()[0] != left_dim() || y.dims()[0] != right_dim())
    throw DimensionMismatch("bilinear map applied to vectors of wrong size");
  if (x.ring() != ring() || y.ring() != ring()) throw RingMismatch("bilinear map applied across rings");
  Tensor out({out_dim()}, ring());
  for (std::size_t i = 0; i < left_dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < right_dim(); ++j) {
      if (y[j].is_zero()) continue;
      Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < out_dim(); ++k) {
        const Scalar& c = (*this)(i, j, k);
        if (!c.is_zero()) out.add_flat(k, xy * c);
      }
    }
  }
  return out;
}

LinMap Bilinear::left_mult(const Tensor& x) const {
  LinMap m(right_dim(), out_dim(), ring());
  for (std::size_t j = 0; j < right_dim(); ++j) {
    Tensor col = apply(x, Tensor::unit(right_dim(), j, ring()));
    for (std::size_t k = 0; k < out_dim(); ++k) m.set(k, j, col[k]);
  }
  return m;
}

LinMap Bilinear::right_mult(const Tensor& y) const {
  LinMap m(left_dim(), out_dim(), ring());
  for (std::size_t i = 0; i < left_dim(); ++i) {
    Tensor col = apply(Tensor::unit(left_dim(), i, ring()), y);
    for (std::size_t k = 0; k < out_dim(); ++k) m.set(k, i, col[k]);
  }
  return m;
}

Bilinear Bilinear::opposite() const {
  if (left_dim() != right_dim()) throw DimensionMismatch("opposite product needs equal argument spaces");
  return Bilinear(c_.permuted({1, 0, 2}));
}

Bilinear eval_q(const Bilinear& b, const Rational& q0) { return Bilinear(eval_q(b.constants(), q0)); }

// ---- Coproduct ----

Coproduct::Coproduct(std::size_t in, std::size_t out1, std::size_t out2, Ring ring) : d_({in, out1, out2}, ring) {}

Coproduct::Coproduct(Tensor constants) : d_(std::move(constants)) {
  if (d_.order() != 3) throw DimensionMismatch("a coproduct needs order-3 constants");
}

void Coproduct::set_image(std::size_t i, const Tensor& value) {
  if (value.dims() != std::vector<std::size_t>{out1_dim(), out2_dim()})
    throw DimensionMismatch("coproduct image has wrong shape");
  for (std::size_t j = 0; j < out1_dim(); ++j)
    for (std::size_t k = 0; k < out2_dim(); ++k) set(i, j, k, value.at({j, k}).in_ring(ring()));
}

Tensor Coproduct::apply(const Tensor& x) const {
  if (x.order() != 1 || x.dims()[0] != in_dim()) throw DimensionMismatch("coproduct applied to a vector of wrong size");
  if (x.ring() != ring()) throw RingMismatch("coproduct applied across rings");
  Tensor out({out1_dim(), out2_dim()}, ring());
  std::size_t block = out1_dim() * out2_dim();
  for (std::size_t i = 0; i < in_dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t f = 0; f < block; ++f) {
      const Scalar& d = d_[i * block + f];
      if (!d.is_zero()) out.add_flat(f, x[i] * d);
    }
  }
  return out;
}

Coproduct eval_q(const Coproduct& c, const Rational& q0) { return Coproduct(eval_q(c.constants(), q0)); }

Coproduct dual_coproduct(const Bilinear& b) { return Coproduct(b.constants().permuted({2, 0, 1})); }

Bilinear dual_product(const Coproduct& c) { return Bilinear(c.constants().permuted({1, 2, 0})); }

}  // namespace novbi
