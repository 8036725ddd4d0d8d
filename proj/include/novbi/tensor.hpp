#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "novbi/scalar.hpp"

namespace novbi {

/// Dense tensor of any order with exact entries, stored row-major.
///
/// Order 0 holds a single scalar, order 1 is a vector, order 2 an element of
/// V1 (x) V2, and so on. All entries share the tensor's ring.
class Tensor {
 public:
  Tensor() : data_(1) {}
  explicit Tensor(std::vector<std::size_t> dims, Ring ring = Ring::Rational);

  /// The basis vector e_i of a dim-dimensional space.
  static Tensor unit(std::size_t dim, std::size_t i, Ring ring = Ring::Rational);
  static Tensor vector(std::vector<Scalar> entries, Ring ring = Ring::Rational);

  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t order() const { return dims_.size(); }
  std::size_t size() const { return data_.size(); }
  Ring ring() const { return ring_; }

  const Scalar& at(std::span<const std::size_t> idx) const { return data_[flat(idx)]; }
  const Scalar& at(std::initializer_list<std::size_t> idx) const {
    return at(std::span<const std::size_t>(idx.begin(), idx.size()));
  }
  void set(std::span<const std::size_t> idx, const Scalar& v);
  void set(std::initializer_list<std::size_t> idx, const Scalar& v) {
    set(std::span<const std::size_t>(idx.begin(), idx.size()), v);
  }
  void add(std::span<const std::size_t> idx, const Scalar& v);
  void add(std::initializer_list<std::size_t> idx, const Scalar& v) {
    add(std::span<const std::size_t>(idx.begin(), idx.size()), v);
  }

  const Scalar& operator[](std::size_t flat_index) const { return data_[flat_index]; }
  void set_flat(std::size_t flat_index, const Scalar& v);
  void add_flat(std::size_t flat_index, const Scalar& v);

  std::size_t flat(std::span<const std::size_t> idx) const;
  void unflatten(std::size_t flat_index, std::span<std::size_t> out) const;

  /// Leg k of the result is leg perm[k] of this tensor.
  Tensor permuted(std::span<const std::size_t> perm) const;
  Tensor permuted(std::initializer_list<std::size_t> perm) const {
    return permuted(std::span<const std::size_t>(perm.begin(), perm.size()));
  }
  /// The flip tau on an order-2 tensor.
  Tensor flipped() const;

  Tensor in_ring(Ring r) const;
  bool is_zero() const;
  /// Largest q-degree among entries, -1 if all entries vanish.
  int max_degree() const;

  Tensor& operator+=(const Tensor& o);
  Tensor& operator-=(const Tensor& o);
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  Tensor operator-() const;
  Tensor scaled(const Scalar& s) const;
  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.ring_ == b.ring_ && a.dims_ == b.dims_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Tensor& a, const Tensor& b) { return !(a == b); }

 private:
  void require_like(const Tensor& o) const;
  std::vector<std::size_t> dims_;
  Ring ring_ = Ring::Rational;
  std::vector<Scalar> data_;
};

/// Tensor product of two tensors; legs of `a` come first.
Tensor outer(const Tensor& a, const Tensor& b);
Tensor eval_q(const Tensor& t, const Rational& q0);

/// Linear map dom -> cod; column j is the image of e_j.
class LinMap {
 public:
  LinMap() : LinMap(0, 0) {}
  LinMap(std::size_t dom, std::size_t cod, Ring ring = Ring::Rational);
  explicit LinMap(Tensor matrix);

  static LinMap identity(std::size_t n, Ring ring = Ring::Rational);
  /// Build from rows of constants: rows[i][j] is the coefficient of e_i in the image of e_j.
  static LinMap from_rows(const std::vector<std::vector<Scalar>>& rows);

  std::size_t dom() const { return m_.dims()[1]; }
  std::size_t cod() const { return m_.dims()[0]; }
  Ring ring() const { return m_.ring(); }
  const Tensor& matrix() const { return m_; }

  const Scalar& operator()(std::size_t row, std::size_t col) const { return m_.at({row, col}); }
  void set(std::size_t row, std::size_t col, const Scalar& v) { m_.set({row, col}, v); }

  Tensor apply(const Tensor& v) const;
  /// this o inner.
  LinMap compose(const LinMap& inner) const;
  LinMap transpose() const;
  LinMap in_ring(Ring r) const { return LinMap(m_.in_ring(r)); }
  LinMap scaled(const Scalar& s) const { return LinMap(m_.scaled(s)); }
  bool is_zero() const { return m_.is_zero(); }

  friend LinMap operator+(const LinMap& a, const LinMap& b) { return LinMap(a.m_ + b.m_); }
  friend LinMap operator-(const LinMap& a, const LinMap& b) { return LinMap(a.m_ - b.m_); }
  LinMap operator-() const { return LinMap(-m_); }
  friend bool operator==(const LinMap& a, const LinMap& b) { return a.m_ == b.m_; }
  friend bool operator!=(const LinMap& a, const LinMap& b) { return !(a == b); }

 private:
  Tensor m_;
};

LinMap eval_q(const LinMap& m, const Rational& q0);
/// Block-diagonal map on the direct sum, first block first.
LinMap direct_sum(const LinMap& a, const LinMap& b);

/// Bilinear map U x V -> W with constants c(i, j, k): e_i * e_j = sum_k c(i,j,k) e_k.
/// Binary operations on one space, and representation actions A x V -> V, are both this type.
class Bilinear {
 public:
  Bilinear() : Bilinear(0, 0, 0) {}
  Bilinear(std::size_t left, std::size_t right, std::size_t out, Ring ring = Ring::Rational);
  /// A binary operation on an n-dimensional space.
  explicit Bilinear(std::size_t n, Ring ring = Ring::Rational) : Bilinear(n, n, n, ring) {}
  explicit Bilinear(Tensor constants);

  std::size_t left_dim() const { return c_.dims()[0]; }
  std::size_t right_dim() const { return c_.dims()[1]; }
  std::size_t out_dim() const { return c_.dims()[2]; }
  Ring ring() const { return c_.ring(); }
  const Tensor& constants() const { return c_; }

  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const { return c_.at({i, j, k}); }
  void set(std::size_t i, std::size_t j, std::size_t k, const Scalar& v) { c_.set({i, j, k}, v); }
  /// Set the full product e_i * e_j from a vector.
  void set_product(std::size_t i, std::size_t j, const Tensor& value);
  /// The product e_i * e_j as a vector.
  Tensor product(std::size_t i, std::size_t j) const;

  Tensor apply(const Tensor& x, const Tensor& y) const;
  /// L(x): v -> x * v.
  LinMap left_mult(const Tensor& x) const;
  /// R(y): v -> v * y.
  LinMap right_mult(const Tensor& y) const;
  /// (x, y) -> y * x. Needs equal left and right dimensions.
  Bilinear opposite() const;

  Bilinear in_ring(Ring r) const { return Bilinear(c_.in_ring(r)); }
  Bilinear scaled(const Scalar& s) const { return Bilinear(c_.scaled(s)); }
  bool is_zero() const { return c_.is_zero(); }
  friend Bilinear operator+(const Bilinear& a, const Bilinear& b) { return Bilinear(a.c_ + b.c_); }
  friend Bilinear operator-(const Bilinear& a, const Bilinear& b) { return Bilinear(a.c_ - b.c_); }
  friend bool operator==(const Bilinear& a, const Bilinear& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Bilinear& a, const Bilinear& b) { return !(a == b); }

 private:
  Tensor c_;
};

Bilinear eval_q(const Bilinear& b, const Rational& q0);

/// Linear map U -> V1 (x) V2 with constants d(i, j, k): delta(e_i) = sum d(i,j,k) e_j (x) e_k.
class Coproduct {
 public:
  Coproduct() : Coproduct(0, 0, 0) {}
  Coproduct(std::size_t in, std::size_t out1, std::size_t out2, Ring ring = Ring::Rational);
  explicit Coproduct(std::size_t n, Ring ring = Ring::Rational) : Coproduct(n, n, n, ring) {}
  explicit Coproduct(Tensor constants);

  std::size_t in_dim() const { return d_.dims()[0]; }
  std::size_t out1_dim() const { return d_.dims()[1]; }
  std::size_t out2_dim() const { return d_.dims()[2]; }
  Ring ring() const { return d_.ring(); }
  const Tensor& constants() const { return d_; }

  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const { return d_.at({i, j, k}); }
  void set(std::size_t i, std::size_t j, std::size_t k, const Scalar& v) { d_.set({i, j, k}, v); }
  /// Set delta(e_i) from an order-2 tensor.
  void set_image(std::size_t i, const Tensor& value);

  /// delta(x) as an order-2 tensor.
  Tensor apply(const Tensor& x) const;

  Coproduct in_ring(Ring r) const { return Coproduct(d_.in_ring(r)); }
  Coproduct scaled(const Scalar& s) const { return Coproduct(d_.scaled(s)); }
  bool is_zero() const { return d_.is_zero(); }
  friend Coproduct operator+(const Coproduct& a, const Coproduct& b) { return Coproduct(a.d_ + b.d_); }
  friend Coproduct operator-(const Coproduct& a, const Coproduct& b) { return Coproduct(a.d_ - b.d_); }
  friend bool operator==(const Coproduct& a, const Coproduct& b) { return a.d_ == b.d_; }
  friend bool operator!=(const Coproduct& a, const Coproduct& b) { return !(a == b); }

 private:
  Tensor d_;
};

Coproduct eval_q(const Coproduct& c, const Rational& q0);

/// Transposed constants: the product on the dual space is dual to the coproduct and vice versa.
Coproduct dual_coproduct(const Bilinear& b);
Bilinear dual_product(const Coproduct& c);

}  // namespace novbi
