#pragma once

#include <string>

#include "novbi/poly.hpp"

namespace novbi {

/// Which coefficient ring a value lives in: Q, or Q[q] with q the deformation parameter.
enum class Ring { Rational, Poly };

std::string to_string(Ring r);

/// An exact scalar tagged with its ring.
///
/// Arithmetic between different rings raises RingMismatch; use in_ring() to
/// promote a rational explicitly.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v);  // NOLINT: rational integer constant
  explicit Scalar(const Rational& v);

  static Scalar poly(Poly p);
  /// The indeterminate q, in the polynomial ring.
  static Scalar symbol();
  static Scalar zero(Ring r);
  static Scalar one(Ring r);

  Ring ring() const { return ring_; }
  bool is_zero() const { return v_.is_zero(); }
  bool is_constant() const { return v_.is_constant(); }
  const Poly& value() const { return v_; }
  int degree() const { return v_.degree(); }

  /// The constant value. Throws RingMismatch when a polynomial is not constant.
  Rational to_rational() const;
  /// Promotion Q -> Q[q] always succeeds; demotion requires a constant.
  Scalar in_ring(Ring r) const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  Scalar operator-() const;
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.ring_ == b.ring_ && a.v_ == b.v_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string str() const { return v_.str(); }

 private:
  void require_same(const Scalar& o) const;
  Ring ring_ = Ring::Rational;
  Poly v_;
};

/// Evaluate at q = q0. Rationals pass through unchanged.
Scalar eval_q(const Scalar& a, const Rational& q0);

/// Substitute a scalar for q in a coefficient polynomial. The result lives in
/// the ring of `at`.
Scalar substitute(const Poly& coeff, const Scalar& at);

}  // namespace novbi
