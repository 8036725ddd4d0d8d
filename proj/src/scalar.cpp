#include "novbi/scalar.hpp"

#include "novbi/error.hpp"

namespace novbi {

std::string to_string(Ring r) { return r == Ring::Rational ? "Q" : "Q[q]"; }

Scalar::Scalar(long v) : v_(v) {}
Scalar::Scalar(const Rational& v) : v_(v) {}

Scalar Scalar::poly(Poly p) {
  Scalar s;
  s.ring_ = Ring::Poly;
  s.v_ = std::move(p);
  return s;
}

Scalar Scalar::symbol() { return poly(Poly::q()); }

Scalar Scalar::zero(Ring r) { return r == Ring::Rational ? Scalar() : poly(Poly()); }

Scalar Scalar::one(Ring r) { return r == Ring::Rational ? Scalar(1) : poly(Poly(1)); }

Rational Scalar::to_rational() const {
  if (!v_.is_constant()) throw RingMismatch("scalar " + v_.str() + " is not a rational constant");
  return v_.coeff(0);
}

Scalar Scalar::in_ring(Ring r) const {
  if (r == ring_) return *this;
  if (r == Ring::Poly) return poly(v_);
  return Scalar(to_rational());
}

void Scalar::require_same(const Scalar& o) const {
  if (ring_ != o.ring_) {
    throw RingMismatch("scalar arithmetic between " + to_string(ring_) + " and " + to_string(o.ring_));
  }
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same(o);
  v_ += o.v_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same(o);
  v_ -= o.v_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same(o);
  if (v_.is_zero()) return *this;
  if (o.v_.is_zero()) {
    v_ = Poly();
    return *this;
  }
  v_ *= o.v_;
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  s.v_ = -s.v_;
  return s;
}

Scalar eval_q(const Scalar& a, const Rational& q0) {
  if (a.ring() == Ring::Rational) return a;
  return Scalar(a.value().eval(q0));
}

Scalar substitute(const Poly& coeff, const Scalar& at) {
  Scalar acc = Scalar::zero(at.ring());
  const auto& c = coeff.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= at;
    acc += Scalar(*it).in_ring(at.ring());
  }
  return acc;
}

}  // namespace novbi
