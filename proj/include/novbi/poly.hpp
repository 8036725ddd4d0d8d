#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace novbi {

using Rational = mpq_class;

/// Parse "a", "-a" or "a/b" into a canonical rational. Throws std::invalid_argument.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);

/// Univariate polynomial over Q in the indeterminate q.
///
/// Coefficients are stored by ascending degree with no trailing zeros, so the
/// zero polynomial has an empty coefficient list and equality is structural.
class Poly {
 public:
  Poly() = default;
  Poly(long c);  // NOLINT: integer constants read naturally in formulas
  explicit Poly(const Rational& c);
  explicit Poly(std::vector<Rational> coeffs);

  /// The indeterminate q.
  static Poly q();
  static Poly monomial(const Rational& c, std::size_t degree);

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t d) const;
  Rational leading() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  Poly operator-() const;
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Rational eval(const Rational& x) const;
  /// Divide by the leading coefficient. The zero polynomial stays zero.
  Poly monic() const;
  /// Ascending-degree text such as "2+6*q-1/2*q^2".
  std::string str() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

struct PolyDivision {
  Poly quotient;
  Poly remainder;
};

/// Euclidean division over Q. Throws ZeroPolynomial when b is zero.
PolyDivision divmod(const Poly& a, const Poly& b);
/// Monic greatest common divisor; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

struct RationalRoots {
  std::vector<Rational> roots;  // distinct, in descending order
  bool has_nonrational_factor = false;
};

/// Rational roots via the rational root theorem on the primitive integer form.
/// The flag reports a leftover factor of positive degree once every rational
/// root has been divided out with its multiplicity. Throws ZeroPolynomial.
RationalRoots rational_roots(const Poly& p);

}  // namespace novbi
