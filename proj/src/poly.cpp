#include "novbi/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "novbi/error.hpp"

namespace novbi {

Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Poly::Poly(long c) : c_{Rational(c)} { trim(); }
Poly::Poly(const Rational& c) : c_{c} { trim(); }
Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::q() { return monomial(1, 1); }

Poly Poly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Poly::coeff(std::size_t d) const { return d < c_.size() ? c_[d] : Rational(0); }

Rational Poly::leading() const { return c_.empty() ? Rational(0) : c_.back(); }

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> out(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(out);
  trim();
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Rational Poly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  Poly r = *this;
  Rational lead = c_.back();
  for (auto& x : r.c_) x /= lead;
  return r;
}

std::string Poly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t d = 0; d < c_.size(); ++d) {
    const Rational& a = c_[d];
    if (a == 0) continue;
    Rational mag = abs(a);
    if (first) {
      if (a < 0) out << '-';
    } else {
      out << (a < 0 ? '-' : '+');
    }
    first = false;
    if (d == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << '*';
    out << 'q';
    if (d > 1) out << '^' << d;
  }
  return out.str();
}

PolyDivision divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw ZeroPolynomial("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  int db = b.degree();
  int da = a.degree();
  if (da < db) return {Poly(), a};
  std::vector<Rational> quot(static_cast<std::size_t>(da - db + 1));
  Rational lead = b.leading();
  for (int k = da - db; k >= 0; --k) {
    Rational f = rem[static_cast<std::size_t>(k + db)] / lead;
    quot[static_cast<std::size_t>(k)] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= f * b.coeff(static_cast<std::size_t>(j));
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

namespace {

std::vector<mpz_class> positive_divisors(mpz_class n) {
  n = abs(n);
  std::vector<std::pair<mpz_class, unsigned>> factors;
  for (mpz_class p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) factors.emplace_back(p, e);
  }
  if (n > 1) factors.emplace_back(n, 1);
  std::vector<mpz_class> divs{1};
  for (const auto& [p, e] : factors) {
    std::size_t base = divs.size();
    mpz_class pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

}  // namespace

RationalRoots rational_roots(const Poly& p) {
  if (p.is_zero()) throw ZeroPolynomial("rational_roots of the zero polynomial");
  RationalRoots out;
  Poly work = p.monic();
  // Zero as a root is handled separately so the constant term below is nonzero.
  if (work.coeff(0) == 0) {
    out.roots.emplace_back(0);
    std::size_t shift = 0;
    while (work.coeff(shift) == 0) ++shift;
    std::vector<Rational> rest(work.coeffs().begin() + static_cast<long>(shift), work.coeffs().end());
    work = Poly(std::move(rest));
  }
  if (work.degree() >= 1) {
    mpz_class lcm_den = 1;
    for (const auto& c : work.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> ints;
    for (const auto& c : work.coeffs()) ints.push_back(mpz_class(c * lcm_den));
    mpz_class content = 0;
    for (const auto& c : ints) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    for (auto& c : ints) c /= content;
    auto nums = positive_divisors(ints.front());
    auto dens = positive_divisors(ints.back());
    std::vector<Rational> candidates;
    for (const auto& n : nums) {
      for (const auto& d : dens) {
        Rational r(n, d);
        r.canonicalize();
        candidates.push_back(r);
        candidates.push_back(-r);
      }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& r : candidates) {
      if (work.degree() < 1) break;
      if (work.eval(r) != 0) continue;
      out.roots.push_back(r);
      Poly lin(std::vector<Rational>{-r, 1});
      while (work.degree() >= 1 && work.eval(r) == 0) work = divmod(work, lin).quotient;
    }
  }
  out.has_nonrational_factor = work.degree() >= 1;
  std::sort(out.roots.begin(), out.roots.end(), [](const Rational& a, const Rational& b) { return a > b; });
  return out;
}

}  // namespace novbi
