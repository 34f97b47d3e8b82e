#pragma once

#include <string>

#include "qch/laurent.hpp"

namespace qch {

// Element of the fraction field Q(p), always stored reduced. q means p^2
// throughout, so half-integer powers of q are honest monomials in p.
//
// Canonical form: gcd(num, den) = 1 and the denominator's lowest term is
// exactly 1 * p^0. Equality is therefore componentwise.
class Scalar {
public:
  Scalar() : num_(), den_(1L) {}
  Scalar(long c) : num_(c), den_(1L) {}
  Scalar(const Rational& c) : num_(c), den_(1L) {}
  Scalar(const LaurentPoly& n) : num_(n), den_(1L) {}
  Scalar(const LaurentPoly& n, const LaurentPoly& d);

  static Scalar p_power(int k) { return Scalar(LaurentPoly::monomial(1, k)); }
  static Scalar q_power(int k) { return p_power(2 * k); }
  // q^{k/2} = p^k, used by the twist normalizations.
  static Scalar q_half_power(int k) { return p_power(k); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  Scalar inv() const;

  bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Exact evaluation at p = p0; fails with eval_at_pole if den(p0) = 0.
  Rational eval_at(const Rational& p0) const;

  std::string str() const;

private:
  void reduce_();
  LaurentPoly num_, den_;
};

// q-integer [n]_q = (q^n - 1)/(q - 1) as a Laurent polynomial in p; defined for
// every integer n, e.g. [-r]_q = -q^{-r}[r]_q and [0]_q = 0.
Scalar q_int(long n);

// Parses sums/products/quotients of integers, rationals a/b, p and q (= p^2),
// with ^ for integer exponents and parentheses. Example: "p^2-1", "q/(q-1)".
Scalar parse_scalar(const std::string& text);

}  // namespace qch
