#pragma once

#include <map>
#include <string>

#include "qch/rational.hpp"

namespace qch {

// Laurent polynomial in the single variable p over the rationals.
// Invariant: the term map never stores a zero coefficient.
class LaurentPoly {
public:
  LaurentPoly() = default;
  LaurentPoly(const Rational& c);
  LaurentPoly(long c);

  static LaurentPoly monomial(const Rational& c, int e);
  static LaurentPoly var();  // p

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }

  // Exponent range; both require a nonzero polynomial.
  int low_exp() const;
  int high_exp() const;

  Rational coeff(int e) const;
  Rational leading() const;   // coefficient at high_exp
  Rational trailing() const;  // coefficient at low_exp

  LaurentPoly shifted(int k) const;  // multiply by p^k

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  // Exact division: true and sets q iff *this == d * q. d must be nonzero.
  bool try_divide(const LaurentPoly& d, LaurentPoly& q) const;

  // Monic gcd with low_exp 0; gcd(0,0) = 0. Unique up to that normalization.
  static LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

  // Evaluation at p = p0; p0 must be nonzero if negative exponents occur.
  Rational eval(const Rational& p0) const;

  size_t term_count() const { return terms_.size(); }
  const std::map<int, Rational>& terms() const { return terms_; }

  // Canonical text form, highest exponent first, e.g. "p^4 - 2*p^2 + 3/2".
  std::string str() const;

private:
  void add_term(int e, const Rational& c);
  std::map<int, Rational> terms_;
};

}  // namespace qch
