#include "qch/scalar.hpp"

#include <cctype>
#include <sstream>

#include "qch/error.hpp"

namespace qch {

Scalar::Scalar(const LaurentPoly& n, const LaurentPoly& d) : num_(n), den_(d) {
  if (den_.is_zero()) fail(Errc::division_by_zero, "scalar with zero denominator");
  reduce_();
}

void Scalar::reduce_() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1L);
    return;
  }
  if (!den_.is_one()) {
    LaurentPoly g = LaurentPoly::gcd(num_, den_);
    if (!g.is_one()) {
      LaurentPoly qn, qd;
      bool okn = num_.try_divide(g, qn);
      bool okd = den_.try_divide(g, qd);
      if (!okn || !okd) fail(Errc::bad_input, "gcd does not divide its arguments");
      num_ = qn;
      den_ = qd;
    }
  }
  // Denominator's lowest term becomes exactly 1 * p^0.
  int e = den_.low_exp();
  Rational t = den_.trailing();
  if (e != 0 || t != 1) {
    LaurentPoly unit = LaurentPoly::monomial(Rational(1) / t, -e);
    num_ *= unit;
    den_ *= unit;
  }
}

Scalar Scalar::operator-() const {
  Scalar s;
  s.num_ = -num_;
  s.den_ = den_;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  // a/d1 + b/d2 = (a*(d2/g) + b*(d1/g)) / (d1*(d2/g)) with g = gcd(d1, d2).
  LaurentPoly g = LaurentPoly::gcd(den_, o.den_);
  LaurentPoly d1_red = den_, d2_red = o.den_;
  if (!g.is_one()) {
    den_.try_divide(g, d1_red);
    o.den_.try_divide(g, d2_red);
  }
  num_ = num_ * d2_red + o.num_ * d1_red;
  den_ = den_ * d2_red;
  reduce_();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  num_ *= o.num_;
  if (den_.is_one() && o.den_.is_one()) return *this;
  den_ *= o.den_;
  reduce_();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inv(); }

Scalar Scalar::inv() const {
  if (is_zero()) fail(Errc::division_by_zero, "inverse of zero scalar");
  return Scalar(den_, num_);
}

Rational Scalar::eval_at(const Rational& p0) const {
  Rational d = den_.eval(p0);
  if (d == 0) fail(Errc::eval_at_pole, "denominator vanishes at p0 = " + to_string(p0));
  return num_.eval(p0) / d;
}

std::string Scalar::str() const {
  if (den_.is_one()) return num_.str();
  std::ostringstream os;
  bool wrap_num = num_.term_count() > 1;
  os << (wrap_num ? "(" : "") << num_.str() << (wrap_num ? ")" : "");
  os << " / ";
  bool wrap_den = den_.term_count() > 1;
  os << (wrap_den ? "(" : "") << den_.str() << (wrap_den ? ")" : "");
  return os.str();
}

Scalar q_int(long n) {
  // [n]_q = (q^n - 1)/(q - 1) expands to a Laurent polynomial for every n.
  LaurentPoly f;
  if (n > 0) {
    for (long i = 0; i < n; ++i) f += LaurentPoly::monomial(1, static_cast<int>(2 * i));
  } else if (n < 0) {
    // [n]_q = -q^n [−n]_q
    for (long i = 0; i < -n; ++i) f -= LaurentPoly::monomial(1, static_cast<int>(2 * (n + i)));
  }
  return Scalar(f);
}

namespace {

struct Parser {
  const std::string& s;
  size_t i = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }

  bool peek(char c) {
    skip_ws();
    return i < s.size() && s[i] == c;
  }

  bool eat(char c) {
    if (!peek(c)) return false;
    ++i;
    return true;
  }

  [[noreturn]] void die(const std::string& msg) {
    fail(Errc::bad_input, "scalar parse error at position " + std::to_string(i) + ": " + msg +
                              " in '" + s + "'");
  }

  long parse_int() {
    skip_ws();
    size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    size_t digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
    if (!digits) die("expected integer");
    return std::stol(s.substr(start, i - start));
  }

  Scalar parse_atom() {
    skip_ws();
    if (i >= s.size()) die("unexpected end");
    char c = s[i];
    if (c == '(') {
      ++i;
      Scalar v = parse_expr();
      if (!eat(')')) die("expected ')'");
      return v;
    }
    if (c == 'p') {
      ++i;
      return Scalar::p_power(1);
    }
    if (c == 'q') {
      ++i;
      return Scalar::q_power(1);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      return Scalar(Rational(Integer(s.substr(start, i - start)), 1));
    }
    die("unexpected character");
  }

  Scalar parse_power() {
    Scalar base = parse_atom();
    if (eat('^')) {
      long e = parse_int();
      Scalar out(1L);
      Scalar b = e < 0 ? base.inv() : base;
      for (long k = 0; k < (e < 0 ? -e : e); ++k) out *= b;
      return out;
    }
    return base;
  }

  Scalar parse_term() {
    bool neg = false;
    skip_ws();
    while (peek('-') || peek('+')) {
      if (eat('-')) neg = !neg;
      else eat('+');
    }
    Scalar v = parse_power();
    for (;;) {
      if (eat('*')) {
        v *= parse_power();
      } else if (eat('/')) {
        v /= parse_power();
      } else {
        break;
      }
    }
    return neg ? -v : v;
  }

  Scalar parse_expr() {
    Scalar v = parse_term();
    for (;;) {
      skip_ws();
      if (i >= s.size()) break;
      if (s[i] == '+') {
        ++i;
        v += parse_term();
      } else if (s[i] == '-') {
        ++i;
        v -= parse_term();
      } else {
        break;
      }
    }
    return v;
  }
};

}  // namespace

Scalar parse_scalar(const std::string& text) {
  Parser p(text);
  Scalar v = p.parse_expr();
  p.skip_ws();
  if (p.i != text.size()) p.die("trailing input");
  return v;
}

}  // namespace qch
