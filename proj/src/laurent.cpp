#include "qch/laurent.hpp"

#include <sstream>
#include <vector>

#include "qch/error.hpp"

namespace qch {

Rational rational_from_string(const std::string& s) {
  try {
    Rational x(s);
    x.canonicalize();
    return x;
  } catch (const std::invalid_argument&) {
    fail(Errc::bad_input, "not a rational: '" + s + "'");
  }
}

std::string to_string(const Rational& x) { return x.get_str(); }

Rational pow_rational(const Rational& x, long e) {
  if (e == 0) return Rational(1);
  if (x == 0) {
    if (e < 0) fail(Errc::division_by_zero, "0 raised to a negative power");
    return Rational(0);
  }
  Rational base = e < 0 ? Rational(1) / x : x;
  unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  Rational out(1);
  while (k) {
    if (k & 1) out *= base;
    base *= base;
    k >>= 1;
  }
  return out;
}

LaurentPoly::LaurentPoly(const Rational& c) {
  if (c != 0) terms_[0] = c;
}

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_[0] = Rational(c);
}

LaurentPoly LaurentPoly::monomial(const Rational& c, int e) {
  LaurentPoly f;
  if (c != 0) f.terms_[e] = c;
  return f;
}

LaurentPoly LaurentPoly::var() { return monomial(1, 1); }

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

int LaurentPoly::low_exp() const { return terms_.begin()->first; }
int LaurentPoly::high_exp() const { return terms_.rbegin()->first; }

Rational LaurentPoly::coeff(int e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational LaurentPoly::leading() const { return terms_.rbegin()->second; }
Rational LaurentPoly::trailing() const { return terms_.begin()->second; }

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly f;
  for (auto& [e, c] : terms_) f.terms_[e + k] = c;
  return f;
}

void LaurentPoly::add_term(int e, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_[e] = c;
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly f;
  for (auto& [e, c] : terms_) f.terms_[e] = -c;
  return f;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly f;
  for (auto& [ea, ca] : a.terms_)
    for (auto& [eb, cb] : b.terms_) f.add_term(ea + eb, ca * cb);
  return f;
}

namespace {

// Dense view with low exponent stripped: poly = p^off * sum coef[i] p^i.
struct Dense {
  int off = 0;
  std::vector<Rational> c;  // c.back() != 0 unless empty
  int deg() const { return static_cast<int>(c.size()) - 1; }
};

Dense to_dense(const LaurentPoly& f) {
  Dense d;
  if (f.is_zero()) return d;
  d.off = f.low_exp();
  d.c.assign(f.high_exp() - f.low_exp() + 1, Rational(0));
  for (auto& [e, co] : f.terms()) d.c[e - d.off] = co;
  return d;
}

LaurentPoly from_dense(const Dense& d) {
  LaurentPoly f;
  for (size_t i = 0; i < d.c.size(); ++i)
    if (d.c[i] != 0) f += LaurentPoly::monomial(d.c[i], d.off + static_cast<int>(i));
  return f;
}

void trim(Dense& d) {
  while (!d.c.empty() && d.c.back() == 0) d.c.pop_back();
  if (d.c.empty()) d.off = 0;
}

// Remainder of a by b in place (ordinary polynomials, offsets ignored).
void mod_inplace(std::vector<Rational>& a, const std::vector<Rational>& b) {
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
}

}  // namespace

bool LaurentPoly::try_divide(const LaurentPoly& d, LaurentPoly& q) const {
  if (d.is_zero()) fail(Errc::division_by_zero, "polynomial division by zero");
  if (is_zero()) {
    q = LaurentPoly();
    return true;
  }
  Dense a = to_dense(*this), b = to_dense(d);
  if (a.c.size() < b.c.size()) return false;
  std::vector<Rational> quot(a.c.size() - b.c.size() + 1, Rational(0));
  while (a.c.size() >= b.c.size() && !a.c.empty()) {
    Rational f = a.c.back() / b.c.back();
    size_t shift = a.c.size() - b.c.size();
    quot[shift] = f;
    for (size_t i = 0; i < b.c.size(); ++i) a.c[shift + i] -= f * b.c[i];
    while (!a.c.empty() && a.c.back() == 0) a.c.pop_back();
  }
  if (!a.c.empty()) return false;
  Dense res;
  res.off = to_dense(*this).off - b.off;
  res.c = std::move(quot);
  trim(res);
  q = from_dense(res);
  return true;
}

LaurentPoly LaurentPoly::gcd(const LaurentPoly& a, const LaurentPoly& b) {
  auto normalize = [](const LaurentPoly& f) {
    if (f.is_zero()) return f;
    LaurentPoly g = f.shifted(-f.low_exp());
    Rational lead = g.leading();
    LaurentPoly out;
    for (auto& [e, c] : g.terms_) out.terms_[e] = c / lead;
    return out;
  };
  if (a.is_zero()) return normalize(b);
  if (b.is_zero()) return normalize(a);
  std::vector<Rational> x = to_dense(a).c, y = to_dense(b).c;
  while (!y.empty()) {
    mod_inplace(x, y);
    std::swap(x, y);
  }
  Dense d;
  d.c = std::move(x);
  LaurentPoly g = from_dense(d);
  return normalize(g);
}

Rational LaurentPoly::eval(const Rational& p0) const {
  Rational out(0);
  for (auto& [e, c] : terms_) out += c * pow_rational(p0, e);
  return out;
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Rational c = it->second;
    int e = it->first;
    bool neg = c < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    Rational ac = neg ? Rational(-c) : c;
    bool unit_coeff = (ac == 1) && e != 0;
    if (!unit_coeff) os << ac.get_str();
    if (e != 0) {
      if (!unit_coeff) os << "*";
      os << "p";
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

}  // namespace qch
