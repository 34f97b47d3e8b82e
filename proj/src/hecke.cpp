#include "qch/hecke.hpp"

#include <algorithm>
#include <sstream>

#include "qch/error.hpp"

namespace qch {

HeckeElement HeckeElement::basis(const Permutation& w) {
  HeckeElement h(w.n());
  h.c_.emplace(w, Scalar(1));
  return h;
}

Scalar HeckeElement::coeff(const Permutation& w) const {
  auto it = c_.find(w);
  return it == c_.end() ? Scalar(0) : it->second;
}

void HeckeElement::add_term(const Permutation& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = c_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) c_.erase(it);
  }
}

void HeckeElement::add_scaled(const HeckeElement& o, const Scalar& s) {
  if (s.is_zero()) return;
  for (const auto& [w, c] : o.c_) add_term(w, c * s);
}

HeckeElement HeckeElement::operator-() const {
  HeckeElement out(n_);
  for (const auto& [w, c] : c_) out.c_.emplace(w, -c);
  return out;
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  for (const auto& [w, c] : o.c_) add_term(w, c);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
  for (const auto& [w, c] : o.c_) add_term(w, -c);
  return *this;
}

HeckeElement HeckeElement::scaled(const Scalar& s) const {
  HeckeElement out(n_);
  if (s.is_zero()) return out;
  for (const auto& [w, c] : c_) out.c_.emplace(w, c * s);
  return out;
}

HeckeElement gen_mult_left(int i, const HeckeElement& h) {
  const int n = h.n();
  const Scalar q = Scalar::q_power(1);
  const Scalar qm1 = q - Scalar(1);
  HeckeElement out(n);
  for (const auto& [w, c] : h.terms()) {
    // positions of the two values swapped by s_i (0-based values i-1, i)
    int pa = -1, pb = -1;
    for (int j = 0; j < n; ++j) {
      if (w(j) == i - 1) pa = j;
      if (w(j) == i) pb = j;
    }
    std::vector<int> img(n);
    for (int j = 0; j < n; ++j) img[j] = w(j);
    std::swap(img[pa], img[pb]);
    Permutation sw(img);
    if (pa < pb) {
      out.add_term(sw, c);  // l(s_i w) = l(w) + 1
    } else {
      out.add_term(w, c * qm1);
      out.add_term(sw, c * q);
    }
  }
  return out;
}

HeckeElement gen_mult_right(const HeckeElement& h, int i) {
  const int n = h.n();
  const Scalar q = Scalar::q_power(1);
  const Scalar qm1 = q - Scalar(1);
  HeckeElement out(n);
  for (const auto& [w, c] : h.terms()) {
    std::vector<int> img(n);
    for (int j = 0; j < n; ++j) img[j] = w(j);
    std::swap(img[i - 1], img[i]);
    Permutation ws(img);
    if (w(i - 1) < w(i)) {
      out.add_term(ws, c);
    } else {
      out.add_term(ws, c * q);
      out.add_term(w, c * qm1);
    }
  }
  return out;
}

HeckeElement HeckeElement::operator*(const HeckeElement& o) const {
  if (n_ != o.n_) fail(Errc::bad_input, "product of elements of different algebras");
  HeckeElement out(n_);
  // Expand through the factor with fewer terms, one reduced word at a time.
  if (term_count() <= o.term_count()) {
    for (const auto& [u, cu] : c_) {
      HeckeElement acc = o;
      auto word = u.reduced_word();
      for (auto it = word.rbegin(); it != word.rend(); ++it)
        acc = gen_mult_left(*it, acc);
      out.add_scaled(acc, cu);
    }
  } else {
    for (const auto& [v, cv] : o.c_) {
      HeckeElement acc = *this;
      for (int i : v.reduced_word()) acc = gen_mult_right(acc, i);
      out.add_scaled(acc, cv);
    }
  }
  return out;
}

std::string HeckeElement::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : c_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*T" << w.str();
  }
  return os.str();
}

Scalar chi_trace(const HeckeElement& h) {
  return h.coeff(Permutation::identity(h.n()));
}

Scalar bilinear_form(const HeckeElement& a, const HeckeElement& b) {
  if (a.n() != b.n()) fail(Errc::bad_input, "pairing of elements of different algebras");
  Scalar out(0);
  for (const auto& [u, cu] : a.terms()) {
    Scalar cv = b.coeff(u.inverse());
    if (cv.is_zero()) continue;
    out += cu * cv * Scalar::q_power(u.length());
  }
  return out;
}

HeckeElement murphy_l(int n, int k) {
  if (k < 1 || k > n) fail(Errc::bad_input, "murphy_l: index out of range");
  HeckeElement out(n);
  for (int i = 1; i < k; ++i)
    out.add_term(Permutation::transposition(n, i, k), Scalar::q_power(i - k));
  return out;
}

HeckeElement hecke_inverse(const HeckeElement& h) {
  const int n = h.n();
  auto group = symmetric_group(n);
  std::map<Permutation, int> idx;
  for (size_t j = 0; j < group.size(); ++j) idx.emplace(group[j], static_cast<int>(j));
  const int d = static_cast<int>(group.size());
  Matrix m(d, d);
  for (int col = 0; col < d; ++col) {
    HeckeElement prod = h * HeckeElement::basis(group[col]);
    for (const auto& [w, c] : prod.terms()) m.at(idx.at(w), col) = c;
  }
  Matrix e(d, 1);
  e.at(idx.at(Permutation::identity(n)), 0) = Scalar(1);
  Matrix sol = m.solve(e);  // right inverse == two-sided in finite dimension
  HeckeElement out(n);
  for (int j = 0; j < d; ++j) out.add_term(group[j], sol.at(j, 0));
  return out;
}

SeminormalRep::SeminormalRep(const Partition& shape)
    : shape_(shape), tableaux_(enumerate_syt(shape)) {
  const int n = static_cast<int>(shape.size());
  const int d = dim();
  const Scalar one(1);
  const Scalar q = Scalar::q_power(1);
  gen_.reserve(n > 0 ? n - 1 : 0);
  std::map<StandardTableau, int> pos;
  for (int a = 0; a < d; ++a) pos.emplace(tableaux_[a], a);
  for (int i = 1; i < n; ++i) {
    Matrix m(d, d);
    for (int a = 0; a < d; ++a) {
      const StandardTableau& t = tableaux_[a];
      if (t.row_of(i) == t.row_of(i + 1)) {
        m.at(a, a) = q;
      } else if (t.col_of(i) == t.col_of(i + 1)) {
        m.at(a, a) = -one;
      } else {
        int dd = t.content_of(i + 1) - t.content_of(i);
        Scalar ad = (q - one) / (one - Scalar::q_power(-dd));
        m.at(a, a) = ad;
        auto st = t.apply_si(i);
        m.at(pos.at(*st), a) = one + ad;  // column a holds the image of v_t
      }
    }
    gen_.push_back(std::move(m));
  }
}

const Matrix& SeminormalRep::of_perm(const Permutation& w) const {
  auto it = memo_.find(w);
  if (it != memo_.end()) return it->second;
  Matrix m(0, 0);
  int desc = -1;
  for (int j = 0; j + 1 < w.n(); ++j)
    if (w(j) > w(j + 1)) { desc = j + 1; break; }
  if (desc < 0) {
    m = Matrix::identity(dim());
  } else {
    // w = w' s_desc with l(w') = l(w) - 1, so rho(w) = rho(w') * gen(desc)
    Permutation shorter = w * Permutation::gen(w.n(), desc);
    m = of_perm(shorter) * gen_[desc - 1];
  }
  return memo_.emplace(w, std::move(m)).first->second;
}

Matrix SeminormalRep::of_element(const HeckeElement& h) const {
  Matrix out(dim(), dim());
  for (const auto& [w, c] : h.terms()) out += of_perm(w).scaled(c);
  return out;
}

const SeminormalRep& seminormal_rep(const Partition& shape) {
  static std::map<Partition, SeminormalRep> cache;
  auto it = cache.find(shape);
  if (it == cache.end()) it = cache.emplace(shape, SeminormalRep(shape)).first;
  return it->second;
}

Scalar irr_character(const Partition& shape, const Permutation& w) {
  return seminormal_rep(shape).of_perm(w).trace();
}

Scalar k_lambda(const Partition& shape) {
  Scalar out = Scalar::q_power(shape.n_stat());
  for (auto [row, col] : shape.cells())
    out *= q_int(shape.hook(row, col)).inv();
  return out;
}

HeckeElement primitive_idempotent(const StandardTableau& t) {
  const int n = static_cast<int>(t.shape().size());
  HeckeElement h = HeckeElement::unit(n);
  Scalar denom(1);
  for (int k = 2; k <= n; ++k) {
    const int ck = t.content_of(k);
    HeckeElement lk = murphy_l(n, k);
    for (int c : reachable_contents(k)) {
      if (c == ck) continue;
      HeckeElement factor = lk;
      factor.add_term(Permutation::identity(n), -q_int(c));
      h = h * factor;
      denom *= q_int(ck) - q_int(c);
    }
  }
  return h.scaled(denom.inv());
}

HeckeElement central_idempotent(const Partition& shape) {
  const int n = static_cast<int>(shape.size());
  HeckeElement out(n);
  for (const auto& t : enumerate_syt(shape)) out += primitive_idempotent(t);
  return out;
}

HeckeElement central_idempotent_from_chars(const Partition& shape, int n) {
  if (static_cast<int>(shape.size()) != n)
    fail(Errc::bad_input, "central idempotent: shape size must match algebra");
  HeckeElement out(n);
  const Scalar k = k_lambda(shape);
  for (const auto& w : symmetric_group(n)) {
    Scalar c = irr_character(shape, w);
    if (c.is_zero()) continue;
    out.add_term(w.inverse(), k * c * Scalar::q_power(-static_cast<long>(w.length())));
  }
  return out;
}

Scalar omega_eigenvalue(const Partition& shape, int r) {
  const int n = shape.size();
  Scalar out = Scalar::q_power(r * n);
  for (auto [row, col] : shape.cells()) {
    Scalar f = q_int(shape.content(row, col) + r);
    if (f.is_zero())
      fail(Errc::singular, "omega eigenvalue undefined: content " +
                               std::to_string(shape.content(row, col)) +
                               " hits -r");
    out *= f.inv();
  }
  return out;
}

HeckeElement omega_spectral(int n, int r) {
  HeckeElement out(n);
  for (const auto& shape : partitions_of(n))
    out.add_scaled(central_idempotent(shape), omega_eigenvalue(shape, r));
  return out;
}

HeckeElement omega_murphy(int n, int r) {
  HeckeElement out = HeckeElement::unit(n);
  const Scalar shift = q_int(-r);
  for (int k = 1; k <= n; ++k) {
    HeckeElement factor = murphy_l(n, k);
    factor.add_term(Permutation::identity(n), -shift);
    out = out * hecke_inverse(factor);
  }
  return out;
}

}  // namespace qch
