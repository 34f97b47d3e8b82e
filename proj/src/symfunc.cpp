#include "qch/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "qch/error.hpp"

namespace qch {

SymFunc SymFunc::schur(const Partition& shape) {
  SymFunc f;
  f.c_.emplace(shape, Scalar(1));
  return f;
}

Scalar SymFunc::coeff(const Partition& shape) const {
  auto it = c_.find(shape);
  return it == c_.end() ? Scalar(0) : it->second;
}

void SymFunc::add_term(const Partition& shape, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = c_.emplace(shape, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) c_.erase(it);
  }
}

void SymFunc::add_scaled(const SymFunc& o, const Scalar& s) {
  if (s.is_zero()) return;
  for (const auto& [shape, c] : o.c_) add_term(shape, c * s);
}

SymFunc SymFunc::operator-() const {
  SymFunc out;
  for (const auto& [shape, c] : c_) out.c_.emplace(shape, -c);
  return out;
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
  for (const auto& [shape, c] : o.c_) add_term(shape, c);
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) {
  for (const auto& [shape, c] : o.c_) add_term(shape, -c);
  return *this;
}

SymFunc SymFunc::scaled(const Scalar& s) const {
  SymFunc out;
  if (s.is_zero()) return out;
  for (const auto& [shape, c] : c_) out.c_.emplace(shape, c * s);
  return out;
}

SymFunc SymFunc::operator*(const SymFunc& o) const {
  const SymFunc* small = this;
  const SymFunc* big = &o;
  if (big->c_.size() < small->c_.size()) std::swap(small, big);
  SymFunc out;
  for (const auto& [mu, cmu] : small->c_) {
    for (const auto& [mono, ch] : jacobi_trudi(mu)) {
      SymFunc acc = *big;
      for (int k : mono) acc = pieri_apply(acc, k);
      out.add_scaled(acc, cmu * ch);
    }
  }
  return out;
}

SymFunc SymFunc::restrict_rows(int r) const {
  SymFunc out;
  for (const auto& [shape, c] : c_)
    if (shape.length() <= r) out.c_.emplace(shape, c);
  return out;
}

std::string SymFunc::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [shape, c] : c_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*s" << shape.str();
  }
  return os.str();
}

SymFunc h_func(int k) {
  if (k < 0) return SymFunc();
  if (k == 0) return SymFunc::one();
  return SymFunc::schur(Partition({k}));
}

SymFunc e_func(int k) {
  if (k < 0) return SymFunc();
  if (k == 0) return SymFunc::one();
  return SymFunc::schur(Partition(std::vector<int>(k, 1)));
}

std::vector<Partition> pieri_h(const Partition& shape, int k) {
  // horizontal strips: mu_1 >= shape_1 >= mu_2 >= shape_2 >= ...
  std::vector<Partition> out;
  const int rows = shape.length() + 1;
  std::vector<int> mu(rows);
  std::function<void(int, int)> rec = [&](int row, int left) {
    if (row == rows) {
      if (left != 0) return;
      std::vector<int> parts;
      for (int x : mu)
        if (x > 0) parts.push_back(x);
      out.emplace_back(parts);
      return;
    }
    int lo = shape.part(row);
    int hi = row == 0 ? shape.part(0) + left : shape.part(row - 1);
    hi = std::min(hi, shape.part(row) + left);
    for (int v = lo; v <= hi; ++v) {
      mu[row] = v;
      rec(row + 1, left - (v - shape.part(row)));
    }
    mu[row] = 0;
  };
  rec(0, k);
  return out;
}

SymFunc pieri_apply(const SymFunc& f, int k) {
  if (k == 0) return f;
  SymFunc out;
  for (const auto& [shape, c] : f.terms())
    for (const auto& mu : pieri_h(shape, k)) out.add_term(mu, c);
  return out;
}

HPoly jacobi_trudi(const Partition& shape) {
  const int l = shape.length();
  HPoly out;
  for (const auto& sigma : symmetric_group(l)) {
    HMonomial mono;
    bool dead = false;
    for (int i = 0; i < l && !dead; ++i) {
      int a = shape.part(i) - i + sigma(i);
      if (a < 0) dead = true;
      else if (a > 0) mono.push_back(a);
    }
    if (dead) continue;
    std::sort(mono.begin(), mono.end(), std::greater<int>());
    Scalar sign(sigma.length() % 2 == 0 ? 1 : -1);
    auto [it, inserted] = out.emplace(std::move(mono), sign);
    if (!inserted) {
      it->second += sign;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return out;
}

Scalar schur_at(const Partition& shape, const std::vector<Scalar>& xs) {
  const int r = static_cast<int>(xs.size());
  if (shape.length() > r) return Scalar(0);
  if (shape.length() == 0) return Scalar(1);
  // column-strict fillings with entries 1..r, accumulated row-major
  Scalar total(0);
  const int rows = shape.length();
  std::vector<std::vector<int>> fill(rows);
  for (int i = 0; i < rows; ++i) fill[i].assign(shape.part(i), 0);
  std::function<void(int, int, const Scalar&)> rec = [&](int i, int j, const Scalar& prod) {
    if (i == rows) {
      total += prod;
      return;
    }
    int nj = j + 1, ni = i;
    if (nj == shape.part(i)) {
      ni = i + 1;
      nj = 0;
    }
    int lo = 1;
    if (j > 0) lo = std::max(lo, fill[i][j - 1]);
    if (i > 0 && j < shape.part(i - 1)) lo = std::max(lo, fill[i - 1][j] + 1);
    for (int v = lo; v <= r; ++v) {
      fill[i][j] = v;
      rec(ni, nj, prod * xs[v - 1]);
    }
  };
  rec(0, 0, Scalar(1));
  return total;
}

Scalar specialize(const SymFunc& f, const std::vector<Scalar>& xs) {
  Scalar out(0);
  for (const auto& [shape, c] : f.terms()) out += c * schur_at(shape, xs);
  return out;
}

SymFunc char_map(const HeckeElement& h) {
  SymFunc out;
  for (const auto& shape : partitions_of(h.n()))
    out.add_term(shape, seminormal_rep(shape).of_element(h).trace());
  return out;
}

SymFunc power_char(int k) {
  if (k < 1) fail(Errc::bad_input, "power_char: degree must be positive");
  return char_map(HeckeElement::basis(Permutation::cycle(k, k)));
}

bool lemma2_check(int n) {
  std::vector<SymFunc> powers(n + 1);
  for (int k = 1; k <= n; ++k) powers[k] = power_char(k);

  SymFunc rhs_h;
  for (int k = 1; k <= n; ++k) rhs_h += h_func(n - k) * powers[k];
  if (h_func(n).scaled(q_int(n)) != rhs_h) return false;

  SymFunc rhs_e;
  for (int k = 1; k <= n; ++k) {
    Scalar coef = Scalar::q_power(-(k - 1));
    if ((k - 1) % 2 == 1) coef = -coef;
    rhs_e.add_scaled(e_func(n - k) * powers[k], coef);
  }
  // [n]_{1/q} = q^{-(n-1)} [n]_q
  Scalar n_inv_q = q_int(n) * Scalar::q_power(-(n - 1));
  return e_func(n).scaled(n_inv_q) == rhs_e;
}

}  // namespace qch
