#include "qch/rmatrix.hpp"

#include <algorithm>

#include "qch/error.hpp"

namespace qch {

int tensor_dim(int r, int n) {
  int d = 1;
  for (int k = 0; k < n; ++k) d *= r;
  return d;
}

int flatten_index(const std::vector<int>& digits, int r) {
  int flat = 0;
  for (int d : digits) flat = flat * r + d;
  return flat;
}

std::vector<int> unflatten_index(int flat, int r, int n) {
  std::vector<int> digits(n);
  for (int k = n - 1; k >= 0; --k) {
    digits[k] = flat % r;
    flat /= r;
  }
  return digits;
}

int reverse_index(int flat, int r, int n) {
  auto digits = unflatten_index(flat, r, n);
  std::reverse(digits.begin(), digits.end());
  return flatten_index(digits, r);
}

TensorOperator::TensorOperator(int r, int n) : r_(r), n_(n), rows_(tensor_dim(r, n)) {}

TensorOperator TensorOperator::identity(int r, int n) {
  TensorOperator t(r, n);
  for (int i = 0; i < t.dim(); ++i) t.rows_[i].emplace(i, Scalar(1));
  return t;
}

Scalar TensorOperator::entry(int row, int col) const {
  auto it = rows_[row].find(col);
  return it == rows_[row].end() ? Scalar(0) : it->second;
}

void TensorOperator::add(int row, int col, const Scalar& v) {
  if (v.is_zero()) return;
  auto [it, inserted] = rows_[row].emplace(col, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) rows_[row].erase(it);
  }
}

TensorOperator TensorOperator::operator+(const TensorOperator& o) const {
  TensorOperator out = *this;
  out += o;
  return out;
}

TensorOperator TensorOperator::operator-(const TensorOperator& o) const {
  TensorOperator out = *this;
  for (int i = 0; i < dim(); ++i)
    for (const auto& [j, v] : o.rows_[i]) out.add(i, j, -v);
  return out;
}

TensorOperator& TensorOperator::operator+=(const TensorOperator& o) {
  for (int i = 0; i < dim(); ++i)
    for (const auto& [j, v] : o.rows_[i]) add(i, j, v);
  return *this;
}

TensorOperator TensorOperator::scaled(const Scalar& s) const {
  TensorOperator out(r_, n_);
  if (s.is_zero()) return out;
  for (int i = 0; i < dim(); ++i)
    for (const auto& [j, v] : rows_[i]) out.rows_[i].emplace(j, v * s);
  return out;
}

TensorOperator TensorOperator::operator*(const TensorOperator& o) const {
  TensorOperator out(r_, n_);
  for (int i = 0; i < dim(); ++i)
    for (const auto& [k, a] : rows_[i])
      for (const auto& [j, b] : o.rows_[k]) out.add(i, j, a * b);
  return out;
}

TensorOperator TensorOperator::tensor_identity(int extra) const {
  TensorOperator out(r_, n_ + extra);
  const int e = tensor_dim(r_, extra);
  for (int i = 0; i < dim(); ++i)
    for (const auto& [j, v] : rows_[i])
      for (int t = 0; t < e; ++t) out.rows_[i * e + t].emplace(j * e + t, v);
  return out;
}

bool TensorOperator::operator==(const TensorOperator& o) const {
  return r_ == o.r_ && n_ == o.n_ && rows_ == o.rows_;
}

bool TensorOperator::is_zero() const {
  for (const auto& row : rows_)
    if (!row.empty()) return false;
  return true;
}

Scalar TensorOperator::trace() const {
  Scalar t(0);
  for (int i = 0; i < dim(); ++i) {
    auto it = rows_[i].find(i);
    if (it != rows_[i].end()) t += it->second;
  }
  return t;
}

Matrix TensorOperator::dense() const {
  Matrix m(dim(), dim());
  for (int i = 0; i < dim(); ++i)
    for (const auto& [j, v] : rows_[i]) m.at(i, j) = v;
  return m;
}

TensorOperator kron_power(const Matrix& m, int r, int n) {
  TensorOperator out(r, n);
  const int dim = tensor_dim(r, n);
  for (int row = 0; row < dim; ++row) {
    auto rd = unflatten_index(row, r, n);
    for (int col = 0; col < dim; ++col) {
      auto cd = unflatten_index(col, r, n);
      Scalar v(1);
      for (int t = 0; t < n && !v.is_zero(); ++t) v *= m.at(rd[(size_t)t], cd[(size_t)t]);
      if (!v.is_zero()) out.add(row, col, v);
    }
  }
  return out;
}

HeckeSymmetry::HeckeSymmetry(
    int r, const std::vector<std::tuple<int, int, int, int, Scalar>>& entries)
    : r_(r), r_op_(r, 2), cols_(r * r) {
  if (r < 1) fail(Errc::bad_input, "symmetry rank must be positive");
  for (const auto& [k, l, i, j, coeff] : entries) {
    for (int idx : {k, l, i, j})
      if (idx < 1 || idx > r) fail(Errc::bad_input, "entry index out of range");
    r_op_.add((k - 1) * r + (l - 1), (i - 1) * r + (j - 1), coeff);
  }
  for (int row = 0; row < r * r; ++row)
    for (const auto& [col, v] : r_op_.row(row)) cols_[col].emplace_back(row, v);
}

HeckeSymmetry HeckeSymmetry::dj(int r) {
  const Scalar q = Scalar::q_power(1);
  const Scalar p = Scalar::q_half_power(1);
  std::vector<std::tuple<int, int, int, int, Scalar>> ent;
  for (int i = 1; i <= r; ++i) ent.emplace_back(i, i, i, i, q);
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j) {
      if (i < j) ent.emplace_back(i, j, i, j, q - Scalar(1));
      if (i != j) ent.emplace_back(j, i, i, j, p);
    }
  return HeckeSymmetry(r, ent);
}

std::vector<std::tuple<int, int, int, int, Scalar>> HeckeSymmetry::entries() const {
  std::vector<std::tuple<int, int, int, int, Scalar>> out;
  for (int row = 0; row < r_ * r_; ++row)
    for (const auto& [col, v] : r_op_.row(row))
      out.emplace_back(row / r_ + 1, row % r_ + 1, col / r_ + 1, col % r_ + 1, v);
  return out;
}

void HeckeSymmetry::ensure_closure() const {
  if (closure_done_) return;
  const int rr = r_ * r_;
  // Solve Pm * Rm2 = E with Pm[(i,j)][(p,q)] = P^{ip}_{jq},
  // Rm2[(p,q)][(k,l)] = R^{qk}_{pl}, E[(i,j)][(k,l)] = delta^i_l delta^k_j.
  // C traces P over the first slot pair, D over the second. Swapping the two
  // breaks the Schur specialization at diagonal points while leaving every
  // degree <= 2 trace invariant, so the assignment is pinned by that anchor.
  Matrix rm2(rr, rr);
  for (int p = 0; p < r_; ++p)
    for (int qq = 0; qq < r_; ++qq)
      for (int k = 0; k < r_; ++k)
        for (int l = 0; l < r_; ++l)
          rm2.at(p * r_ + qq, k * r_ + l) = r_op_.entry(qq * r_ + k, p * r_ + l);
  Matrix e(rr, rr);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < r_; ++j) e.at(i * r_ + j, j * r_ + i) = Scalar(1);
  Matrix pm(0, 0);
  try {
    pm = e * rm2.inverse();
  } catch (const Error&) {
    fail(Errc::not_closed, "no partial inverse: the contraction system is singular");
  }
  // repackage as P^{ab}_{cd} = Pm[(a,c)][(b,d)]
  auto pop = std::make_unique<TensorOperator>(r_, 2);
  for (int a = 0; a < r_; ++a)
    for (int c = 0; c < r_; ++c)
      for (int b = 0; b < r_; ++b)
        for (int d = 0; d < r_; ++d)
          pop->add(a * r_ + b, c * r_ + d, pm.at(a * r_ + c, b * r_ + d));
  c_ = Matrix(r_, r_);
  d_ = Matrix(r_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < r_; ++j) {
      Scalar ci(0), di(0);
      for (int l = 0; l < r_; ++l) {
        ci += pop->entry(l * r_ + i, l * r_ + j);
        di += pop->entry(i * r_ + l, j * r_ + l);
      }
      c_.at(i, j) = ci;
      d_.at(i, j) = di;
    }
  p_op_ = std::move(pop);
  closure_done_ = true;
}

const TensorOperator& HeckeSymmetry::p_op() const {
  ensure_closure();
  return *p_op_;
}

const Matrix& HeckeSymmetry::c_matrix() const {
  ensure_closure();
  return c_;
}

const Matrix& HeckeSymmetry::d_matrix() const {
  ensure_closure();
  return d_;
}

AxiomReport verify_axioms(const HeckeSymmetry& h) {
  AxiomReport rep;
  const int r = h.rank();
  const Scalar q = Scalar::q_power(1);
  TensorOperator r1 = rho_gen(h, 3, 1), r2 = rho_gen(h, 3, 2);
  rep.yang_baxter = (r1 * r2 * r1 == r2 * r1 * r2);
  TensorOperator rr = h.r_op();
  TensorOperator id2 = TensorOperator::identity(r, 2);
  rep.hecke_quadratic = ((rr - id2.scaled(q)) * (rr + id2)).is_zero();
  try {
    const TensorOperator& p = h.p_op();
    // both contractions against R must give the unit delta^i_l delta^k_j
    bool ok = true;
    for (int i = 0; i < r && ok; ++i)
      for (int j = 0; j < r && ok; ++j)
        for (int k = 0; k < r && ok; ++k)
          for (int l = 0; l < r && ok; ++l) {
            Scalar pr(0), rp(0);
            for (int a = 0; a < r; ++a)
              for (int b = 0; b < r; ++b) {
                pr += p.entry(i * r + a, j * r + b) * h.r_op().entry(b * r + k, a * r + l);
                rp += h.r_op().entry(i * r + a, j * r + b) * p.entry(b * r + k, a * r + l);
              }
            Scalar want((i == l && k == j) ? 1 : 0);
            ok = (pr == want) && (rp == want);
          }
    rep.closed = ok;
  } catch (const Error&) {
    rep.closed = false;
  }
  if (rep.closed) {
    Matrix cd = h.c_matrix() * h.d_matrix();
    Matrix dc = h.d_matrix() * h.c_matrix();
    Matrix want = Matrix::identity(r).scaled(Scalar::q_power(-(r + 1)));
    rep.cd_identity = (cd == want) && (dc == want);
  }
  return rep;
}

TensorOperator rho_gen(const HeckeSymmetry& h, int n, int i) {
  if (i < 1 || i >= n) fail(Errc::bad_input, "generator slot out of range");
  const int r = h.rank();
  TensorOperator out(r, n);
  const int dim = tensor_dim(r, n);
  const int right = tensor_dim(r, n - i - 1);  // slots after the pair
  const int pair = r * r * right;
  for (int col = 0; col < dim; ++col) {
    int rest = col / pair;             // slots before the pair
    int mid = (col / right) % (r * r);  // the (a,b) pair
    int suf = col % right;
    for (const auto& [kl, v] : h.cols_[mid])
      out.add(rest * pair + kl * right + suf, col, v);
  }
  return out;
}

TensorOperator rho_perm(const HeckeSymmetry& h, int n, const Permutation& w) {
  TensorOperator acc = TensorOperator::identity(h.rank(), n);
  for (int i : w.reduced_word()) acc = acc * rho_gen(h, n, i);
  return acc;
}

TensorOperator rho(const HeckeSymmetry& h, int n, const HeckeElement& x) {
  if (x.n() != n) fail(Errc::bad_input, "element lives in a different tensor degree");
  TensorOperator out(h.rank(), n);
  for (const auto& [w, c] : x.terms()) out += rho_perm(h, n, w).scaled(c);
  return out;
}

std::pair<TensorOperator, TensorOperator> symmetrizers(const HeckeSymmetry& h, int n) {
  const int r = h.rank();
  TensorOperator x = TensorOperator::identity(r, 1);
  TensorOperator y = x;
  const Scalar mqinv = -Scalar::q_power(-1);
  for (int m = 2; m <= n; ++m) {
    TensorOperator sum_x = TensorOperator::identity(r, m);
    TensorOperator sum_y = sum_x;
    TensorOperator term = sum_x;
    Scalar coef(1);
    for (int k = 1; k < m; ++k) {
      term = rho_gen(h, m, m - k) * term;
      sum_x += term;
      coef *= mqinv;
      sum_y += term.scaled(coef);
    }
    x = (sum_x * x.tensor_identity(1)).scaled(q_int(m).inv());
    // [m]_{1/q} = q^{-(m-1)} [m]_q
    Scalar m_inv_q = q_int(m) * Scalar::q_power(-(m - 1));
    y = (sum_y * y.tensor_identity(1)).scaled(m_inv_q.inv());
  }
  return {std::move(x), std::move(y)};
}

bool even_rank_check(const HeckeSymmetry& h, int r) {
  auto [x_top, y_top] = symmetrizers(h, r + 1);
  (void)x_top;
  if (!y_top.is_zero()) return false;
  auto [x, y] = symmetrizers(h, r);
  (void)x;
  return y.dense().rank() == 1;
}

Scalar braided_trace(const HeckeSymmetry& h, const TensorOperator& f) {
  if (f.rank_v() != h.rank()) fail(Errc::bad_input, "operator dimension mismatch");
  const int n = f.degree();
  const Matrix& c = h.c_matrix();
  Scalar t(0);
  for (int row = 0; row < f.dim(); ++row) {
    if (f.row(row).empty()) continue;
    auto jd = unflatten_index(row, h.rank(), n);
    for (const auto& [col, v] : f.row(row)) {
      auto id = unflatten_index(col, h.rank(), n);
      Scalar w = v;
      for (int k = 0; k < n && !w.is_zero(); ++k) w *= c.at(id[k], jd[k]);
      t += w;
    }
  }
  return t * Scalar::q_half_power(n * (h.rank() + 1));
}

Scalar quantum_rank(const Partition& shape, int r) {
  if (shape.length() > r) return Scalar(0);
  const int n = shape.size();
  Scalar out = Scalar::q_half_power(-n * (r - 1)) * Scalar::q_power(static_cast<int>(shape.n_stat()));
  for (auto [row, col] : shape.cells()) {
    out *= q_int(shape.content(row, col) + r);
    out *= q_int(shape.hook(row, col)).inv();
  }
  return out;
}

}  // namespace qch
