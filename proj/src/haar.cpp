#include "qch/haar.hpp"

#include <algorithm>

#include "qch/error.hpp"
#include "qch/hecke.hpp"
#include "qch/symfunc.hpp"

namespace qch {

namespace {

// Om_n mapped through rho_n: sum over shapes with at most r rows of
// p_lambda * rho(F_lambda). Taller shapes act by zero, which also keeps
// every [content + r]_q in the eigenvalue nonzero.
TensorOperator omega_on_tensor(const HeckeSymmetry& h, int n) {
  int r = h.rank();
  TensorOperator om(r, n);
  for (const Partition& lam : partitions_of(n)) {
    if (lam.length() > r) continue;
    om += rho(h, n, central_idempotent(lam)).scaled(omega_eigenvalue(lam, r));
  }
  return om;
}

void check_digits(const std::vector<int>& t, int r) {
  for (int d : t) {
    if (d < 0 || d >= r) fail(Errc::bad_input, "index digit out of range");
  }
}

Scalar factorial(int n) {
  Scalar f(1);
  for (int i = 2; i <= n; ++i) f *= Scalar(static_cast<long>(i));
  return f;
}

std::vector<Scalar> diagonal_of(const MatrixPoint& m) {
  int r = m.rank();
  std::vector<Scalar> d(r);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      if (i == j) {
        d[i] = m.values().at(i, i);
      } else if (!m.values().at(i, j).is_zero()) {
        fail(Errc::bad_input, "point must be diagonal");
      }
    }
  }
  return d;
}

}  // namespace

MonomialIntegral::MonomialIntegral(const HeckeSymmetry& h, int n)
    : r_(h.rank()), n_(n) {
  if (n_ == 0) return;
  TensorOperator om_d = omega_on_tensor(h, n_) * kron_power(h.d_matrix(), r_, n_);
  for (const Permutation& w : symmetric_group(n_)) {
    kernel_.push_back(om_d * rho_perm(h, n_, w.inverse()));
    word_.push_back(rho_perm(h, n_, w));
    weight_.push_back(Scalar::q_power(-static_cast<int>(w.length())));
  }
}

Scalar MonomialIntegral::value(const std::vector<int>& I,
                               const std::vector<int>& J,
                               const std::vector<int>& K,
                               const std::vector<int>& L) const {
  size_t n = static_cast<size_t>(n_);
  if (I.size() != n || J.size() != n || K.size() != n || L.size() != n)
    return Scalar();
  if (n_ == 0) return Scalar(1);
  check_digits(I, r_);
  check_digits(J, r_);
  check_digits(K, r_);
  check_digits(L, r_);
  std::vector<int> lp(L.rbegin(), L.rend());
  std::vector<int> kp(K.rbegin(), K.rend());
  int arow = flatten_index(lp, r_);
  int acol = flatten_index(I, r_);
  int brow = flatten_index(J, r_);
  int bcol = flatten_index(kp, r_);
  Scalar acc;
  for (size_t k = 0; k < kernel_.size(); ++k) {
    Scalar av = kernel_[k].entry(arow, acol);
    if (av.is_zero()) continue;
    acc += weight_[k] * av * word_[k].entry(brow, bcol);
  }
  return acc;
}

Scalar MonomialIntegral::trace_pair(const TensorOperator& f,
                                    const TensorOperator& g) const {
  if (n_ == 0) return Scalar(1);
  Scalar acc;
  for (size_t k = 0; k < kernel_.size(); ++k)
    acc += weight_[k] * (f * word_[k] * g * kernel_[k]).trace();
  return acc;
}

Scalar MonomialIntegral::trace_interleaved(const TensorOperator& f,
                                           const TensorOperator& g) const {
  if (n_ == 0) return Scalar(1);
  Scalar acc;
  for (size_t k = 0; k < kernel_.size(); ++k)
    acc += weight_[k] * (f * word_[k]).trace() * (g * kernel_[k]).trace();
  return acc;
}

Scalar integral_monomial(const HeckeSymmetry& h, const std::vector<int>& I,
                         const std::vector<int>& J, const std::vector<int>& K,
                         const std::vector<int>& L) {
  size_t n = I.size();
  if (J.size() != n || K.size() != n || L.size() != n) return Scalar();
  MonomialIntegral mi(h, static_cast<int>(n));
  return mi.value(I, J, K, L);
}

Scalar scalar_product_chars(const HeckeSymmetry& h, const Partition& lam,
                            const Partition& mu) {
  if (lam.size() != mu.size()) return Scalar();
  int n = static_cast<int>(lam.size());
  if (n == 0) return Scalar(1);
  int r = h.rank();
  MonomialIntegral mi(h, n);
  TensorOperator zweight =
      kron_power(h.d_matrix(), r, n) *
      rho(h, n, primitive_idempotent(enumerate_syt(lam).front()));
  TensorOperator tweight =
      kron_power(h.c_matrix(), r, n) *
      rho(h, n, primitive_idempotent(enumerate_syt(mu).front()));
  return Scalar::q_power(n * (r + 1)) * mi.trace_pair(zweight, tweight);
}

std::pair<Scalar, Scalar> hciz(const HeckeSymmetry& h, const MatrixPoint& m,
                               const MatrixPoint& np, int n) {
  if (n < 0) fail(Errc::bad_input, "degree must be nonnegative");
  std::vector<Scalar> mu = diagonal_of(m);
  std::vector<Scalar> nu = diagonal_of(np);
  if (n == 0) return {Scalar(1), Scalar(1)};
  int r = h.rank();

  MonomialIntegral mi(h, n);
  TensorOperator zweight =
      kron_power(h.d_matrix(), r, n) * kron_power(m.values(), r, n);
  TensorOperator tweight = kron_power(np.values(), r, n);
  Scalar lhs =
      Scalar::p_power(3 * n * (r + 1)) * mi.trace_interleaved(zweight, tweight);

  std::vector<Scalar> xs(r), ys(r);
  for (int i = 0; i < r; ++i) {
    xs[i] = Scalar::q_power(i + 1) * mu[i];
    ys[i] = Scalar::q_power(i + 1) * nu[i];
  }
  Scalar rhs;
  for (const Partition& lam : partitions_of(n)) {
    if (lam.length() > r) continue;
    rhs += Scalar(Rational(lam.dim_sn())) * quantum_rank(lam, r).inv() *
           schur_at(lam, xs) * schur_at(lam, ys);
  }
  return {lhs, rhs};
}

std::vector<HcizSeriesTerm> hciz_series(const HeckeSymmetry& h,
                                        const MatrixPoint& m,
                                        const MatrixPoint& np, int max_degree) {
  std::vector<HcizSeriesTerm> out;
  for (int d = 0; d <= max_degree; ++d) {
    auto [lhs, rhs] = hciz(h, m, np, d);
    HcizSeriesTerm t;
    t.degree = d;
    t.lhs = lhs;
    t.rhs = rhs;
    Scalar inv_fact = factorial(d).inv();
    t.lhs_coeff = lhs * inv_fact;
    t.rhs_coeff = rhs * inv_fact;
    t.match = (lhs - rhs).is_zero();
    out.push_back(t);
  }
  return out;
}

CharTable char_table_from_idempotents(int n) {
  if (n < 1) fail(Errc::bad_input, "degree must be positive");
  CharTable out;
  Scalar inv_fact = factorial(n).inv();
  for (const Partition& lam : partitions_of(n)) {
    HeckeElement f = central_idempotent(lam);
    Scalar hooks(1);
    for (auto [row, col] : lam.cells()) {
      long hk = lam.hook(row, col);
      hooks *= Scalar(hk) * q_int(hk);
    }
    Scalar c = Scalar::q_power(-static_cast<int>(lam.n_stat())) * inv_fact * hooks;
    for (const Permutation& w : symmetric_group(n)) {
      out[{lam, w}] =
          Scalar::q_power(static_cast<int>(w.length())) * c * f.coeff(w.inverse());
    }
  }
  return out;
}

bool chi_on_primitive_check(int n) {
  for (const Partition& lam : partitions_of(n)) {
    Scalar want = k_lambda(lam);
    for (const StandardTableau& t : enumerate_syt(lam)) {
      if (chi_trace(primitive_idempotent(t)) != want) return false;
    }
  }
  return true;
}

}  // namespace qch
