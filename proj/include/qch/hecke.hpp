#pragma once

#include <map>
#include <string>
#include <vector>

#include "qch/matrix.hpp"
#include "qch/partition.hpp"
#include "qch/permutation.hpp"
#include "qch/scalar.hpp"

namespace qch {

// Element of the Iwahori-Hecke algebra H_{q,n} in the T_w basis.
// Relations: T_i T_j T_i = T_j T_i T_j for |i-j| = 1, commuting otherwise,
// and T_i^2 = (q-1) T_i + q.
class HeckeElement {
public:
  explicit HeckeElement(int n) : n_(n) {}

  static HeckeElement basis(const Permutation& w);
  static HeckeElement unit(int n) { return basis(Permutation::identity(n)); }

  int n() const { return n_; }
  const std::map<Permutation, Scalar>& terms() const { return c_; }
  Scalar coeff(const Permutation& w) const;
  size_t term_count() const { return c_.size(); }
  bool is_zero() const { return c_.empty(); }

  void add_term(const Permutation& w, const Scalar& c);
  void add_scaled(const HeckeElement& o, const Scalar& s);

  HeckeElement operator-() const;
  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement& operator-=(const HeckeElement& o);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  HeckeElement scaled(const Scalar& s) const;
  HeckeElement operator*(const HeckeElement& o) const;

  bool operator==(const HeckeElement& o) const { return n_ == o.n_ && c_ == o.c_; }
  bool operator!=(const HeckeElement& o) const { return !(*this == o); }

  std::string str() const;

private:
  int n_;
  std::map<Permutation, Scalar> c_;
};

// T_i * h: T_i T_w = T_{s_i w} when the length goes up,
// otherwise (q-1) T_w + q T_{s_i w}.
HeckeElement gen_mult_left(int i, const HeckeElement& h);
// h * T_i, mirrored rule.
HeckeElement gen_mult_right(const HeckeElement& h, int i);

// chi(h): coefficient of T_e. This is the trace normalized by chi(T_w) = 0
// for w != e; the pairing below is chi(a*b) on basis elements.
Scalar chi_trace(const HeckeElement& h);

// <T_u, T_w> = delta_{u, w^{-1}} q^{l(u)}, extended bilinearly.
Scalar bilinear_form(const HeckeElement& a, const HeckeElement& b);

// Murphy operator L_k = sum_{i<k} q^{i-k} T_{(i,k)}; L_1 = 0.
HeckeElement murphy_l(int n, int k);

// Exact two-sided inverse via a linear solve in the left regular
// representation (dimension n!); Errc::singular if h is not invertible.
HeckeElement hecke_inverse(const HeckeElement& h);

// Seminormal matrix model of the irreducible module labeled by a shape.
// Basis: standard tableaux in enumerate_syt order. For d = c_t(i+1) - c_t(i)
// and a_d = (q-1)/(1 - q^{-d}):
//   T_i v_t = a_d v_t + (1 + a_d) v_{s_i t}   (v_{s_i t} dropped if not standard)
class SeminormalRep {
public:
  explicit SeminormalRep(const Partition& shape);

  const Partition& shape() const { return shape_; }
  int dim() const { return static_cast<int>(tableaux_.size()); }
  const std::vector<StandardTableau>& tableaux() const { return tableaux_; }
  const Matrix& generator(int i) const { return gen_[i - 1]; }

  const Matrix& of_perm(const Permutation& w) const;
  Matrix of_element(const HeckeElement& h) const;

private:
  Partition shape_;
  std::vector<StandardTableau> tableaux_;
  std::vector<Matrix> gen_;
  mutable std::map<Permutation, Matrix> memo_;
};

const SeminormalRep& seminormal_rep(const Partition& shape);

// chi^lambda(T_w), the trace of T_w in the seminormal model.
Scalar irr_character(const Partition& shape, const Permutation& w);

// k_lambda = q^{n(lambda)} / prod_{cells} [hook]_q, the weight of
// chi^lambda inside chi = sum_lambda k_lambda chi^lambda.
Scalar k_lambda(const Partition& shape);

// Primitive idempotent E_t by Jucys-Murphy interpolation over the
// reachable contents at each entry.
HeckeElement primitive_idempotent(const StandardTableau& t);

// F_lambda = sum over standard tableaux of E_t (block unit of the shape).
HeckeElement central_idempotent(const Partition& shape);
// Same element from character data: k_lambda sum_w q^{-l(w)} chi^lambda(T_w) T_{w^{-1}}.
HeckeElement central_idempotent_from_chars(const Partition& shape, int n);

// Eigenvalue of the spectral operator on the lambda block:
// p_lambda = q^{rn} / prod_{cells} [content + r]_q.
Scalar omega_eigenvalue(const Partition& shape, int r);

// Omega_n as an element of H_n: spectral form sum p_lambda F_lambda and the
// Murphy product form prod_k (L_k - [-r]_q)^{-1}. Both exist in the algebra
// only when n <= r (otherwise a content hits -r and the factors are
// singular); for n > r use the image on tensor space instead (rmatrix/haar).
HeckeElement omega_spectral(int n, int r);
HeckeElement omega_murphy(int n, int r);

}  // namespace qch
