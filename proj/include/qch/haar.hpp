#pragma once

#include <map>
#include <utility>
#include <vector>

#include "qch/partition.hpp"
#include "qch/permutation.hpp"
#include "qch/qmatrix.hpp"
#include "qch/rmatrix.hpp"
#include "qch/scalar.hpp"

namespace qch {

// Haar integral of a degree-n monomial in the generators z^i_j and their
// inverses t^i_j:
//
//   int Z_I^J T_K^L = sum_{w in S_n} q^{-l(w)} (Om_n D^{(n)} R_{w^-1})^{L'}_I (R_w)^J_{K'}
//
// where X^{(n)} is the n-fold Kronecker power, R_w = rho_n(T_w), Om_n is the
// integral operator in spectral form, and a primed tuple is reversed:
// K' = (k_n, ..., k_1). The weight q^{-l(w)} pairs R_w against its dual
// basis R_{w^-1}; without it the functional fails orthogonality of matrix
// coefficients in degree >= 2.
//
// Kernels are precomputed per permutation, so single entries cost O(n!)
// and the full r^{4n} array is never materialized.
class MonomialIntegral {
 public:
  MonomialIntegral(const HeckeSymmetry& h, int n);

  int degree() const { return n_; }

  // int Z_I^J T_K^L. Zero unless all four tuples have length degree().
  // Digits are 0-based and must lie in [0, r).
  Scalar value(const std::vector<int>& I, const std::vector<int>& J,
               const std::vector<int>& K, const std::vector<int>& L) const;

  // int tr(F Z^{(n)}) tr(G Tbar^{(n)}) where Tbar is the reversed-index
  // word of t-generators. Expanding both traces into monomials and
  // integrating term by term collapses to
  //   sum_w q^{-l(w)} tr(F R_w G K_w),  K_w = Om D^{(n)} R_{w^-1}.
  Scalar trace_pair(const TensorOperator& f, const TensorOperator& g) const;

  // int tr(F Z^{(n)} G Tbar^{(n)}), a single interleaved trace. The kernel
  // factorizes, so this collapses to
  //   sum_w q^{-l(w)} tr(F R_w) tr(G K_w).
  Scalar trace_interleaved(const TensorOperator& f,
                           const TensorOperator& g) const;

 private:
  int r_ = 0;
  int n_ = 0;
  std::vector<TensorOperator> kernel_;  // Om D^{(n)} R_{w^-1}
  std::vector<TensorOperator> word_;    // R_w
  std::vector<Scalar> weight_;          // q^{-l(w)}
};

// One-shot wrapper; builds the degree-l(I) kernel each call. Returns 0 on
// any length mismatch among the four tuples and 1 for four empty tuples.
Scalar integral_monomial(const HeckeSymmetry& h, const std::vector<int>& I,
                         const std::vector<int>& J, const std::vector<int>& K,
                         const std::vector<int>& L);

// int Phi(lam) Phi(mu)* with Phi(lam) = q^{n(r+1)/2} tr(D^{(n)} E_lam Z^{(n)})
// and Phi(mu)* = q^{n(r+1)/2} tr(C^{(n)} E_mu Tbar^{(n)}), E a primitive
// idempotent of the shape. Equals delta_{lam,mu} when both shapes fit in r
// rows; 0 when |lam| != |mu| or a shape has more than r rows.
Scalar scalar_product_chars(const HeckeSymmetry& h, const Partition& lam,
                            const Partition& mu);

// Degree-n Itzykson-Zuber pairing of two diagonal points M, N.
//   lhs = q^{3n(r+1)/2} int tr(D^{(n)} M^{(n)} Z^{(n)} N^{(n)} Tbar^{(n)})
//   rhs = sum_{lam |- n, l(lam) <= r} d_lam / qrank(lam) *
//         s_lam(q mu_1, ..., q^r mu_r) s_lam(q nu_1, ..., q^r nu_r)
// with mu, nu the diagonals and d_lam the symmetric-group dimension.
// Both sides are returned; they agree identically. Non-diagonal points are
// rejected with bad_input (the closed form for the rhs needs eigenvalues).
std::pair<Scalar, Scalar> hciz(const HeckeSymmetry& h, const MatrixPoint& m,
                               const MatrixPoint& np, int n);

// Truncated exponential form of the pairing: degree d carries lhs_d / d!
// and rhs_d / d!, the coefficients of the formal series sum_d x_d / d!.
struct HcizSeriesTerm {
  int degree = 0;
  Scalar lhs;
  Scalar rhs;
  Scalar lhs_coeff;  // lhs / degree!
  Scalar rhs_coeff;  // rhs / degree!
  bool match = false;
};

std::vector<HcizSeriesTerm> hciz_series(const HeckeSymmetry& h,
                                        const MatrixPoint& m,
                                        const MatrixPoint& np, int max_degree);

// Irreducible character table of H_n recovered from the central idempotents:
//   chi^lam(T_w) = q^{l(w)} q^{-n(lam)} / n! * prod_x (h(x) [h(x)]_q) * t_lam(w^-1)
// where t_lam(w) is the coefficient of T_w in the central idempotent of
// shape lam. Agrees with the seminormal traces for every (lam, w).
using CharTable = std::map<std::pair<Partition, Permutation>, Scalar>;

CharTable char_table_from_idempotents(int n);

// True iff chi_trace(primitive_idempotent(t)) = k_lambda(shape(t)) for
// every standard tableau with n boxes.
bool chi_on_primitive_check(int n);

}  // namespace qch
