#pragma once

#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "qch/hecke.hpp"
#include "qch/matrix.hpp"
#include "qch/partition.hpp"
#include "qch/scalar.hpp"

namespace qch {

// Basis of V^{⊗n} is ordered lexicographically by multi-index: the flat
// index of (i_1,...,i_n), digits 0-based, is sum_k i_k r^{n-k}. Every
// tensor contraction in the project uses this convention.
int tensor_dim(int r, int n);
int flatten_index(const std::vector<int>& digits, int r);
std::vector<int> unflatten_index(int flat, int r, int n);
// (i_1,...,i_n) -> (i_n,...,i_1)
int reverse_index(int flat, int r, int n);

// Sparse operator on V^{⊗n}; row = output index, col = input index.
class TensorOperator {
public:
  TensorOperator(int r, int n);
  static TensorOperator identity(int r, int n);

  int rank_v() const { return r_; }
  int degree() const { return n_; }
  int dim() const { return static_cast<int>(rows_.size()); }

  Scalar entry(int row, int col) const;
  void add(int row, int col, const Scalar& v);
  const std::map<int, Scalar>& row(int i) const { return rows_[i]; }

  TensorOperator operator+(const TensorOperator& o) const;
  TensorOperator operator-(const TensorOperator& o) const;
  TensorOperator& operator+=(const TensorOperator& o);
  TensorOperator scaled(const Scalar& s) const;
  TensorOperator operator*(const TensorOperator& o) const;

  // this ⊗ Id on `extra` more factors
  TensorOperator tensor_identity(int extra) const;

  bool operator==(const TensorOperator& o) const;
  bool operator!=(const TensorOperator& o) const { return !(*this == o); }
  bool is_zero() const;
  Scalar trace() const;
  Matrix dense() const;

private:
  int r_, n_;
  std::vector<std::map<int, Scalar>> rows_;
};

// m ⊗ ... ⊗ m on n factors, dense enumeration; fine for r^n up to a few hundred.
TensorOperator kron_power(const Matrix& m, int r, int n);

// An R-matrix together with its closure data. R^{kl}_{ij} is stored as the
// operator on V⊗V with row (k,l) and column (i,j). The partial inverse P,
// defined by P^{ip}_{jq} R^{qk}_{pl} = delta^i_l delta^k_j, and the weight
// matrices C^i_j = P^{li}_{lj} (trace weight), D^i_j = P^{il}_{jl}
// (character weight) are computed lazily; accessing them on a non-closed
// symmetry raises Errc::not_closed. For the deformed flip of rank r they are
// C = diag(q^{-i}), D = diag(q^{i-(r+1)}), i = 1..r.
class HeckeSymmetry {
public:
  // Entries (k, l, i, j, coeff) with 1-based indices, meaning R^{kl}_{ij}.
  HeckeSymmetry(int r, const std::vector<std::tuple<int, int, int, int, Scalar>>& entries);

  // Deformation of the flip with middle blocks [[q-1, p], [p, 0]]:
  // R^{kl}_{ij} = q if i=j=k=l; q-1 if k=i<j=l; p if k=j!=i=l; else 0.
  static HeckeSymmetry dj(int r);

  int rank() const { return r_; }
  const TensorOperator& r_op() const { return r_op_; }
  // twist value q^{(r+1)/2}, exact since q = p^2
  Scalar ribbon() const { return Scalar::q_half_power(r_ + 1); }

  const TensorOperator& p_op() const;
  const Matrix& c_matrix() const;
  const Matrix& d_matrix() const;

  std::vector<std::tuple<int, int, int, int, Scalar>> entries() const;

private:
  void ensure_closure() const;

  int r_;
  TensorOperator r_op_;
  // column-indexed view of R: for input pair (i,j), the list of
  // (output pair flat, coeff); used to build R_i on larger tensor powers
  std::vector<std::vector<std::pair<int, Scalar>>> cols_;
  mutable bool closure_done_ = false;
  mutable std::unique_ptr<TensorOperator> p_op_;
  mutable Matrix c_, d_;

  friend TensorOperator rho_gen(const HeckeSymmetry& h, int n, int i);
};

struct AxiomReport {
  bool yang_baxter = false;
  bool hecke_quadratic = false;
  bool closed = false;
  bool cd_identity = false;
  bool all() const { return yang_baxter && hecke_quadratic && closed && cd_identity; }
};

AxiomReport verify_axioms(const HeckeSymmetry& h);

// R_i = Id^{⊗(i-1)} ⊗ R ⊗ Id^{⊗(n-i-1)} on V^{⊗n}
TensorOperator rho_gen(const HeckeSymmetry& h, int n, int i);
TensorOperator rho_perm(const HeckeSymmetry& h, int n, const Permutation& w);
// The algebra homomorphism H_{q,n} -> End(V^{⊗n}), T_w -> R_w.
TensorOperator rho(const HeckeSymmetry& h, int n, const HeckeElement& x);

// Quantum symmetrizer and antisymmetrizer on V^{⊗n}, both idempotent:
//   [m]_q     X_m = (Id + R_{m-1} + R_{m-2}R_{m-1} + ... + R_1...R_{m-1}) (X_{m-1}⊗Id)
//   [m]_{1/q} Y_m = (sum of the same products weighted (-q)^{-k}) (Y_{m-1}⊗Id)
std::pair<TensorOperator, TensorOperator> symmetrizers(const HeckeSymmetry& h, int n);

// True iff the antisymmetrizer dies exactly at degree r+1:
// Y_{r+1} = 0 and rank(Y_r) = 1.
bool even_rank_check(const HeckeSymmetry& h, int r);

// q^{n(r+1)/2} tr(C^{⊗n} F) for F on V^{⊗n}.
Scalar braided_trace(const HeckeSymmetry& h, const TensorOperator& f);

// Hook-content value q^{-n(r-1)/2 + n(lambda)} prod [content+r]_q / [hook]_q;
// zero when the shape has more than r rows.
Scalar quantum_rank(const Partition& shape, int r);

}  // namespace qch
