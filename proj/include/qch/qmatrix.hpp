#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qch/matrix.hpp"
#include "qch/partition.hpp"
#include "qch/rmatrix.hpp"
#include "qch/scalar.hpp"

namespace qch {

// Word in the r^2 generators z^i_j of the quantum matrix algebra. Letter id
// for z^i_j (1-based i, j) is (i-1)*r + (j-1); ids sort row-major.
using Word = std::vector<int>;

// Degree first, then lexicographic on the id sequence.
struct WordOrder {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

// Linear combination of words over Scalar. Addition and scaling preserve
// normal forms; products must go through RewriteSystem::mul.
class NCPoly {
public:
  NCPoly() = default;
  static NCPoly constant(const Scalar& c);
  // z^i_j, 1-based indices
  static NCPoly generator(int r, int i, int j);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Word, Scalar, WordOrder>& terms() const { return terms_; }
  Scalar coeff(const Word& w) const;
  void add_term(const Word& w, const Scalar& c);

  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly operator+(const NCPoly& o) const;
  NCPoly operator-(const NCPoly& o) const;
  NCPoly scaled(const Scalar& s) const;

  bool operator==(const NCPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const NCPoly& o) const { return !(*this == o); }

  // "coeff * z[i,j] z[k,l] + ..."; needs r to decode letter ids
  std::string str(int r) const;

private:
  std::map<Word, Scalar, WordOrder> terms_;
};

// Oriented quadratic rules LHS -> smaller poly. Rewriting picks the leftmost
// match and always replaces a word by strictly smaller ones, so normal forms
// are reached in finitely many steps for any properly oriented system. A raw
// rule set that enlarges words trips the internal step budget (bad_input).
class RewriteSystem {
public:
  RewriteSystem(int r, std::map<std::array<int, 2>, NCPoly> rules);

  int rank() const { return r_; }
  const std::map<std::array<int, 2>, NCPoly>& rules() const { return rules_; }

  bool is_irreducible(const Word& w) const;
  NCPoly normal_form(const NCPoly& f) const;
  NCPoly mul(const NCPoly& a, const NCPoly& b) const;
  NCPoly gen(int i, int j) const { return NCPoly::generator(r_, i, j); }

private:
  int r_;
  std::map<std::array<int, 2>, NCPoly> rules_;
};

// Extracts the r^4 quadratic exchange relations of the symmetry, reduces them
// to a spanning set and orients each rule largest-word-first. Raises
// not_orientable if a reduced relation cannot be oriented.
RewriteSystem frt_relations(const HeckeSymmetry& h);

// True when every rewriting path of every word of the given degree ends in
// the same normal form. Exhaustive at degree 3, sampled above (degree >= 3).
bool confluence_check(const RewriteSystem& rs, int degree);

// r x r matrix with commuting entries satisfying R A1 A2 = A1 A2 R; the
// constructor validates the relation and raises bad_input otherwise.
class MatrixPoint {
public:
  MatrixPoint(const HeckeSymmetry& h, const Matrix& values);
  static MatrixPoint diagonal(const HeckeSymmetry& h, const std::vector<Scalar>& diag);

  int rank() const { return r_; }
  const Matrix& values() const { return values_; }
  // evaluation of a normal-form element at this point; an algebra map
  Scalar eval(const NCPoly& f) const;

private:
  int r_;
  Matrix values_;
};

// Braided power Z^{q*n} as an r x r matrix of normal-form elements: a single
// contraction of the long-braid image rho(T_{n-1}...T_1) against one fresh
// generator and n-1 D-weighted generators (index diagram at the definition).
// The wiring is pinned by Z^{q*1} = Z and by the trace and characteristic
// equation tests.
std::vector<std::vector<NCPoly>> quantum_power(const HeckeSymmetry& h, int n);

// q^n tr(D^{tensor n} rho_n(E_lambda) A^{tensor n}), n = |lambda|.
// For the deformed flip and A = diag(a_1..a_r) this equals
// p^{-2nr} * s_lambda(q a_1, ..., q^r a_r), that is
// s_lambda(q^{1-r} a_1, ..., q^0 a_r); zero when lambda has more than r rows.
Scalar char_at_point(const HeckeSymmetry& h, const Partition& lambda, const MatrixPoint& a);

// (H_k, E_k): the full symmetrizer and antisymmetrizer characters
// q^k tr(D^{tensor k} X_k Z^{tensor k}) and the same with Y_k, reduced to
// normal form. E_k = 0 for k > rank; H_0 = E_0 = 1.
std::pair<NCPoly, NCPoly> symmetric_chars(const HeckeSymmetry& h, int k);

// Checks sum_{k=0..r} (-1)^k E_k * Z^{q*(r-k)} = 0. Symbolic for r <= 2 (and
// for larger r only if the rewrite system is degree-3 confluent is the
// symbolic route meaningful; the check then still uses points), at `points`
// random diagonal points for r >= 3.
bool cayley_hamilton_check(const HeckeSymmetry& h, unsigned long seed = 2026, int points = 5);

// Scale factor of A^{tensor r} on the line Im(Y_r); not_rank_one when that
// image is not a line.
Scalar quantum_determinant(const HeckeSymmetry& h, const MatrixPoint& a);

}  // namespace qch
