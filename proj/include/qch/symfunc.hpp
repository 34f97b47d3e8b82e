#pragma once

#include <map>
#include <string>
#include <vector>

#include "qch/hecke.hpp"
#include "qch/partition.hpp"
#include "qch/scalar.hpp"

namespace qch {

// Element of the ring of symmetric functions with Scalar coefficients,
// stored in the Schur basis. The empty partition is the unit.
class SymFunc {
public:
  SymFunc() = default;

  static SymFunc one() { return schur(Partition()); }
  static SymFunc schur(const Partition& shape);

  const std::map<Partition, Scalar>& terms() const { return c_; }
  Scalar coeff(const Partition& shape) const;
  bool is_zero() const { return c_.empty(); }

  void add_term(const Partition& shape, const Scalar& c);
  void add_scaled(const SymFunc& o, const Scalar& s);

  SymFunc operator-() const;
  SymFunc& operator+=(const SymFunc& o);
  SymFunc& operator-=(const SymFunc& o);
  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  SymFunc scaled(const Scalar& s) const;
  // Product via Jacobi-Trudi on one factor and the Pieri rule; the
  // structure constants are the Littlewood-Richardson coefficients.
  SymFunc operator*(const SymFunc& o) const;

  // Drops every partition with more than r rows (the kernel of the
  // restriction to r variables).
  SymFunc restrict_rows(int r) const;

  bool operator==(const SymFunc& o) const { return c_ == o.c_; }
  bool operator!=(const SymFunc& o) const { return !(*this == o); }

  std::string str() const;

private:
  std::map<Partition, Scalar> c_;
};

// Complete and elementary pieces: s_{(k)} and s_{(1^k)}; k = 0 is the unit.
SymFunc h_func(int k);
SymFunc e_func(int k);

// Shapes obtained from `shape` by adding a horizontal k-strip.
std::vector<Partition> pieri_h(const Partition& shape, int k);

// Multiplies every Schur term by h_k via the Pieri rule.
SymFunc pieri_apply(const SymFunc& f, int k);

// Monomial in complete symmetric functions: indices sorted descending,
// h_0 factors omitted.
using HMonomial = std::vector<int>;
using HPoly = std::map<HMonomial, Scalar>;

// s_shape = det(h_{shape_i - i + j}) expanded into h-monomials.
HPoly jacobi_trudi(const Partition& shape);

// Value of s_shape at the given variables, as the semistandard-tableau
// monomial sum (0 when the shape has more rows than variables).
Scalar schur_at(const Partition& shape, const std::vector<Scalar>& xs);
Scalar specialize(const SymFunc& f, const std::vector<Scalar>& xs);

// Character map into the Schur basis: h in H_n goes to
// sum over shapes of n of (trace of h in the shape's module) * s_shape.
// A trace; sends any primitive idempotent of shape lambda to s_lambda.
SymFunc char_map(const HeckeElement& h);

// Image of T_{k-1}...T_2T_1 (a k-cycle) under the character map:
// the q-deformed power sum of degree k.
SymFunc power_char(int k);

// Checks both degree-n recursions relating h, e and the power images:
//   [n]_q h_n = sum_k h_{n-k} P_k
//   [n]_{1/q} e_n = sum_k (-q)^{-(k-1)} e_{n-k} P_k
bool lemma2_check(int n);

}  // namespace qch
