#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qch/error.hpp"
#include "qch/rmatrix.hpp"

using namespace qch;

namespace {

const Scalar kQ = Scalar::q_power(1);
const Scalar kOne(1);

}  // namespace

TEST_CASE("flat index arithmetic") {
  CHECK(tensor_dim(3, 4) == 81);
  CHECK(flatten_index({1, 0, 2}, 3) == 11);
  CHECK(unflatten_index(11, 3, 3) == std::vector<int>{1, 0, 2});
  for (int flat = 0; flat < 27; ++flat) {
    CHECK(flatten_index(unflatten_index(flat, 3, 3), 3) == flat);
    CHECK(reverse_index(reverse_index(flat, 3, 3), 3, 3) == flat);
  }
  CHECK(reverse_index(flatten_index({1, 0, 2}, 3), 3, 3) == flatten_index({2, 0, 1}, 3));
}

TEST_CASE("deformed flip matrices") {
  HeckeSymmetry h1 = HeckeSymmetry::dj(1);
  CHECK(h1.r_op().entry(0, 0) == kQ);

  HeckeSymmetry h2 = HeckeSymmetry::dj(2);
  const TensorOperator& r = h2.r_op();
  Matrix want(4, 4);
  want.at(0, 0) = kQ;
  want.at(1, 1) = kQ - kOne;
  want.at(2, 1) = Scalar::q_half_power(1);
  want.at(1, 2) = Scalar::q_half_power(1);
  want.at(3, 3) = kQ;
  CHECK(r.dense() == want);

  // the matrix is symmetric for every rank
  for (int rank : {2, 3, 4}) {
    HeckeSymmetry h = HeckeSymmetry::dj(rank);
    const TensorOperator& rr = h.r_op();
    for (int i = 0; i < rr.dim(); ++i)
      for (const auto& [j, v] : rr.row(i)) CHECK(rr.entry(j, i) == v);
  }
}

TEST_CASE("axiom verification") {
  for (int rank : {1, 2, 3}) {
    AxiomReport rep = verify_axioms(HeckeSymmetry::dj(rank));
    CHECK(rep.yang_baxter);
    CHECK(rep.hecke_quadratic);
    CHECK(rep.closed);
    CHECK(rep.cd_identity);
  }
}

TEST_CASE("axiom negative controls") {
  // q * identity on two tensor factors: braid and quadratic hold, but the
  // partial-inverse system is singular for rank >= 2
  std::vector<std::tuple<int, int, int, int, Scalar>> ent;
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) ent.emplace_back(i, j, i, j, kQ);
  HeckeSymmetry qid(2, ent);
  AxiomReport rep = verify_axioms(qid);
  CHECK(rep.yang_baxter);
  CHECK(rep.hecke_quadratic);
  CHECK_FALSE(rep.closed);
  CHECK_THROWS_AS(qid.p_op(), Error);

  // perturbing one entry of a valid symmetry breaks the braid relation
  auto bad_entries = HeckeSymmetry::dj(2).entries();
  std::get<4>(bad_entries[0]) += kOne;
  AxiomReport bad = verify_axioms(HeckeSymmetry(2, bad_entries));
  CHECK_FALSE(bad.yang_baxter);
}

TEST_CASE("closure weights") {
  // rank 1: R = (q), P = (1/q), C = D = (1/q)
  HeckeSymmetry h1 = HeckeSymmetry::dj(1);
  CHECK(h1.p_op().entry(0, 0) == Scalar::q_power(-1));
  CHECK(h1.c_matrix().at(0, 0) == Scalar::q_power(-1));
  CHECK(h1.d_matrix().at(0, 0) == Scalar::q_power(-1));

  for (int rank : {2, 3}) {
    HeckeSymmetry h = HeckeSymmetry::dj(rank);
    Matrix c = h.c_matrix(), d = h.d_matrix();
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j) {
        if (i != j) {
          CHECK(c.at(i, j).is_zero());
          CHECK(d.at(i, j).is_zero());
        } else {
          // 1-based row i+1: C_ii = q^{-(i+1)}, D_ii = q^{i+1-(rank+1)}
          CHECK(c.at(i, i) == Scalar::q_power(-(i + 1)));
          CHECK(d.at(i, i) == Scalar::q_power(i - rank));
        }
      }
    Matrix want = Matrix::identity(rank).scaled(Scalar::q_power(-(rank + 1)));
    CHECK(c * d == want);
    CHECK(d * c == want);
  }
}

TEST_CASE("tensor representation of the algebra") {
  HeckeSymmetry h = HeckeSymmetry::dj(2);
  CHECK(rho(h, 2, HeckeElement::basis(Permutation::gen(2, 1))) == h.r_op());

  TensorOperator r1 = rho_gen(h, 3, 1), r2 = rho_gen(h, 3, 2);
  CHECK(r1 * r2 * r1 == r2 * r1 * r2);

  HeckeElement t1 = HeckeElement::basis(Permutation::gen(2, 1));
  TensorOperator lhs = rho(h, 2, t1 * t1);
  TensorOperator rhs = h.r_op().scaled(kQ - kOne) + TensorOperator::identity(2, 2).scaled(kQ);
  CHECK(lhs == rhs);

  // homomorphism on a spread of products in three tensor factors
  auto group = symmetric_group(3);
  for (const auto& u : group)
    for (const auto& v : group) {
      HeckeElement a = HeckeElement::basis(u), b = HeckeElement::basis(v);
      CHECK(rho(h, 3, a * b) == rho(h, 3, a) * rho(h, 3, b));
    }
}

TEST_CASE("symmetrizer pair") {
  for (int rank : {2, 3}) {
    HeckeSymmetry h = HeckeSymmetry::dj(rank);
    auto [x1, y1] = symmetrizers(h, 1);
    CHECK(x1 == TensorOperator::identity(rank, 1));
    CHECK(y1 == TensorOperator::identity(rank, 1));

    auto [x2, y2] = symmetrizers(h, 2);
    TensorOperator id2 = TensorOperator::identity(rank, 2);
    CHECK(x2 == (id2 + h.r_op()).scaled(q_int(2).inv()));
    Scalar two_inv_q = q_int(2) * Scalar::q_power(-1);
    CHECK(y2 == (id2 - h.r_op().scaled(Scalar::q_power(-1))).scaled(two_inv_q.inv()));

    for (int n = 2; n <= 3; ++n) {
      auto [x, y] = symmetrizers(h, n);
      CHECK(x * x == x);
      CHECK(y * y == y);
      for (int i = 1; i < n; ++i) {
        TensorOperator ri = rho_gen(h, n, i);
        CHECK(ri * x == x.scaled(kQ));
        CHECK(x * ri == x.scaled(kQ));
        CHECK(ri * y == y.scaled(-kOne));
        CHECK(y * ri == y.scaled(-kOne));
      }
    }
  }
}

TEST_CASE("antisymmetrizer matches the alternating algebra element") {
  for (int rank : {2, 3}) {
    HeckeSymmetry h = HeckeSymmetry::dj(rank);
    for (int n = 2; n <= 3; ++n) {
      HeckeElement alt(n);
      for (const auto& w : symmetric_group(n)) {
        Scalar c = Scalar::q_power(-w.length());
        if (w.length() % 2 == 1) c = -c;
        alt.add_term(w, c);
      }
      TensorOperator img = rho(h, n, alt);
      auto [x, y] = symmetrizers(h, n);
      (void)x;
      // proportional with ratio prod [k]_{1/q}
      Scalar ratio(1);
      for (int k = 1; k <= n; ++k) ratio *= q_int(k) * Scalar::q_power(-(k - 1));
      CHECK(img == y.scaled(ratio));
    }
  }
}

TEST_CASE("rank profile of the antisymmetrizer tower") {
  HeckeSymmetry h2 = HeckeSymmetry::dj(2);
  CHECK(even_rank_check(h2, 2));
  CHECK_FALSE(even_rank_check(h2, 1));
  auto [x3, y3] = symmetrizers(h2, 3);
  (void)x3;
  CHECK(y3.is_zero());
  auto [x2, y2] = symmetrizers(h2, 2);
  (void)x2;
  CHECK(y2.dense().rank() == 1);
}

TEST_CASE("weighted trace and hook-content values") {
  for (int rank : {2, 3}) {
    HeckeSymmetry h = HeckeSymmetry::dj(rank);
    Scalar dim_v = Scalar::q_half_power(-(rank - 1)) * q_int(rank);
    CHECK(braided_trace(h, TensorOperator::identity(rank, 1)) == dim_v);
    CHECK(braided_trace(h, TensorOperator::identity(rank, 2)) == dim_v * dim_v);
    CHECK(quantum_rank(Partition({1}), rank) == dim_v);

    // the column of full height carries the determinant: weight 1
    CHECK(quantum_rank(Partition(std::vector<int>(rank, 1)), rank) == kOne);

    for (int n = 1; n <= 2; ++n)
      for (const auto& shape : partitions_of(n))
        for (const auto& t : enumerate_syt(shape)) {
          TensorOperator img = rho(h, n, primitive_idempotent(t));
          CHECK(braided_trace(h, img) == quantum_rank(shape, rank));
        }
  }
  CHECK(quantum_rank(Partition({2}), 2) == Scalar::q_power(-1) * q_int(3));
  CHECK(quantum_rank(Partition({1, 1, 1}), 2).is_zero());
}
