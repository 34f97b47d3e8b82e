#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <vector>

#include "qch/error.hpp"
#include "qch/hecke.hpp"
#include "qch/partition.hpp"
#include "qch/qmatrix.hpp"
#include "qch/rmatrix.hpp"
#include "qch/scalar.hpp"
#include "qch/symfunc.hpp"

using namespace qch;

namespace {

const Scalar kOne(1);

Partition shape(std::vector<int> parts) { return Partition(std::move(parts)); }

// letter ids for r = 2: a = z11, b = z12, c = z21, d = z22
constexpr int A = 0, B = 1, C = 2, D = 3;

NCPoly one_word(const Word& w, const Scalar& c) {
  NCPoly f;
  f.add_term(w, c);
  return f;
}

// (q a_1, q^2 a_2, ..., q^r a_r)
std::vector<Scalar> q_shifted(const std::vector<Scalar>& diag) {
  std::vector<Scalar> xs;
  for (size_t i = 0; i < diag.size(); ++i) xs.push_back(Scalar::q_power((int)i + 1) * diag[i]);
  return xs;
}

// q^n tr(D^{tensor n} rho_n(E_t) A^{tensor n}) for one tableau and diagonal A
Scalar char_of_tableau(const HeckeSymmetry& h, const StandardTableau& t,
                       const std::vector<Scalar>& diag) {
  const int r = h.rank();
  const int n = t.size();
  TensorOperator op = rho(h, n, primitive_idempotent(t));
  const Matrix& d = h.d_matrix();
  Scalar acc;
  for (int flat = 0; flat < op.dim(); ++flat) {
    auto row = op.row(flat);
    auto it = row.find(flat);
    if (it == row.end()) continue;
    auto digits = unflatten_index(flat, r, n);
    Scalar w = it->second;
    for (int x : digits) w *= d.at(x, x) * diag[(size_t)x];
    acc += w;
  }
  return acc * Scalar::q_power(n);
}

}  // namespace

TEST_CASE("exchange rules of the deformed flip") {
  const Scalar pinv = Scalar::p_power(-1);
  const Scalar skew = Scalar::p_power(1) - pinv;

  RewriteSystem rs1 = frt_relations(HeckeSymmetry::dj(1));
  CHECK(rs1.rules().empty());

  RewriteSystem rs = frt_relations(HeckeSymmetry::dj(2));
  REQUIRE(rs.rules().size() == 6);
  auto rule = [&](int x, int y) {
    auto it = rs.rules().find({x, y});
    REQUIRE(it != rs.rules().end());
    return it->second;
  };
  CHECK(rule(B, A) == one_word({A, B}, pinv));
  CHECK(rule(C, A) == one_word({A, C}, pinv));
  CHECK(rule(C, B) == one_word({B, C}, kOne));
  CHECK(rule(D, A) == one_word({A, D}, kOne) - one_word({B, C}, skew));
  CHECK(rule(D, B) == one_word({B, D}, pinv));
  CHECK(rule(D, C) == one_word({C, D}, pinv));

  RewriteSystem rs3 = frt_relations(HeckeSymmetry::dj(3));
  CHECK(rs3.rules().size() == 36);
}

TEST_CASE("rules span the full exchange relation") {
  // every entry of R Z1 Z2 - Z1 Z2 R must reduce to zero
  for (int r = 2; r <= 3; ++r) {
    HeckeSymmetry h = HeckeSymmetry::dj(r);
    RewriteSystem rs = frt_relations(h);
    const TensorOperator& rop = h.r_op();
    const int dim = r * r;
    for (int row = 0; row < dim; ++row) {
      const int i = row / r, j = row % r;
      for (int col = 0; col < dim; ++col) {
        const int k = col / r, l = col % r;
        NCPoly lhs;
        for (int a = 0; a < r; ++a)
          for (int b = 0; b < r; ++b) {
            Scalar cv = rop.entry(row, a * r + b);
            if (!cv.is_zero()) lhs += rs.mul(rs.gen(a + 1, k + 1), rs.gen(b + 1, l + 1)).scaled(cv);
          }
        NCPoly rhs;
        for (int a = 0; a < r; ++a)
          for (int b = 0; b < r; ++b) {
            Scalar cv = rop.entry(a * r + b, col);
            if (!cv.is_zero()) rhs += rs.mul(rs.gen(i + 1, a + 1), rs.gen(j + 1, b + 1)).scaled(cv);
          }
        CHECK(rs.normal_form(lhs - rhs).is_zero());
      }
    }
  }
}

TEST_CASE("confluence of the oriented rules") {
  CHECK(confluence_check(frt_relations(HeckeSymmetry::dj(2)), 3));
  CHECK(confluence_check(frt_relations(HeckeSymmetry::dj(3)), 3));

  // flipping one rule backwards loses confluence: with the d.a rule replaced
  // by its reverse, d(ba) and (db)a reach different irreducible words
  RewriteSystem good = frt_relations(HeckeSymmetry::dj(2));
  std::map<std::array<int, 2>, NCPoly> rules = good.rules();
  rules.erase({D, A});
  rules[{A, D}] =
      one_word({D, A}, kOne) + one_word({B, C}, Scalar::p_power(1) - Scalar::p_power(-1));
  RewriteSystem flipped(2, std::move(rules));
  CHECK_FALSE(confluence_check(flipped, 3));
}

TEST_CASE("irreducible words count like ordered monomials") {
  // 4 generators: binomial(d+3, 3) irreducible words per degree
  RewriteSystem rs = frt_relations(HeckeSymmetry::dj(2));
  const int want[5] = {1, 4, 10, 20, 35};
  for (int d = 0; d <= 4; ++d) {
    int count = 0;
    std::vector<int> digits((size_t)d, 0);
    while (true) {
      Word w(digits.begin(), digits.end());
      if (rs.is_irreducible(w)) ++count;
      int t = d - 1;
      while (t >= 0 && digits[(size_t)t] == 3) digits[(size_t)t--] = 0;
      if (t < 0) break;
      ++digits[(size_t)t];
    }
    CHECK(count == want[(size_t)d]);
  }
}

TEST_CASE("matrix points") {
  HeckeSymmetry h = HeckeSymmetry::dj(2);
  MatrixPoint a = MatrixPoint::diagonal(h, {Scalar(2), Scalar(3)});
  CHECK(a.values().at(0, 0) == Scalar(2));
  CHECK(a.values().at(1, 0).is_zero());

  Matrix bad(2, 2);
  bad.at(0, 0) = kOne;
  bad.at(0, 1) = kOne;
  bad.at(1, 0) = kOne;
  bad.at(1, 1) = kOne;
  CHECK_THROWS_AS(MatrixPoint(h, bad), Error);
  try {
    MatrixPoint unused(h, bad);
    (void)unused;
  } catch (const Error& e) {
    CHECK(e.code() == Errc::bad_input);
  }

  // evaluation is an algebra map
  RewriteSystem rs = frt_relations(h);
  NCPoly u = rs.normal_form(one_word({D, A}, Scalar(3)) + one_word({B}, Scalar::p_power(-2)));
  NCPoly v = rs.normal_form(one_word({C, B}, kOne) - one_word({A}, Scalar(5)));
  CHECK(a.eval(rs.mul(u, v)) == a.eval(u) * a.eval(v));
}

TEST_CASE("quantum power anchors") {
  for (int r = 1; r <= 3; ++r) {
    HeckeSymmetry h = HeckeSymmetry::dj(r);
    RewriteSystem rs = frt_relations(h);
    auto qp = quantum_power(h, 1);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) CHECK(qp[(size_t)i][(size_t)j] == rs.gen(i + 1, j + 1));
  }
  // one-dimensional case: plain powers of the single generator
  HeckeSymmetry h1 = HeckeSymmetry::dj(1);
  for (int n = 2; n <= 4; ++n) {
    auto qp = quantum_power(h1, n);
    CHECK(qp[0][0] == one_word(Word((size_t)n, 0), kOne));
  }
}

TEST_CASE("quantum square of the deformed flip") {
  HeckeSymmetry h = HeckeSymmetry::dj(2);
  auto qp = quantum_power(h, 2);
  const Scalar p = Scalar::p_power(1), pinv = Scalar::p_power(-1), p2inv = Scalar::p_power(-2);
  CHECK(qp[0][0] == one_word({A, A}, p2inv) + one_word({A, D}, kOne - p2inv) +
                        one_word({B, C}, pinv + pinv - p));
  CHECK(qp[0][1] == one_word({A, B}, p2inv) + one_word({B, D}, pinv));
  CHECK(qp[1][0] == one_word({A, C}, p2inv) + one_word({C, D}, pinv));
  CHECK(qp[1][1] == one_word({B, C}, pinv) + one_word({D, D}, kOne));

  // cross-check at p = 2 on a diagonal point, where entries commute and the
  // contraction can be redone with plain rationals
  const Rational p0(2);
  const std::vector<Rational> av{Rational(2), Rational(3)};
  TensorOperator braid = rho(h, 2, gen_mult_left(1, HeckeElement::unit(2)));
  const Matrix& d = h.d_matrix();
  std::vector<std::vector<Rational>> want(2, std::vector<Rational>(2, Rational(0)));
  for (int row = 0; row < 4; ++row) {
    auto rd = unflatten_index(row, 2, 2);
    for (const auto& [col, v] : braid.row(row)) {
      auto cd = unflatten_index(col, 2, 2);
      // letters z^{cd[t]}_{rd[t]} and the trailing z^{cd[0]}_j vanish at a
      // diagonal point unless upper and lower digits agree
      if (cd[1] != rd[1]) continue;
      Rational w = v.eval_at(p0) * d.at(cd[1], cd[1]).eval_at(p0) * av[(size_t)cd[1]] *
                   av[(size_t)cd[0]];
      want[(size_t)rd[0]][(size_t)cd[0]] += w;
    }
  }
  MatrixPoint pt = MatrixPoint::diagonal(h, {Scalar(2), Scalar(3)});
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      CHECK(pt.eval(qp[(size_t)i][(size_t)j]).eval_at(p0) == want[(size_t)i][(size_t)j]);
}

TEST_CASE("symmetrizer and antisymmetrizer characters") {
  HeckeSymmetry h = HeckeSymmetry::dj(2);
  RewriteSystem rs = frt_relations(h);
  const Scalar p = Scalar::p_power(1);

  auto [h0, e0] = symmetric_chars(h, 0);
  CHECK(h0 == NCPoly::constant(kOne));
  CHECK(e0 == NCPoly::constant(kOne));

  auto [h1, e1] = symmetric_chars(h, 1);
  CHECK(h1 == e1);
  CHECK(e1 == one_word({A}, Scalar::p_power(-2)) + one_word({D}, kOne));

  auto [h2, e2] = symmetric_chars(h, 2);
  CHECK(e2 == one_word({A, D}, Scalar::p_power(-2)) - one_word({B, C}, Scalar::p_power(-1)));
  CHECK(h2 == one_word({A, A}, Scalar::p_power(-4)) + one_word({A, D}, Scalar::p_power(-2)) +
                  one_word({B, C}, Scalar::p_power(-3)) + one_word({D, D}, kOne));

  auto [h3, e3] = symmetric_chars(h, 3);
  CHECK(e3.is_zero());
  (void)h3;
  CHECK(symmetric_chars(HeckeSymmetry::dj(3), 4).second.is_zero());
  CHECK(symmetric_chars(HeckeSymmetry::dj(3), 1).first ==
        symmetric_chars(HeckeSymmetry::dj(3), 1).second);

  // the explicit sum-over-permutations form: with weights p^{k(r+1)},
  // p^{2 sum(i)}, and sign (-p)^{+l(sigma)} it reproduces E_k up to the fixed
  // monomial p^{-k(3r+1)}
  NCPoly disp1 = (one_word({A}, Scalar::q_power(1)) + one_word({D}, Scalar::q_power(2)))
                     .scaled(Scalar::p_power(3));
  CHECK(e1 == disp1.scaled(Scalar::p_power(-7)));
  NCPoly disp2 = (rs.mul(rs.gen(1, 1), rs.gen(2, 2)) -
                  rs.mul(rs.gen(2, 1), rs.gen(1, 2)).scaled(p))
                     .scaled(Scalar::p_power(6) * Scalar::q_power(3));
  CHECK(e2 == rs.normal_form(disp2).scaled(Scalar::p_power(-14)));

  // complete characters specialize to complete symmetric functions
  for (int r = 2; r <= 3; ++r) {
    HeckeSymmetry hr = HeckeSymmetry::dj(r);
    std::vector<Scalar> diag;
    for (int i = 0; i < r; ++i) diag.push_back(Scalar(2 + 3 * i));
    MatrixPoint pt = MatrixPoint::diagonal(hr, diag);
    for (int k = 1; k <= 3; ++k) {
      Scalar lhs = pt.eval(symmetric_chars(hr, k).first);
      Scalar rhs = specialize(h_func(k), q_shifted(diag)) * Scalar::q_power(-k * r);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("weighted trace of quantum powers matches the power characters") {
  for (int r = 2; r <= 3; ++r) {
    HeckeSymmetry h = HeckeSymmetry::dj(r);
    const Matrix& d = h.d_matrix();
    for (int which = 0; which < 2; ++which) {
      std::vector<Scalar> diag;
      for (int i = 0; i < r; ++i) diag.push_back(Scalar(2 + 3 * i + 7 * which));
      MatrixPoint pt = MatrixPoint::diagonal(h, diag);
      for (int n = 1; n <= 3; ++n) {
        auto qp = quantum_power(h, n);
        Scalar link;
        for (int i = 0; i < r; ++i) link += d.at(i, i) * pt.eval(qp[(size_t)i][(size_t)i]);
        link *= Scalar::q_power(n);
        Scalar rhs = specialize(power_char(n), q_shifted(diag)) * Scalar::q_power(-n * r);
        CHECK(link == rhs);
      }
    }
  }
}

TEST_CASE("point characters") {
  HeckeSymmetry h2 = HeckeSymmetry::dj(2);
  const Scalar q = Scalar::q_power(1);

  // one box: weighted sum of the diagonal
  MatrixPoint a23 = MatrixPoint::diagonal(h2, {Scalar(2), Scalar(3)});
  CHECK(char_at_point(h2, shape({1}), a23) ==
        (q * Scalar(2) + q * q * Scalar(3)) * Scalar::q_power(-2));

  // one row of two boxes at the identity point
  MatrixPoint ones = MatrixPoint::diagonal(h2, {kOne, kOne});
  CHECK(char_at_point(h2, shape({2}), ones) ==
        (Scalar::q_power(2) + Scalar::q_power(3) + Scalar::q_power(4)) * Scalar::q_power(-4));

  // too many rows vanish
  CHECK(char_at_point(h2, shape({1, 1, 1}), a23).is_zero());

  // the ratio against the q-shifted Schur value is the fixed monomial
  // q^{-n r}, independent of the point
  for (int r = 2; r <= 3; ++r) {
    HeckeSymmetry h = HeckeSymmetry::dj(r);
    std::vector<std::vector<int>> shapes{{1}, {2}, {1, 1}, {3}, {2, 1}, {1, 1, 1}};
    for (const auto& sh : shapes) {
      Partition lam = shape(sh);
      if ((int)sh.size() > r) continue;
      for (int which = 0; which < 3; ++which) {
        std::vector<Scalar> diag;
        for (int i = 0; i < r; ++i)
          diag.push_back(Scalar(2 + 5 * i + which) * Scalar(1 + which).inv());
        MatrixPoint pt = MatrixPoint::diagonal(h, diag);
        Scalar direct = char_at_point(h, lam, pt);
        Scalar schur = schur_at(lam, q_shifted(diag));
        CHECK(direct == schur * Scalar::q_power(-lam.size() * r));
      }
    }
  }

  // the value does not depend on which tableau of the shape is used
  {
    HeckeSymmetry h = HeckeSymmetry::dj(2);
    std::vector<Scalar> diag{Scalar(2), Scalar(3)};
    auto tabs = enumerate_syt(shape({2, 1}));
    REQUIRE(tabs.size() == 2);
    Scalar v0 = char_of_tableau(h, tabs[0], diag);
    Scalar v1 = char_of_tableau(h, tabs[1], diag);
    CHECK(v0 == v1);
    CHECK(v0 == char_at_point(h, shape({2, 1}), MatrixPoint::diagonal(h, diag)));
  }

  // rows of sum-matched complete characters: Jacobi-Trudi at points
  for (int r = 2; r <= 3; ++r) {
    HeckeSymmetry h = HeckeSymmetry::dj(r);
    std::vector<Scalar> diag;
    for (int i = 0; i < r; ++i) diag.push_back(Scalar(2 + 3 * i));
    MatrixPoint pt = MatrixPoint::diagonal(h, diag);
    auto h_at = [&](int k) {
      return k < 0 ? Scalar() : pt.eval(symmetric_chars(h, k).first);
    };
    CHECK(char_at_point(h, shape({2, 1}), pt) == h_at(2) * h_at(1) - h_at(3) * h_at(0));
    CHECK(char_at_point(h, shape({1, 1}), pt) == h_at(1) * h_at(1) - h_at(2) * h_at(0));
    Scalar want111 = h_at(1) * h_at(1) * h_at(1) - h_at(1) * h_at(2) - h_at(2) * h_at(1) + h_at(3);
    CHECK(char_at_point(h, shape({1, 1, 1}), pt) == want111);
  }
}

TEST_CASE("characteristic identity") {
  // explicit alternating sum at r = 2, coefficients on the left
  HeckeSymmetry h = HeckeSymmetry::dj(2);
  RewriteSystem rs = frt_relations(h);
  NCPoly e1 = symmetric_chars(h, 1).second;
  NCPoly e2 = symmetric_chars(h, 2).second;
  auto qp1 = quantum_power(h, 1);
  auto qp2 = quantum_power(h, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      NCPoly s = qp2[(size_t)i][(size_t)j] - rs.mul(e1, qp1[(size_t)i][(size_t)j]);
      if (i == j) s += e2;
      CHECK(rs.normal_form(s).is_zero());
    }

  CHECK(cayley_hamilton_check(HeckeSymmetry::dj(1)));
  CHECK(cayley_hamilton_check(HeckeSymmetry::dj(2)));
  CHECK(cayley_hamilton_check(HeckeSymmetry::dj(3), 2026, 5));
}

TEST_CASE("quantum determinant") {
  for (int r = 2; r <= 3; ++r) {
    HeckeSymmetry h = HeckeSymmetry::dj(r);
    std::vector<Scalar> dg, dg2, onesv;
    Scalar prod(1), prod2(1);
    for (int i = 0; i < r; ++i) {
      dg.push_back(Scalar(2 + 3 * i));
      dg2.push_back(Scalar(5 - i));
      onesv.push_back(kOne);
      prod *= dg.back();
      prod2 *= dg2.back();
    }
    MatrixPoint pa = MatrixPoint::diagonal(h, dg);
    CHECK(quantum_determinant(h, pa) == prod);
    CHECK(quantum_determinant(h, MatrixPoint::diagonal(h, onesv)) == kOne);

    // multiplicative on commuting points
    Matrix ab(r, r);
    for (int i = 0; i < r; ++i) ab.at(i, i) = dg[(size_t)i] * dg2[(size_t)i];
    CHECK(quantum_determinant(h, MatrixPoint(h, ab)) == prod * prod2);

    // top antisymmetric character at a point carries the fixed monomial
    CHECK(pa.eval(symmetric_chars(h, r).second) ==
          Scalar::q_power(-r * (r - 1) / 2) * prod);
  }
}

TEST_CASE("printing") {
  HeckeSymmetry h = HeckeSymmetry::dj(2);
  RewriteSystem rs = frt_relations(h);
  CHECK(rs.gen(1, 2).str(2) == "z[1,2]");
  NCPoly e2 = symmetric_chars(h, 2).second;
  CHECK(e2.str(2) == "(p^-2) * z[1,1] z[2,2] + (-p^-1) * z[1,2] z[2,1]");
  CHECK(NCPoly().str(2) == "0");
}
