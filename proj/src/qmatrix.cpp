#include "qch/qmatrix.hpp"

#include <algorithm>
#include <random>

#include "qch/error.hpp"
#include "qch/hecke.hpp"

namespace qch {

namespace {

struct WordOrderDesc {
  bool operator()(const Word& a, const Word& b) const { return WordOrder{}(b, a); }
};

// column-indexed view of a degree-2 tensor operator
std::vector<std::vector<std::pair<int, Scalar>>> columns_of(const TensorOperator& op) {
  std::vector<std::vector<std::pair<int, Scalar>>> cols((size_t)op.dim());
  for (int row = 0; row < op.dim(); ++row)
    for (const auto& [col, v] : op.row(row)) cols[(size_t)col].emplace_back(row, v);
  return cols;
}

}  // namespace

NCPoly NCPoly::constant(const Scalar& c) {
  NCPoly f;
  f.add_term(Word{}, c);
  return f;
}

NCPoly NCPoly::generator(int r, int i, int j) {
  if (i < 1 || i > r || j < 1 || j > r) fail(Errc::bad_input, "generator index out of range");
  NCPoly f;
  f.add_term(Word{(i - 1) * r + (j - 1)}, Scalar(1));
  return f;
}

Scalar NCPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar() : it->second;
}

void NCPoly::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
  NCPoly f = *this;
  return f += o;
}

NCPoly NCPoly::operator-(const NCPoly& o) const {
  NCPoly f = *this;
  return f -= o;
}

NCPoly NCPoly::scaled(const Scalar& s) const {
  NCPoly f;
  if (s.is_zero()) return f;
  for (const auto& [w, c] : terms_) f.terms_.emplace(w, c * s);
  return f;
}

std::string NCPoly::str(int r) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    if (!out.empty()) out += " + ";
    std::string cs = c.str();
    if (w.empty()) {
      out += cs.find(' ') == std::string::npos ? cs : "(" + cs + ")";
      continue;
    }
    if (!c.is_one()) out += "(" + cs + ") * ";
    std::string letters;
    for (int id : w) {
      if (!letters.empty()) letters += ' ';
      letters += "z[" + std::to_string(id / r + 1) + "," + std::to_string(id % r + 1) + "]";
    }
    out += letters;
  }
  return out;
}

RewriteSystem::RewriteSystem(int r, std::map<std::array<int, 2>, NCPoly> rules)
    : r_(r), rules_(std::move(rules)) {
  if (r < 1) fail(Errc::bad_input, "rank must be positive");
  const int nl = r * r;
  for (const auto& [lhs, rhs] : rules_) {
    if (lhs[0] < 0 || lhs[0] >= nl || lhs[1] < 0 || lhs[1] >= nl)
      fail(Errc::bad_input, "rule letter out of range");
    (void)rhs;
  }
}

bool RewriteSystem::is_irreducible(const Word& w) const {
  for (size_t t = 0; t + 1 < w.size(); ++t)
    if (rules_.count({w[t], w[t + 1]})) return false;
  return true;
}

NCPoly RewriteSystem::normal_form(const NCPoly& f) const {
  std::map<Word, Scalar, WordOrderDesc> work(f.terms().begin(), f.terms().end());
  NCPoly out;
  long budget = 1000000;
  while (!work.empty()) {
    if (--budget < 0) fail(Errc::bad_input, "rewriting exceeded the step budget");
    auto it = work.begin();
    Word w = it->first;
    Scalar c = it->second;
    work.erase(it);
    if (c.is_zero()) continue;
    size_t pos = w.size();
    const NCPoly* rhs = nullptr;
    for (size_t t = 0; t + 1 < w.size(); ++t) {
      auto r = rules_.find({w[t], w[t + 1]});
      if (r != rules_.end()) {
        pos = t;
        rhs = &r->second;
        break;
      }
    }
    if (rhs == nullptr) {
      out.add_term(w, c);
      continue;
    }
    for (const auto& [u, cu] : rhs->terms()) {
      Word nw;
      nw.reserve(w.size() - 2 + u.size());
      nw.insert(nw.end(), w.begin(), w.begin() + (long)pos);
      nw.insert(nw.end(), u.begin(), u.end());
      nw.insert(nw.end(), w.begin() + (long)pos + 2, w.end());
      auto [slot, fresh] = work.emplace(std::move(nw), c * cu);
      if (!fresh) {
        slot->second += c * cu;
        if (slot->second.is_zero()) work.erase(slot);
      }
    }
  }
  return out;
}

NCPoly RewriteSystem::mul(const NCPoly& a, const NCPoly& b) const {
  NCPoly raw;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      raw.add_term(w, ca * cb);
    }
  return normal_form(raw);
}

RewriteSystem frt_relations(const HeckeSymmetry& h) {
  const int r = h.rank(), r2 = r * r, r4 = r2 * r2;
  const TensorOperator& rop = h.r_op();
  auto cols = columns_of(rop);
  // Degree-2 words ranked descending: column 0 holds the largest word, so the
  // leading entry of a reduced row is the word every other term is below.
  auto colidx = [&](int x, int y) { return (r4 - 1) - (x * r2 + y); };
  auto word_at = [&](int cidx) {
    int v = (r4 - 1) - cidx;
    return Word{v / r2, v % r2};
  };

  std::vector<std::map<int, Scalar>> pivot_rows((size_t)r4);
  std::vector<bool> has((size_t)r4, false);
  auto axpy = [](std::map<int, Scalar>& row, const Scalar& c, const std::map<int, Scalar>& o) {
    for (const auto& [cc, vv] : o) {
      auto [it, fresh] = row.emplace(cc, c * vv);
      if (!fresh) {
        it->second += c * vv;
        if (it->second.is_zero()) row.erase(it);
      }
    }
  };

  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k)
        for (int l = 0; l < r; ++l) {
          std::map<int, Scalar> row;
          // sum_{m,n} R^{ij}_{mn} z^m_k z^n_l - sum_{p,q} R^{pq}_{kl} z^i_p z^j_q
          for (const auto& [mn, v] : rop.row(i * r + j)) {
            int m = mn / r, n = mn % r;
            axpy(row, v, {{colidx(m * r + k, n * r + l), Scalar(1)}});
          }
          for (const auto& [pq, v] : cols[(size_t)(k * r + l)]) {
            int p = pq / r, q = pq % r;
            axpy(row, -v, {{colidx(i * r + p, j * r + q), Scalar(1)}});
          }
          while (!row.empty() && has[(size_t)row.begin()->first]) {
            Scalar c = row.begin()->second;
            axpy(row, -c, pivot_rows[(size_t)row.begin()->first]);
          }
          if (row.empty()) continue;
          const int lead = row.begin()->first;
          Scalar inv = row.begin()->second.inv();
          for (auto& [cc, vv] : row) vv *= inv;
          for (int pc = 0; pc < r4; ++pc) {
            if (!has[(size_t)pc]) continue;
            auto it = pivot_rows[(size_t)pc].find(lead);
            if (it == pivot_rows[(size_t)pc].end()) continue;
            Scalar c = it->second;
            axpy(pivot_rows[(size_t)pc], -c, row);
          }
          pivot_rows[(size_t)lead] = std::move(row);
          has[(size_t)lead] = true;
        }

  std::map<std::array<int, 2>, NCPoly> rules;
  for (int lead = 0; lead < r4; ++lead) {
    if (!has[(size_t)lead]) continue;
    Word lhs = word_at(lead);
    NCPoly rhs;
    for (const auto& [cc, vv] : pivot_rows[(size_t)lead]) {
      if (cc == lead) continue;
      Word w = word_at(cc);
      if (!WordOrder{}(w, lhs))
        fail(Errc::not_orientable, "reduced relation is not decreasing");
      rhs.add_term(w, -vv);
    }
    rules[{lhs[0], lhs[1]}] = std::move(rhs);
  }
  return RewriteSystem(r, std::move(rules));
}

bool confluence_check(const RewriteSystem& rs, int degree) {
  if (degree < 3) fail(Errc::bad_input, "confluence check needs degree >= 3");
  const int nl = rs.rank() * rs.rank();
  std::vector<Word> words;
  if (degree == 3) {
    for (int x = 0; x < nl; ++x)
      for (int y = 0; y < nl; ++y)
        for (int z = 0; z < nl; ++z) words.push_back(Word{x, y, z});
  } else {
    std::mt19937_64 rng(1);
    for (int s = 0; s < 200; ++s) {
      Word w((size_t)degree);
      for (auto& letter : w) letter = (int)(rng() % (unsigned long)nl);
      words.push_back(std::move(w));
    }
  }
  try {
    for (const Word& w : words) {
      NCPoly base;
      base.add_term(w, Scalar(1));
      NCPoly nf = rs.normal_form(base);
      for (size_t t = 0; t + 1 < w.size(); ++t) {
        auto rule = rs.rules().find({w[t], w[t + 1]});
        if (rule == rs.rules().end()) continue;
        NCPoly step;
        for (const auto& [u, cu] : rule->second.terms()) {
          Word nw;
          nw.insert(nw.end(), w.begin(), w.begin() + (long)t);
          nw.insert(nw.end(), u.begin(), u.end());
          nw.insert(nw.end(), w.begin() + (long)t + 2, w.end());
          step.add_term(nw, cu);
        }
        if (rs.normal_form(step) != nf) return false;
      }
    }
  } catch (const Error&) {
    return false;  // runaway rewriting counts as failure
  }
  return true;
}

MatrixPoint::MatrixPoint(const HeckeSymmetry& h, const Matrix& values)
    : r_(h.rank()), values_(values) {
  if (values.rows() != r_ || values.cols() != r_)
    fail(Errc::bad_input, "point has the wrong size");
  TensorOperator aa = kron_power(values_, r_, 2);
  const TensorOperator& rop = h.r_op();
  if (!(rop * aa == aa * rop))
    fail(Errc::bad_input, "matrix is not a point: R A1 A2 != A1 A2 R");
}

MatrixPoint MatrixPoint::diagonal(const HeckeSymmetry& h, const std::vector<Scalar>& diag) {
  if ((int)diag.size() != h.rank()) fail(Errc::bad_input, "diagonal has the wrong length");
  Matrix m(h.rank(), h.rank());
  for (int i = 0; i < h.rank(); ++i) m.at(i, i) = diag[(size_t)i];
  return MatrixPoint(h, m);
}

Scalar MatrixPoint::eval(const NCPoly& f) const {
  Scalar acc;
  for (const auto& [w, c] : f.terms()) {
    Scalar v = c;
    for (int id : w) {
      v *= values_.at(id / r_, id % r_);
      if (v.is_zero()) break;
    }
    acc += v;
  }
  return acc;
}

namespace {

// n-th quantum power of the generator matrix. With M = (M_1..M_n) the row
// digits and N = (N_1..N_n) the column digits of the long-braid image,
//
//   (Z^{q*n})^i_j = sum over entries rho(T_{n-1}...T_1)^M_N  of
//       prod_{t>=2} D^{N_t}_{N_t}  *  z^{N_n}_{M_n} ... z^{N_2}_{M_2} z^{N_1}_j
//
// restricted to M_1 = i. Slot 1 carries the open indices: its row digit is
// the result row, the result column is the free lower index of the trailing
// fresh generator. No global scalar. The wiring is pinned by two anchors:
// n = 1 returns Z itself, and the alternating characteristic identity with
// the E_k of symmetric_chars closes to zero (see cayley_hamilton_check).
std::vector<std::vector<NCPoly>> qpower_impl(const HeckeSymmetry& h, const RewriteSystem& rs,
                                             int n) {
  if (n < 1) fail(Errc::bad_input, "quantum power needs n >= 1");
  const int r = h.rank();
  std::vector<std::vector<NCPoly>> qp((size_t)r, std::vector<NCPoly>((size_t)r));
  if (n == 1) {
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) qp[(size_t)i][(size_t)j] = rs.gen(i + 1, j + 1);
    return qp;
  }
  const Matrix& d = h.d_matrix();
  HeckeElement braid = HeckeElement::unit(n);
  for (int k = 1; k <= n - 1; ++k) braid = gen_mult_left(k, braid);
  TensorOperator op = rho(h, n, braid);
  for (int row = 0; row < op.dim(); ++row) {
    if (op.row(row).empty()) continue;
    auto rd = unflatten_index(row, r, n);
    const int i = rd[0];
    for (const auto& [col, rv] : op.row(row)) {
      auto cd = unflatten_index(col, r, n);
      Scalar wt = rv;
      for (int t = 1; t < n && !wt.is_zero(); ++t) wt *= d.at(cd[(size_t)t], cd[(size_t)t]);
      if (wt.is_zero()) continue;
      Word word;
      word.reserve((size_t)n);
      for (int t = n - 1; t >= 1; --t) word.push_back(cd[(size_t)t] * r + rd[(size_t)t]);
      word.push_back(cd[0] * r);  // fresh generator, column filled per j below
      for (int j = 0; j < r; ++j) {
        word.back() = cd[0] * r + j;
        NCPoly term;
        term.add_term(word, wt);
        qp[(size_t)i][(size_t)j] += term;
      }
    }
  }
  for (auto& rowv : qp)
    for (auto& e : rowv) e = rs.normal_form(e);
  return qp;
}

// q^k sum (D^{tensor k})^I_J W^J_K z^{K_1}_{I_1} ... z^{K_k}_{I_k}
//
// The q^k prefactor normalizes the k = 1 weighted traces so that the
// alternating characteristic identity against quantum_power closes to zero;
// for r = 1 it makes E_1 the bare generator z.
NCPoly weighted_char(const HeckeSymmetry& h, const RewriteSystem& rs, const TensorOperator& w,
                     int k) {
  const int r = h.rank();
  const Matrix& d = h.d_matrix();
  NCPoly raw;
  for (int jf = 0; jf < w.dim(); ++jf) {
    if (w.row(jf).empty()) continue;
    auto jd = unflatten_index(jf, r, k);
    for (int ifl = 0; ifl < w.dim(); ++ifl) {
      auto id = unflatten_index(ifl, r, k);
      Scalar dprod(1);
      for (int t = 0; t < k && !dprod.is_zero(); ++t)
        dprod *= d.at(id[(size_t)t], jd[(size_t)t]);
      if (dprod.is_zero()) continue;
      for (const auto& [kf, wv] : w.row(jf)) {
        auto kd = unflatten_index(kf, r, k);
        Word word((size_t)k);
        for (int t = 0; t < k; ++t) word[(size_t)t] = kd[(size_t)t] * r + id[(size_t)t];
        raw.add_term(word, dprod * wv);
      }
    }
  }
  return rs.normal_form(raw.scaled(Scalar::q_power(k)));
}

std::pair<NCPoly, NCPoly> symchars_impl(const HeckeSymmetry& h, const RewriteSystem& rs, int k) {
  if (k < 0) fail(Errc::bad_input, "negative tensor degree");
  if (k == 0) return {NCPoly::constant(Scalar(1)), NCPoly::constant(Scalar(1))};
  auto [x, y] = symmetrizers(h, k);
  return {weighted_char(h, rs, x, k), weighted_char(h, rs, y, k)};
}

}  // namespace

std::vector<std::vector<NCPoly>> quantum_power(const HeckeSymmetry& h, int n) {
  RewriteSystem rs = frt_relations(h);
  return qpower_impl(h, rs, n);
}

Scalar char_at_point(const HeckeSymmetry& h, const Partition& lambda, const MatrixPoint& a) {
  const int r = h.rank();
  if (a.rank() != r) fail(Errc::bad_input, "point rank mismatch");
  const int n = lambda.size();
  if (n == 0) return Scalar(1);
  TensorOperator w = rho(h, n, primitive_idempotent(enumerate_syt(lambda).front()));
  TensorOperator dn = kron_power(h.d_matrix(), r, n);
  TensorOperator an = kron_power(a.values(), r, n);
  return (dn * w * an).trace() * Scalar::q_power(n);
}

std::pair<NCPoly, NCPoly> symmetric_chars(const HeckeSymmetry& h, int k) {
  RewriteSystem rs = frt_relations(h);
  return symchars_impl(h, rs, k);
}

bool cayley_hamilton_check(const HeckeSymmetry& h, unsigned long seed, int points) {
  const int r = h.rank();
  RewriteSystem rs = frt_relations(h);
  std::vector<NCPoly> es;
  es.push_back(NCPoly::constant(Scalar(1)));
  for (int k = 1; k <= r; ++k) es.push_back(symchars_impl(h, rs, k).second);
  std::vector<std::vector<std::vector<NCPoly>>> qps((size_t)r + 1);
  for (int m = 1; m <= r; ++m) qps[(size_t)m] = qpower_impl(h, rs, m);

  if (r <= 2 && confluence_check(rs, 3)) {
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b) {
        NCPoly acc;
        for (int k = 0; k <= r; ++k) {
          NCPoly term = r - k == 0 ? (a == b ? es[(size_t)k] : NCPoly())
                                   : rs.mul(es[(size_t)k], qps[(size_t)(r - k)][(size_t)a][(size_t)b]);
          if (k % 2 == 0)
            acc += term;
          else
            acc -= term;
        }
        if (!acc.is_zero()) return false;
      }
    return true;
  }

  std::mt19937_64 rng(seed);
  for (int pt = 0; pt < points; ++pt) {
    std::vector<Scalar> diag;
    for (int i = 0; i < r; ++i) diag.push_back(Scalar((long)(rng() % 23UL) + 1));
    MatrixPoint a = MatrixPoint::diagonal(h, diag);
    std::vector<Scalar> ev;
    for (int k = 0; k <= r; ++k) ev.push_back(a.eval(es[(size_t)k]));
    for (int x = 0; x < r; ++x)
      for (int y = 0; y < r; ++y) {
        Scalar acc;
        for (int k = 0; k <= r; ++k) {
          Scalar term = r - k == 0 ? (x == y ? ev[(size_t)k] : Scalar())
                                   : ev[(size_t)k] * a.eval(qps[(size_t)(r - k)][(size_t)x][(size_t)y]);
          if (k % 2 == 0)
            acc += term;
          else
            acc -= term;
        }
        if (!acc.is_zero()) return false;
      }
  }
  return true;
}

Scalar quantum_determinant(const HeckeSymmetry& h, const MatrixPoint& a) {
  const int r = h.rank();
  if (a.rank() != r) fail(Errc::bad_input, "point rank mismatch");
  auto [x, y] = symmetrizers(h, r);
  (void)x;
  Matrix yd = y.dense();
  if (yd.rank() != 1) fail(Errc::not_rank_one, "the antisymmetrizer image is not a line");
  const int dim = yd.rows();
  int j0 = -1;
  for (int j = 0; j < dim && j0 < 0; ++j)
    for (int i = 0; i < dim; ++i)
      if (!yd.at(i, j).is_zero()) {
        j0 = j;
        break;
      }
  std::vector<Scalar> v((size_t)dim);
  for (int i = 0; i < dim; ++i) v[(size_t)i] = yd.at(i, j0);
  TensorOperator an = kron_power(a.values(), r, r);
  std::vector<Scalar> image((size_t)dim);
  for (int i = 0; i < dim; ++i)
    for (const auto& [col, av] : an.row(i)) image[(size_t)i] += av * v[(size_t)col];
  int idx = 0;
  while (v[(size_t)idx].is_zero()) ++idx;
  Scalar lam = image[(size_t)idx] / v[(size_t)idx];
  for (int i = 0; i < dim; ++i)
    if (image[(size_t)i] != lam * v[(size_t)i])
      fail(Errc::bad_input, "point does not preserve the determinant line");
  return lam;
}

}  // namespace qch
