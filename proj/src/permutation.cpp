#include "qch/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qch/error.hpp"

namespace qch {

Permutation::Permutation(std::vector<int> images) : w_(std::move(images)) {
  std::vector<bool> seen(w_.size(), false);
  for (int v : w_) {
    if (v < 0 || v >= n() || seen[v]) fail(Errc::bad_input, "not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 0);
  return Permutation(w);
}

Permutation Permutation::gen(int n, int i) {
  if (i < 1 || i >= n) fail(Errc::bad_input, "generator index out of range");
  Permutation s = identity(n);
  std::swap(s.w_[i - 1], s.w_[i]);
  return s;
}

Permutation Permutation::transposition(int n, int a, int b) {
  if (a < 1 || b < 1 || a > n || b > n || a == b) fail(Errc::bad_input, "bad transposition");
  Permutation s = identity(n);
  std::swap(s.w_[a - 1], s.w_[b - 1]);
  return s;
}

Permutation Permutation::cycle(int n, int k) {
  Permutation w = identity(n);
  for (int i = k - 1; i >= 1; --i) w = w * gen(n, i);
  return w;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < n(); ++i)
    if (w_[i] != i) return false;
  return true;
}

int Permutation::length() const {
  int inv = 0;
  for (int i = 0; i < n(); ++i)
    for (int j = i + 1; j < n(); ++j)
      if (w_[i] > w_[j]) ++inv;
  return inv;
}

Permutation Permutation::inverse() const {
  std::vector<int> v(n());
  for (int i = 0; i < n(); ++i) v[w_[i]] = i;
  return Permutation(v);
}

Permutation Permutation::operator*(const Permutation& o) const {
  std::vector<int> v(n());
  for (int i = 0; i < n(); ++i) v[i] = w_[o.w_[i]];
  return Permutation(v);
}

std::vector<int> Permutation::reduced_word() const {
  std::vector<int> collect;
  Permutation w = *this;
  for (;;) {
    int i = -1;
    for (int k = 1; k < n(); ++k)
      if (w.w_[k - 1] > w.w_[k]) {
        i = k;
        break;
      }
    if (i < 0) break;
    std::swap(w.w_[i - 1], w.w_[i]);  // w = w * s_i, length drops by one
    collect.push_back(i);
  }
  return std::vector<int>(collect.rbegin(), collect.rend());
}

std::string Permutation::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < n(); ++i) os << (i ? " " : "") << w_[i] + 1;
  os << "]";
  return os.str();
}

std::vector<Permutation> symmetric_group(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(w));
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

}  // namespace qch
