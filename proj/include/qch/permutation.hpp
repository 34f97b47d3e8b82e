#pragma once

#include <string>
#include <vector>

namespace qch {

// Permutation of {0..n-1} in one-line notation; w[i] is the image of i.
// Products compose right-to-left: (u*v)(i) = u(v(i)).
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  // Adjacent transposition s_i swaps i-1 and i (generators are 1-based,
  // i in 1..n-1, matching the T_i labels).
  static Permutation gen(int n, int i);
  // Transposition of values a and b, 1-based.
  static Permutation transposition(int n, int a, int b);
  // k-cycle used for power sums: s_{k-1} s_{k-2} ... s_1 inside S_n.
  static Permutation cycle(int n, int k);

  int n() const { return static_cast<int>(w_.size()); }
  int operator()(int i) const { return w_[i]; }
  const std::vector<int>& images() const { return w_; }

  bool is_identity() const;
  int length() const;  // inversions
  Permutation inverse() const;
  Permutation operator*(const Permutation& o) const;

  // One reduced word as 1-based generator indices, leftmost factor first:
  // w = s_{word[0]} * s_{word[1]} * ...
  std::vector<int> reduced_word() const;

  bool operator==(const Permutation& o) const { return w_ == o.w_; }
  bool operator!=(const Permutation& o) const { return !(*this == o); }
  bool operator<(const Permutation& o) const { return w_ < o.w_; }

  std::string str() const;  // "[2 1 3]" (1-based images)

private:
  std::vector<int> w_;
};

// All of S_n in lexicographic one-line order; identity first.
std::vector<Permutation> symmetric_group(int n);

}  // namespace qch
