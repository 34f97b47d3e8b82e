#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qch/rational.hpp"

namespace qch {

// Integer partition: weakly decreasing positive parts, no trailing zeros.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);  // validates

  static Partition parse(const std::string& text);  // "3,1,1" or "3 1 1"

  int size() const;                 // sum of parts
  int length() const { return static_cast<int>(parts_.size()); }
  int part(int i) const;            // 0-based; 0 beyond the last row
  const std::vector<int>& parts() const { return parts_; }

  Partition conjugate() const;

  // Cells are (row, col), 0-based, row-major order.
  std::vector<std::pair<int, int>> cells() const;
  int hook(int row, int col) const;     // arm + leg + 1
  int content(int row, int col) const;  // col - row

  // n(lambda) = sum_i (i-1) * lambda_i over 1-based rows.
  long n_stat() const;

  // Number of standard tableaux by the hook-length formula.
  Integer dim_sn() const;

  // Removable corner cells, top to bottom.
  std::vector<std::pair<int, int>> corners() const;
  Partition remove_corner(int row) const;

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return !(*this == o); }
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }

  std::string str() const;  // "(3,1,1)"

private:
  std::vector<int> parts_;
};

// All partitions of n, in lexicographically decreasing part order
// starting from (n). max_len <= 0 means unrestricted.
std::vector<Partition> partitions_of(int n, int max_len = 0);

// Contents of removable corners over all partitions of k: the possible
// contents of the cell holding entry k in a standard tableau.
std::vector<int> reachable_contents(int k);

// Standard Young tableau of a given shape; entries 1..n.
class StandardTableau {
public:
  StandardTableau(Partition shape, std::vector<std::pair<int, int>> positions);

  static StandardTableau from_rows(const std::vector<std::vector<int>>& rows);

  const Partition& shape() const { return shape_; }
  int size() const { return static_cast<int>(pos_.size()); }
  int row_of(int k) const { return pos_[k - 1].first; }
  int col_of(int k) const { return pos_[k - 1].second; }
  int content_of(int k) const { return pos_[k - 1].second - pos_[k - 1].first; }

  // Swaps entries i and i+1; nullopt when the result is not standard
  // (i.e. when they share a row or a column).
  std::optional<StandardTableau> apply_si(int i) const;

  std::vector<std::vector<int>> rows() const;
  std::string str() const;

  bool operator==(const StandardTableau& o) const { return shape_ == o.shape_ && pos_ == o.pos_; }
  bool operator<(const StandardTableau& o) const;

private:
  Partition shape_;
  std::vector<std::pair<int, int>> pos_;  // pos_[k-1] = cell of entry k
};

// All standard tableaux of the shape, sorted by the row sequence of the
// entries 1..n (the fixed basis order for seminormal representations).
std::vector<StandardTableau> enumerate_syt(const Partition& shape);

}  // namespace qch
