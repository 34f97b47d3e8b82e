#include "qch/partition.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "qch/error.hpp"

namespace qch {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0 || (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]))
      fail(Errc::not_a_partition, "parts must be weakly decreasing and positive");
  }
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::string tok;
  auto push = [&] {
    if (tok.empty()) return;
    try {
      parts.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      fail(Errc::not_a_partition, "bad part '" + tok + "'");
    }
    tok.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '(' || c == ')') {
      push();
    } else {
      tok += c;
    }
  }
  push();
  return Partition(parts);
}

int Partition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

int Partition::part(int i) const {
  return i >= 0 && i < static_cast<int>(parts_.size()) ? parts_[i] : 0;
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  for (int j = 0; part(0) > j; ++j) {
    int cnt = 0;
    for (int p : parts_)
      if (p > j) ++cnt;
    c.push_back(cnt);
  }
  return Partition(c);
}

std::vector<std::pair<int, int>> Partition::cells() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < length(); ++i)
    for (int j = 0; j < parts_[i]; ++j) out.emplace_back(i, j);
  return out;
}

int Partition::hook(int row, int col) const {
  int arm = parts_[row] - col - 1;
  int leg = 0;
  for (int i = row + 1; i < length(); ++i)
    if (parts_[i] > col) ++leg;
  return arm + leg + 1;
}

int Partition::content(int row, int col) const { return col - row; }

long Partition::n_stat() const {
  long s = 0;
  for (int i = 0; i < length(); ++i) s += static_cast<long>(i) * parts_[i];
  return s;
}

Integer Partition::dim_sn() const {
  Integer num = 1;
  for (int k = 2; k <= size(); ++k) num *= k;
  Integer hooks = 1;
  for (auto [i, j] : cells()) hooks *= hook(i, j);
  Integer d = num / hooks;
  if (d * hooks != num) fail(Errc::bad_input, "hook product does not divide n!");
  return d;
}

std::vector<std::pair<int, int>> Partition::corners() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < length(); ++i)
    if (i + 1 >= length() || parts_[i + 1] < parts_[i]) out.emplace_back(i, parts_[i] - 1);
  return out;
}

Partition Partition::remove_corner(int row) const {
  std::vector<int> p = parts_;
  p[row] -= 1;
  return Partition(p);
}

std::string Partition::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ")";
  return os.str();
}

namespace {

void gen_partitions(int remaining, int max_part, int max_len, std::vector<int>& acc,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(acc));
    return;
  }
  if (max_len > 0 && static_cast<int>(acc.size()) >= max_len) return;
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    acc.push_back(part);
    gen_partitions(remaining - part, part, max_len, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int max_len) {
  std::vector<Partition> out;
  if (n == 0) {
    out.push_back(Partition{});
    return out;
  }
  std::vector<int> acc;
  gen_partitions(n, n, max_len, acc, out);
  return out;
}

std::vector<int> reachable_contents(int k) {
  std::set<int> cs;
  for (const Partition& mu : partitions_of(k))
    for (auto [i, j] : mu.corners()) cs.insert(j - i);
  return std::vector<int>(cs.begin(), cs.end());
}

StandardTableau::StandardTableau(Partition shape, std::vector<std::pair<int, int>> positions)
    : shape_(std::move(shape)), pos_(std::move(positions)) {
  if (static_cast<int>(pos_.size()) != shape_.size())
    fail(Errc::not_standard, "entry count does not match shape");
  // Standardness: grid entries increase along rows and columns.
  std::vector<std::vector<int>> grid(shape_.length());
  for (int i = 0; i < shape_.length(); ++i) grid[i].assign(shape_.part(i), 0);
  for (int k = 1; k <= size(); ++k) {
    auto [r, c] = pos_[k - 1];
    if (r < 0 || r >= shape_.length() || c < 0 || c >= shape_.part(r) || grid[r][c] != 0)
      fail(Errc::not_standard, "entry placement outside shape or duplicated");
    grid[r][c] = k;
  }
  for (int i = 0; i < shape_.length(); ++i)
    for (int j = 0; j < shape_.part(i); ++j) {
      if (j + 1 < shape_.part(i) && grid[i][j] > grid[i][j + 1])
        fail(Errc::not_standard, "row not increasing");
      if (i + 1 < shape_.length() && j < shape_.part(i + 1) && grid[i][j] > grid[i + 1][j])
        fail(Errc::not_standard, "column not increasing");
    }
}

StandardTableau StandardTableau::from_rows(const std::vector<std::vector<int>>& rows) {
  std::vector<int> parts;
  int n = 0;
  for (auto& r : rows) {
    parts.push_back(static_cast<int>(r.size()));
    n += static_cast<int>(r.size());
  }
  std::vector<std::pair<int, int>> pos(n, {-1, -1});
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) {
      int k = rows[i][j];
      if (k < 1 || k > n) fail(Errc::not_standard, "entries must be 1..n");
      pos[k - 1] = {static_cast<int>(i), static_cast<int>(j)};
    }
  return StandardTableau(Partition(parts), pos);
}

std::optional<StandardTableau> StandardTableau::apply_si(int i) const {
  auto [r1, c1] = pos_[i - 1];
  auto [r2, c2] = pos_[i];
  if (r1 == r2 || c1 == c2) return std::nullopt;
  std::vector<std::pair<int, int>> swapped = pos_;
  std::swap(swapped[i - 1], swapped[i]);
  return StandardTableau(shape_, swapped);
}

std::vector<std::vector<int>> StandardTableau::rows() const {
  std::vector<std::vector<int>> grid(shape_.length());
  for (int i = 0; i < shape_.length(); ++i) grid[i].assign(shape_.part(i), 0);
  for (int k = 1; k <= size(); ++k) grid[pos_[k - 1].first][pos_[k - 1].second] = k;
  return grid;
}

std::string StandardTableau::str() const {
  std::ostringstream os;
  auto grid = rows();
  for (size_t i = 0; i < grid.size(); ++i) {
    if (i) os << "|";
    for (size_t j = 0; j < grid[i].size(); ++j) os << (j ? " " : "") << grid[i][j];
  }
  return os.str();
}

bool StandardTableau::operator<(const StandardTableau& o) const {
  if (shape_ != o.shape_) return shape_ < o.shape_;
  return pos_ < o.pos_;
}

namespace {

void gen_syt(const Partition& shape, std::vector<std::pair<int, int>>& pos, int k,
             std::vector<StandardTableau>& out, const Partition& full) {
  if (k == 0) {
    std::vector<std::pair<int, int>> forward(pos.rbegin(), pos.rend());
    out.push_back(StandardTableau(full, forward));
    return;
  }
  for (auto [r, c] : shape.corners()) {
    pos.push_back({r, c});
    gen_syt(shape.remove_corner(r), pos, k - 1, out, full);
    pos.pop_back();
  }
}

}  // namespace

std::vector<StandardTableau> enumerate_syt(const Partition& shape) {
  std::vector<StandardTableau> out;
  std::vector<std::pair<int, int>> pos;
  gen_syt(shape, pos, shape.size(), out, shape);
  std::sort(out.begin(), out.end(), [](const StandardTableau& a, const StandardTableau& b) {
    for (int k = 1; k <= a.size(); ++k) {
      if (a.row_of(k) != b.row_of(k)) return a.row_of(k) < b.row_of(k);
    }
    return false;
  });
  return out;
}

}  // namespace qch
