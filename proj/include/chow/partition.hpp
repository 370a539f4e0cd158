#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "chow/errors.hpp"
#include "chow/rational.hpp"

namespace chow {

// Integer partition: weakly decreasing positive parts. The empty partition is
// the unit class.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0)
        throw ArgumentError("partition: parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw ArgumentError("partition: parts must be weakly decreasing");
    }
  }

  // The full rows x cols rectangle.
  static Partition box(int rows, int cols) {
    if (rows < 0 || cols < 0) throw ArgumentError("partition: negative box");
    if (cols == 0) return Partition();
    return Partition(std::vector<int>(static_cast<std::size_t>(rows), cols));
  }

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  int size() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
  }

  // 0-based; zero beyond the last part.
  int part(int i) const {
    return (i >= 0 && i < length()) ? parts_[static_cast<std::size_t>(i)] : 0;
  }

  bool fits_box(int rows, int cols) const {
    return length() <= rows && part(0) <= cols;
  }

  bool operator==(const Partition& rhs) const = default;

 private:
  std::vector<int> parts_;
};

// Canonical partition order: by total size, then lexicographically descending
// on zero-padded part lists. Enumeration and serialization follow it, e.g. in
// degree 2 the order is (2), (1,1).
struct PartitionCanonicalLess {
  bool operator()(const Partition& a, const Partition& b) const {
    int sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    int len = std::max(a.length(), b.length());
    for (int i = 0; i < len; ++i) {
      if (a.part(i) != b.part(i)) return a.part(i) > b.part(i);
    }
    return false;
  }
};

inline Partition conjugate(const Partition& lam) {
  if (lam.empty()) return Partition();
  std::vector<int> parts(static_cast<std::size_t>(lam.part(0)), 0);
  for (int i = 0; i < lam.length(); ++i)
    for (int j = 0; j < lam.part(i); ++j) ++parts[static_cast<std::size_t>(j)];
  return Partition(std::move(parts));
}

// Complement (cols - lam_{rows-1-i}) inside the rows x cols box.
inline Partition box_complement(const Partition& lam, int rows, int cols) {
  if (!lam.fits_box(rows, cols))
    throw ArgumentError("partition: does not fit the box");
  std::vector<int> parts;
  for (int i = 0; i < rows; ++i) {
    int p = cols - lam.part(rows - 1 - i);
    if (p > 0) parts.push_back(p);
  }
  return Partition(std::move(parts));
}

// All partitions of n with at most `rows` parts, each at most `cols`, in
// canonical order. Empty for n out of range.
inline std::vector<Partition> partitions_in_box(int n, int rows, int cols) {
  std::vector<Partition> out;
  if (n < 0 || n > rows * cols) return out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rem, int maxpart, int slots) -> void {
    if (rem == 0) {
      out.emplace_back(Partition(cur));
      return;
    }
    if (slots == 0) return;
    for (int p = std::min(maxpart, rem); p >= 1; --p) {
      if (rem - p > (slots - 1) * p) continue;
      cur.push_back(p);
      self(self, rem - p, p, slots - 1);
      cur.pop_back();
    }
  };
  rec(rec, n, cols, rows);
  return out;
}

// Number of partitions of n with every part <= maxpart (length unbounded).
inline long count_partitions_max_part(int n, int maxpart) {
  if (n < 0) throw ArgumentError("partition count: negative n");
  if (maxpart < 0) throw ArgumentError("partition count: negative part bound");
  std::vector<long> dp(static_cast<std::size_t>(n) + 1, 0);
  dp[0] = 1;
  for (int m = 1; m <= maxpart; ++m)
    for (int v = m; v <= n; ++v) dp[static_cast<std::size_t>(v)] += dp[static_cast<std::size_t>(v - m)];
  return dp[static_cast<std::size_t>(n)];
}

inline Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  return num / den;
}

}  // namespace chow
