#pragma once

#include <string>
#include <vector>

namespace latcon {

/// Set partition of 0..n-1 in minimum-representative form:
/// rep[i] is the least element of the block of i, so rep[rep[i]] == rep[i]
/// and rep[i] <= i. Equality of partitions is equality of rep arrays.
struct Partition {
  std::vector<int> rep;

  Partition() = default;
  explicit Partition(std::vector<int> r) : rep(std::move(r)) {}

  static Partition singletons(int n);
  static Partition one_block(int n);
  /// Canonicalizes an arbitrary parent/representative array.
  static Partition from_map(const std::vector<int>& any_rep);
  /// Blocks must be disjoint and cover 0..n-1.
  static Partition from_blocks(int n, const std::vector<std::vector<int>>& blocks);

  int size() const { return int(rep.size()); }
  int classes() const;
  bool same(int a, int b) const { return rep[a] == rep[b]; }
  std::vector<std::vector<int>> blocks() const;

  /// True iff every block of *this is contained in a block of other.
  bool refines(const Partition& other) const;

  bool operator==(const Partition& o) const { return rep == o.rep; }
  bool operator!=(const Partition& o) const { return rep != o.rep; }
  bool operator<(const Partition& o) const { return rep < o.rep; }

  /// Text form "[[0,1],[2],[3,4]]" with blocks and members sorted.
  std::string block_text() const;
  std::string block_text(const std::vector<std::string>& labels) const;
};

Partition parse_block_text(int n, const std::string& text);

struct PartitionHash {
  size_t operator()(const Partition& p) const {
    size_t h = 1469598103934665603ull;
    for (int v : p.rep) {
      h ^= size_t(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// All partitions of 0..n-1 (restricted growth strings); the brute-force
/// side of the congruence-enumeration oracle. Guarded to n <= 12.
std::vector<Partition> all_partitions(int n);

}  // namespace latcon
