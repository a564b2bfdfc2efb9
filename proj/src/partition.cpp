#include "latcon/partition.hpp"

#include <algorithm>
#include <sstream>

#include "latcon/error.hpp"

namespace latcon {

Partition Partition::singletons(int n) {
  std::vector<int> r(n);
  for (int i = 0; i < n; ++i) r[i] = i;
  return Partition(std::move(r));
}

Partition Partition::one_block(int n) {
  return Partition(std::vector<int>(n, 0));
}

Partition Partition::from_map(const std::vector<int>& any_rep) {
  int n = int(any_rep.size());
  std::vector<int> root(n, -1), out(n);
  // two passes: first find the minimum of each class, then rewrite
  for (int i = 0; i < n; ++i) {
    int r = any_rep[i];
    while (any_rep[r] != r) r = any_rep[r];
    if (root[r] < 0) root[r] = i;
    out[i] = root[r];
  }
  return Partition(std::move(out));
}

Partition Partition::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> r(n, -1);
  for (const auto& blk : blocks) {
    if (blk.empty()) throw error(errc::bad_input, "empty block");
    int m = *std::min_element(blk.begin(), blk.end());
    for (int e : blk) {
      if (e < 0 || e >= n) throw error(errc::bad_input, "block element out of range");
      if (r[e] >= 0) throw error(errc::bad_input, "blocks overlap at " + std::to_string(e));
      r[e] = m;
    }
  }
  for (int i = 0; i < n; ++i)
    if (r[i] < 0) throw error(errc::bad_input, "blocks do not cover " + std::to_string(i));
  return Partition(std::move(r));
}

int Partition::classes() const {
  int c = 0;
  for (int i = 0; i < size(); ++i)
    if (rep[i] == i) ++c;
  return c;
}

std::vector<std::vector<int>> Partition::blocks() const {
  std::vector<std::vector<int>> out;
  std::vector<int> where(size(), -1);
  for (int i = 0; i < size(); ++i) {
    if (rep[i] == i) {
      where[i] = int(out.size());
      out.push_back({});
    }
    out[where[rep[i]]].push_back(i);
  }
  return out;
}

bool Partition::refines(const Partition& other) const {
  for (int i = 0; i < size(); ++i)
    if (other.rep[rep[i]] != other.rep[i]) return false;
  return true;
}

std::string Partition::block_text() const {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (const auto& blk : blocks()) {
    if (!first) os << ",";
    first = false;
    os << "[";
    for (size_t k = 0; k < blk.size(); ++k) os << (k ? "," : "") << blk[k];
    os << "]";
  }
  os << "]";
  return os.str();
}

std::string Partition::block_text(const std::vector<std::string>& labels) const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& blk : blocks()) {
    if (!first) os << " ";
    first = false;
    os << "{";
    for (size_t k = 0; k < blk.size(); ++k) os << (k ? "," : "") << labels[blk[k]];
    os << "}";
  }
  os << "}";
  return os.str();
}

Partition parse_block_text(int n, const std::string& text) {
  std::vector<std::vector<int>> blocks;
  std::vector<int> cur;
  int depth = 0;
  std::string num;
  auto flush_num = [&]() {
    if (!num.empty()) {
      cur.push_back(std::stoi(num));
      num.clear();
    }
  };
  for (char c : text) {
    if (c == '[') {
      ++depth;
      if (depth == 2) cur.clear();
    } else if (c == ']') {
      flush_num();
      if (depth == 2) blocks.push_back(cur);
      --depth;
    } else if (c == ',') {
      flush_num();
    } else if (c >= '0' && c <= '9') {
      num.push_back(c);
    } else if (c != ' ') {
      throw error(errc::bad_input, "bad character in block text");
    }
  }
  if (depth != 0) throw error(errc::bad_input, "unbalanced block text");
  return Partition::from_blocks(n, blocks);
}

std::vector<Partition> all_partitions(int n) {
  if (n > 12) throw error(errc::size_too_large, "partition enumeration capped at 12 elements");
  std::vector<Partition> out;
  std::vector<int> a(n, 0);  // restricted growth string
  while (true) {
    std::vector<int> first_of(n, -1), rep(n);
    for (int i = 0; i < n; ++i) {
      if (first_of[a[i]] < 0) first_of[a[i]] = i;
      rep[i] = first_of[a[i]];
    }
    out.emplace_back(std::move(rep));
    // next RGS
    int i = n - 1;
    for (; i > 0; --i) {
      int mx = 0;
      for (int j = 0; j < i; ++j) mx = std::max(mx, a[j]);
      if (a[i] <= mx) {
        ++a[i];
        for (int j = i + 1; j < n; ++j) a[j] = 0;
        break;
      }
    }
    if (i == 0) break;
  }
  return out;
}

}  // namespace latcon
