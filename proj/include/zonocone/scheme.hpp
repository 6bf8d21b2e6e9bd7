#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace zc {

/// Sorted d-element subset of [n], 1-based members.
struct SubsetIndex {
  std::vector<int> members;

  auto operator<=>(const SubsetIndex&) const = default;
};

/// Partition of [n] into k = n/d blocks of size d. Canonical form: each block
/// sorted, blocks ordered by their minimum element.
struct PartitionIndex {
  std::vector<SubsetIndex> blocks;

  auto operator<=>(const PartitionIndex&) const = default;
};

inline std::string subset_string(const SubsetIndex& s) {
  std::string out;
  for (int i : s.members) out += std::to_string(i);
  return out;
}

/// "12|34|56" in canonical block order.
inline std::string partition_string(const PartitionIndex& p) {
  std::string out;
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    if (b) out += '|';
    out += subset_string(p.blocks[b]);
  }
  return out;
}

inline PartitionIndex canonical_partition(std::vector<std::vector<int>> blocks) {
  PartitionIndex p;
  for (auto& blk : blocks) {
    std::sort(blk.begin(), blk.end());
    p.blocks.push_back(SubsetIndex{std::move(blk)});
  }
  std::sort(p.blocks.begin(), p.blocks.end(),
            [](const SubsetIndex& a, const SubsetIndex& b) {
              return a.members.front() < b.members.front();
            });
  return p;
}

/// The indexing universe for a pair (n,d): all d-subsets of [n] and all
/// partitions of [n] into d-blocks, each in a deterministic lexicographic
/// order that fixes coordinate positions everywhere downstream.
struct PartitionScheme {
  int n = 0;
  int d = 0;
  std::vector<SubsetIndex> subsets;
  std::vector<PartitionIndex> partitions;
  std::map<SubsetIndex, std::size_t> subset_pos;
  std::map<PartitionIndex, std::size_t> partition_pos;

  std::size_t subset_index(const SubsetIndex& s) const {
    auto it = subset_pos.find(s);
    if (it == subset_pos.end()) throw std::invalid_argument("unknown subset");
    return it->second;
  }
  std::size_t partition_index(const PartitionIndex& p) const {
    auto it = partition_pos.find(p);
    if (it == partition_pos.end()) throw std::invalid_argument("unknown partition");
    return it->second;
  }
};

namespace detail {

inline void enumerate_subsets(int n, int d, std::vector<SubsetIndex>& out) {
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == d) {
      out.push_back(SubsetIndex{cur});
      return;
    }
    for (int i = start; i <= n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
}

inline void enumerate_partitions(int n, int d, std::vector<PartitionIndex>& out) {
  std::vector<int> rem(n);
  for (int i = 0; i < n; ++i) rem[i] = i + 1;
  std::vector<std::vector<int>> blocks;
  auto rec = [&](auto&& self, std::vector<int> left) -> void {
    if (left.empty()) {
      out.push_back(canonical_partition(blocks));
      return;
    }
    // first remaining element anchors its block, which keeps blocks ordered
    // by minimum and avoids duplicates
    int first = left.front();
    std::vector<int> rest(left.begin() + 1, left.end());
    std::vector<int> pick;
    auto choose = [&](auto&& chooser, std::size_t start) -> void {
      if (static_cast<int>(pick.size()) == d - 1) {
        std::vector<int> blk{first};
        blk.insert(blk.end(), pick.begin(), pick.end());
        std::vector<int> nleft;
        for (int x : rest)
          if (std::find(pick.begin(), pick.end(), x) == pick.end()) nleft.push_back(x);
        blocks.push_back(blk);
        self(self, nleft);
        blocks.pop_back();
        return;
      }
      for (std::size_t i = start; i < rest.size(); ++i) {
        pick.push_back(rest[i]);
        chooser(chooser, i + 1);
        pick.pop_back();
      }
    };
    choose(choose, 0);
  };
  rec(rec, rem);
  std::sort(out.begin(), out.end());
}

}  // namespace detail

/// Builds the full scheme. Rejects d not dividing n; n is capped at 8, which
/// covers every computation in the library.
inline PartitionScheme enumerate_scheme(int n, int d) {
  if (n <= 0 || d <= 0 || n % d != 0) throw std::invalid_argument("enumerate_scheme: d must divide n");
  if (n > 8) throw std::invalid_argument("enumerate_scheme: n > 8 unsupported");
  PartitionScheme s;
  s.n = n;
  s.d = d;
  detail::enumerate_subsets(n, d, s.subsets);
  detail::enumerate_partitions(n, d, s.partitions);
  for (std::size_t i = 0; i < s.subsets.size(); ++i) s.subset_pos[s.subsets[i]] = i;
  for (std::size_t i = 0; i < s.partitions.size(); ++i) s.partition_pos[s.partitions[i]] = i;
  return s;
}

/// Parses "12|34|56" back into a canonical partition. Only single-digit
/// members appear at n <= 8.
inline PartitionIndex parse_partition(const std::string& text) {
  std::vector<std::vector<int>> blocks(1);
  for (char c : text) {
    if (c == '|') {
      blocks.emplace_back();
    } else if (c >= '1' && c <= '8') {
      blocks.back().push_back(c - '0');
    } else {
      throw std::invalid_argument("malformed partition string: " + text);
    }
  }
  return canonical_partition(std::move(blocks));
}

}  // namespace zc
