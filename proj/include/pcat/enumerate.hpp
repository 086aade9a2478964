#pragma once

#include <algorithm>
#include <vector>

#include "pcat/partition.hpp"

namespace pcat {

namespace detail {

// Walks the boundary order once, keeping a stack of blocks that can still
// receive points. Joining a block closes every block opened after it, which
// is exactly the noncrossing condition, so each partition is produced once.
struct NoncrossingWalker {
  int upper;
  int lower;
  bool pairings_only;
  std::vector<int> label_at;         // label per boundary position
  std::vector<int> open;             // stack of open block labels
  std::vector<int> block_size;
  std::vector<SetPartition>* out;

  void emit() {
    const int n = upper + lower;
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (int pos = 0; pos < n; ++pos) {
      const int point = pos < upper ? pos + 1 : upper + lower - (pos - upper);
      labels[point - 1] = label_at[pos];
    }
    out->push_back(SetPartition::from_labels(labels, upper, lower));
  }

  void step(int pos) {
    const int n = upper + lower;
    if (pos == n) {
      if (pairings_only && !open.empty()) return;
      emit();
      return;
    }
    const int remaining = n - pos;
    if (pairings_only) {
      // close the innermost open pair
      if (!open.empty()) {
        const int b = open.back();
        open.pop_back();
        label_at[pos] = b;
        step(pos + 1);
        open.push_back(b);
      }
      if (static_cast<int>(open.size()) + 1 <= remaining - 1) {
        const int b = static_cast<int>(block_size.size());
        block_size.push_back(1);
        open.push_back(b);
        label_at[pos] = b;
        step(pos + 1);
        open.pop_back();
        block_size.pop_back();
      }
      return;
    }
    const int b = static_cast<int>(block_size.size());
    block_size.push_back(1);
    open.push_back(b);
    label_at[pos] = b;
    step(pos + 1);
    open.pop_back();
    block_size.pop_back();
    for (std::size_t depth = open.size(); depth-- > 0;) {
      const int target = open[depth];
      std::vector<int> closed(open.begin() + static_cast<std::ptrdiff_t>(depth) + 1, open.end());
      open.resize(depth + 1);
      label_at[pos] = target;
      ++block_size[target];
      step(pos + 1);
      --block_size[target];
      open.insert(open.end(), closed.begin(), closed.end());
    }
  }
};

inline std::vector<SetPartition> enumerate_noncrossing(int upper, int lower, bool pairings_only) {
  std::vector<SetPartition> out;
  if (upper < 0 || lower < 0) throw ValidationError("negative row size");
  if (pairings_only && (upper + lower) % 2 != 0) return out;
  NoncrossingWalker w{upper, lower, pairings_only,
                      std::vector<int>(static_cast<std::size_t>(upper + lower)), {}, {}, &out};
  w.step(0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// All noncrossing partitions of k upper and l lower points, sorted by
/// canonical form.
inline std::vector<SetPartition> enumerate_nc_partitions(int k, int l) {
  return detail::enumerate_noncrossing(k, l, false);
}

/// All noncrossing pairings; empty when k+l is odd.
inline std::vector<SetPartition> enumerate_nc_pairings(int k, int l) {
  return detail::enumerate_noncrossing(k, l, true);
}

/// All pairings (crossing allowed), sorted. Used for the classical O(n)
/// categories.
inline std::vector<SetPartition> enumerate_pairings(int k, int l) {
  std::vector<SetPartition> out;
  const int n = k + l;
  if (n % 2 != 0) return out;
  std::vector<int> partner(static_cast<std::size_t>(n), -1);
  auto rec = [&](auto&& self) -> void {
    int first = 0;
    while (first < n && partner[first] != -1) ++first;
    if (first == n) {
      std::vector<SetPartition::Block> blocks;
      for (int i = 0; i < n; ++i)
        if (partner[i] > i) blocks.push_back({i + 1, partner[i] + 1});
      out.push_back(SetPartition::from_blocks(std::move(blocks), k, l));
      return;
    }
    for (int j = first + 1; j < n; ++j) {
      if (partner[j] != -1) continue;
      partner[first] = j;
      partner[j] = first;
      self(self);
      partner[first] = partner[j] = -1;
    }
  };
  rec(rec);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pcat
