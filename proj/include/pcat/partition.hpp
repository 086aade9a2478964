#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pcat/errors.hpp"

namespace pcat {

enum class Color : std::uint8_t { white, black };

inline Color invert(Color c) { return c == Color::white ? Color::black : Color::white; }

struct Coloring {
  std::vector<Color> upper;
  std::vector<Color> lower;

  auto operator<=>(const Coloring&) const = default;
};

/// A partition of k upper and l lower points.
///
/// Points are 1-based and globally numbered: 1..k is the upper row left to
/// right, k+1..k+l the lower row left to right. Blocks are kept in canonical
/// form (ascending inside a block, blocks ordered by their minimum), so two
/// partitions are equal iff their members are equal.
class SetPartition {
 public:
  using Block = std::vector<int>;

  SetPartition() = default;

  /// Validates and canonicalizes. Throws ValidationError naming the first
  /// point that is out of range, repeated, or missing.
  static SetPartition from_blocks(std::vector<Block> blocks, int upper, int lower) {
    if (upper < 0 || lower < 0) throw ValidationError("negative row size");
    const int total = upper + lower;
    std::vector<int> seen(static_cast<std::size_t>(total) + 1, 0);
    for (auto& b : blocks) {
      if (b.empty()) throw ValidationError("empty block");
      for (int p : b) {
        if (p < 1 || p > total)
          throw ValidationError("point " + std::to_string(p) + " out of range", p);
        if (seen[p]++)
          throw ValidationError("point " + std::to_string(p) + " in two blocks", p);
      }
      std::sort(b.begin(), b.end());
    }
    for (int p = 1; p <= total; ++p)
      if (!seen[p]) throw ValidationError("point " + std::to_string(p) + " not covered", p);
    std::sort(blocks.begin(), blocks.end(),
              [](const Block& a, const Block& b) { return a.front() < b.front(); });
    SetPartition out;
    out.upper_ = upper;
    out.lower_ = lower;
    out.blocks_ = std::move(blocks);
    out.rebuild_labels();
    return out;
  }

  /// Builds from an arbitrary label per point (index 0 is point 1).
  static SetPartition from_labels(std::span<const int> labels, int upper, int lower) {
    if (static_cast<int>(labels.size()) != upper + lower)
      throw ValidationError("label count does not match k+l");
    std::vector<Block> blocks;
    std::vector<std::pair<int, int>> remap;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      auto it = std::find_if(remap.begin(), remap.end(),
                             [&](const auto& r) { return r.first == labels[i]; });
      if (it == remap.end()) {
        remap.emplace_back(labels[i], static_cast<int>(blocks.size()));
        blocks.push_back({static_cast<int>(i) + 1});
      } else {
        blocks[it->second].push_back(static_cast<int>(i) + 1);
      }
    }
    return from_blocks(std::move(blocks), upper, lower);
  }

  static SetPartition identity(int k) {
    std::vector<Block> blocks;
    for (int i = 1; i <= k; ++i) blocks.push_back({i, k + i});
    return from_blocks(std::move(blocks), k, k);
  }
  static SetPartition pair() { return from_blocks({{1, 2}}, 0, 2); }
  static SetPartition singleton() { return from_blocks({{1}}, 0, 1); }
  static SetPartition fork() { return from_blocks({{1, 2, 3}}, 1, 2); }
  static SetPartition crossing() { return from_blocks({{1, 4}, {2, 3}}, 2, 2); }

  int upper_count() const noexcept { return upper_; }
  int lower_count() const noexcept { return lower_; }
  int size() const noexcept { return upper_ + lower_; }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  const std::optional<Coloring>& colors() const noexcept { return colors_; }

  /// Block index (into blocks()) of a 1-based point.
  int block_of(int point) const { return labels_.at(static_cast<std::size_t>(point) - 1); }
  std::span<const int> labels() const noexcept { return labels_; }

  bool is_upper(int point) const noexcept { return point <= upper_; }

  bool is_pairing() const {
    return std::all_of(blocks_.begin(), blocks_.end(),
                       [](const Block& b) { return b.size() == 2; });
  }

  SetPartition with_colors(Coloring c) const {
    if (static_cast<int>(c.upper.size()) != upper_ || static_cast<int>(c.lower.size()) != lower_)
      throw ValidationError("color word lengths must equal k and l");
    SetPartition out = *this;
    out.colors_ = std::move(c);
    return out;
  }
  SetPartition without_colors() const {
    SetPartition out = *this;
    out.colors_.reset();
    return out;
  }

  // Boundary cyclic order: upper row left to right, then lower row right to
  // left. Positions are 0-based.
  int boundary_position(int point) const noexcept {
    return point <= upper_ ? point - 1 : upper_ + (upper_ + lower_ - point);
  }
  int point_at_boundary(int position) const noexcept {
    return position < upper_ ? position + 1 : upper_ + lower_ - (position - upper_);
  }

  bool operator==(const SetPartition& o) const {
    return upper_ == o.upper_ && lower_ == o.lower_ && blocks_ == o.blocks_ && colors_ == o.colors_;
  }
  std::strong_ordering operator<=>(const SetPartition& o) const {
    if (auto c = upper_ <=> o.upper_; c != 0) return c;
    if (auto c = lower_ <=> o.lower_; c != 0) return c;
    if (auto c = blocks_ <=> o.blocks_; c != 0) return c;
    return colors_ <=> o.colors_;
  }

 private:
  void rebuild_labels() {
    labels_.assign(static_cast<std::size_t>(upper_ + lower_), -1);
    for (std::size_t b = 0; b < blocks_.size(); ++b)
      for (int p : blocks_[b]) labels_[p - 1] = static_cast<int>(b);
  }

  int upper_ = 0;
  int lower_ = 0;
  std::vector<Block> blocks_;
  std::vector<int> labels_;
  std::optional<Coloring> colors_;
};

inline SetPartition canonicalize(std::vector<SetPartition::Block> raw, int upper, int lower) {
  return SetPartition::from_blocks(std::move(raw), upper, lower);
}

namespace detail {

struct UnionFind {
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> parent;
};

template <class F>
SetPartition relabel(const SetPartition& p, int upper, int lower, F&& new_point) {
  std::vector<SetPartition::Block> blocks;
  blocks.reserve(p.block_count());
  for (const auto& b : p.blocks()) {
    SetPartition::Block nb;
    nb.reserve(b.size());
    for (int x : b) nb.push_back(new_point(x));
    blocks.push_back(std::move(nb));
  }
  return SetPartition::from_blocks(std::move(blocks), upper, lower);
}

}  // namespace detail

/// Side-by-side placement; q's points are shifted past p's in each row.
inline SetPartition tensor(const SetPartition& p, const SetPartition& q) {
  const int kp = p.upper_count(), lp = p.lower_count();
  const int kq = q.upper_count(), lq = q.lower_count();
  const int k = kp + kq, l = lp + lq;
  std::vector<SetPartition::Block> blocks;
  for (const auto& b : p.blocks()) {
    SetPartition::Block nb;
    for (int x : b) nb.push_back(x <= kp ? x : k + (x - kp));
    blocks.push_back(std::move(nb));
  }
  for (const auto& b : q.blocks()) {
    SetPartition::Block nb;
    for (int x : b) nb.push_back(x <= kq ? kp + x : k + lp + (x - kq));
    blocks.push_back(std::move(nb));
  }
  auto out = SetPartition::from_blocks(std::move(blocks), k, l);
  if (p.colors() && q.colors()) {
    Coloring c = *p.colors();
    c.upper.insert(c.upper.end(), q.colors()->upper.begin(), q.colors()->upper.end());
    c.lower.insert(c.lower.end(), q.colors()->lower.begin(), q.colors()->lower.end());
    out = out.with_colors(std::move(c));
  }
  return out;
}

struct Composition {
  SetPartition partition;
  int loops = 0;
};

/// Stacks p on top of q (p is applied first): p's lower row is glued to q's
/// upper row. Components touching only the middle row are removed and
/// counted, so that q.p = N^loops * partition.
inline Composition compose(const SetPartition& q, const SetPartition& p) {
  const int k = p.upper_count(), mid = p.lower_count(), m = q.lower_count();
  if (q.upper_count() != mid)
    throw SignatureError("compose: upper row of q (" + std::to_string(q.upper_count()) +
                         ") does not match lower row of p (" + std::to_string(mid) + ")");
  // Node layout: [0,k) p upper, [k,k+mid) middle, [k+mid,k+mid+m) q lower.
  detail::UnionFind uf(k + mid + m);
  auto p_node = [&](int x) { return x - 1; };
  auto q_node = [&](int x) { return x <= mid ? k + x - 1 : k + mid + (x - mid) - 1; };
  for (const auto& b : p.blocks())
    for (std::size_t i = 1; i < b.size(); ++i) uf.unite(p_node(b[0]), p_node(b[i]));
  for (const auto& b : q.blocks())
    for (std::size_t i = 1; i < b.size(); ++i) uf.unite(q_node(b[0]), q_node(b[i]));

  std::vector<int> labels;
  labels.reserve(static_cast<std::size_t>(k + m));
  std::vector<char> outer_root(static_cast<std::size_t>(k + mid + m), 0);
  for (int i = 0; i < k; ++i) labels.push_back(uf.find(i));
  for (int i = 0; i < m; ++i) labels.push_back(uf.find(k + mid + i));
  for (int r : labels) outer_root[r] = 1;
  int loops = 0;
  std::vector<char> counted(outer_root.size(), 0);
  for (int i = 0; i < mid; ++i) {
    int r = uf.find(k + i);
    if (!outer_root[r] && !counted[r]) {
      counted[r] = 1;
      ++loops;
    }
  }
  auto result = SetPartition::from_labels(labels, k, m);
  if (p.colors() && q.colors()) {
    if (p.colors()->lower != q.colors()->upper)
      throw SignatureError("compose: middle color words differ");
    result = result.with_colors({p.colors()->upper, q.colors()->lower});
  }
  return {std::move(result), loops};
}

/// Horizontal reflection; colors swap rows and invert.
inline SetPartition involute(const SetPartition& p) {
  const int k = p.upper_count(), l = p.lower_count();
  auto out = detail::relabel(p, l, k, [&](int x) { return x <= k ? l + x : x - k; });
  if (p.colors()) {
    Coloring c;
    for (Color x : p.colors()->lower) c.upper.push_back(invert(x));
    for (Color x : p.colors()->upper) c.lower.push_back(invert(x));
    out = out.with_colors(std::move(c));
  }
  return out;
}

enum class Side { left, right };
enum class Direction { down, up };

/// Frobenius rotation of one outermost point between rows. `down` moves an
/// upper point to the same side of the lower row, `up` the inverse. The
/// moved point changes color when colors are present.
inline SetPartition rotate(const SetPartition& p, Side side, Direction dir) {
  const int k = p.upper_count(), l = p.lower_count();
  if (dir == Direction::down && k == 0) throw ValidationError("rotate: upper row is empty");
  if (dir == Direction::up && l == 0) throw ValidationError("rotate: lower row is empty");
  const int nk = dir == Direction::down ? k - 1 : k + 1;
  const int nl = dir == Direction::down ? l + 1 : l - 1;

  auto map = [&](int x) -> int {
    const bool upper = x <= k;
    const int idx = upper ? x : x - k;  // 1-based within its row
    if (dir == Direction::down) {
      if (side == Side::left) {
        if (upper) return idx == 1 ? nk + 1 : idx - 1;
        return nk + idx + 1;
      }
      if (upper) return idx == k ? nk + nl : idx;
      return nk + idx;
    }
    if (side == Side::left) {
      if (upper) return idx + 1;
      return idx == 1 ? 1 : nk + idx - 1;
    }
    if (upper) return idx;
    return idx == l ? nk : nk + idx;
  };
  auto out = detail::relabel(p, nk, nl, map);
  if (p.colors()) {
    std::vector<Color> up = p.colors()->upper, lo = p.colors()->lower;
    if (dir == Direction::down) {
      if (side == Side::left) {
        lo.insert(lo.begin(), invert(up.front()));
        up.erase(up.begin());
      } else {
        lo.push_back(invert(up.back()));
        up.pop_back();
      }
    } else if (side == Side::left) {
      up.insert(up.begin(), invert(lo.front()));
      lo.erase(lo.begin());
    } else {
      up.push_back(invert(lo.back()));
      lo.pop_back();
    }
    out = out.with_colors({std::move(up), std::move(lo)});
  }
  return out;
}

/// One-line rotation on a (0,k) partition: point k becomes point 1 and every
/// other point shifts right by one.
inline SetPartition cyclic_rotate(const SetPartition& p) {
  if (p.upper_count() != 0) throw SignatureError("cyclic_rotate needs an upper row of size 0");
  const int k = p.lower_count();
  if (k == 0) throw ValidationError("cyclic_rotate needs at least one point");
  auto out = detail::relabel(p, 0, k, [&](int x) { return x == k ? 1 : x + 1; });
  if (p.colors()) {
    auto lo = p.colors()->lower;
    std::rotate(lo.rbegin(), lo.rbegin() + 1, lo.rend());
    out = out.with_colors({{}, std::move(lo)});
  }
  return out;
}

/// True iff no two blocks interleave along the boundary cyclic order.
inline bool is_noncrossing(const SetPartition& p) {
  const int n = p.size();
  std::vector<int> seq(static_cast<std::size_t>(n));
  for (int pos = 0; pos < n; ++pos) seq[pos] = p.block_of(p.point_at_boundary(pos));
  // Read cyclically from the first point of block b; every other block must
  // sit inside a single gap between consecutive points of b.
  std::vector<int> gap_of(p.block_count());
  for (std::size_t b = 0; b < p.block_count(); ++b) {
    std::fill(gap_of.begin(), gap_of.end(), -1);
    int first = 0;
    while (seq[first] != static_cast<int>(b)) ++first;
    int gap = 0;
    for (int step = 1; step < n; ++step) {
      const int label = seq[(first + step) % n];
      if (label == static_cast<int>(b)) {
        ++gap;
      } else if (gap_of[label] == -1) {
        gap_of[label] = gap;
      } else if (gap_of[label] != gap) {
        return false;
      }
    }
  }
  return true;
}

/// Color rule for two-colored pairings: a pair joins opposite colors inside
/// one row and equal colors across rows.
inline bool color_compatible(const SetPartition& p) {
  if (!p.is_pairing()) throw ValidationError("color_compatible: not a pairing");
  if (!p.colors()) throw ValidationError("color_compatible: partition has no colors");
  const auto& c = *p.colors();
  auto color = [&](int x) {
    return x <= p.upper_count() ? c.upper[x - 1] : c.lower[x - p.upper_count() - 1];
  };
  for (const auto& b : p.blocks()) {
    const bool same_row = p.is_upper(b[0]) == p.is_upper(b[1]);
    const bool same_color = color(b[0]) == color(b[1]);
    if (same_row == same_color) return false;
  }
  return true;
}

}  // namespace pcat
