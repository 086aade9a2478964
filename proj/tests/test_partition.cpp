#include <catch_amalgamated.hpp>

#include "pcat/checks.hpp"
#include "pcat/partition.hpp"
#include "pcat/text_format.hpp"
#include "support/oracles.hpp"

using namespace pcat;

namespace {

// The two drawn partitions from the examples: p in (3,4) is noncrossing,
// q in (4,4) is not.
SetPartition drawn_p() { return SetPartition::from_blocks({{1, 2, 3, 5, 6}, {4}, {7}}, 3, 4); }
SetPartition drawn_q() { return SetPartition::from_blocks({{1}, {2, 7, 8}, {3, 6}, {4}, {5}}, 4, 4); }

// Tensor/compose example: a (4,5) and a (5,3) partition.
SetPartition left_factor() { return SetPartition::from_blocks({{1, 5}, {2, 3, 4, 6, 7}, {8, 9}}, 4, 5); }
SetPartition right_factor() { return SetPartition::from_blocks({{1, 2}, {4, 5}, {3, 6, 7, 8}}, 5, 3); }

}  // namespace

TEST_CASE("from_blocks canonicalizes and validates") {
  const auto a = SetPartition::from_blocks({{3, 2}, {1}}, 1, 2);
  const auto b = SetPartition::from_blocks({{1}, {2, 3}}, 1, 2);
  CHECK(a == b);
  CHECK(a.blocks() == std::vector<SetPartition::Block>{{1}, {2, 3}});
  CHECK(canonicalize({{2, 3}, {1}}, 1, 2) == b);

  try {
    SetPartition::from_blocks({{1, 2}, {2, 3}}, 1, 2);
    FAIL("expected a ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.point() == 2);
  }
  CHECK_THROWS_AS(SetPartition::from_blocks({{1, 4}}, 1, 2), ValidationError);
  CHECK_THROWS_AS(SetPartition::from_blocks({{1}}, 1, 2), ValidationError);
  CHECK_THROWS_AS(SetPartition::from_blocks({{}}, 0, 0), ValidationError);
  CHECK_THROWS_AS(SetPartition::from_blocks({}, -1, 0), ValidationError);
  CHECK(SetPartition::from_blocks({}, 0, 0).block_count() == 0);
}

TEST_CASE("drawn examples: crossing status") {
  CHECK(is_noncrossing(drawn_p()));
  CHECK_FALSE(is_noncrossing(drawn_q()));
  CHECK(is_noncrossing(left_factor()));
  CHECK(is_noncrossing(right_factor()));
  CHECK_FALSE(is_noncrossing(SetPartition::crossing()));
  CHECK(is_noncrossing(SetPartition::identity(4)));
}

TEST_CASE("is_noncrossing agrees with the four-point definition") {
  for (int n = 0; n <= 7; ++n)
    for (const auto& labels : oracle::set_partitions(n))
      for (int k = 0; k <= n; ++k) {
        const auto p = SetPartition::from_labels(labels, k, n - k);
        INFO(serialize(p));
        REQUIRE(is_noncrossing(p) == !oracle::crosses(labels, k, n - k));
      }
}

TEST_CASE("tensor example") {
  const auto t = tensor(left_factor(), right_factor());
  CHECK(t.upper_count() == 9);
  CHECK(t.lower_count() == 8);
  // upper 1..4 | 5..9, lower 10..14 | 15..17
  const auto expect = SetPartition::from_blocks(
      {{1, 10}, {2, 3, 4, 11, 12}, {13, 14}, {5, 6}, {8, 9}, {7, 15, 16, 17}}, 9, 8);
  CHECK(t == expect);
  CHECK(is_noncrossing(t));
}

TEST_CASE("composition example gives one loop and a single block") {
  const auto c = compose(right_factor(), left_factor());
  CHECK(c.loops == 1);
  CHECK(c.partition == SetPartition::from_blocks({{1, 2, 3, 4, 5, 6, 7}}, 4, 3));
}

TEST_CASE("involution example") {
  const auto inv = involute(left_factor());
  CHECK(inv == SetPartition::from_blocks({{1, 6}, {2, 3, 7, 8, 9}, {4, 5}}, 5, 4));
  CHECK(involute(inv) == left_factor());
}

TEST_CASE("compose rejects mismatched rows and keeps loops out of scalars") {
  CHECK_THROWS_AS(compose(SetPartition::pair(), SetPartition::pair()), SignatureError);
  const auto cap = involute(SetPartition::pair());
  const auto c = compose(cap, SetPartition::pair());
  CHECK(c.loops == 1);
  CHECK(c.partition.size() == 0);
  const auto id = compose(SetPartition::identity(3), SetPartition::identity(3));
  CHECK(id.partition == SetPartition::identity(3));
  CHECK(id.loops == 0);
}

TEST_CASE("compose is associative with additive loop counts") {
  const auto parts = all_noncrossing(5, false);
  std::map<int, std::vector<const SetPartition*>> by_upper;
  for (const auto& p : parts) by_upper[p.upper_count()].push_back(&p);
  std::size_t checked = 0;
  for (const auto& p : parts)
    for (const SetPartition* q : by_upper[p.lower_count()])
      for (const SetPartition* r : by_upper[q->lower_count()]) {
        if (p.size() + q->size() + r->size() > 12) continue;
        const auto qp = compose(*q, p);
        const auto rq = compose(*r, *q);
        const auto left = compose(*r, qp.partition);
        const auto right = compose(rq.partition, p);
        REQUIRE(left.partition == right.partition);
        REQUIRE(left.loops + qp.loops == right.loops + rq.loops);
        ++checked;
      }
  CHECK(checked > 1000);
}

TEST_CASE("tensor associativity and involution anti-homomorphism") {
  const auto parts = all_noncrossing(4, false);
  for (std::size_t i = 0; i < parts.size(); i += 3)
    for (std::size_t j = 0; j < parts.size(); j += 5)
      for (std::size_t k = 0; k < parts.size(); k += 7) {
        const auto& a = parts[i];
        const auto& b = parts[j];
        const auto& c = parts[k];
        REQUIRE(tensor(tensor(a, b), c) == tensor(a, tensor(b, c)));
      }
  std::map<int, std::vector<const SetPartition*>> by_upper;
  for (const auto& p : parts) by_upper[p.upper_count()].push_back(&p);
  for (const auto& p : parts)
    for (const SetPartition* q : by_upper[p.lower_count()]) {
      const auto qp = compose(*q, p);
      const auto rev = compose(involute(p), involute(*q));
      REQUIRE(involute(qp.partition) == rev.partition);
      REQUIRE(qp.loops == rev.loops);
    }
}

TEST_CASE("rotations preserve noncrossing and invert each other") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& labels : oracle::set_partitions(n))
      for (int k = 0; k <= n; ++k) {
        const auto p = SetPartition::from_labels(labels, k, n - k);
        const bool nc = is_noncrossing(p);
        REQUIRE(is_noncrossing(involute(p)) == nc);
        for (Side s : {Side::left, Side::right}) {
          if (k > 0) {
            const auto d = rotate(p, s, Direction::down);
            REQUIRE(d.upper_count() == k - 1);
            REQUIRE(is_noncrossing(d) == nc);
            REQUIRE(rotate(d, s, Direction::up) == p);
          }
          if (n - k > 0) REQUIRE(is_noncrossing(rotate(p, s, Direction::up)) == nc);
        }
        if (k == 0) {
          auto r = p;
          for (int i = 0; i < n; ++i) {
            r = cyclic_rotate(r);
            REQUIRE(is_noncrossing(r) == nc);
          }
          REQUIRE(r == p);
        }
      }
}

TEST_CASE("rotate moves the outermost point") {
  // identity(1) rotated down on the left becomes the pair
  CHECK(rotate(SetPartition::identity(1), Side::left, Direction::down) == SetPartition::pair());
  CHECK(rotate(SetPartition::identity(1), Side::right, Direction::down) == SetPartition::pair());
  // fork {1|2,3}: right rotation down gives the (0,3) block
  CHECK(rotate(SetPartition::fork(), Side::right, Direction::down) == SetPartition::from_blocks({{1, 2, 3}}, 0, 3));
  CHECK_THROWS_AS(rotate(SetPartition::pair(), Side::left, Direction::down), ValidationError);
  // cyclic_rotate: point k goes to 1
  const auto p = SetPartition::from_blocks({{1, 2}, {3}}, 0, 3);
  CHECK(cyclic_rotate(p) == SetPartition::from_blocks({{2, 3}, {1}}, 0, 3));
  CHECK_THROWS_AS(cyclic_rotate(SetPartition::identity(1)), SignatureError);
}

TEST_CASE("rotation flips the color of the moved point") {
  const auto p = SetPartition::identity(1).with_colors({{Color::white}, {Color::white}});
  CHECK(color_compatible(p));
  const auto d = rotate(p, Side::left, Direction::down);
  REQUIRE(d.colors());
  CHECK(d.colors()->lower == std::vector<Color>{Color::black, Color::white});
  CHECK(color_compatible(d));
}

TEST_CASE("color_compatible convention") {
  const auto id = SetPartition::identity(1);
  CHECK(color_compatible(id.with_colors({{Color::white}, {Color::white}})));
  CHECK_FALSE(color_compatible(id.with_colors({{Color::white}, {Color::black}})));
  CHECK_FALSE(color_compatible(SetPartition::pair().with_colors({{}, {Color::white, Color::white}})));
  CHECK(color_compatible(SetPartition::pair().with_colors({{}, {Color::white, Color::black}})));
  // nested pairing on w,b,b,w: outer pair w..w fails
  const auto nested = SetPartition::from_blocks({{1, 4}, {2, 3}}, 0, 4);
  CHECK_FALSE(color_compatible(nested.with_colors({{}, {Color::white, Color::black, Color::black, Color::white}})));
  CHECK(color_compatible(nested.with_colors({{}, {Color::white, Color::black, Color::white, Color::black}})));
  CHECK_THROWS_AS(color_compatible(SetPartition::fork().with_colors({{Color::white}, {Color::white, Color::black}})),
                  ValidationError);
  CHECK_THROWS_AS(color_compatible(SetPartition::pair()), ValidationError);
  CHECK_THROWS_AS(SetPartition::pair().with_colors({{Color::white}, {}}), ValidationError);
}

TEST_CASE("colored composition requires matching middle words") {
  const auto w = Color::white, b = Color::black;
  const auto cup = SetPartition::pair().with_colors({{}, {w, b}});
  const auto cap = involute(SetPartition::pair()).with_colors({{w, b}, {}});
  CHECK_NOTHROW(compose(cap, cup));
  const auto cap2 = involute(SetPartition::pair()).with_colors({{b, w}, {}});
  CHECK_THROWS(compose(cap2, cup));
  const auto t = tensor(cup, cup);
  REQUIRE(t.colors());
  CHECK(t.colors()->lower == std::vector<Color>{w, b, w, b});
}
