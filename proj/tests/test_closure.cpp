#include <catch_amalgamated.hpp>

#include "pcat/classical.hpp"
#include "pcat/closure.hpp"
#include "pcat/experiments.hpp"

using namespace pcat;

TEST_CASE("plain closure of the pair gives the NC pairing ranks at N = 2") {
  const auto g = plain_generators(Preset::o_plus, 2);
  const auto c = close(g, 8);
  REQUIRE(c.saturated);
  const auto ref = reference_dims(ReferenceKind::nc_pairings, 2, 8, Mode::plain);
  CHECK(compare_dims(c.dims(), ref).empty());
  CHECK(c.dim_of({0, 8}) == 14);
  CHECK(c.dim_of({1, 2}) == 0);
  CHECK(c.dim_of({3, 3}) == 5);
}

TEST_CASE("empty generator set: identities and rotations only") {
  GeneratorSet g{2, Mode::plain, realize(SetPartition::pair(), 2), {}};
  const auto c = close(g, 2);
  CHECK(c.saturated);
  CHECK(c.dim_of({1, 1}) == 1);
  CHECK(c.dim_of({0, 2}) == 1);
  CHECK(c.dim_of({0, 0}) == 1);
  CHECK(c.dim_of({0, 1}) == 0);
}

TEST_CASE("plain closure with the crossing gives all pairings") {
  const auto c = close(plain_generators(Preset::o, 2), 6);
  REQUIRE(c.saturated);
  CHECK(compare_dims(c.dims(), reference_dims(ReferenceKind::pairings, 2, 6, Mode::plain)).empty());
}

TEST_CASE("plain closure for the free symmetric preset gives NC partition ranks") {
  const auto c = close(plain_generators(Preset::s_plus, 4), 3);
  REQUIRE(c.saturated);
  CHECK(compare_dims(c.dims(), reference_dims(ReferenceKind::nc_partitions, 4, 3, Mode::plain)).empty());
  CHECK(c.dim_of({0, 3}) == 5);
}

TEST_CASE("closure contains generators, adjoints and the nested duality") {
  const auto g = projective_generators(Preset::o_plus, 2);
  const auto c = close(g, 8);
  REQUIRE(c.saturated);
  for (const auto& t : g.generators) {
    CHECK(c.contains(t));
    CHECK(c.contains(adjoint_op(t)));
  }
  CHECK(c.contains(object_duality(g)));
  for (const auto& [s, b] : c.spaces) {
    CHECK(s.in % 2 == 0);
    CHECK(s.out % 2 == 0);
    for (const auto& e : b.elements()) CHECK(c.contains(adjoint_op(e)));
  }
}

TEST_CASE("dimensions never decrease with the round budget") {
  const auto g = projective_generators(Preset::o_plus, 2);
  std::map<Signature, std::size_t> prev;
  for (int rounds = 1; rounds <= 7; ++rounds) {
    const auto c = close(g, 8, 2, rounds);
    for (const auto& [s, d] : c.dims()) CHECK(d >= prev[s]);
    prev = c.dims();
    if (rounds == 1) CHECK_FALSE(c.saturated);
  }
  CHECK(close(g, 8, 2, 7).saturated);
}

TEST_CASE("closure is deterministic") {
  const auto g = projective_generators(Preset::o_plus, 2);
  const auto a = close(g, 6), b = close(g, 6);
  for (const auto& [s, basis] : a.spaces) {
    const auto& other = b.spaces.at(s);
    REQUIRE(basis.dimension() == other.dimension());
    for (std::size_t i = 0; i < basis.dimension(); ++i) REQUIRE(basis.elements()[i] == other.elements()[i]);
  }
}

TEST_CASE("closure basis elements of the classical preset intertwine O(n)") {
  const auto c = close(projective_generators(Preset::o, 2), 6);
  REQUIRE(c.saturated);
  const auto a = random_orthogonal(2, 3);
  for (const auto& [s, b] : c.spaces)
    for (const auto& e : b.elements()) REQUIRE(intertwiner_residual(e, a) < 1e-9);
}

TEST_CASE("closure input validation") {
  auto g = projective_generators(Preset::o_plus, 2);
  CHECK_THROWS_AS(close(g, 1), ValidationError);
  CHECK_THROWS_AS(close(g, 4, -1), ValidationError);
  auto odd = g;
  odd.generators.push_back(realize(SetPartition::fork(), 2));
  CHECK_THROWS_AS(close(odd, 6), ValidationError);
  auto bad = g;
  bad.duality = SparseOperator::from_entries(2, 0, 2, {{0, Rational(1)}});
  CHECK_THROWS_AS(close(bad, 6), ValidationError);
  auto big = g;
  big.generators.push_back(realize(enumerate_nc_pairings(0, 10).front(), 2));
  CHECK_THROWS_AS(close(big, 6, 2), ValidationError);
  auto wrong_dim = g;
  wrong_dim.generators.push_back(realize(SetPartition::pair(), 3));
  CHECK_THROWS_AS(close(wrong_dim, 6), ValidationError);
}

TEST_CASE("a non-identity duality is accepted") {
  GeneratorSet g{2, Mode::plain, duality_from_matrix({{0, 1}, {-1, 0}}), {}};
  const auto c = close(g, 4);
  CHECK(c.saturated);
  CHECK(c.dim_of({0, 2}) == 1);
  CHECK(c.dim_of({2, 2}) >= 2);
}
