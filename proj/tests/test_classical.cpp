#include <catch_amalgamated.hpp>

#include "pcat/classical.hpp"
#include "pcat/checks.hpp"
#include "pcat/experiments.hpp"

using namespace pcat;

TEST_CASE("seeded orthogonal samples are orthogonal and reproducible") {
  const auto a = random_orthogonal(3, 7);
  const auto b = random_orthogonal(3, 7);
  CHECK(a.data == b.data);
  CHECK(random_orthogonal(3, 8).data != a.data);
  DenseMatrix at(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) at(i, j) = a(j, i);
  CHECK(max_abs_difference(multiply(at, a), DenseMatrix::identity(3)) < 1e-12);
  CHECK_THROWS_AS(random_orthogonal(0, 1), ValidationError);
}

TEST_CASE("A (x) A satisfies the relation families for 100 samples") {
  for (std::uint64_t s = 0; s < 100; ++s) {
    const auto r = po_relation_check(random_orthogonal(3, 1000 + s), 1e-9);
    REQUIRE(r.passes);
  }
  // a non-orthogonal matrix fails
  DenseMatrix m = DenseMatrix::identity(3);
  m(0, 0) = 2.0;
  CHECK_FALSE(po_relation_check(m, 1e-9).passes);
}

TEST_CASE("realized pairings and the crossing intertwine O(n)") {
  for (int n : {2, 3}) {
    const auto a = random_orthogonal(n, 11);
    for (const auto& p : all_noncrossing(4, true)) CHECK(intertwiner_residual(realize(p, n), a) < 1e-9);
    CHECK(intertwiner_residual(realize(SetPartition::crossing(), n), a) < 1e-9);
    // a singleton is not an O(n) intertwiner
    CHECK(intertwiner_residual(realize(SetPartition::singleton(), n), a) > 1e-3);
  }
}

TEST_CASE("sandwiched crossing factors through the plain one") {
  CHECK(icrosspart_identity(2));
  CHECK(icrosspart_identity(3));
}

TEST_CASE("classical check report") {
  const auto rep = classical_check(3, 100, 7, 1e-9);
  CHECK(rep.status == Status::pass);
  CHECK(rep.worst.passes);
  CHECK(rep.icrosspart.at(2));
  CHECK(rep.icrosspart.at(3));
  CHECK(rep.intertwiner_residual < 1e-9);
  CHECK_THROWS_AS(classical_check(3, 0, 7, 1e-9), ValidationError);
  CHECK_THROWS_AS(classical_check(3, 10, 7, 0.0), ValidationError);
}

TEST_CASE("dense helpers") {
  const auto op = realize(SetPartition::crossing(), 2);
  const auto d = to_dense(op);
  CHECK(d.rows == 4);
  CHECK(d(1, 2) == 1.0);  // out (1,0) <- in (0,1)
  CHECK(d(1, 1) == 0.0);
  const auto k = kron(DenseMatrix::identity(2), DenseMatrix::identity(3));
  CHECK(max_abs_difference(k, DenseMatrix::identity(6)) == 0.0);
  CHECK(tensor_power(DenseMatrix::identity(2), 0).rows == 1);
}
