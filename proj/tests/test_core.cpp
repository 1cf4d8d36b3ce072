#include <doctest.h>

#include "polity/error.hpp"
#include "polity/linalg.hpp"
#include "polity/types.hpp"
#include "support/instances.hpp"

using namespace polity;

TEST_CASE("politics validation accepts the uniform matrix") {
  Matrix m(2, 2);
  m << 0.5, 0.5, 0.5, 0.5;
  auto a = PoliticsMatrix::validate(m);
  CHECK(a.size() == 2);
  CHECK(a.entries()(0, 0) == doctest::Approx(0.5));
}

TEST_CASE("politics validation rejects zeros") {
  Matrix m = Matrix::Identity(2, 2);
  CHECK_THROWS_WITH_AS(PoliticsMatrix::validate(m), doctest::Contains("strictly positive"), Error);
  try {
    PoliticsMatrix::validate(m);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonPositiveEntry);
    CHECK(e.kind() == ErrorKind::Validation);
  }
}

TEST_CASE("politics validation rejects bad row sums, naming the row") {
  Matrix m(2, 2);
  m << 0.6, 0.5, 0.5, 0.5;
  try {
    PoliticsMatrix::validate(m);
    FAIL("expected RowSumViolation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RowSumViolation);
    REQUIRE(e.indices().size() == 1);
    CHECK(e.indices()[0] == 1);
  }
}

TEST_CASE("politics validation rejects non-square and non-finite input") {
  Matrix m(1, 2);
  m << 0.5, 0.5;
  CHECK_THROWS_AS(PoliticsMatrix::validate(m), Error);
  Matrix bad(1, 1);
  bad << std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(PoliticsMatrix::validate(bad), Error);
}

TEST_CASE("rows are renormalized exactly after ingestion") {
  Matrix m(2, 2);
  m << 0.6 + 3e-10, 0.4, 0.3, 0.7 - 2e-10;
  auto a = PoliticsMatrix::validate(m);
  for (int i = 0; i < 2; ++i) CHECK(a.entries().row(i).sum() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("dominated validation snaps tiny entries to exact zeros") {
  Matrix m(2, 2);
  m << 1.0 - 1e-15, 1e-15, 0.5, 0.5;
  auto a_hat = DominatedMatrix::validate(m);
  CHECK(a_hat.entries()(0, 1) == 0.0);
  CHECK(a_hat.entries()(0, 0) == 1.0);

  Matrix neg(1, 1);
  neg << -0.2;
  CHECK_THROWS_AS(DominatedMatrix::validate(neg), Error);
}

TEST_CASE("substochastic check accepts a voter block with zeros") {
  Matrix m(2, 2);
  m << 0.5, 0.0, 0.5, 0.0;
  CHECK_NOTHROW(validate_substochastic(m));

  Matrix full(1, 1);
  full << 1.0;
  CHECK_THROWS_AS(validate_substochastic(full), Error);
}

TEST_CASE("centered subtracts the identity") {
  Matrix m(2, 2);
  m << 0.6, 0.4, 0.3, 0.7;
  auto c = centered(PoliticsMatrix::validate(m));
  CHECK(c.entries()(0, 0) == doctest::Approx(-0.4));
  CHECK(c.entries()(0, 1) == doctest::Approx(0.4));
  CHECK(c.entries()(1, 0) == doctest::Approx(0.3));
  CHECK(c.entries()(1, 1) == doctest::Approx(-0.3));
}

TEST_CASE("centered uniform 3x3 and zero row sums") {
  Matrix m = Matrix::Constant(3, 3, 1.0 / 3.0);
  auto c = centered(PoliticsMatrix::validate(m));
  CHECK(c.entries()(0, 0) == doctest::Approx(-2.0 / 3.0));
  CHECK(c.entries()(0, 1) == doctest::Approx(1.0 / 3.0));
  for (int seed = 0; seed < 10; ++seed) {
    auto a = testing::random_politics(4 + seed % 3, seed);
    auto cc = centered(a);
    for (int i = 0; i < cc.size(); ++i) CHECK(std::abs(cc.entries().row(i).sum()) < 1e-12);
  }
}

TEST_CASE("row rescale multiplies rows and keeps sums zero") {
  Matrix m(2, 2);
  m << 0.6, 0.4, 0.3, 0.7;
  auto c = centered(PoliticsMatrix::validate(m));

  auto unchanged = row_rescale(c, Vector::Ones(2));
  CHECK(testing::max_abs(unchanged.entries() - c.entries()) == 0.0);

  auto doubled = row_rescale(c, Vector::Constant(2, 2.0));
  CHECK(testing::max_abs(doubled.entries() - 2.0 * c.entries()) == 0.0);

  CHECK_THROWS_AS(row_rescale(c, Vector::Zero(2)), Error);
}

TEST_CASE("index partition rejects overlap and empty sides") {
  CHECK_THROWS_AS(IndexPartition::of(4, {0, 1}, {1, 2}), Error);
  CHECK_THROWS_AS(IndexPartition::of(4, {}, {1}), Error);
  CHECK_THROWS_AS(IndexPartition::against_complement(2, {0, 1}), Error);
  auto p = IndexPartition::against_complement(4, {2, 3});
  CHECK(p.voters() == IndexSet{0, 1});
  CHECK(p.voters_are_complement());
}

TEST_CASE("index sets reject duplicates and out-of-range members") {
  CHECK_THROWS_AS(make_index_set({0, 0}, 3), Error);
  CHECK_THROWS_AS(make_index_set({3}, 3), Error);
  CHECK(complement({1}, 3) == IndexSet{0, 2});
}

TEST_CASE("politics invariants: row sums, rank, sign-coherent left kernel") {
  for (int seed = 0; seed < 25; ++seed) {
    int n = 2 + seed % 7;
    auto a = testing::random_politics(n, 1000 + seed);
    CHECK(testing::max_abs(a.entries() * Vector::Ones(n) - Vector::Ones(n)) < 1e-12);
    CHECK(a.entries().minCoeff() > 0.0);

    Matrix shifted = Matrix::Identity(n, n) - a.entries();
    CHECK(matrix_rank(shifted) == n - 1);

    Matrix kernel = left_kernel(shifted);
    REQUIRE(kernel.rows() == 1);
    CHECK(kernel.row(0).minCoeff() * kernel.row(0).maxCoeff() > 0.0);
  }
}

TEST_CASE("every proper diagonal block of a politics matrix is substochastic") {
  auto a = testing::random_politics(6, 77);
  for (int mask = 1; mask < (1 << 6) - 1; ++mask) {
    IndexSet block;
    for (int i = 0; i < 6; ++i)
      if (mask & (1 << i)) block.push_back(i);
    CHECK_NOTHROW(validate_substochastic(slice(a.entries(), block, block)));
  }
}

TEST_CASE("single-person society is legal") {
  Matrix m(1, 1);
  m << 1.0;
  auto a = PoliticsMatrix::validate(m);
  CHECK(a.size() == 1);
  CHECK_THROWS_AS(IndexPartition::against_complement(1, {0}), Error);
}
