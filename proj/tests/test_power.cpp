#include <doctest.h>

#include "polity/linalg.hpp"
#include "polity/power.hpp"
#include "support/instances.hpp"

using namespace polity;

namespace {

PoliticsMatrix two_state() {
  Matrix m(2, 2);
  m << 0.6, 0.4, 0.3, 0.7;
  return PoliticsMatrix::validate(m);
}

}  // namespace

TEST_CASE("contraction bound on the two-state example") {
  auto b = contraction_bound(two_state());
  CHECK(b.eps_min == doctest::Approx(0.3));
  CHECK(b.factor == doctest::Approx(0.4));
}

TEST_CASE("uniform matrix contracts in one step") {
  auto a = PoliticsMatrix::validate(Matrix::Constant(4, 4, 0.25));
  auto b = contraction_bound(a);
  CHECK(b.eps_min == doctest::Approx(0.25));
  CHECK(b.factor == doctest::Approx(0.0));
}

TEST_CASE("one multiplication shrinks the range by at least the factor") {
  auto rng = Xoshiro256StarStar::for_stream(42, 7);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + trial % 6;
    auto a = testing::random_politics(n, 4242 + trial);
    auto bound = contraction_bound(a);
    Vector u(n);
    for (int i = 0; i < n; ++i) u[i] = rng.uniform01() * 10 - 5;
    Vector v = a.entries() * u;
    double ru = u.maxCoeff() - u.minCoeff();
    double rv = v.maxCoeff() - v.minCoeff();
    CHECK(rv <= bound.factor * ru + 1e-12);
    if (ru > 0) {
      // strict monotone shrink
      CHECK(v.minCoeff() > u.minCoeff());
      CHECK(v.maxCoeff() < u.maxCoeff());
      CHECK(v.minCoeff() <= v.maxCoeff());
    }
  }
}

TEST_CASE("two-state power vector has the closed form (3/7, 4/7)") {
  auto a = two_state();
  auto iterative = power_iterative(a, 1e-14);
  auto explicit_solve = power_explicit(a);
  CHECK(iterative.weights[0] == doctest::Approx(3.0 / 7.0).epsilon(1e-10));
  CHECK(iterative.weights[1] == doctest::Approx(4.0 / 7.0).epsilon(1e-10));
  CHECK(explicit_solve.weights[0] == doctest::Approx(3.0 / 7.0).epsilon(1e-12));
  CHECK(explicit_solve.weights[1] == doctest::Approx(4.0 / 7.0).epsilon(1e-12));
}

TEST_CASE("uniform societies have uniform power") {
  auto a3 = PoliticsMatrix::validate(Matrix::Constant(3, 3, 1.0 / 3.0));
  auto w = power_iterative(a3, 1e-12);
  for (int i = 0; i < 3; ++i) CHECK(w.weights[i] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

  auto a4 = PoliticsMatrix::validate(Matrix::Constant(4, 4, 0.25));
  auto we = power_explicit(a4);
  for (int i = 0; i < 4; ++i) CHECK(we.weights[i] == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("iterative and explicit powers agree on random societies") {
  for (int seed = 0; seed < 20; ++seed) {
    auto a = testing::random_politics(2 + seed % 8, 900 + seed);
    auto wi = power_iterative(a, 1e-12);
    auto we = power_explicit(a);
    CHECK((wi.weights - we.weights).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("explicit power is pivot independent") {
  for (int seed = 0; seed < 10; ++seed) {
    auto a = testing::random_politics(5, 300 + seed);
    auto w1 = power_explicit(a, 0);
    auto w2 = power_explicit(a, 1);
    CHECK((w1.weights - w2.weights).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("power vector is positive, sums to 1 and is stationary") {
  for (int seed = 0; seed < 10; ++seed) {
    int n = 2 + seed % 6;
    auto a = testing::random_politics(n, 50 + seed);
    auto w = power_explicit(a);
    CHECK(w.weights.minCoeff() > 0.0);
    CHECK(w.weights.sum() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK((w.weights * a.entries() - w.weights).cwiseAbs().maxCoeff() < 1e-8);
  }
}

TEST_CASE("power identities: column sums and the rearranged form") {
  auto a = testing::random_politics(6, 1234);
  auto w = power_explicit(a).weights;
  const Matrix& m = a.entries();
  for (int j = 0; j < 6; ++j) {
    double listened = 0.0;
    for (int i = 0; i < 6; ++i) listened += w[i] * m(i, j);
    CHECK(std::abs(w[j] - listened) < 1e-8);

    double others_in = 0.0, others_out = 0.0;
    for (int i = 0; i < 6; ++i)
      if (i != j) {
        others_in += w[i] * m(i, j);
        others_out += m(j, i);
      }
    CHECK(std::abs(w[j] * others_out - others_in) < 1e-8);
  }
}

TEST_CASE("iterate_limit returns the consensus scalar") {
  auto a3 = PoliticsMatrix::validate(Matrix::Constant(3, 3, 1.0 / 3.0));
  Vector e1 = Vector::Zero(3);
  e1[0] = 1.0;
  CHECK(iterate_limit(a3, e1, 1e-12) == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
  CHECK(iterate_limit(a3, Vector::Ones(3), 1e-12) == doctest::Approx(1.0));

  for (int seed = 0; seed < 8; ++seed) {
    int n = 2 + seed;
    auto a = testing::random_politics(n, 600 + seed);
    auto w = power_explicit(a).weights;
    Vector u = Vector::Zero(n);
    u[0] = 1.0;
    CHECK(std::abs(iterate_limit(a, u, 1e-10) - w[0]) < 1e-8);
  }
}

TEST_CASE("matrix powers become rank one with rows equal to the power vector") {
  auto a = testing::random_politics(5, 31);
  auto w = power_explicit(a).weights;
  Matrix p = a.entries();
  for (int step = 0; step < 200; ++step) {
    double range = 0.0;
    for (int j = 0; j < 5; ++j) range = std::max(range, p.col(j).maxCoeff() - p.col(j).minCoeff());
    if (range < 1e-10) break;
    p = a.entries() * p;
  }
  for (int i = 0; i < 5; ++i) CHECK((p.row(i) - w).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("single person has power 1") {
  Matrix m(1, 1);
  m << 1.0;
  auto a = PoliticsMatrix::validate(m);
  CHECK(power_explicit(a).weights[0] == 1.0);
  CHECK(power_iterative(a, 1e-12).weights[0] == 1.0);
}
