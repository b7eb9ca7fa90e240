#include <random>

#include "doctest.h"
#include "test_util.hpp"

#include "ged/assignment.hpp"
#include "ged/error.hpp"
#include "ged/kernel.hpp"

using namespace ged;

namespace {

Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  Matrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (double x : r) m(i, j++) = x;
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("solve_assignment small cases") {
  CHECK(solve_assignment(from_rows({{0.9, 0.1}, {0.2, 0.8}}), Sense::maximize) ==
        Permutation({0, 1}));
  CHECK(solve_assignment(Matrix(5, 5, 2.5), Sense::minimize).is_identity());

  const Matrix c = from_rows({{4, 1, 3}, {2, 0, 5}, {3, 2, 2}});
  const Permutation pi = solve_assignment(c, Sense::minimize);
  CHECK(pi == Permutation({1, 0, 2}));
  CHECK(assignment_total(c, pi) == 5.0);

  CHECK(solve_assignment(Matrix(0, 0), Sense::minimize).size() == 0);
  CHECK(solve_assignment(Matrix(1, 1, 7.0), Sense::maximize) == Permutation({0}));
}

TEST_CASE("solve_assignment rejects bad input") {
  Matrix bad(2, 2);
  bad(0, 1) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(solve_assignment(bad, Sense::minimize), InputError);
  bad(0, 1) = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(solve_assignment(bad, Sense::minimize), InputError);
  CHECK_THROWS_AS(solve_assignment(Matrix(2, 3), Sense::minimize), InputError);
}

TEST_CASE("solve_assignment matches enumeration, including tie-breaks") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> small(0, 3);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 7;
    Matrix c(n, n);
    // Small integers make ties frequent.
    for (double& x : c.data()) x = small(rng);
    const auto [best, arg] = testutil::brute_force_assignment(c);
    const Permutation pi = solve_assignment(c, Sense::minimize);
    CHECK(assignment_total(c, pi) == best);
    CHECK(pi.mapping() == arg);
  }
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 6;
    const Matrix c = testutil::random_matrix(rng, n, n, -5.0, 5.0);
    const auto [best, arg] = testutil::brute_force_assignment(c * -1.0);
    CHECK(solve_assignment(c, Sense::maximize).mapping() == arg);
  }
}

TEST_CASE("round_to_permutation") {
  std::mt19937_64 rng(22);
  for (std::size_t n = 1; n <= 8; ++n) {
    const Permutation p = testutil::random_permutation(rng, n);
    CHECK(round_to_permutation(p.matrix()) == p);
    CHECK(round_to_permutation(Matrix(n, n, 1.0 / static_cast<double>(n))).is_identity());
  }

  // Near-identity except rows 1 and 2 trade most of their weight.
  Matrix p = 0.7 * Matrix::identity(4) + Matrix(4, 4, 0.075);
  p(1, 1) = 0.2;
  p(1, 2) = 0.65;
  p(2, 2) = 0.2;
  p(2, 1) = 0.65;
  const auto [best, arg] = testutil::brute_force_assignment(p * -1.0);
  CHECK(arg == std::vector<std::size_t>{0, 2, 1, 3});
  CHECK(round_to_permutation(p) == Permutation({0, 2, 1, 3}));
}

TEST_CASE("Hungarian outputs are permutations in the exact sense") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + trial % 12;
    const Matrix pm = round_to_permutation(testutil::random_matrix(rng, n, n)).matrix();
    CHECK(doubly_stochastic_violation(pm) == 0.0);
    CHECK(quasi_perm_residual(pm) == 0.0);
  }
}

TEST_CASE("Permutation helpers") {
  const Permutation a({2, 0, 1});
  const Permutation b({1, 2, 0});
  CHECK(a.then(b).matrix() == a.matrix() * b.matrix());
  CHECK(a.then(a.inverse()).is_identity());
  CHECK(Permutation::from_matrix(a.matrix()) == a);
  CHECK_THROWS_AS(Permutation({0, 0, 1}), InputError);
  CHECK_THROWS_AS(Permutation({0, 3}), InputError);
  CHECK_THROWS_AS(Permutation::from_matrix(Matrix(2, 2, 0.5)), InputError);
}
