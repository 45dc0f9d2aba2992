// Copyright (c) 2026 The supercech Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#include <doctest.h>

#include "supercech/linsolve.hpp"
#include "supercech/random.hpp"

using namespace supercech;

TEST_CASE("square system") {
  // x + y = 3, x - y = 1
  const auto s = solve_exact({{{0, 1}, {1, 1}}, {{0, 1}, {1, -1}}}, {3, 1}, 2);
  REQUIRE(s.consistent);
  CHECK(s.rank == 2);
  CHECK(s.x == std::vector<Rational>{2, 1});
}

TEST_CASE("inconsistent and underdetermined systems") {
  CHECK_FALSE(solve_exact({{{0, 1}}, {{0, 2}}}, {1, 3}, 1).consistent);
  const auto s = solve_exact({{{0, 1}, {2, 1}}}, {make_rational(1, 2)}, 3);
  REQUIRE(s.consistent);
  CHECK(s.rank == 1);
  CHECK(s.x[0] + s.x[2] == make_rational(1, 2));
  CHECK(solve_exact({}, {}, 4).x == std::vector<Rational>(4, 0));
  CHECK(solve_exact({{}}, {0}, 2).consistent);
  CHECK_FALSE(solve_exact({{}}, {1}, 2).consistent);
}

TEST_CASE("random consistent systems are solved exactly") {
  InstanceGenerator gen(41);
  for (int t = 0; t < 40; ++t) {
    const std::size_t cols = static_cast<std::size_t>(gen.uniform(1, 8));
    const int nrows = gen.uniform(1, 10);
    std::vector<Rational> x0(cols);
    for (auto& v : x0) v = gen.rational();
    std::vector<SparseRow> rows;
    std::vector<Rational> rhs;
    for (int r = 0; r < nrows; ++r) {
      SparseRow row;
      Rational b = 0;
      for (std::size_t c = 0; c < cols; ++c)
        if (gen.coin()) {
          row[c] = gen.rational();
          b += row[c] * x0[c];
        }
      rows.push_back(row);
      rhs.push_back(b);
    }
    const auto s = solve_exact(rows, rhs, cols);
    REQUIRE(s.consistent);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      Rational lhs = 0;
      for (const auto& [c, v] : rows[r]) lhs += v * s.x[c];
      CHECK(lhs == rhs[r]);
    }
  }
}
