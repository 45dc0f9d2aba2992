// Copyright (c) 2026 The supercech Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "supercech/coeffs.hpp"

namespace supercech {

using SparseRow = std::map<std::size_t, Rational>;

struct LinearSolution {
  bool consistent = false;
  std::size_t rank = 0;
  std::vector<Rational> x;  // one particular solution, free variables set to 0
};

/// Exact row reduction of rows * x = rhs over the rationals.
LinearSolution solve_exact(const std::vector<SparseRow>& rows, const std::vector<Rational>& rhs,
                           std::size_t num_cols);

}  // namespace supercech
