// Copyright (c) 2026 The supercech Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#include "supercech/linsolve.hpp"

#include <stdexcept>

namespace supercech {

LinearSolution solve_exact(const std::vector<SparseRow>& rows, const std::vector<Rational>& rhs,
                           std::size_t num_cols) {
  if (rows.size() != rhs.size()) throw std::invalid_argument("row/rhs size mismatch");
  // pivot column -> (row with leading 1 at that column, rhs)
  std::map<std::size_t, std::pair<SparseRow, Rational>> pivots;
  LinearSolution out;
  out.consistent = true;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    SparseRow row = rows[r];
    Rational b = rhs[r];
    for (auto it = row.begin(); it != row.end();) {
      if (it->second == 0) {
        it = row.erase(it);
      } else {
        if (it->first >= num_cols) throw std::invalid_argument("column out of range");
        ++it;
      }
    }
    while (!row.empty()) {
      const auto [col, lead] = *row.begin();
      auto p = pivots.find(col);
      if (p == pivots.end()) break;
      const Rational factor = lead;
      for (const auto& [c, v] : p->second.first) {
        Rational& slot = row[c];
        slot -= factor * v;
        if (slot == 0) row.erase(c);
      }
      b -= factor * p->second.second;
    }
    if (row.empty()) {
      if (b != 0) out.consistent = false;
      continue;
    }
    const std::size_t col = row.begin()->first;
    const Rational inv = 1 / row.begin()->second;
    for (auto& [c, v] : row) v *= inv;
    b *= inv;
    pivots.emplace(col, std::make_pair(std::move(row), std::move(b)));
  }
  out.rank = pivots.size();
  if (!out.consistent) return out;
  out.x.assign(num_cols, Rational(0));
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    const auto& [row, b] = it->second;
    Rational value = b;
    for (const auto& [c, v] : row)
      if (c != it->first) value -= v * out.x[c];
    out.x[it->first] = value;
  }
  return out;
}

}  // namespace supercech
