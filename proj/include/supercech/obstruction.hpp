// Copyright (c) 2026 The supercech Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "supercech/cech.hpp"

namespace supercech {

/// Degrees of E = O(l_1) + ... + O(l_n) on the projective line.
struct LineBundleSpec {
  std::vector<int> degrees;
};

/// pr_2q of the non-abelian coboundary of exp(pr_(2q-2) u).
Cochain2 R2q(const Cochain1& u, int q);
/// 1/2 d(u2^2) + u2_jk u2_kl. Requires d1 u2 = 0.
Cochain2 r4_closed(const Cochain1& u2);
/// u2_ij u2_jk u2_ki + 1/2 [u2_ij, u2_jk^2] - 1/3 (u2_ij^3 + u2_jk^3 + u2_ki^3)
/// + 1/2 d[u2, u4] + [u2_ij, u4_jk]. Requires d1 u2 = 0.
Cochain2 r6_closed(const Cochain1& u2, const Cochain1& u4);

enum class Verdict { kPass, kNegative, kUndecided };

std::string to_string(Verdict v);
/// 0, 1, 2 for pass, negative, undecided.
int exit_code(Verdict v);

/// One obstruction degree: the value of R, whether dR = 0, per-triple
/// derivation membership, and the outcome of solving dR = -du.
struct DegreeStep {
  int degree = 0;
  std::string label;
  std::optional<Cochain2> value;
  std::optional<bool> cocycle;
  std::vector<std::pair<Cochain2::Simplex, bool>> derivation;
  std::optional<SolveStatus> solver;
  std::string note;

  bool derivation_valued() const;
};

/// Step holding `value`, its derivation membership per triple and, if
/// requested, whether d2(value) = 0.
DegreeStep obstruction_step(int degree, std::string label, const Cochain2& value, bool with_cocycle);

struct ObstructionReport {
  std::string operation;
  std::string cover;
  std::vector<std::pair<std::string, bool>> checks;
  std::vector<std::pair<std::string, long>> counts;
  std::vector<DegreeStep> steps;
  std::optional<Cochain1> cochain;  // the extension found by extend
  std::optional<Cochain0> gauge;    // the v found by equiv_solve
  Verdict verdict = Verdict::kUndecided;
  std::string detail;

  std::optional<bool> check(const std::string& name) const;
  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

/// Checks, in order: d u2 = 0, d R4 = 0, d u4 = -R4, d R6 = 0, and both sides
/// of the degree-6 biconditional. Passes when the implications hold and the
/// biconditional holds whenever its hypotheses do.
ObstructionReport prop_p_verify(const Cochain1& u);

/// Continues a degree-2 cocycle u2 to u = u2 + u4 + u6 with exp(u) a
/// non-abelian cocycle. Throws std::invalid_argument if d1 u2 != 0.
ObstructionReport extend(const Cochain1& u2, int bound);

/// Seeks v with twisted_action(v, u) = target, degree by degree. Throws
/// std::invalid_argument unless exp(u) and exp(target) are non-abelian cocycles.
ObstructionReport equiv_solve(const Cochain1& u, const Cochain1& target, int bound);

/// h0 and h1 of Der_2k on the projective line.
P1WeightComplex::Dims h_dims_p1(const LineBundleSpec& spec, int k);
/// h0 and h1 of the line bundle O(l), through the same weight enumeration.
P1WeightComplex::Dims h_dims_line(int l);
/// l_{n-1} + l_n < -2 and l_{n-2} + l_{n-1} + l_n - l_1 < 0 for sorted degrees.
bool satisfies_vanishing_conditions(const LineBundleSpec& spec);

}  // namespace supercech
