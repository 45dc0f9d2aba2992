// Copyright (c) 2026 The supercech Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "supercech/cech.hpp"

namespace supercech {

/// Seeded source of random algebraic instances. Draws are taken directly from
/// a 64-bit Mersenne twister, so a seed gives the same instances everywhere.
class InstanceGenerator {
 public:
  explicit InstanceGenerator(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi].
  int uniform(int lo, int hi);
  bool coin() { return uniform(0, 1) == 1; }

  /// Nonzero rational from a small fixed pool.
  Rational rational();
  /// Polynomial with up to `max_terms` monomials of total degree <= max_degree.
  RationalFunction polynomial(const VarList& vars, int max_degree, int max_terms);
  /// Laurent polynomial in the single variable of `vars` with exponents in [lo, hi].
  RationalFunction laurent(const VarList& vars, int lo, int hi, int max_terms);
  /// Subset of {1..rank} with exactly `size` elements.
  GeneratorSet subset(int rank, int size);

  FormSection form(const Signature& sig, int max_degree, int max_terms);
  /// Form with only terms of e-degree `degree`.
  FormSection homogeneous_form(const Signature& sig, int degree, int max_degree, int max_terms);

  /// Derivation of the given even shift (zero if the rank is too small).
  SuperOperator derivation(const Signature& sig, int shift, int max_terms, int max_degree);
  /// Sum of derivations of shifts 2, 4, ... up to the rank.
  SuperOperator nilpotent_derivation(const Signature& sig, int max_terms, int max_degree);
  /// Operator of order <= max_order; if `even`, every term has even shift.
  SuperOperator op(const Signature& sig, int max_order, int max_terms, int max_degree, bool even);
  /// Even operator with every component of shift >= 2.
  SuperOperator raising_op(const Signature& sig, int max_order, int max_terms, int max_degree);

  /// Derivation-valued 0-cochain; p1 values get polynomial coefficients in the
  /// chart coordinate.
  Cochain0 derivation_cochain0(const CoverPtr& cover, const std::vector<int>& shifts, int max_terms,
                               int max_degree);
  /// Derivation-valued 1-cochain; p1 values get Laurent coefficients.
  Cochain1 derivation_cochain1(const CoverPtr& cover, const std::vector<int>& shifts, int max_terms,
                               int max_degree);

 private:
  SuperOperator derivation_with(const Signature& sig, int shift, int max_terms,
                                const std::function<RationalFunction()>& coeff);
  std::mt19937_64 engine_;
};

}  // namespace supercech
