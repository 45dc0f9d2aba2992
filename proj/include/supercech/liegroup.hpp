// Copyright (c) 2026 The supercech Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#pragma once

#include <cstdint>
#include <vector>

#include "supercech/operators.hpp"

namespace supercech {

/// Operator of the form Id + (even components of shift >= 2). Construction
/// validates the shape; multiplicativity is a separate certificate because it
/// fails for exponentials of non-derivations.
class Automorphism {
 public:
  explicit Automorphism(SuperOperator op);
  static Automorphism identity(Signature sig);

  const SuperOperator& op() const { return op_; }
  const Signature& signature() const { return op_.signature(); }
  /// phi - Id.
  SuperOperator nilpotent_part() const;
  bool is_identity() const;

  Automorphism inverse() const;
  friend Automorphism operator*(const Automorphism& a, const Automorphism& b);
  friend bool operator==(const Automorphism& a, const Automorphism& b) { return a.op_ == b.op_; }
  friend bool operator!=(const Automorphism& a, const Automorphism& b) { return !(a == b); }

 private:
  SuperOperator op_;
};

/// Id + u + u^2/2 + u^3/6. Throws std::domain_error if u has an odd component
/// or a component of shift < 2; throws std::logic_error if the fourth power of
/// u fails to vanish.
Automorphism op_exp(const SuperOperator& u);
/// N - N^2/2 + N^3/3 with N = phi - Id.
SuperOperator op_log(const Automorphism& phi);
/// Nilpotent series sum_k coeffs[k] N^k for N with all shifts >= 2.
SuperOperator nilpotent_series(const SuperOperator& n, const std::vector<Rational>& coeffs);

/// Keeps the components of shift 2..2q.
SuperOperator truncate(const SuperOperator& d, int q);

/// Sections used to probe multiplicativity: all basis monomials e_I, the
/// coordinates, and coordinates times generators.
std::vector<FormSection> multiplicativity_probes(const Signature& sig);
/// Checks phi(a ^ b) = phi(a) ^ phi(b) for every pair of probes.
bool is_multiplicative(const SuperOperator& phi, const std::vector<FormSection>& probes);
/// Full probe set for rank <= 5, a seeded sample of `sample_pairs` pairs otherwise.
bool multiplicativity_certificate(const Automorphism& phi, std::uint64_t seed = 1,
                                  std::size_t sample_pairs = 400);

}  // namespace supercech
