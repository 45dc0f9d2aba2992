// Copyright (c) 2026 The supercech Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#pragma once

#include <map>
#include <ostream>
#include <string>

#include "supercech/exterior.hpp"

namespace supercech {

/// Normal-ordered monomial operator d_x^alpha o d/de_{s1} o ... o d/de_{sm}
/// with s1 < ... < sm.
struct OperatorKey {
  Exponents alpha{};
  GeneratorSet contractions = 0;

  int order() const { return total_degree(alpha) + set_size(contractions); }

  /// Rendering order: total order, then alpha lex, then contraction set lex.
  friend bool operator<(const OperatorKey& a, const OperatorKey& b);
  friend bool operator==(const OperatorKey& a, const OperatorKey& b) {
    return a.alpha == b.alpha && a.contractions == b.contractions;
  }
};

/// Finite-order differential operator on sections of the exterior algebra,
/// stored as sum of c_K o K with K an OperatorKey and c_K a FormSection acting
/// by left multiplication.
///
/// The operators e_I o d/de_S form a basis of the endomorphisms of the
/// exterior algebra, so this normal form is unique: two operators are equal
/// iff their term maps are equal.
class SuperOperator {
 public:
  using Terms = std::map<OperatorKey, FormSection>;

  explicit SuperOperator(Signature sig) : sig_(std::move(sig)) {}

  static SuperOperator identity(Signature sig);
  static SuperOperator multiplication(const FormSection& c);
  static SuperOperator derivative(Signature sig, std::size_t var);
  static SuperOperator contraction(Signature sig, int a);
  /// c o d_x^alpha o d/de_S.
  static SuperOperator term(const FormSection& c, const OperatorKey& key);

  const Signature& signature() const { return sig_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Maximal |alpha| + |S| (-1 for zero).
  int order() const;

  void add_term(const OperatorKey& key, const FormSection& c);

  SuperOperator operator-() const;
  SuperOperator& operator+=(const SuperOperator& o);
  SuperOperator& operator-=(const SuperOperator& o);
  SuperOperator& operator*=(const Rational& c);
  SuperOperator& operator*=(const RationalFunction& f);
  friend SuperOperator operator+(SuperOperator a, const SuperOperator& b) { return a += b; }
  friend SuperOperator operator-(SuperOperator a, const SuperOperator& b) { return a -= b; }
  friend SuperOperator operator*(SuperOperator a, const Rational& c) { return a *= c; }
  friend SuperOperator operator*(const Rational& c, SuperOperator a) { return a *= c; }
  friend bool operator==(const SuperOperator& a, const SuperOperator& b);
  friend bool operator!=(const SuperOperator& a, const SuperOperator& b) { return !(a == b); }

  /// Exterior-degree shifts (p - |S|) present in the operator.
  std::vector<int> shifts() const;
  bool is_even() const;
  /// Lowest shift present; requires nonzero.
  int min_shift() const;
  int max_shift() const;

  std::string to_string() const;

 private:
  Signature sig_;
  Terms terms_;
};

FormSection apply(const SuperOperator& d, const FormSection& a);
SuperOperator compose(const SuperOperator& d1, const SuperOperator& d2);
SuperOperator commutator(const SuperOperator& d1, const SuperOperator& d2);
/// d o d o ... (k factors); power(d, 0) is the identity.
SuperOperator power(const SuperOperator& d, int k);

/// First order with no multiplication part: every term has |alpha|+|S| = 1.
bool is_derivation(const SuperOperator& d);

/// Component shifting exterior degree by exactly `shift` (pr_shift).
SuperOperator component(const SuperOperator& d, int shift);
/// Sum of components with lo <= shift <= hi.
SuperOperator components_between(const SuperOperator& d, int lo, int hi);
/// Decomposition by shift; throws std::domain_error on odd components.
std::map<int, SuperOperator> degree_components(const SuperOperator& d);
/// Throws std::domain_error("odd component ...") unless d is even.
void require_even(const SuperOperator& d);

inline std::ostream& operator<<(std::ostream& os, const SuperOperator& d) { return os << d.to_string(); }

}  // namespace supercech
