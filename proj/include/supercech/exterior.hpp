// Copyright (c) 2026 The supercech Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "supercech/coeffs.hpp"

namespace supercech {

inline constexpr int kMaxRank = 7;

/// Chart coordinates x_1..x_m together with the rank n of the trivialized
/// bundle, i.e. the odd generators e_1..e_n.
struct AlgebraSignature {
  VarList variables;
  int rank = 0;

  friend bool operator==(const AlgebraSignature& a, const AlgebraSignature& b) {
    return a.rank == b.rank && same_vars(a.variables, b.variables);
  }
};

using Signature = std::shared_ptr<const AlgebraSignature>;

Signature make_signature(std::vector<std::string> variables, int rank);
Signature make_signature(VarList variables, int rank);
bool same_signature(const Signature& a, const Signature& b);
void require_same_signature(const Signature& a, const Signature& b);

/// Subset of generators, bit a-1 set for e_a.
using GeneratorSet = std::uint8_t;

inline int set_size(GeneratorSet s) { return std::popcount(static_cast<unsigned>(s)); }
inline GeneratorSet generator_bit(int a) { return static_cast<GeneratorSet>(1u << (a - 1)); }
GeneratorSet make_set(const std::vector<int>& indices);
std::vector<int> set_indices(GeneratorSet s);

/// Sign of e_I ^ e_J relative to e_{I u J}, for disjoint I, J.
int wedge_sign(GeneratorSet i, GeneratorSet j);
/// Sign of d/de_a (e_I) relative to e_{I \ a}, for a in I.
int contraction_sign(GeneratorSet i, int a);

/// Graded-lex order on subsets: size first, then ascending index lists.
bool subset_less(GeneratorSet a, GeneratorSet b);

/// A local section of the exterior algebra: sum of f_I e_I with rational
/// function coefficients.
class FormSection {
 public:
  using Terms = std::map<GeneratorSet, RationalFunction>;

  explicit FormSection(Signature sig) : sig_(std::move(sig)) {}
  FormSection(Signature sig, const RationalFunction& f);
  FormSection(Signature sig, GeneratorSet s, const RationalFunction& f);

  static FormSection one(Signature sig);
  static FormSection generator(Signature sig, GeneratorSet s);

  const Signature& signature() const { return sig_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of e_s (zero if absent).
  RationalFunction coefficient(GeneratorSet s) const;

  /// Adds f e_s.
  void add_term(GeneratorSet s, const RationalFunction& f);

  FormSection operator-() const;
  FormSection& operator+=(const FormSection& o);
  FormSection& operator-=(const FormSection& o);
  FormSection& operator*=(const RationalFunction& f);
  FormSection& operator*=(const Rational& c);
  friend FormSection operator+(FormSection a, const FormSection& b) { return a += b; }
  friend FormSection operator-(FormSection a, const FormSection& b) { return a -= b; }
  friend FormSection operator*(FormSection a, const RationalFunction& f) { return a *= f; }
  friend FormSection operator*(FormSection a, const Rational& c) { return a *= c; }
  friend bool operator==(const FormSection& a, const FormSection& b);
  friend bool operator!=(const FormSection& a, const FormSection& b) { return !(a == b); }

  /// The parity automorphism: odd-degree terms change sign.
  FormSection parity_twist() const;
  /// Partial derivative of every coefficient.
  FormSection diff(std::size_t var) const;
  /// Odd contraction d/de_a.
  FormSection contract(int a) const;

  /// Largest exterior degree present (-1 for zero).
  int max_degree() const;
  int min_degree() const;
  bool is_homogeneous() const;

  std::string to_string() const;

 private:
  Signature sig_;
  Terms terms_;
};

FormSection wedge(const FormSection& a, const FormSection& b);
FormSection degree_project(const FormSection& a, int j);

std::string set_to_string(GeneratorSet s);

inline std::ostream& operator<<(std::ostream& os, const FormSection& a) { return os << a.to_string(); }

}  // namespace supercech
