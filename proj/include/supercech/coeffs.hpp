// Copyright (c) 2026 The supercech Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace supercech {

/// Exact rationals. gcd-normalized with positive denominator after every
/// operation (GMP canonicalizes on construction from integers and arithmetic).
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
std::string to_string(const Rational& q);

/// Coordinate variables of a chart. Shared by pointer so that the common
/// "same ring" check is a pointer comparison.
using VarList = std::shared_ptr<const std::vector<std::string>>;

VarList make_vars(std::vector<std::string> names);
bool same_vars(const VarList& a, const VarList& b);

inline constexpr std::size_t kMaxVariables = 3;

using Exponents = std::array<int, kMaxVariables>;

/// Graded-lex comparison: total degree first, then lexicographic.
bool grlex_less(const Exponents& a, const Exponents& b);
int total_degree(const Exponents& e);

/// Sparse multivariate polynomial over the rationals.
///
/// Terms are kept sorted ascending in graded-lex order with no zero
/// coefficients, so structural equality is mathematical equality.
class Polynomial {
 public:
  using Term = std::pair<Exponents, Rational>;

  Polynomial() : vars_(empty_vars()) {}
  explicit Polynomial(VarList vars) : vars_(std::move(vars)) {}
  Polynomial(VarList vars, const Rational& c);

  static Polynomial variable(VarList vars, std::size_t index);
  static Polynomial monomial(VarList vars, const Exponents& e, const Rational& c);

  const VarList& vars() const { return vars_; }
  std::size_t num_vars() const { return vars_->size(); }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  Rational constant_value() const;  // requires is_constant()

  /// Largest term in graded-lex order; requires nonzero.
  const Term& leading() const { return terms_.back(); }
  int total_degree() const;
  int degree_in(std::size_t var) const;
  /// Smallest exponent of `var` over all terms (0 for the zero polynomial).
  int min_degree_in(std::size_t var) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial pow(unsigned k) const;
  Polynomial diff(std::size_t var) const;
  /// Multiplies by the monomial x^e (e may be negative if every term stays
  /// non-negative).
  Polynomial shift(const Exponents& e) const;
  Polynomial with_vars(VarList vars) const;

  std::string to_string() const;

  static VarList empty_vars();

 private:
  friend class PolynomialBuilder;
  VarList vars_;
  std::vector<Term> terms_;
};

/// Accumulates terms in any order, then produces a canonical Polynomial.
class PolynomialBuilder {
 public:
  explicit PolynomialBuilder(VarList vars) : vars_(std::move(vars)) {}
  void add(const Exponents& e, const Rational& c);
  Polynomial build() &&;

 private:
  VarList vars_;
  std::map<Exponents, Rational, bool (*)(const Exponents&, const Exponents&)> acc_{grlex_less};
};

/// Exact quotient a / b; throws if b does not divide a.
Polynomial divide_exact(const Polynomial& a, const Polynomial& b);
/// Greatest common divisor, normalized to leading coefficient 1 (0 if both zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Reduced fraction num/den with den's graded-lex leading coefficient 1.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Polynomial::empty_vars(), Rational(1)) {}
  explicit RationalFunction(VarList vars);
  RationalFunction(VarList vars, const Rational& c);
  explicit RationalFunction(Polynomial num);
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction variable(VarList vars, std::size_t index);
  static RationalFunction variable(VarList vars, const std::string& name);
  /// c * x^e with e possibly negative.
  static RationalFunction laurent_monomial(VarList vars, const std::array<int, kMaxVariables>& e,
                                           const Rational& c);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  const VarList& vars() const { return num_.vars(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return den_.is_constant() && num_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_one() const;
  /// Denominator is a single monomial.
  bool is_laurent() const { return den_.is_monomial(); }

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator*=(const Rational& c);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator*(RationalFunction a, const Rational& c) { return a *= c; }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  RationalFunction inverse() const;
  RationalFunction pow(int k) const;

  /// Largest total degree of numerator and denominator.
  int degree_bound() const;

  std::string to_string() const;

 private:
  void normalize();

  Polynomial num_;
  Polynomial den_;
};

enum class FieldOp { kAdd, kSub, kMul, kDiv };

RationalFunction field_op(const RationalFunction& a, const RationalFunction& b, FieldOp op);

/// Partial derivative by the quotient rule.
RationalFunction rf_diff(const RationalFunction& f, std::size_t var);
RationalFunction rf_diff(const RationalFunction& f, const std::string& var);

/// Simultaneous substitution of every variable of f. The result lives over
/// the (common) variable list of the substituted values.
RationalFunction rf_subst(const RationalFunction& f,
                          const std::map<std::string, RationalFunction>& assignment);

struct LaurentSplit {
  RationalFunction nonneg;
  RationalFunction neg;
};

/// Splits a Laurent polynomial in `var` into exponents >= 0 and < 0.
LaurentSplit laurent_split(const RationalFunction& f, const std::string& var);

std::size_t var_index(const VarList& vars, const std::string& name);

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.to_string(); }

}  // namespace supercech
