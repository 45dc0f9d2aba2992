// Copyright (c) 2026 The supercech Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "supercech/liegroup.hpp"

namespace supercech {

enum class CoverMode { kFormal, kP1 };

/// Either N >= 2 charts sharing one coordinate system with identity
/// transitions, or the two-chart cover of the projective line with
/// coordinates z (chart 0) and w = 1/z (chart 1) and E = O(l_1) + ... + O(l_n).
///
/// On the projective line the chart-1 frame is f_a = z^{l_a} e_a, so that
/// z^m e_I d_z is global iff m <= l_I + 2.
class Cover {
 public:
  static std::shared_ptr<const Cover> formal(int charts, Signature sig);
  static std::shared_ptr<const Cover> p1(std::vector<int> degrees);

  CoverMode mode() const { return mode_; }
  int charts() const { return static_cast<int>(sigs_.size()); }
  int rank() const { return sigs_.front()->rank; }
  /// Sorted bundle degrees (p1 only).
  const std::vector<int>& degrees() const { return degrees_; }
  const Signature& chart_signature(int chart) const;

  /// Re-expresses an operator given on the overlap in chart `from`
  /// coordinates in chart `to` coordinates.
  SuperOperator transport(const SuperOperator& d, int from, int to) const;
  FormSection transport(const FormSection& a, int from, int to) const;

  /// Coefficients are Laurent in the chart coordinate (always true in formal mode
  /// for polynomial coefficients).
  bool regular_on_overlap(const SuperOperator& d) const;
  /// Coefficients are polynomial in the chart coordinates.
  bool regular_on_chart(const SuperOperator& d) const;

  std::string to_string() const;

 private:
  Cover() = default;
  CoverMode mode_ = CoverMode::kFormal;
  std::vector<Signature> sigs_;
  std::vector<int> degrees_;
};

using CoverPtr = std::shared_ptr<const Cover>;

/// Alternating operator-valued P-cochain. Only strictly increasing tuples are
/// stored; the value at (i0 < ... < iP) lives in chart i0 coordinates. Zero
/// values are not stored.
template <std::size_t P>
class Cochain {
 public:
  using Simplex = std::array<int, P + 1>;
  using Values = std::map<Simplex, SuperOperator>;

  explicit Cochain(CoverPtr cover) : cover_(std::move(cover)) {}

  const CoverPtr& cover() const { return cover_; }
  const Values& values() const { return values_; }
  bool is_zero() const { return values_.empty(); }

  /// Value at an increasing tuple (zero if absent).
  SuperOperator at(const Simplex& s) const;
  void set(const Simplex& s, const SuperOperator& d);
  void add(const Simplex& s, const SuperOperator& d);
  /// All strictly increasing tuples of the cover.
  std::vector<Simplex> simplices() const;

  Cochain operator-() const;
  Cochain& operator+=(const Cochain& o);
  Cochain& operator-=(const Cochain& o);
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
  friend bool operator==(const Cochain& a, const Cochain& b) { return a.values_ == b.values_; }
  friend bool operator!=(const Cochain& a, const Cochain& b) { return !(a == b); }

  template <class F>
  Cochain map(F&& f) const {
    Cochain r(cover_);
    for (const auto& [s, d] : values_) r.set(s, f(d));
    return r;
  }

  std::string to_string() const;

 private:
  void check_simplex(const Simplex& s) const;
  CoverPtr cover_;
  Values values_;
};

using Cochain0 = Cochain<0>;
using Cochain1 = Cochain<1>;
using Cochain2 = Cochain<2>;
using Cochain3 = Cochain<3>;

/// Automorphism-valued cochain; absent tuples are the identity, the value at
/// a reversed tuple is the inverse.
template <std::size_t P>
class GroupCochain {
 public:
  using Simplex = std::array<int, P + 1>;

  explicit GroupCochain(CoverPtr cover) : cover_(std::move(cover)) {}
  const CoverPtr& cover() const { return cover_; }
  const std::map<Simplex, Automorphism>& values() const { return values_; }
  Automorphism at(const Simplex& s) const;
  void set(const Simplex& s, const Automorphism& phi);
  bool is_identity() const;

 private:
  CoverPtr cover_;
  std::map<Simplex, Automorphism> values_;
};

using AutCochain1 = GroupCochain<1>;
using AutCochain2 = GroupCochain<2>;

/// (d0 v)_ij = v_i - v_j.
Cochain1 d0(const Cochain0& v);
/// (d1 u)_ijk = u_ij + u_jk - u_ik.
Cochain2 d1(const Cochain1& u);
/// (d2 c)_ijkl = c_jkl - c_ikl + c_ijl - c_ijk.
Cochain3 d2(const Cochain2& c);

template <std::size_t P>
Cochain<P> cochain_component(const Cochain<P>& c, int shift) {
  return c.map([shift](const SuperOperator& d) { return component(d, shift); });
}

template <std::size_t P>
Cochain<P> cochain_truncate(const Cochain<P>& c, int q) {
  return c.map([q](const SuperOperator& d) { return truncate(d, q); });
}

/// Every value is a derivation.
template <std::size_t P>
bool is_derivation_valued(const Cochain<P>& c) {
  for (const auto& [s, d] : c.values())
    if (!is_derivation(d)) return false;
  return true;
}

/// Largest coefficient degree over all values.
template <std::size_t P>
int coefficient_degree(const Cochain<P>& c);

AutCochain1 cochain_exp(const Cochain1& u);
/// (phi_ij phi_jk phi_ki)_ijk, computed in chart i coordinates.
AutCochain2 nab_d(const AutCochain1& phi);
bool is_nonabelian_cocycle(const AutCochain1& phi);
/// Entrywise log of a group cochain (non-identity entries only).
Cochain2 cochain_log(const AutCochain2& phi);

/// (exp(v).exp(u))_ij = exp(v_i) exp(u_ij) exp(-v_j).
AutCochain1 twisted_product(const Cochain0& v, const Cochain1& u);
/// lambda(v,u) = log(exp(v).exp(u)).
Cochain1 twisted_action(const Cochain0& v, const Cochain1& u);
/// pr_(2q) of exp(pr_(2q-2) v).exp(pr_(2q-2) u).
Cochain1 F2q(const Cochain0& v, const Cochain1& u, int q);
/// pr_(2q) of the triple products of Id + f, with (Id + f)^-1 at reversed tuples.
Cochain2 nab_d_truncated(const Cochain1& f, int q);

/// "[i,j,...]" with 1-based chart indices.
template <std::size_t N>
std::string simplex_label(const std::array<int, N>& s) {
  std::string r = "[";
  for (std::size_t i = 0; i < N; ++i) {
    if (i) r += ",";
    r += std::to_string(s[i] + 1);
  }
  return r + "]";
}

enum class SolveStatus { kSolved, kNoSolution, kUndecided };

std::string to_string(SolveStatus s);

template <class C>
struct SolveResult {
  SolveStatus status = SolveStatus::kUndecided;
  std::optional<C> solution;
  std::string detail;
};

/// Finds v with d0 v = c. Exact on both cover kinds; in formal mode a
/// solution whose coefficient degree exceeds `bound` is reported undecided.
/// Throws std::invalid_argument if d1 c != 0.
SolveResult<Cochain0> solve_d0(const Cochain1& c, int bound);
/// Finds u with d1 u = -c. Throws std::invalid_argument if d2 c != 0.
SolveResult<Cochain1> solve_d1(const Cochain2& c, int bound);

/// Monomial operator e_I o K on the projective line (K involves only d_z and
/// contractions).
struct P1Basis {
  GeneratorSet coeff = 0;
  OperatorKey key;
  friend bool operator<(const P1Basis& a, const P1Basis& b);
  friend bool operator==(const P1Basis& a, const P1Basis& b) {
    return a.coeff == b.coeff && a.key == b.key;
  }
};

/// Basis of operators with the given shift and order range.
std::vector<P1Basis> p1_operator_basis(int rank, int shift, int min_order, int max_order);
/// Basis of Der_{2k}: e_I d_z with |I| = 2k and e_I d/de_a with |I| = 2k + 1.
std::vector<P1Basis> p1_derivation_basis(int rank, int k);

/// The two-chart Cech complex C0 -> C1 of the span of a transport-closed
/// basis, split by weight (z weight 1, d_z weight -1, generators weight 0 in
/// chart 0). Each weight piece is finite dimensional.
class P1WeightComplex {
 public:
  P1WeightComplex(CoverPtr cover, std::vector<P1Basis> basis);

  struct Dims {
    long h0 = 0;
    long h1 = 0;
  };
  /// Weights outside [min_weight, max_weight] contribute nothing.
  int min_weight() const { return min_weight_; }
  int max_weight() const { return max_weight_; }
  Dims dims(int weight) const;
  Dims total() const;

  /// Solves v0 - T(v1) = c for a chart-0 operator c in the span of the basis
  /// with Laurent coefficients; nullopt if no solution exists.
  std::optional<Cochain0> solve(const SuperOperator& c) const;

  const std::vector<P1Basis>& basis() const { return basis_; }

 private:
  struct System;
  System system(int weight) const;

  CoverPtr cover_;
  std::vector<P1Basis> basis_;
  std::map<P1Basis, std::size_t> index_;
  std::vector<int> dz_order_;  // k_b
  std::vector<int> chart1_weight_;  // weight of T(f_I o K)
  std::vector<std::map<std::size_t, Rational>> transport_;  // T(f_I o K) by row
  int min_weight_ = 0;
  int max_weight_ = 0;
};

}  // namespace supercech
