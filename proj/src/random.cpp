// Copyright (c) 2026 The supercech Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#include "supercech/random.hpp"

#include <functional>
#include <stdexcept>

namespace supercech {

int InstanceGenerator::uniform(int lo, int hi) {
  if (hi < lo) throw std::invalid_argument("empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(engine_() % span);
}

Rational InstanceGenerator::rational() {
  static const long pool[][2] = {{1, 1}, {-1, 1}, {2, 1}, {-2, 1}, {1, 2}, {-1, 2}, {3, 1}, {1, 3}, {-3, 2}};
  const auto& p = pool[uniform(0, 8)];
  return make_rational(p[0], p[1]);
}

RationalFunction InstanceGenerator::polynomial(const VarList& vars, int max_degree, int max_terms) {
  PolynomialBuilder b(vars);
  const int terms = uniform(1, max_terms);
  for (int t = 0; t < terms; ++t) {
    Exponents e{};
    int budget = uniform(0, max_degree);
    for (std::size_t v = 0; v < vars->size() && budget > 0; ++v) {
      const int k = v + 1 == vars->size() ? budget : uniform(0, budget);
      e[v] = k;
      budget -= k;
    }
    b.add(e, rational());
  }
  Polynomial p = std::move(b).build();
  if (p.is_zero()) p = Polynomial(vars, Rational(1));
  return RationalFunction(p);
}

RationalFunction InstanceGenerator::laurent(const VarList& vars, int lo, int hi, int max_terms) {
  RationalFunction f(vars);
  const int terms = uniform(1, max_terms);
  for (int t = 0; t < terms; ++t) f += RationalFunction::laurent_monomial(vars, Exponents{uniform(lo, hi), 0, 0}, rational());
  if (f.is_zero()) f = RationalFunction::laurent_monomial(vars, Exponents{lo, 0, 0}, Rational(1));
  return f;
}

GeneratorSet InstanceGenerator::subset(int rank, int size) {
  if (size < 0 || size > rank) throw std::invalid_argument("subset size out of range");
  std::vector<int> pool;
  for (int a = 1; a <= rank; ++a) pool.push_back(a);
  GeneratorSet s = 0;
  for (int i = 0; i < size; ++i) {
    const int pick = uniform(0, static_cast<int>(pool.size()) - 1);
    s = static_cast<GeneratorSet>(s | generator_bit(pool[static_cast<std::size_t>(pick)]));
    pool.erase(pool.begin() + pick);
  }
  return s;
}

FormSection InstanceGenerator::form(const Signature& sig, int max_degree, int max_terms) {
  FormSection a(sig);
  const int terms = uniform(1, max_terms);
  for (int t = 0; t < terms; ++t)
    a.add_term(subset(sig->rank, uniform(0, sig->rank)), polynomial(sig->variables, max_degree, 2));
  return a;
}

FormSection InstanceGenerator::homogeneous_form(const Signature& sig, int degree, int max_degree, int max_terms) {
  FormSection a(sig);
  if (degree < 0 || degree > sig->rank) return a;
  const int terms = uniform(1, max_terms);
  for (int t = 0; t < terms; ++t) a.add_term(subset(sig->rank, degree), polynomial(sig->variables, max_degree, 2));
  return a;
}

SuperOperator InstanceGenerator::derivation_with(const Signature& sig, int shift, int max_terms,
                                                 const std::function<RationalFunction()>& coeff) {
  SuperOperator d(sig);
  const int n = sig->rank;
  const bool coordinate = shift <= n;
  const bool contraction = shift + 1 <= n;
  if (!coordinate && !contraction) return d;
  const int terms = uniform(1, max_terms);
  for (int t = 0; t < terms; ++t) {
    const bool use_coordinate = coordinate && (!contraction || coin());
    if (use_coordinate) {
      Exponents alpha{};
      alpha[static_cast<std::size_t>(uniform(0, static_cast<int>(sig->variables->size()) - 1))] = 1;
      d += SuperOperator::term(FormSection(sig, subset(n, shift), coeff()), OperatorKey{alpha, 0});
    } else {
      const int a = uniform(1, n);
      d += SuperOperator::term(FormSection(sig, subset(n, shift + 1), coeff()), OperatorKey{Exponents{}, generator_bit(a)});
    }
  }
  return d;
}

SuperOperator InstanceGenerator::derivation(const Signature& sig, int shift, int max_terms, int max_degree) {
  return derivation_with(sig, shift, max_terms, [&] { return polynomial(sig->variables, max_degree, 2); });
}

SuperOperator InstanceGenerator::nilpotent_derivation(const Signature& sig, int max_terms, int max_degree) {
  SuperOperator d(sig);
  for (int shift = 2; shift <= sig->rank; shift += 2) d += derivation(sig, shift, max_terms, max_degree);
  return d;
}

SuperOperator InstanceGenerator::op(const Signature& sig, int max_order, int max_terms, int max_degree, bool even) {
  SuperOperator d(sig);
  const int n = sig->rank;
  const int nv = static_cast<int>(sig->variables->size());
  const int terms = uniform(1, max_terms);
  for (int t = 0; t < terms; ++t) {
    const int order = uniform(0, max_order);
    const int m = uniform(0, std::min(order, n));
    Exponents alpha{};
    for (int k = 0; k < order - m; ++k) ++alpha[static_cast<std::size_t>(uniform(0, nv - 1))];
    const GeneratorSet s = subset(n, m);
    int p = uniform(0, n);
    if (even && (p - m) % 2 != 0) p = p + 1 <= n ? p + 1 : p - 1;
    if (p < 0) continue;
    d += SuperOperator::term(FormSection(sig, subset(n, p), polynomial(sig->variables, max_degree, 2)),
                             OperatorKey{alpha, s});
  }
  return d;
}

SuperOperator InstanceGenerator::raising_op(const Signature& sig, int max_order, int max_terms, int max_degree) {
  SuperOperator d = op(sig, max_order, max_terms, max_degree, true);
  return components_between(d, 2, sig->rank);
}

Cochain0 InstanceGenerator::derivation_cochain0(const CoverPtr& cover, const std::vector<int>& shifts, int max_terms,
                                                int max_degree) {
  Cochain0 v(cover);
  for (int i = 0; i < cover->charts(); ++i) {
    const Signature& sig = cover->chart_signature(i);
    SuperOperator d(sig);
    for (int shift : shifts) d += derivation(sig, shift, max_terms, max_degree);
    v.set({i}, d);
  }
  return v;
}

Cochain1 InstanceGenerator::derivation_cochain1(const CoverPtr& cover, const std::vector<int>& shifts, int max_terms,
                                                int max_degree) {
  Cochain1 u(cover);
  for (const auto& s : u.simplices()) {
    const Signature& sig = cover->chart_signature(s[0]);
    SuperOperator d(sig);
    for (int shift : shifts) {
      if (cover->mode() == CoverMode::kP1) {
        d += derivation_with(sig, shift, max_terms,
                             [&] { return laurent(sig->variables, -max_degree, max_degree, 2); });
      } else {
        d += derivation(sig, shift, max_terms, max_degree);
      }
    }
    u.set(s, d);
  }
  return u;
}

}  // namespace supercech
