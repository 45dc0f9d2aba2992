// Copyright (c) 2026 The supercech Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#include "supercech/liegroup.hpp"

#include <random>
#include <stdexcept>

namespace supercech {

namespace {

void require_nilpotent_shape(const SuperOperator& n, const char* what) {
  for (int s : n.shifts()) {
    if (s % 2 != 0) throw std::domain_error(std::string(what) + ": odd component (shift " + std::to_string(s) + ")");
    if (s < 2) throw std::domain_error(std::string(what) + ": component of shift " + std::to_string(s) + " < 2");
  }
}

}  // namespace

Automorphism::Automorphism(SuperOperator op) : op_(std::move(op)) {
  SuperOperator n = op_ - SuperOperator::identity(op_.signature());
  require_nilpotent_shape(n, "automorphism");
}

Automorphism Automorphism::identity(Signature sig) { return Automorphism(SuperOperator::identity(std::move(sig))); }

SuperOperator Automorphism::nilpotent_part() const { return op_ - SuperOperator::identity(op_.signature()); }

bool Automorphism::is_identity() const { return nilpotent_part().is_zero(); }

Automorphism Automorphism::inverse() const {
  const SuperOperator n = nilpotent_part();
  return Automorphism(nilpotent_series(n, {Rational(1), Rational(-1), Rational(1), Rational(-1)}));
}

Automorphism operator*(const Automorphism& a, const Automorphism& b) {
  // (Id + A)(Id + B) = Id + A + B + AB keeps the shape without re-validation cost.
  const SuperOperator na = a.nilpotent_part();
  const SuperOperator nb = b.nilpotent_part();
  return Automorphism(SuperOperator::identity(a.signature()) + na + nb + compose(na, nb));
}

SuperOperator nilpotent_series(const SuperOperator& n, const std::vector<Rational>& coeffs) {
  require_nilpotent_shape(n, "nilpotent series");
  SuperOperator sum(n.signature());
  SuperOperator pw = SuperOperator::identity(n.signature());
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (k > 0) pw = compose(n, pw);
    if (pw.is_zero()) return sum;
    sum += pw * coeffs[k];
  }
  // The series is exact only if the next power vanishes.
  if (!compose(n, pw).is_zero()) throw std::logic_error("nilpotency bound violated");
  return sum;
}

Automorphism op_exp(const SuperOperator& u) {
  require_nilpotent_shape(u, "exp");
  return Automorphism(nilpotent_series(u, {Rational(1), Rational(1), Rational(1, 2), Rational(1, 6)}));
}

SuperOperator op_log(const Automorphism& phi) {
  return nilpotent_series(phi.nilpotent_part(), {Rational(0), Rational(1), Rational(-1, 2), Rational(1, 3)});
}

SuperOperator truncate(const SuperOperator& d, int q) {
  if (q < 1) throw std::invalid_argument("truncation order must be >= 1");
  return components_between(d, 2, 2 * q);
}

std::vector<FormSection> multiplicativity_probes(const Signature& sig) {
  std::vector<FormSection> probes;
  const unsigned full = 1u << sig->rank;
  for (unsigned s = 0; s < full; ++s) probes.push_back(FormSection::generator(sig, static_cast<GeneratorSet>(s)));
  for (std::size_t i = 0; i < sig->variables->size(); ++i) {
    RationalFunction x = RationalFunction::variable(sig->variables, i);
    probes.emplace_back(sig, x);
    probes.emplace_back(sig, x * x);
    for (int a = 1; a <= sig->rank; ++a) probes.emplace_back(sig, generator_bit(a), x);
  }
  return probes;
}

bool is_multiplicative(const SuperOperator& phi, const std::vector<FormSection>& probes) {
  std::vector<FormSection> images;
  images.reserve(probes.size());
  for (const auto& p : probes) images.push_back(apply(phi, p));
  for (std::size_t i = 0; i < probes.size(); ++i)
    for (std::size_t j = 0; j < probes.size(); ++j)
      if (apply(phi, wedge(probes[i], probes[j])) != wedge(images[i], images[j])) return false;
  return true;
}

bool multiplicativity_certificate(const Automorphism& phi, std::uint64_t seed, std::size_t sample_pairs) {
  const auto probes = multiplicativity_probes(phi.signature());
  if (phi.signature()->rank <= 5) return is_multiplicative(phi.op(), probes);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, probes.size() - 1);
  for (std::size_t t = 0; t < sample_pairs; ++t) {
    const FormSection& a = probes[pick(rng)];
    const FormSection& b = probes[pick(rng)];
    if (apply(phi.op(), wedge(a, b)) != wedge(apply(phi.op(), a), apply(phi.op(), b))) return false;
  }
  return true;
}

}  // namespace supercech
