// Copyright (c) 2026 The supercech Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#include "supercech/properties.hpp"

#include "supercech/liegroup.hpp"
#include "supercech/obstruction.hpp"

namespace supercech {

namespace {

Signature xy_signature(int rank) { return make_signature(std::vector<std::string>{"x", "y"}, rank); }
Signature x_signature(int rank) { return make_signature(std::vector<std::string>{"x"}, rank); }

Cochain1 truncated_product(const Cochain0& v, const Cochain1& u, int q) {
  const AutCochain1 g = twisted_product(v, u);
  Cochain1 r(u.cover());
  for (const auto& [s, a] : g.values()) r.set(s, truncate(a.op(), q));
  return r;
}

}  // namespace

bool check_operator_coherence(InstanceGenerator& gen, int rank, int max_degree) {
  const Signature sig = xy_signature(rank);
  const SuperOperator a = gen.op(sig, 2, 3, max_degree, false);
  const SuperOperator b = gen.op(sig, 2, 3, max_degree, false);
  const SuperOperator c = gen.op(sig, 2, 3, max_degree, false);
  const FormSection f = gen.form(sig, max_degree, 3);
  if (apply(compose(a, b), f) != apply(a, apply(b, f))) return false;
  if (compose(compose(a, b), c) != compose(a, compose(b, c))) return false;

  const int p = gen.uniform(0, rank);
  const FormSection g = gen.homogeneous_form(sig, p, max_degree, 2);
  const FormSection h = gen.form(sig, max_degree, 2);
  const SuperOperator d = gen.derivation(sig, 2 * gen.uniform(0, rank / 2), 3, max_degree);
  if (apply(d, wedge(g, h)) != wedge(apply(d, g), h) + wedge(g, apply(d, h))) return false;
  const SuperOperator k = SuperOperator::contraction(sig, gen.uniform(1, rank));
  const Rational sign = p % 2 == 0 ? Rational(1) : Rational(-1);
  return apply(k, wedge(g, h)) == wedge(apply(k, g), h) + wedge(g, apply(k, h)) * sign;
}

bool check_exp_log(InstanceGenerator& gen, int rank) {
  const Signature sig = x_signature(rank);
  const SuperOperator u = gen.nilpotent_derivation(sig, 3, 2);
  const Automorphism phi = op_exp(u);
  return op_log(phi) == u && multiplicativity_certificate(phi, static_cast<std::uint64_t>(gen.uniform(1, 1000)), 200);
}

bool check_nilpotency(InstanceGenerator& gen) {
  const Signature sig = x_signature(7);
  SuperOperator p = gen.raising_op(sig, 1, 3, 2);
  for (int i = 0; i < 3; ++i) p = compose(p, gen.raising_op(sig, 1, 3, 2));
  return p.is_zero();
}

bool check_r4_closed(InstanceGenerator& gen, int rank, int charts) {
  const CoverPtr cover = Cover::formal(charts, x_signature(rank));
  const Cochain1 u2 = d0(gen.derivation_cochain0(cover, {2}, 2, 2));
  return r4_closed(u2) == R2q(u2, 2);
}

bool check_r4_cocycle(InstanceGenerator& gen, int rank, int charts) {
  const CoverPtr cover = Cover::formal(charts, x_signature(rank));
  const Cochain1 u2 = d0(gen.derivation_cochain0(cover, {2}, 2, 2));
  return d2(R2q(u2, 2)).is_zero();
}

bool check_r6_closed(InstanceGenerator& gen, int rank, int charts, int bound) {
  const CoverPtr cover = Cover::formal(charts, x_signature(rank));
  const Cochain1 u2 = d0(gen.derivation_cochain0(cover, {2}, 2, 2));
  const auto s4 = solve_d1(R2q(u2, 2), bound);
  if (s4.status != SolveStatus::kSolved) return false;
  const Cochain2 r6 = R2q(u2 + *s4.solution, 3);
  return r6 == r6_closed(u2, *s4.solution) && d2(r6).is_zero();
}

bool check_prop_p(InstanceGenerator& gen, int rank, int charts, int bound, bool cocycle) {
  const CoverPtr cover = Cover::formal(charts, x_signature(rank));
  if (!cocycle) return prop_p_verify(gen.derivation_cochain1(cover, {2}, 2, 2)).verdict == Verdict::kPass;
  const Cochain1 u2 = d0(gen.derivation_cochain0(cover, {2}, 2, 2));
  const auto s4 = solve_d1(R2q(u2, 2), bound);
  if (s4.status != SolveStatus::kSolved) return false;
  const ObstructionReport rep = prop_p_verify(u2 + *s4.solution);
  return rep.verdict == Verdict::kPass && rep.check("biconditional_applicable") == true;
}

bool check_f2q_decomposition(InstanceGenerator& gen, int rank, int charts, int q) {
  const CoverPtr cover = Cover::formal(charts, x_signature(rank));
  const Cochain0 v = gen.derivation_cochain0(cover, {2, 4, 6}, 2, 2);
  const Cochain1 u = gen.derivation_cochain1(cover, {2, 4, 6}, 2, 2);
  const Cochain1 rhs = d0(cochain_component(v, 2 * q)) + cochain_component(u, 2 * q) + F2q(v, u, q);
  return truncated_product(v, u, q) == rhs;
}

bool check_f2q_differential(InstanceGenerator& gen, int rank, int charts, int q) {
  const CoverPtr cover = Cover::formal(charts, x_signature(rank));
  const Cochain0 v = gen.derivation_cochain0(cover, {2, 4, 6}, 2, 2);
  Cochain1 u = twisted_action(gen.derivation_cochain0(cover, {2, 4, 6}, 2, 2), Cochain1(cover));
  u += cochain_component(gen.derivation_cochain1(cover, {2 * q}, 1, 1), 2 * q);
  const AutCochain2 n = nab_d(cochain_exp(cochain_truncate(u, q - 1)));
  Cochain2 rhs(cover);
  for (const auto& [s, a] : n.values()) rhs.set(s, truncate(a.op(), q));
  return nab_d_truncated(F2q(v, u, q), q) == rhs;
}

bool check_two_chart_extend(InstanceGenerator& gen, const std::vector<int>& degrees, int bound) {
  const CoverPtr cover = Cover::p1(degrees);
  const Cochain1 u2 = gen.derivation_cochain1(cover, {2}, 3, 2);
  if (!R2q(u2, 2).is_zero() || !R2q(u2, 3).is_zero()) return false;
  const ObstructionReport rep = extend(u2, bound);
  return rep.verdict == Verdict::kPass && rep.cochain && is_nonabelian_cocycle(cochain_exp(*rep.cochain));
}

bool check_equiv_orbit(InstanceGenerator& gen, int rank, int charts, int bound) {
  const CoverPtr cover = Cover::formal(charts, x_signature(rank));
  const Cochain1 u = twisted_action(gen.derivation_cochain0(cover, {2, 4, 6}, 2, 1), Cochain1(cover));
  const Cochain1 target = twisted_action(gen.derivation_cochain0(cover, {2, 4, 6}, 2, 1), u);
  const ObstructionReport rep = equiv_solve(u, target, bound);
  return rep.verdict == Verdict::kPass && rep.gauge && twisted_action(*rep.gauge, u) == target;
}

}  // namespace supercech
