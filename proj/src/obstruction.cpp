// Copyright (c) 2026 The supercech Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#include "supercech/obstruction.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace supercech {

namespace {

void require_pure_shift(const Cochain1& u, int shift, const char* name) {
  for (const auto& [s, d] : u.values())
    for (int sh : d.shifts())
      if (sh != shift)
        throw std::invalid_argument(std::string(name) + " has a component of shift " + std::to_string(sh) +
                                    " at " + simplex_label(s));
}

void require_cocycle(const Cochain1& u2) {
  if (!d1(u2).is_zero()) throw std::invalid_argument("precondition violated: d1(u2) != 0");
}

Cochain2 scaled(const Cochain2& c, const Rational& k) {
  return c.map([&k](const SuperOperator& d) { return d * k; });
}

std::string first_failure(const DegreeStep& step) {
  for (const auto& [s, ok] : step.derivation)
    if (!ok) return simplex_label(s);
  return "";
}

template <std::size_t P>
nlohmann::ordered_json cochain_json(const Cochain<P>& c) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [s, d] : c.values()) j[simplex_label(s)] = d.to_string();
  return j;
}

}  // namespace

// ---------------------------------------------------------------- obstruction maps

DegreeStep obstruction_step(int degree, std::string label, const Cochain2& value, bool with_cocycle) {
  DegreeStep step;
  step.degree = degree;
  step.label = std::move(label);
  step.value = value;
  if (with_cocycle) step.cocycle = d2(value).is_zero();
  for (const auto& s : value.simplices()) step.derivation.emplace_back(s, is_derivation(value.at(s)));
  return step;
}

Cochain2 R2q(const Cochain1& u, int q) {
  if (q < 2) throw std::invalid_argument("R2q needs q >= 2");
  const AutCochain2 n = nab_d(cochain_exp(cochain_truncate(u, q - 1)));
  Cochain2 r(u.cover());
  for (const auto& [s, a] : n.values()) r.set(s, component(a.op(), 2 * q));
  return r;
}

Cochain2 r4_closed(const Cochain1& u2) {
  require_pure_shift(u2, 2, "u2");
  require_cocycle(u2);
  const Cover& cover = *u2.cover();
  Cochain2 r = scaled(d1(u2.map([](const SuperOperator& d) { return compose(d, d); })), make_rational(1, 2));
  for (const auto& s : r.simplices()) {
    const int i = s[0], j = s[1], k = s[2];
    r.add(s, compose(u2.at({i, j}), cover.transport(u2.at({j, k}), j, i)));
  }
  return r;
}

Cochain2 r6_closed(const Cochain1& u2, const Cochain1& u4) {
  require_pure_shift(u2, 2, "u2");
  require_pure_shift(u4, 4, "u4");
  require_cocycle(u2);
  const Cover& cover = *u2.cover();
  Cochain1 k_cochain(u2.cover());
  for (const auto& s : k_cochain.simplices()) k_cochain.set(s, commutator(u2.at(s), u4.at(s)));
  Cochain2 r = scaled(d1(k_cochain), make_rational(1, 2));
  const Rational third = make_rational(1, 3);
  for (const auto& s : r.simplices()) {
    const int i = s[0], j = s[1], k = s[2];
    const SuperOperator a = u2.at({i, j});
    const SuperOperator b = cover.transport(u2.at({j, k}), j, i);
    const SuperOperator c = -u2.at({i, k});
    const SuperOperator b4 = cover.transport(u4.at({j, k}), j, i);
    SuperOperator t = compose(compose(a, b), c);
    t += commutator(a, compose(b, b)) * make_rational(1, 2);
    t -= (power(a, 3) + power(b, 3) + power(c, 3)) * third;
    t += commutator(a, b4);
    r.add(s, t);
  }
  return r;
}

// ---------------------------------------------------------------- reports

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kNegative:
      return "negative";
    case Verdict::kUndecided:
      return "undecided within bound";
  }
  return "?";
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return 0;
    case Verdict::kNegative:
      return 1;
    case Verdict::kUndecided:
      return 2;
  }
  return 3;
}

bool DegreeStep::derivation_valued() const {
  return std::all_of(derivation.begin(), derivation.end(), [](const auto& p) { return p.second; });
}

std::optional<bool> ObstructionReport::check(const std::string& name) const {
  for (const auto& [n, v] : checks)
    if (n == name) return v;
  return std::nullopt;
}

nlohmann::ordered_json ObstructionReport::to_json() const {
  nlohmann::ordered_json j;
  j["operation"] = operation;
  j["cover"] = cover;
  j["verdict"] = to_string(verdict);
  j["exit_code"] = exit_code(verdict);
  j["detail"] = detail;
  nlohmann::ordered_json c = nlohmann::ordered_json::object();
  for (const auto& [n, v] : checks) c[n] = v;
  j["checks"] = c;
  if (!counts.empty()) {
    nlohmann::ordered_json n = nlohmann::ordered_json::object();
    for (const auto& [k, v] : counts) n[k] = v;
    j["counts"] = n;
  }
  nlohmann::ordered_json steps_json = nlohmann::ordered_json::array();
  for (const auto& s : steps) {
    nlohmann::ordered_json sj;
    sj["label"] = s.label;
    sj["degree"] = s.degree;
    if (s.cocycle) sj["cocycle"] = *s.cocycle;
    if (!s.derivation.empty() || s.value) {
      sj["derivation_valued"] = s.derivation_valued();
      nlohmann::ordered_json t = nlohmann::ordered_json::object();
      for (const auto& [simplex, ok] : s.derivation) t[simplex_label(simplex)] = ok;
      sj["derivation"] = t;
    }
    if (s.solver) sj["solver"] = to_string(*s.solver);
    if (s.value) sj["value"] = cochain_json(*s.value);
    if (!s.note.empty()) sj["note"] = s.note;
    steps_json.push_back(sj);
  }
  j["steps"] = steps_json;
  if (cochain) j["cochain"] = cochain_json(*cochain);
  if (gauge) j["gauge"] = cochain_json(*gauge);
  return j;
}

std::string ObstructionReport::to_text() const {
  std::ostringstream os;
  os << operation << " on " << cover << "\n";
  os << "verdict: " << to_string(verdict);
  if (!detail.empty()) os << " (" << detail << ")";
  os << "\n";
  for (const auto& [n, v] : checks) os << "  " << n << ": " << (v ? "yes" : "no") << "\n";
  for (const auto& [n, v] : counts) os << "  " << n << " = " << v << "\n";
  for (const auto& s : steps) {
    os << "  " << s.label << ":";
    if (s.cocycle) os << " cocycle=" << (*s.cocycle ? "yes" : "no");
    if (!s.derivation.empty()) os << " derivation-valued=" << (s.derivation_valued() ? "yes" : "no");
    if (s.solver) os << " solver=" << to_string(*s.solver);
    if (!s.note.empty()) os << " " << s.note;
    os << "\n";
    if (s.value)
      for (const auto& [simplex, d] : s.value->values()) os << "    " << simplex_label(simplex) << " = " << d << "\n";
  }
  if (cochain) {
    os << "  cochain:\n";
    for (const auto& [simplex, d] : cochain->values()) os << "    " << simplex_label(simplex) << " = " << d << "\n";
  }
  if (gauge) {
    os << "  gauge:\n";
    for (const auto& [simplex, d] : gauge->values()) os << "    " << simplex_label(simplex) << " = " << d << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------- verification

ObstructionReport prop_p_verify(const Cochain1& u) {
  ObstructionReport rep;
  rep.operation = "propp";
  rep.cover = u.cover()->to_string();
  const Cochain1 u2 = cochain_component(u, 2);
  const Cochain1 u4 = cochain_component(u, 4);

  const bool du2 = d1(u2).is_zero();
  const Cochain2 r4 = R2q(u, 2);
  const bool dr4 = d2(r4).is_zero();
  const bool du4 = d1(u4) == -r4;
  const Cochain2 r6 = R2q(u, 3);
  const Cochain2 r6u2 = R2q(u2, 3);

  rep.steps.push_back(obstruction_step(4, "R4(u)", r4, true));
  rep.steps.push_back(obstruction_step(6, "R6(u)", r6, true));
  rep.steps.push_back(obstruction_step(6, "R6(u2)", r6u2, false));
  const bool dr6 = *rep.steps[1].cocycle;
  const bool lhs = dr6 && rep.steps[1].derivation_valued();
  const bool rhs = rep.steps[2].derivation_valued();
  const bool implication1 = !du2 || dr4;
  const bool implication2 = !(du2 && du4) || dr6;
  const bool applicable = du2 && du4;

  rep.checks = {{"du2_zero", du2},
                {"dR4_zero", dr4},
                {"du4_equals_minus_R4", du4},
                {"dR6_zero", dr6},
                {"R6_u_in_Z2_Der6", lhs},
                {"R6_u2_in_C2_Der6", rhs},
                {"implication1_holds", implication1},
                {"implication2_holds", implication2},
                {"biconditional_applicable", applicable},
                {"biconditional_holds", lhs == rhs}};
  const bool ok = implication1 && implication2 && (!applicable || lhs == rhs);
  rep.verdict = ok ? Verdict::kPass : Verdict::kNegative;
  if (!ok) rep.detail = "a claimed implication fails";
  return rep;
}

ObstructionReport extend(const Cochain1& u2, int bound) {
  require_pure_shift(u2, 2, "u2");
  require_cocycle(u2);
  ObstructionReport rep;
  rep.operation = "extend";
  rep.cover = u2.cover()->to_string();

  // membership of u2 in the restricted cocycle set
  rep.steps.push_back(obstruction_step(4, "R4(u2)", r4_closed(u2), true));
  rep.steps.push_back(obstruction_step(6, "R6(u2)", R2q(u2, 3), false));
  const bool member = rep.steps[0].derivation_valued() && rep.steps[1].derivation_valued();
  rep.checks.emplace_back("u2_in_restricted_cocycles", member);
  if (!member) {
    const DegreeStep& bad = rep.steps[0].derivation_valued() ? rep.steps[1] : rep.steps[0];
    rep.verdict = Verdict::kNegative;
    rep.detail = bad.label + " is not derivation-valued on triple " + first_failure(bad);
    return rep;
  }

  const auto s4 = solve_d1(*rep.steps[0].value, bound);
  rep.steps[0].solver = s4.status;
  if (s4.status != SolveStatus::kSolved) {
    rep.verdict = Verdict::kUndecided;
    rep.detail = "degree 4: " + s4.detail;
    return rep;
  }
  const Cochain1 u24 = u2 + *s4.solution;

  rep.steps.push_back(obstruction_step(6, "R6(u2+u4)", R2q(u24, 3), true));
  DegreeStep& step6 = rep.steps.back();
  if (!step6.derivation_valued()) {
    rep.verdict = Verdict::kNegative;
    rep.detail = "R6(u2+u4) is not derivation-valued on triple " + first_failure(step6);
    return rep;
  }
  const auto s6 = solve_d1(*step6.value, bound);
  step6.solver = s6.status;
  if (s6.status != SolveStatus::kSolved) {
    rep.verdict = Verdict::kUndecided;
    rep.detail = "degree 6: " + s6.detail;
    return rep;
  }
  const Cochain1 u = u24 + *s6.solution;
  const bool certificate = is_nonabelian_cocycle(cochain_exp(u));
  rep.checks.emplace_back("certificate_nab_d_exp_u_is_identity", certificate);
  if (!certificate) throw std::logic_error("extension certificate failed");
  rep.cochain = u;
  rep.verdict = Verdict::kPass;
  return rep;
}

ObstructionReport equiv_solve(const Cochain1& u, const Cochain1& target, int bound) {
  if (u.cover() != target.cover()) throw std::invalid_argument("cochains live on different covers");
  if (!is_derivation_valued(u) || !is_derivation_valued(target))
    throw std::invalid_argument("equivalence needs derivation-valued cochains");
  if (!is_nonabelian_cocycle(cochain_exp(u)) || !is_nonabelian_cocycle(cochain_exp(target)))
    throw std::invalid_argument("input is not a non-abelian cocycle");
  const CoverPtr& cover = u.cover();
  ObstructionReport rep;
  rep.operation = "equiv";
  rep.cover = cover->to_string();
  Cochain0 v(cover);
  bool ambiguous = false;
  for (int k = 1; 2 * k <= cover->rank(); ++k) {
    const Cochain1 rest = cochain_component(target, 2 * k) - cochain_component(twisted_action(v, u), 2 * k);
    DegreeStep step;
    step.degree = 2 * k;
    step.label = "degree " + std::to_string(2 * k);
    const auto sol = solve_d0(rest, bound);
    step.solver = sol.status;
    step.note = sol.detail;
    rep.steps.push_back(step);
    if (sol.status == SolveStatus::kUndecided) {
      rep.verdict = Verdict::kUndecided;
      rep.detail = step.label + ": " + sol.detail;
      return rep;
    }
    if (sol.status == SolveStatus::kNoSolution) {
      if (ambiguous) {
        rep.verdict = Verdict::kUndecided;
        rep.detail = step.label + ": no solution for this choice of lower-degree gauge";
      } else {
        rep.verdict = Verdict::kNegative;
        rep.detail = step.label + ": difference class is nonzero";
      }
      return rep;
    }
    v += *sol.solution;
    if (cover->mode() == CoverMode::kP1) {
      ambiguous = ambiguous || h_dims_p1(LineBundleSpec{cover->degrees()}, k).h0 > 0;
    } else {
      ambiguous = true;
    }
  }
  const bool verified = twisted_action(v, u) == target;
  rep.checks.emplace_back("twisted_action_matches_target", verified);
  if (!verified) throw std::logic_error("equivalence certificate failed");
  rep.gauge = v;
  rep.verdict = Verdict::kPass;
  return rep;
}

// ---------------------------------------------------------------- projective line

P1WeightComplex::Dims h_dims_p1(const LineBundleSpec& spec, int k) {
  if (k < 1 || k > 3) throw std::invalid_argument("k must be 1, 2 or 3");
  const CoverPtr cover = Cover::p1(spec.degrees);
  return P1WeightComplex(cover, p1_derivation_basis(cover->rank(), k)).total();
}

P1WeightComplex::Dims h_dims_line(int l) {
  const CoverPtr cover = Cover::p1({l});
  return P1WeightComplex(cover, {P1Basis{generator_bit(1), OperatorKey{}}}).total();
}

bool satisfies_vanishing_conditions(const LineBundleSpec& spec) {
  std::vector<int> l = spec.degrees;
  std::sort(l.begin(), l.end());
  const std::size_t n = l.size();
  if (n >= 2 && !(l[n - 2] + l[n - 1] < -2)) return false;
  if (n >= 3 && !(l[n - 3] + l[n - 2] + l[n - 1] - l[0] < 0)) return false;
  return true;
}

}  // namespace supercech
