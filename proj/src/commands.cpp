// Copyright (c) 2026 The supercech Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#include "supercech/commands.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "supercech/properties.hpp"

namespace supercech {

namespace {

const Cochain1& require_u(const ProblemFile& p) {
  const Cochain1* u = p.cochain1("u");
  if (!u) throw std::invalid_argument("problem defines no cochain u");
  return *u;
}

int bound_of(const ProblemFile& p, const CommandOptions& o) {
  const int b = o.bound.value_or(p.task.bound.value_or(kDefaultBound));
  if (b < 0) throw std::invalid_argument("bound must be non-negative");
  return b;
}

void finish_with_checks(ObstructionReport& rep) {
  bool ok = true;
  for (const auto& [name, v] : rep.checks) {
    if (!v && ok) rep.detail = name + " fails";
    ok = ok && v;
  }
  rep.verdict = ok ? Verdict::kPass : Verdict::kNegative;
}

ObstructionReport check_cocycle(const ProblemFile& p) {
  const Cochain1& u = require_u(p);
  ObstructionReport rep;
  rep.operation = "check-cocycle";
  rep.cover = p.cover->to_string();
  const Cochain2 du = d1(u);
  const Cochain2 du2 = d1(cochain_component(u, 2));
  const bool derivations = is_derivation_valued(u);
  rep.checks.emplace_back("derivation_valued", derivations);
  rep.checks.emplace_back("abelian_cocycle", du.is_zero());
  rep.checks.emplace_back("degree2_cocycle", du2.is_zero());
  DegreeStep abelian;
  abelian.label = "d(u)";
  abelian.value = du;
  rep.steps.push_back(abelian);
  if (derivations) {
    const AutCochain2 n = nab_d(cochain_exp(u));
    bool identity = true;
    for (const auto& [s, a] : n.values()) identity = identity && a.is_identity();
    rep.checks.emplace_back("nonabelian_cocycle", identity);
    DegreeStep step;
    step.label = "log nab_d(exp(u))";
    step.value = cochain_log(n);
    rep.steps.push_back(step);
  }
  finish_with_checks(rep);
  return rep;
}

ObstructionReport obstruction(const ProblemFile& p, int q, int bound) {
  const Cochain1& u = require_u(p);
  ObstructionReport rep;
  rep.operation = q == 2 ? "r4" : "r6";
  rep.cover = p.cover->to_string();
  const Cochain1 u2 = cochain_component(u, 2);
  const Cochain1 u4 = cochain_component(u, 4);
  const Cochain2 r = R2q(u, q);
  DegreeStep step = obstruction_step(2 * q, q == 2 ? "R4(u)" : "R6(u)", r, true);
  const bool du2 = d1(u2).is_zero();
  rep.checks.emplace_back("du2_zero", du2);
  if (q == 3) rep.checks.emplace_back("du4_equals_minus_R4", d1(u4) == -R2q(u, 2));
  if (du2 && (q == 2 || d1(u4) == -R2q(u, 2))) {
    const Cochain2 closed = q == 2 ? r4_closed(u2) : r6_closed(u2, u4);
    rep.checks.emplace_back("closed_form_matches", closed == r);
  }
  rep.checks.emplace_back("derivation_valued", step.derivation_valued());
  rep.checks.emplace_back("cocycle", *step.cocycle);
  if (!*step.cocycle) {
    rep.steps.push_back(step);
    rep.verdict = Verdict::kNegative;
    rep.detail = step.label + " is not a cocycle";
    return rep;
  }
  const auto sol = solve_d1(r, bound);
  step.solver = sol.status;
  step.note = sol.detail;
  rep.steps.push_back(step);
  if (sol.status == SolveStatus::kSolved) {
    rep.checks.emplace_back("coboundary", true);
    rep.cochain = *sol.solution;
  }
  if (const auto cf = rep.check("closed_form_matches"); cf == false)
    throw std::logic_error("closed form disagrees with the obstruction map");
  switch (sol.status) {
    case SolveStatus::kSolved:
      rep.verdict = Verdict::kPass;
      break;
    case SolveStatus::kNoSolution:
      rep.verdict = Verdict::kNegative;
      rep.detail = step.label + " is not a coboundary";
      break;
    case SolveStatus::kUndecided:
      rep.verdict = Verdict::kUndecided;
      rep.detail = sol.detail;
      break;
  }
  return rep;
}

ObstructionReport hdims(const ProblemFile& p, const CommandOptions& o) {
  if (p.cover->mode() != CoverMode::kP1) throw std::invalid_argument("hdims needs a p1 cover");
  const LineBundleSpec spec{p.cover->degrees()};
  std::vector<int> ks{1, 2, 3};
  if (const auto k = o.q ? o.q : p.task.k ? p.task.k : p.task.q) ks = {*k};
  ObstructionReport rep;
  rep.operation = "hdims";
  rep.cover = p.cover->to_string();
  const bool conditions = satisfies_vanishing_conditions(spec);
  rep.checks.emplace_back("vanishing_conditions", conditions);
  bool vanishing = true;
  for (int k : ks) {
    const auto dims = h_dims_p1(spec, k);
    rep.counts.emplace_back("h0_Der" + std::to_string(2 * k), dims.h0);
    rep.counts.emplace_back("h1_Der" + std::to_string(2 * k), dims.h1);
    vanishing = vanishing && dims.h0 == 0;
  }
  rep.checks.emplace_back("h0_vanishes", vanishing);
  rep.checks.emplace_back("conditions_imply_vanishing", !conditions || vanishing);
  if (conditions && !vanishing) throw std::logic_error("vanishing conditions hold but h0 is nonzero");
  rep.verdict = vanishing ? Verdict::kPass : Verdict::kNegative;
  if (!vanishing) rep.detail = "global sections exist";
  return rep;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"check-cocycle", "r4", "r6", "propp", "extend", "equiv", "hdims", "suite"};
  return names;
}

ObstructionReport run_command(const std::string& command, const ProblemFile* problem, const CommandOptions& opts) {
  if (command == "suite") {
    const TaskParams task = problem ? problem->task : TaskParams{};
    const int trials = opts.trials.value_or(task.trials.value_or(kDefaultTrials));
    if (trials < 0) throw std::invalid_argument("trials must be non-negative");
    return run_suite(opts.seed.value_or(task.seed.value_or(0)), trials);
  }
  if (std::find(command_names().begin(), command_names().end(), command) == command_names().end())
    throw std::invalid_argument("unknown command '" + command + "'");
  if (!problem) throw std::invalid_argument("command '" + command + "' needs a problem file");
  const ProblemFile& p = *problem;
  if (command == "check-cocycle") return check_cocycle(p);
  if (command == "r4") return obstruction(p, 2, bound_of(p, opts));
  if (command == "r6") return obstruction(p, 3, bound_of(p, opts));
  if (command == "propp") return prop_p_verify(require_u(p));
  if (command == "extend") return extend(cochain_component(require_u(p), 2), bound_of(p, opts));
  if (command == "equiv") {
    const Cochain1* target = p.cochain1("up");
    return equiv_solve(require_u(p), target ? *target : Cochain1(p.cover), bound_of(p, opts));
  }
  return hdims(p, opts);
}

ObstructionReport run_suite(std::uint64_t seed, int trials) {
  using Property = std::function<bool(InstanceGenerator&)>;
  const int bound = kDefaultBound;
  const std::vector<std::pair<std::string, Property>> properties = {
      {"operator_coherence", [](InstanceGenerator& g) { return check_operator_coherence(g, 2 * g.uniform(2, 3), 3); }},
      {"exp_log", [](InstanceGenerator& g) { return check_exp_log(g, g.uniform(4, 7)); }},
      {"nilpotency", [](InstanceGenerator& g) { return check_nilpotency(g); }},
      {"r4_closed_form", [](InstanceGenerator& g) { return check_r4_closed(g, g.uniform(4, 6), 3); }},
      {"dR4_zero", [](InstanceGenerator& g) { return check_r4_cocycle(g, 4, 4); }},
      {"r6_closed_form", [&](InstanceGenerator& g) { return check_r6_closed(g, 6, 3, bound); }},
      {"prop_p", [&](InstanceGenerator& g) { return check_prop_p(g, 6, 3, bound, g.coin()); }},
      {"f2q_decomposition", [](InstanceGenerator& g) { return check_f2q_decomposition(g, 6, 3, g.uniform(2, 3)); }},
      {"f2q_differential", [](InstanceGenerator& g) { return check_f2q_differential(g, 6, 3, g.uniform(2, 3)); }},
      {"two_chart_extend", [&](InstanceGenerator& g) {
         std::vector<int> l(static_cast<std::size_t>(g.uniform(2, 4)));
         for (int& d : l) d = g.uniform(-3, 1);
         return check_two_chart_extend(g, l, bound);
       }},
      {"equiv_orbit", [&](InstanceGenerator& g) { return check_equiv_orbit(g, 6, 3, bound); }},
  };
  ObstructionReport rep;
  rep.operation = "suite";
  rep.cover = "random";
  std::vector<long> run(properties.size(), 0), passed(properties.size(), 0);
  std::string failures;
  for (int t = 0; t < trials; ++t) {
    const std::size_t k = static_cast<std::size_t>(t) % properties.size();
    InstanceGenerator gen(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(t));
    ++run[k];
    if (properties[k].second(gen)) {
      ++passed[k];
    } else {
      failures += (failures.empty() ? "" : ", ") + properties[k].first + " at trial " + std::to_string(t);
    }
  }
  rep.counts.emplace_back("seed", static_cast<long>(seed));
  rep.counts.emplace_back("trials", trials);
  for (std::size_t k = 0; k < properties.size(); ++k) {
    rep.checks.emplace_back(properties[k].first, passed[k] == run[k]);
    rep.counts.emplace_back(properties[k].first + "_trials", run[k]);
  }
  rep.verdict = failures.empty() ? Verdict::kPass : Verdict::kNegative;
  rep.detail = failures.empty() ? "" : "failed: " + failures;
  return rep;
}

}  // namespace supercech
