// Copyright (c) 2026 The supercech Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "supercech/commands.hpp"
#include "supercech/properties.hpp"
#include "test_util.hpp"

using namespace supercech;

namespace {

const Signature kXY = make_signature(std::vector<std::string>{"x", "y"}, 6);

SuperOperator o(const std::string& t, const Signature& sig = kXY) { return testing::op(t, sig); }

Cochain1 from_values(const CoverPtr& cover, const std::vector<std::pair<Cochain1::Simplex, std::string>>& entries) {
  Cochain1 u(cover);
  for (const auto& [s, t] : entries) u.set(s, o(t, cover->chart_signature(s[0])));
  return u;
}

ProblemFile load(const std::string& name) {
  std::ifstream in(std::string(FIXTURE_DIR) + "/" + name);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

}  // namespace

TEST_CASE("R2q vanishes on two charts and for u = 0") {
  InstanceGenerator gen(71);
  const CoverPtr two = Cover::formal(2, kXY);
  const Cochain1 u = gen.derivation_cochain1(two, {2, 4, 6}, 3, 2);
  CHECK(R2q(u, 2).is_zero());
  CHECK(R2q(u, 3).is_zero());
  CHECK(R2q(u, 2).simplices().empty());
  CHECK(R2q(Cochain1(Cover::formal(3, kXY)), 2).is_zero());
  CHECK_THROWS_AS(R2q(u, 1), std::invalid_argument);
}

TEST_CASE("r4_closed") {
  const CoverPtr cover = Cover::formal(3, kXY);
  CHECK(r4_closed(Cochain1(cover)).is_zero());
  // Commuting square-zero values: the square and product terms cancel.
  const Cochain1 c = from_values(cover, {{{0, 1}, "e[1,2]*dx"}, {{1, 2}, "e[3,4]*dy"}, {{0, 2}, "e[1,2]*dx + e[3,4]*dy"}});
  CHECK(d1(c).is_zero());
  CHECK(r4_closed(c).is_zero());
  CHECK(R2q(c, 2).is_zero());
  const Cochain1 n = from_values(cover, {{{0, 1}, "e[1,2]*dx"}, {{1, 2}, "x*e[3,4]*dy + e[2,3,5]*de[1]"},
                                         {{0, 2}, "e[1,2]*dx + x*e[3,4]*dy + e[2,3,5]*de[1]"}});
  CHECK(r4_closed(n) == R2q(n, 2));
  CHECK_FALSE(r4_closed(n).is_zero());
  // R4 = 1/2 [u01, u12] here; by hand [e12 dx, x e34 dy + e235 de1] = e1234 dy.
  CHECK(r4_closed(n).at({0, 1, 2}) == o("1/2*e[1,2,3,4]*dy"));
  InstanceGenerator gen(72);
  for (int t = 0; t < 8; ++t) {
    CHECK(check_r4_closed(gen, 4 + t % 3, 3));
    CHECK(check_r4_cocycle(gen, 6, 4));
  }
  Cochain1 bad(cover);
  bad.set({0, 1}, o("e[1,2]*dx"));
  CHECK_THROWS_AS(r4_closed(bad), std::invalid_argument);
  CHECK_THROWS_AS(r4_closed(from_values(cover, {{{0, 1}, "e[1,2,3,4]*dx"}, {{0, 2}, "e[1,2,3,4]*dx"}})),
                  std::invalid_argument);
}

TEST_CASE("r6_closed") {
  const CoverPtr cover = Cover::formal(3, kXY);
  CHECK(r6_closed(Cochain1(cover), Cochain1(cover)).is_zero());
  const Cochain1 c = from_values(cover, {{{0, 1}, "e[1,2]*dx"}, {{1, 2}, "e[3,4]*dy"}, {{0, 2}, "e[1,2]*dx + e[3,4]*dy"}});
  CHECK(r6_closed(c, Cochain1(cover)) == R2q(c, 3));
  InstanceGenerator gen(73);
  for (int t = 0; t < 6; ++t) CHECK(check_r6_closed(gen, 6, 3 + t % 2, kDefaultBound));
  Cochain1 bad(cover);
  bad.set({0, 1}, o("e[1,2]*dx"));
  CHECK_THROWS_AS(r6_closed(bad, Cochain1(cover)), std::invalid_argument);
}

TEST_CASE("prop_p_verify") {
  const ObstructionReport zero = prop_p_verify(Cochain1(Cover::formal(3, kXY)));
  CHECK(zero.verdict == Verdict::kPass);
  for (const auto& [name, v] : zero.checks) CHECK_MESSAGE(v, name);
  InstanceGenerator gen(74);
  for (int t = 0; t < 4; ++t) CHECK(check_prop_p(gen, 6, 4, kDefaultBound, true));
  for (int t = 0; t < 6; ++t) CHECK(check_prop_p(gen, 6, 3, kDefaultBound, false));
  for (int i = 1; i <= 3; ++i) {
    const ProblemFile p = load("propp_both_false_" + std::to_string(i) + ".problem");
    const ObstructionReport r = prop_p_verify(*p.cochain1("u"));
    CHECK(r.verdict == Verdict::kPass);
    CHECK(r.check("du2_zero") == false);
    CHECK(r.check("R6_u_in_Z2_Der6") == false);
    CHECK(r.check("R6_u2_in_C2_Der6") == false);
    CHECK(r.check("biconditional_holds") == true);
  }
}

TEST_CASE("extend") {
  const CoverPtr p1 = Cover::p1({-2, -2, -1, 0});
  const Cochain1 u2 = from_values(p1, {{{0, 1}, "z^-1*e[1,2]*dz + z^-3*e[1,3,4]*de[2]"}});
  const ObstructionReport r = extend(u2, kDefaultBound);
  CHECK(r.verdict == Verdict::kPass);
  REQUIRE(r.cochain);
  CHECK(*r.cochain == u2);
  CHECK(r.check("certificate_nab_d_exp_u_is_identity") == true);

  const CoverPtr cover = Cover::formal(3, make_signature(std::vector<std::string>{"x"}, 6));
  InstanceGenerator gen(75);
  const Cochain1 cob = d0(gen.derivation_cochain0(cover, {2}, 2, 2));
  const ObstructionReport rc = extend(cob, kDefaultBound);
  REQUIRE(rc.verdict == Verdict::kPass);
  CHECK(is_nonabelian_cocycle(cochain_exp(*rc.cochain)));
  CHECK(cochain_component(*rc.cochain, 2) == cob);
  CHECK(equiv_solve(*rc.cochain, Cochain1(cover), kDefaultBound).verdict == Verdict::kPass);

  const ObstructionReport r0 = extend(Cochain1(cover), kDefaultBound);
  CHECK(r0.verdict == Verdict::kPass);
  CHECK(r0.cochain->is_zero());

  Cochain1 bad(cover);
  bad.set({0, 1}, cob.at({0, 1}));
  CHECK_THROWS_AS(extend(bad, kDefaultBound), std::invalid_argument);
  for (int t = 0; t < 5; ++t) CHECK(check_two_chart_extend(gen, {-3, -2, 0, 1}, kDefaultBound));
}

TEST_CASE("equiv_solve") {
  const CoverPtr cover = Cover::formal(3, make_signature(std::vector<std::string>{"x"}, 6));
  InstanceGenerator gen(76);
  const Cochain1 u = twisted_action(gen.derivation_cochain0(cover, {2, 4, 6}, 2, 1), Cochain1(cover));
  const ObstructionReport same = equiv_solve(u, u, kDefaultBound);
  CHECK(same.verdict == Verdict::kPass);
  CHECK(same.gauge->is_zero());
  for (int t = 0; t < 4; ++t) CHECK(check_equiv_orbit(gen, 6, 3, kDefaultBound));
  Cochain1 bad(cover);
  bad.set({0, 1}, o("e[1,2]*dx", cover->chart_signature(0)));
  CHECK_THROWS_AS(equiv_solve(bad, Cochain1(cover), kDefaultBound), std::invalid_argument);

  const CoverPtr p1 = Cover::p1({-2, -2, -2, -2, -2, -2});
  const Cochain1 cls = from_values(p1, {{{0, 1}, "z^-1*e[1,2]*dz"}});
  const ObstructionReport neg = equiv_solve(cls, Cochain1(p1), kDefaultBound);
  CHECK(neg.verdict == Verdict::kNegative);
  CHECK(exit_code(neg.verdict) == 1);
  const Cochain1 cob = d0(gen.derivation_cochain0(p1, {2}, 2, 2));
  const ObstructionReport pos = equiv_solve(cob, Cochain1(p1), kDefaultBound);
  REQUIRE(pos.verdict == Verdict::kPass);
  CHECK(twisted_action(*pos.gauge, cob).is_zero());
}

TEST_CASE("projective line dimensions") {
  for (int k = 1; k <= 3; ++k) CHECK(h_dims_p1({std::vector<int>(7, -2)}, k).h0 == 0);
  CHECK(h_dims_p1({{0, 0}}, 1).h0 > 0);
  CHECK_THROWS_AS(h_dims_p1({{0, 0}}, 4), std::invalid_argument);
  CHECK(satisfies_vanishing_conditions({std::vector<int>(7, -2)}));
  CHECK(satisfies_vanishing_conditions({{-5, -3, -2}}));
  CHECK_FALSE(satisfies_vanishing_conditions({{0, 0}}));
  CHECK_FALSE(satisfies_vanishing_conditions({{-1, -1, -1}}));
  CHECK_FALSE(satisfies_vanishing_conditions({{-9, -1, -1, -1}}));
}

TEST_CASE("report serialization") {
  const CoverPtr p1 = Cover::p1({-2, -2, -2, -2, -2, -2});
  const ObstructionReport r = equiv_solve(from_values(p1, {{{0, 1}, "z^-1*e[1,2]*dz"}}), Cochain1(p1), 4);
  const auto j = r.to_json();
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"operation", "cover", "verdict", "exit_code", "detail", "checks", "steps"});
  CHECK(j["verdict"] == "negative");
  CHECK(j["exit_code"] == 1);
  CHECK(j["steps"][0]["solver"] == "no solution");
  CHECK(r.to_text().rfind("equiv on p1(-2,-2,-2,-2,-2,-2)\nverdict: negative", 0) == 0);
  CHECK(to_string(Verdict::kUndecided) == "undecided within bound");
  CHECK(exit_code(Verdict::kUndecided) == 2);
}
