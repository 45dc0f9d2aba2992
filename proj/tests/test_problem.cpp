// Copyright (c) 2026 The supercech Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "supercech/random.hpp"
#include "test_util.hpp"

using namespace supercech;

namespace {

const char* kP1Header = "[cover]\nmode = p1\ndegrees = -2, -2, -2, -2\n\n[cochains]\n";
const char* kFormalHeader = "[cover]\nmode = formal\ncharts = 3\n\n[signature]\nvariables = x, y\nrank = 5\n\n[cochains]\n";

struct Failure {
  std::string code;
  int line = 0;
  int column = 0;
  std::vector<std::string> expected;
};

Failure failure(const std::string& text) {
  try {
    parse_problem(text);
  } catch (const ParseError& e) {
    return {e.code(), e.line(), e.column(), e.expected()};
  }
  FAIL("no ParseError for: " << text);
  return {};
}

bool mentions(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(FIXTURE_DIR) + "/" + name);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("p1 entry with a Laurent coefficient") {
  const ProblemFile p = parse_problem(std::string(kP1Header) + "u2[1,2] = z^-1 * e[1,2] * dz\n");
  CHECK(p.cover->mode() == CoverMode::kP1);
  const Cochain1* u = p.cochain1("u");
  REQUIRE(u != nullptr);
  CHECK(u->at({0, 1}) == testing::op("z^-1*e[1,2]*dz", p.cover->chart_signature(0)));
  CHECK(u->at({0, 1}).shifts() == std::vector<int>{2});
  CHECK(p.cochain1("u2") == nullptr);
  CHECK(p.cochain0("u") == nullptr);
}

TEST_CASE("odd entry is a parity error") {
  const Failure f = failure(std::string(kP1Header) + "u2[1,2] = e[1] * dz\n");
  CHECK(f.code == "parity");
  CHECK(f.line == 6);
  CHECK(f.column == 11);
}

TEST_CASE("contraction term has shift 2") {
  const ProblemFile p = parse_problem(std::string(kFormalHeader) + "u2[1,2] = e[1,2,3] * de[4]\n");
  const SuperOperator v = p.cochain1("u")->at({0, 1});
  CHECK(v.shifts() == std::vector<int>{2});
  CHECK(is_derivation(v));
  const Failure f = failure(std::string(kFormalHeader) + "u4[1,2] = e[1,2,3] * de[4]\n");
  CHECK(f.code == "shift-mismatch");
  CHECK(f.line == 10);
}

TEST_CASE("shift components merge into one cochain") {
  const ProblemFile p = parse_problem(std::string(kFormalHeader) +
                                      "u2[1,2] = x*e[1,2]*dy\nu4[1,2] = e[1,2,3,4]*dx\nu[2,3] = e[2,3]*dx\nv[1] = e[1,2]*dy\n");
  const Cochain1& u = *p.cochain1("u");
  const Signature& sig = p.cover->chart_signature(0);
  CHECK(u.at({0, 1}) == testing::op("x*e[1,2]*dy + e[1,2,3,4]*dx", sig));
  CHECK(u.at({1, 2}) == testing::op("e[2,3]*dx", sig));
  CHECK(u.at({0, 2}).is_zero());
  REQUIRE(p.cochain0("v") != nullptr);
  CHECK(p.cochain0("v")->at({0}) == testing::op("e[1,2]*dy", sig));
}

TEST_CASE("task section") {
  const ProblemFile p = parse_problem(std::string("[task]\nq = 3\nbound = 9\nseed = 17\ntrials = 40\nk = 2\n") + kP1Header);
  CHECK(p.task.q == 3);
  CHECK(p.task.bound == 9);
  CHECK(p.task.seed == 17u);
  CHECK(p.task.trials == 40);
  CHECK(p.task.k == 2);
  CHECK_FALSE(parse_problem(kP1Header).task.q.has_value());
}

TEST_CASE("comments and blank lines") {
  const ProblemFile p = parse_problem("# header\n\n[cover]\nmode = p1   # trailing\ndegrees = 0, 0\n");
  CHECK(p.cover->mode() == CoverMode::kP1);
  CHECK(p.cochains1.empty());
}

TEST_CASE("error codes and positions") {
  Failure f = failure(std::string(kFormalHeader) + "u2[1,2] = x*e[1,2]*dy $\n");
  CHECK(f.code == "lexical");
  CHECK(f.line == 10);
  CHECK(f.column == 23);

  f = failure(std::string(kFormalHeader) + "u2[1,2] = x*e[1,2]*\n");
  CHECK(f.code == "syntax");
  CHECK(f.line == 10);
  CHECK_FALSE(f.expected.empty());

  f = failure(std::string(kFormalHeader) + "u2[1,2] = q*e[1,2]*dx\n");
  CHECK(f.code == "unknown-identifier");
  CHECK(f.column == 11);
  CHECK(mentions(f.expected, "x"));

  f = failure(std::string(kFormalHeader) + "u2[1,2] = e[1,6]*dx\n");
  CHECK(f.code == "generator-index");
  CHECK(f.line == 10);

  f = failure(std::string(kFormalHeader) + "u2[1,4] = e[1,2]*dx\n");
  CHECK(f.code == "chart-index");
  f = failure(std::string(kFormalHeader) + "u2[2,1] = e[1,2]*dx\n");
  CHECK(f.code == "chart-index");
  CHECK(f.column == 3);

  f = failure(std::string(kFormalHeader) + "u2[1,2] = e[1,2]*dx\nu2[1,2] = e[1,2]*dy\n");
  CHECK(f.code == "duplicate");
  CHECK(f.line == 11);

  f = failure("[cover]\nmode = formal\n[bogus]\n");
  CHECK(f.code == "section");
  CHECK(f.line == 3);
  CHECK(mentions(f.expected, "cochains"));

  f = failure("[cover]\nmode = p1\ncolour = red\n");
  CHECK(f.code == "key");
  CHECK(f.line == 3);
  CHECK(mentions(f.expected, "degrees"));

  f = failure("[cover]\nmode = p1\ndegrees = 0, zero\n");
  CHECK(f.code == "value");
  CHECK(f.line == 3);

  f = failure("[cover]\nmode = formal\ncharts = 9\n[signature]\nrank = 3\n");
  CHECK(f.code == "value");
  CHECK(f.line == 3);

  f = failure("[cover]\nmode = p1\ndegrees = -2, -2\n[signature]\nvariables = x\n");
  CHECK(f.code == "key");
  CHECK(f.line == 5);

  f = failure("mode = p1\n");
  CHECK(f.code == "syntax");
  CHECK(f.line == 1);
}

TEST_CASE("operator expressions") {
  const Signature sig = testing::xyz(4);
  CHECK(parse_operator("(x + 1)^2 * dx", sig) == parse_operator("x^2*dx + 2*x*dx + dx", sig));
  CHECK(parse_operator("e[1,2]", sig) == parse_operator("e[1]*e[2]", sig));
  CHECK(parse_operator("e[2,1]", sig) == -parse_operator("e[1,2]", sig));
  CHECK(parse_operator("x/(y - 1)*dz", sig) == parse_operator("(x/(y - 1))*dz", sig));
  CHECK(parse_operator("dx*x", sig) == parse_operator("x*dx + 1", sig));
  CHECK_THROWS_AS(parse_operator("x/dx", sig), ParseError);
  CHECK_THROWS_AS(parse_operator("dx^-1", sig), ParseError);
  CHECK_THROWS_AS(parse_operator("1/(x - x)", sig), ParseError);
}

TEST_CASE("render round trip on fixtures") {
  for (const char* name : {"formal_cocycle.problem", "p1_coboundary.problem", "p1_control.problem",
                           "p1_extend.problem", "p1_nonsplit.problem", "p1_vanishing.problem",
                           "propp_both_false_1.problem", "propp_both_false_2.problem", "propp_both_false_3.problem"}) {
    CAPTURE(name);
    const ProblemFile p = parse_problem(slurp(name));
    const std::string text = render_problem(p);
    const ProblemFile back = parse_problem(text);
    CHECK(same_problem(p, back));
    CHECK(render_problem(back) == text);
  }
}

TEST_CASE("render round trip on random problems") {
  InstanceGenerator gen(91);
  for (int t = 0; t < 30; ++t) {
    ProblemFile p;
    if (t % 2 == 0) {
      std::vector<int> degrees;
      for (int a = 0, n = gen.uniform(2, 6); a < n; ++a) degrees.push_back(gen.uniform(-4, 2));
      p.cover = Cover::p1(degrees);
    } else {
      p.cover = Cover::formal(gen.uniform(2, 5), make_signature(std::vector<std::string>{"x", "y"}, gen.uniform(4, 7)));
    }
    if (gen.coin()) p.task.q = gen.uniform(2, 3);
    if (gen.coin()) p.task.bound = gen.uniform(1, 20);
    p.cochains1.emplace("u", gen.derivation_cochain1(p.cover, {2, 4}, 3, 2));
    p.cochains0.emplace("g", gen.derivation_cochain0(p.cover, {2}, 2, 2));
    const ProblemFile back = parse_problem(render_problem(p));
    CHECK(same_problem(p, back));
  }
}
