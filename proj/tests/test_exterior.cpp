// Copyright (c) 2026 The supercech Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#include <doctest.h>

#include "supercech/random.hpp"
#include "test_util.hpp"

using namespace supercech;
using supercech::testing::form;

namespace {

const Signature kSig = make_signature(std::vector<std::string>{"z"}, 5);

FormSection f(const std::string& t) { return form(t, kSig); }

}  // namespace

TEST_CASE("signature validation") {
  CHECK_THROWS_AS(make_signature(std::vector<std::string>{"x"}, 8), std::invalid_argument);
  CHECK_THROWS_AS(make_signature(std::vector<std::string>{"x"}, 0), std::invalid_argument);
  CHECK_THROWS_AS(make_signature(std::vector<std::string>{"x", "x"}, 2), std::invalid_argument);
  CHECK_THROWS_AS(make_signature(std::vector<std::string>{"e"}, 2), std::invalid_argument);
  CHECK(same_signature(make_signature(std::vector<std::string>{"x"}, 3), make_signature(std::vector<std::string>{"x"}, 3)));
  CHECK_FALSE(same_signature(make_signature(std::vector<std::string>{"x"}, 3), make_signature(std::vector<std::string>{"x"}, 4)));
}

TEST_CASE("wedge on basis elements") {
  CHECK(wedge(f("e[1]"), f("e[2]")) == f("e[1,2]"));
  CHECK(wedge(f("e[2]"), f("e[1]")) == -f("e[1,2]"));
  CHECK(wedge(f("z*e[1,2]"), f("e[1,3]")).is_zero());
  CHECK(wedge(f("e[1,3]"), f("e[2,4]")) == -f("e[1,2,3,4]"));
  CHECK(wedge_sign(make_set({2, 3}), make_set({1})) == 1);
  CHECK(wedge_sign(make_set({3}), make_set({1, 2})) == 1);
  CHECK(wedge_sign(make_set({2}), make_set({1})) == -1);
  CHECK_THROWS_AS(wedge(f("e[1]"), FormSection::one(make_signature(std::vector<std::string>{"z"}, 4))),
                  std::invalid_argument);
}

TEST_CASE("degree_project") {
  CHECK(degree_project(f("1 + e[1,2] + e[1,2,3,4]"), 2) == f("e[1,2]"));
  CHECK(degree_project(f("1 + e[1,2] + e[1,2,3,4]"), 8).is_zero());
  CHECK(degree_project(f("z*e[1]"), 1) == f("z*e[1]"));
}

TEST_CASE("rendering sorts by degree then subset") {
  CHECK(f("e[2,3] + 3/2*z^2*e[1,3] + e[5] - 1").to_string() == "-1 + e[5] + 3/2*z^2*e[1,3] + e[2,3]");
  CHECK(f("(z + 1)*e[1]").to_string() == "(z + 1)*e[1]");
  CHECK(FormSection(kSig).to_string() == "0");
}

TEST_CASE("contraction signs") {
  CHECK(f("e[1,2,3]").contract(2) == -f("e[1,3]"));
  CHECK(f("e[1,2,3]").contract(1) == f("e[2,3]"));
  CHECK(f("e[1,2,3]").contract(4).is_zero());
  CHECK(contraction_sign(make_set({1, 2, 3}), 3) == 1);
}

TEST_CASE("graded commutativity, associativity, nilpotency, projection sum") {
  InstanceGenerator gen(21);
  for (int t = 0; t < 50; ++t) {
    const int n = gen.uniform(3, 7);
    const Signature sig = make_signature(std::vector<std::string>{"x", "y"}, n);
    const int p = gen.uniform(0, n), q = gen.uniform(0, n);
    const FormSection a = gen.homogeneous_form(sig, p, 2, 3);
    const FormSection b = gen.homogeneous_form(sig, q, 2, 3);
    CHECK(wedge(a, b) == wedge(b, a) * Rational((p * q) % 2 == 0 ? 1 : -1));
    const FormSection c = gen.form(sig, 2, 3);
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
    FormSection nil(sig);
    for (int j = 2; j <= n; j += 2) nil += degree_project(c, j);
    FormSection power = nil;
    for (int k = 0; k < n / 2; ++k) power = wedge(power, nil);
    CHECK(power.is_zero());
    if (n % 2 == 1) {
      FormSection mixed = f("e[1] + e[2,3]");
      CHECK_FALSE(wedge(mixed, mixed).is_zero());
    }
    FormSection sum(sig);
    for (int j = 0; j <= n; ++j) sum += degree_project(c, j);
    CHECK(sum == c);
  }
}
