// Copyright (c) 2026 The supercech Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#include <doctest.h>

#include "supercech/properties.hpp"
#include "test_util.hpp"

using namespace supercech;

namespace {

const Signature kSig = make_signature(std::vector<std::string>{"x"}, 5);

SuperOperator o(const std::string& t) { return testing::op(t, kSig); }
FormSection f(const std::string& t) { return testing::form(t, kSig); }

}  // namespace

TEST_CASE("apply") {
  CHECK(apply(o("e[1,2]*dx"), f("x^2")) == f("2*x*e[1,2]"));
  CHECK(apply(o("de[1]"), f("e[1,2]")) == f("e[2]"));
  CHECK(apply(o("de[2]"), f("e[1,2]")) == -f("e[1]"));
  CHECK(apply(o("e[1,2,3]*de[4]"), f("e[4,5]")) == f("e[1,2,3,5]"));
  CHECK(apply(o("dx*dx"), f("x^3*e[1]")) == f("6*x*e[1]"));
  CHECK_THROWS_AS(apply(o("dx"), FormSection::one(make_signature(std::vector<std::string>{"x"}, 4))),
                  std::invalid_argument);
}

TEST_CASE("compose normal orders") {
  const SuperOperator c = compose(o("e[1,2]*dx"), o("x*e[3,4]*dx"));
  CHECK(c == o("e[1,2,3,4]*dx + x*e[1,2,3,4]*dx^2"));
  for (const auto& probe : {f("x^2"), f("x^3"), f("x^3*e[5]")})
    CHECK(apply(c, probe) == apply(o("e[1,2]*dx"), apply(o("x*e[3,4]*dx"), probe)));
  CHECK(compose(o("e[1,2]*dx"), SuperOperator::identity(kSig)) == o("e[1,2]*dx"));
  CHECK(compose(o("de[1]"), o("e[1]")) == SuperOperator::identity(kSig) - o("e[1]*de[1]"));
  for (int s = 0; s < 32; ++s) {
    const FormSection basis = FormSection::generator(kSig, static_cast<GeneratorSet>(s));
    CHECK(apply(compose(o("de[1]"), o("e[1]")), basis) == apply(o("de[1]"), apply(o("e[1]"), basis)));
  }
  CHECK(apply(compose(o("de[1]"), o("e[1]")), FormSection::one(kSig)) == FormSection::one(kSig));
  CHECK(compose(o("de[1]"), o("de[1]")).is_zero());
  CHECK(compose(o("de[2]"), o("de[1]")) == -o("de[1]*de[2]"));
}

TEST_CASE("rendering") {
  CHECK(o("x^2*e[1,2]*dx").to_string() == "x^2*e[1,2]*dx");
  CHECK(o("e[1,2,3]*de[4]").to_string() == "e[1,2,3]*de[4]");
  CHECK(o("e[1,2,3]*de[4] + e[1,2]*dx").to_string() == "e[1,2]*dx + e[1,2,3]*de[4]");
  CHECK(o("-3/2").to_string() == "-3/2");
  CHECK(SuperOperator(kSig).to_string() == "0");
}

TEST_CASE("commutator") {
  const SuperOperator d = o("x*e[1,2]*dx + e[1,2,3]*de[4]");
  CHECK(commutator(d, d).is_zero());
  CHECK(commutator(o("e[1,2]*dx"), o("e[3,4]*dx")).is_zero());
  CHECK(commutator(o("e[1,2]*dx"), o("x*e[3,4]")) == o("e[1,2,3,4]"));
}

TEST_CASE("is_derivation") {
  CHECK(is_derivation(o("e[1,2]*dx")));
  CHECK(is_derivation(o("e[1,2,3]*de[4] + x*e[1,2]*dx")));
  CHECK_FALSE(is_derivation(o("e[1,2,3,4]*dx^2")));
  CHECK_FALSE(is_derivation(o("e[1,2]")));
  CHECK_FALSE(is_derivation(o("e[1,2]*dx*de[3]")));
  CHECK(is_derivation(SuperOperator(kSig)));
}

TEST_CASE("degree components") {
  auto c = degree_components(o("e[1,2]*dx"));
  REQUIRE(c.size() == 1);
  CHECK(c.at(2) == o("e[1,2]*dx"));
  CHECK_THROWS_AS(degree_components(o("e[1,2]*dx + e[1,2,3,4]*de[1]")), std::domain_error);
  c = degree_components(SuperOperator::identity(kSig));
  CHECK(c.at(0) == SuperOperator::identity(kSig));
  CHECK(component(o("e[1,2]*dx + e[1,2,3,4]*dx + e[1,2,3]*de[1]"), 2) == o("e[1,2]*dx + e[1,2,3]*de[1]"));
  CHECK(o("e[1,2,3,4]*dx + e[1,2]").shifts() == std::vector<int>{2, 4});
}

TEST_CASE("operator kernel properties on random instances") {
  InstanceGenerator gen(31);
  for (int t = 0; t < 60; ++t) CHECK(check_operator_coherence(gen, gen.uniform(4, 7), 3));
  for (int t = 0; t < 20; ++t) CHECK(check_nilpotency(gen));
}

TEST_CASE("composition respects the grading") {
  InstanceGenerator gen(32);
  const Signature sig = make_signature(std::vector<std::string>{"x", "y"}, 6);
  for (int t = 0; t < 30; ++t) {
    const SuperOperator a = gen.op(sig, 2, 3, 2, true);
    const SuperOperator b = gen.op(sig, 2, 3, 2, true);
    const SuperOperator ab = compose(a, b);
    for (int k = -3; k <= 3; ++k) {
      SuperOperator sum(sig);
      for (int i = -3; i <= 3; ++i) sum += compose(component(a, 2 * i), component(b, 2 * (k - i)));
      CHECK(component(ab, 2 * k) == sum);
    }
  }
}

TEST_CASE("derivations satisfy Leibniz, non-derivations do not") {
  InstanceGenerator gen(33);
  const Signature sig = make_signature(std::vector<std::string>{"x"}, 6);
  for (int t = 0; t < 30; ++t) {
    const SuperOperator d = gen.nilpotent_derivation(sig, 3, 2);
    const FormSection a = gen.form(sig, 2, 3), b = gen.form(sig, 2, 3);
    CHECK(apply(d, FormSection::one(sig)).is_zero());
    CHECK(apply(d, wedge(a, b)) == wedge(apply(d, a), b) + wedge(a, apply(d, b)));
  }
  const SuperOperator second = testing::op("e[1,2,3,4]*dx^2", sig);
  const FormSection x = testing::form("x", sig);
  CHECK(apply(second, wedge(x, x)) != wedge(apply(second, x), x) + wedge(x, apply(second, x)));
}
