// Copyright (c) 2026 The supercech Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#pragma once

#include <string>

#include "supercech/problem.hpp"

namespace supercech::testing {

inline SuperOperator op(const std::string& text, const Signature& sig) { return parse_operator(text, sig); }

/// The form obtained by applying a multiplication expression to 1.
inline FormSection form(const std::string& text, const Signature& sig) {
  return apply(parse_operator(text, sig), FormSection::one(sig));
}

inline RationalFunction fn(const std::string& text, const Signature& sig) { return form(text, sig).coefficient(0); }

inline Signature xyz(int rank = 1) { return make_signature(std::vector<std::string>{"x", "y", "z"}, rank); }

}  // namespace supercech::testing
