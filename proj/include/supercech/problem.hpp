// Copyright (c) 2026 The supercech Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "supercech/cech.hpp"

namespace supercech {

/// Parse failure with a 1-based source position. `code` separates the
/// semantic cases: "lexical", "syntax", "unknown-identifier",
/// "generator-index", "parity", "shift-mismatch", "chart-index", "duplicate",
/// "section", "key", "value".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string code, int line, int column, const std::string& message,
             std::vector<std::string> expected = {});

  const std::string& code() const { return code_; }
  int line() const { return line_; }
  int column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::string code_;
  int line_;
  int column_;
  std::vector<std::string> expected_;
};

struct TaskParams {
  std::optional<int> q;
  std::optional<int> bound;
  std::optional<int> k;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;

  friend bool operator==(const TaskParams&, const TaskParams&) = default;
};

/// A cover, task parameters, and named cochains. Entry names ending in digits
/// declare the shift of the entry (u2[1,2] is the shift-2 part of u[1,2]).
struct ProblemFile {
  CoverPtr cover;
  TaskParams task;
  std::map<std::string, Cochain0> cochains0;
  std::map<std::string, Cochain1> cochains1;

  const Cochain1* cochain1(const std::string& name) const;
  const Cochain0* cochain0(const std::string& name) const;
};

/// Structural equality (cover description, task, every cochain value).
bool same_problem(const ProblemFile& a, const ProblemFile& b);

/// Parses an operator expression over `sig`. `line` and `column` locate the
/// first character for error reporting.
SuperOperator parse_operator(std::string_view text, const Signature& sig, int line = 1, int column = 1);

ProblemFile parse_problem(std::string_view text);
/// Canonical text form; parse_problem(render_problem(p)) reproduces p.
std::string render_problem(const ProblemFile& p);

}  // namespace supercech
