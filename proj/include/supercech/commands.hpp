// Copyright (c) 2026 The supercech Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "supercech/obstruction.hpp"
#include "supercech/problem.hpp"

namespace supercech {

inline constexpr int kDefaultBound = 12;
inline constexpr int kDefaultTrials = 100;

/// Command-line overrides; unset fields fall back to the problem's [task].
struct CommandOptions {
  std::optional<int> q;
  std::optional<int> bound;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
};

const std::vector<std::string>& command_names();

/// Runs one command. The problem may be absent only for "suite". Throws
/// std::invalid_argument for unknown commands or missing inputs.
ObstructionReport run_command(const std::string& command, const ProblemFile* problem, const CommandOptions& opts);

/// Seeded random property campaign over the library's identities.
ObstructionReport run_suite(std::uint64_t seed, int trials);

}  // namespace supercech
