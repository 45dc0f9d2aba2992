// Copyright (c) 2026 The supercech Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "supercech/commands.hpp"

namespace {

constexpr int kExitParse = 3;
constexpr int kExitError = 4;

int emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot write " << out << "\n";
    return kExitError;
  }
  f << text;
  return 0;
}

int fail(int code, const nlohmann::ordered_json& error, bool machine, const std::string& out) {
  std::cerr << "error: " << error["message"].get<std::string>() << "\n";
  if (machine) {
    nlohmann::ordered_json j;
    j["error"] = error;
    j["exit_code"] = code;
    emit(j.dump(2) + "\n", out);
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cech obstruction calculus for split supermanifolds"};
  std::string problem_path, command, format = "text", out;
  std::optional<int> q, bound, trials;
  std::optional<std::uint64_t> seed;
  app.add_option("--problem", problem_path, "Problem file")->check(CLI::ExistingFile);
  app.add_option("--command", command, "Command to run")->required()->check(CLI::IsMember(supercech::command_names()));
  app.add_option("--q", q, "Obstruction degree index or k for hdims");
  app.add_option("--bound", bound, "Coefficient degree bound for solvers");
  app.add_option("--seed", seed, "Random seed");
  app.add_option("--trials", trials, "Number of random trials");
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--out", out, "Write the report to this file");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }
  const bool machine = format == "machine";

  std::optional<supercech::ProblemFile> problem;
  if (!problem_path.empty()) {
    std::ifstream in(problem_path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      problem = supercech::parse_problem(buf.str());
    } catch (const supercech::ParseError& e) {
      nlohmann::ordered_json err;
      err["kind"] = "parse";
      err["code"] = e.code();
      err["line"] = e.line();
      err["column"] = e.column();
      err["expected"] = e.expected();
      err["message"] = std::string(e.what());
      return fail(kExitParse, err, machine, out);
    }
  }

  try {
    const supercech::CommandOptions opts{q, bound, seed, trials};
    const supercech::ObstructionReport rep = supercech::run_command(command, problem ? &*problem : nullptr, opts);
    const std::string text = machine ? rep.to_json().dump(2) + "\n" : rep.to_text();
    if (const int rc = emit(text, out); rc != 0) return rc;
    return supercech::exit_code(rep.verdict);
  } catch (const std::exception& e) {
    nlohmann::ordered_json err;
    err["kind"] = "runtime";
    err["message"] = std::string(e.what());
    return fail(kExitError, err, machine, out);
  }
}
