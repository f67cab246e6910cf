// `limla` command-line front end.
//
// Exit codes: 0 accept / ok, 1 reject / divergence, 2 usage, format or
// validation error, 3 step budget exceeded.

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "limla/fuzz.hpp"

namespace limla {

inline constexpr int kExitOk = 0;
inline constexpr int kExitReject = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

int cmd_check(const std::string& file, std::ostream& out, std::ostream& err);

struct RunArgs {
  std::string file;
  std::optional<std::string> input;
  std::optional<std::string> input_tokens;
  std::string engine = "linear";
  std::optional<std::string> trace_path;
  bool shadow = false;
  std::optional<std::uint64_t> max_steps;
};
int cmd_run(const RunArgs& args, std::ostream& out, std::ostream& err);

struct BenchArgs {
  std::string file;
  std::string gen = "unary";
  std::string lengths = "64,128,256,512";
  std::string engine = "both";
  std::optional<std::string> out_path;
};
int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err);

/// `64,128,256` or `64..512` (doubling).
std::vector<std::size_t> parse_lengths(const std::string& text);

int cmd_fuzz(const FuzzParams& params, std::ostream& out, std::ostream& err);

/// Machine files may also be given as `zoo:<id>`.
Automaton load_machine(const std::string& file);

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace limla
