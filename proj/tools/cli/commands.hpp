#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "subsum/generate.hpp"

namespace subsum::cli {

/// Exit codes: 0 success, 1 input error, 2 solver inapplicable.
enum ExitCode : int { ok = 0, input_error = 1, inapplicable = 2 };

struct SolveFlags {
  bool emit_tables = false;
  bool emit_solution = false;
};

int cmd_solve(std::string_view text, const SolveFlags& flags, std::ostream& out,
              std::ostream& err);
int cmd_oracle(std::string_view text, std::ostream& out, std::ostream& err);
/// `set` is a comma-separated id list; empty means the empty set.
int cmd_check(std::string_view text, std::string_view set, std::ostream& out, std::ostream& err);
int cmd_gen(const GenOptions& options, std::ostream& out, std::ostream& err);
int cmd_export_ip(std::string_view text, std::ostream& out, std::ostream& err);
int cmd_decompose(std::string_view text, std::ostream& out, std::ostream& err);

/// Full command-line entry point (argument parsing included).
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace subsum::cli
