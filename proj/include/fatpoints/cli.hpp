#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fatpoints/divisor_class.hpp"

namespace fatpoints {

/// Exit statuses of the command-line tool.
enum ExitStatus : int {
  kExitOk = 0,
  kExitInputError = 1,
  kExitInternalError = 2,
};

struct SweepRow {
  DivisorClass f;
  int t = 0;
  int lambda = 0;
  int ker = 0;
  int cok = 0;
  bool maximal_rank = true;
  bool exception = false;
  bool predicted_failure = false;
  bool fast_path_agrees = true;
};

struct SweepReport {
  std::vector<SweepRow> rows;
  int failures = 0;
  int exceptions = 0;
  int max_deficiency = 0;  // max of cok - lambda
  int fast_path_mismatches = 0;
  int prediction_mismatches = 0;
};

/// Classifies every sorted nef class at r = 7 with degree <= max_degree.
SweepReport sweep(int max_degree);

/// Runs one invocation. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

/// Splits a batch line on whitespace, honoring double quotes.
std::vector<std::string> split_command_line(const std::string& line);

}  // namespace fatpoints
