#pragma once

#include <iosfwd>

#include "cremona/io.hpp"

namespace cremona::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kSuccess = 0,
  kInputError = 1,
  kInvariantFailure = 2,
};

// Each command writes CSV to `out` and returns an ExitCode. Parse failures
// are reported on `err`.
int halphen_table(int n_max, std::ostream& out, std::ostream& err);
int flat_growth(int k_max, std::ostream& out, std::ostream& err);
int delta(std::istream& metric_csv, std::ostream& out, std::ostream& err);
int length(std::istream& config, std::ostream& out, std::ostream& err);
int classify(std::istream& config, std::ostream& out, std::ostream& err);
int in_e(std::istream& config, std::ostream& out, std::ostream& err);
int cells(std::istream& config, std::ostream& out, std::ostream& err);

}  // namespace cremona::cli
