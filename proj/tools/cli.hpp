// Copyright 2026 The hexstar Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hexstar::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kNumerical = 3,
  kIo = 4,
};

struct RunConfig {
  std::string command;
  double alpha = 6.0;
  double jz_over_j = 1.0;
  std::string state = "xi";
  /// Empty means "all".
  std::optional<int> sector;
  double t_max = 1.0;
  int t_steps = 2001;
  double tol_deg = 1e-8;
  double tol_support = 1e-10;
  std::string output;
  std::string format = "csv";
  double jz_min = -3.0;
  double jz_max = 3.0;
  int jz_points = 121;

  /// Throws UsageError for inconsistent values.
  void validate() const;
  /// One-line rendering written as the first comment of every CSV.
  std::string describe() const;
};

/// Executes a validated config. Results go to config.output (atomically) or
/// to `out`; diagnostics go to `err`. Library exceptions propagate.
void run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv, runs, and maps failures to exit codes with a one-line
/// diagnostic on `err`.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hexstar::cli
