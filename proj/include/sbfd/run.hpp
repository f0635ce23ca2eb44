// SPDX-License-Identifier: Apache-2.0

#ifndef SBFD_RUN_HPP
#define SBFD_RUN_HPP

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "sbfd/config.hpp"

namespace sbfd
{

struct RunOptions
{
  std::filesystem::path output = ".";
  int threads = 1;
  bool serial = false;  // one frequency at a time; `threads` then go to each solve
  bool verbose = false;
};

struct RunSummary
{
  std::vector<FrequencyResult> results;  // frequency order of the config; fields dropped
  std::vector<std::pair<double, std::vector<ConvergenceRow>>> convergence;
  std::vector<std::filesystem::path> files;
  double seconds = 0.0;
};

// Process exit codes of the command-line driver.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;
inline constexpr int kExitIo = 4;

// Solves every configured frequency (or runs the convergence study), writes the CSV
// artifacts and summary.txt under `options.output` and prints the summary to `log`.
// Numerical errors are rethrown as Error prefixed with the frequency.
RunSummary run(const RunConfig &config, const RunOptions &options, std::ostream &log);

// Runs the command line `args` (without the program name) and returns the exit code.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

// File-name stem for a frequency, e.g. "15Hz" or "12.5Hz".
std::string frequency_tag(double frequency);

}  // namespace sbfd

#endif  // SBFD_RUN_HPP
