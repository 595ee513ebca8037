#pragma once

// Command-line front end, kept as a library so tests can drive it in-process.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bitwist/cfrac.hpp"

namespace bitwist::cli {

enum class Command {
  kInvariant,
  kRealize,
  kPresent,
  kHomology,
  kPeriod,
  kOrder,
  kSurgeryReduce,
  kTable,
  kVerify,
};

enum class Format { kText, kTsv, kJson };

/// Which cyclic presentation `order` enumerates.
enum class GroupSource { kCover, kFibonacci, kSieradski };

struct RunConfig {
  Command command = Command::kVerify;
  std::optional<MultiplierFunction> multipliers;
  std::optional<ProjectiveFraction> fraction;
  std::uint32_t n_first = 1;
  std::uint32_t n_last = 1;
  GroupSource group = GroupSource::kCover;
  Format format = Format::kText;
  std::size_t max_cosets = 100000;
  std::uint64_t max_period = 200;
  bool trace = false;
  bool timings = false;
  std::optional<std::string> output_path;
};

/// Process exit statuses.
namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kVerifyFailed = 1;
inline constexpr int kUsage = 2;
inline constexpr int kNotAKnot = 3;
inline constexpr int kNotExpandable = 4;
inline constexpr int kMalformedInput = 5;
inline constexpr int kDivisionUndefined = 6;
inline constexpr int kCosetsExceeded = 7;
inline constexpr int kInternal = 10;
}  // namespace exit_code

/// Malformed command line. exit_status is 0 for --help and --version.
class UsageError : public std::runtime_error {
 public:
  UsageError(const std::string& message, int exit_status)
      : std::runtime_error(message), exit_status_(exit_status) {}
  int exit_status() const { return exit_status_; }

 private:
  int exit_status_;
};

/// "l0,m0;l1,m1;..." Throws UsageError.
MultiplierFunction parse_multipliers(const std::string& text);

/// "5" or "1..10" into an inclusive range of positive integers.
std::pair<std::uint32_t, std::uint32_t> parse_n_range(const std::string& text);

/// args excludes the program name. Reads BITWIST_MAX_COSETS for the default
/// coset bound. Throws UsageError.
RunConfig parse_args(const std::vector<std::string>& args);

/// Writes the result to out (or config.output_path) and diagnostics to err.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args followed by run, with usage errors reported on err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bitwist::cli
