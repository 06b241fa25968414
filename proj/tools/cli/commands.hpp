#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "report.hpp"
#include "robinf/experiment.hpp"

namespace robinf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 1;
inline constexpr int kExitInternal = 2;

/// Both directions of the robust order with certificates. Labels name the
/// two experiments in the report.
VerdictReport compare_experiments(const Experiment& e, const Experiment& e_prime,
                                  const std::string& label_e, const std::string& label_e_prime);

VerdictReport cmd_compare(const std::filesystem::path& e, const std::filesystem::path& e_prime);

/// Garbling feasibility both ways under `convention`; the other convention is
/// run as well and any disagreement is noted.
VerdictReport garbling_experiments(const Experiment& e, const Experiment& e_prime,
                                   StochasticityConvention convention, const std::string& label_e,
                                   const std::string& label_e_prime);

VerdictReport cmd_garbling(const std::filesystem::path& e, const std::filesystem::path& e_prime,
                           StochasticityConvention convention);

VerdictReport cmd_identified_set(const std::filesystem::path& e, const std::filesystem::path& mu);

VerdictReport cmd_maxmin(const std::filesystem::path& e, const std::filesystem::path& problem);

/// Rebuilds the two-state example pair, checks every displayed quantity
/// exactly and throws InvariantViolation on any mismatch.
VerdictReport cmd_reproduce_example();

struct BatchOptions {
  ReportFormat format = ReportFormat::Table;
  std::uint64_t seed = 0;
  unsigned threads = 0;  // 0: hardware concurrency
};

/// Runs every line of a manifest (see README) and prints the reports in
/// manifest order. Returns the largest exit code of any entry.
int cmd_batch(const std::filesystem::path& manifest, const BatchOptions& options, std::ostream& out,
              std::ostream& err);

/// Exit code for the exception currently being handled: 1 for bad input,
/// 2 for everything else.
int exit_code_for_current_exception(std::ostream& err);

/// Full command line minus argv[0].
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace robinf::cli
