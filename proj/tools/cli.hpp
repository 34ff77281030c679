#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fracmem::cli {

enum class Command { kernel, coeffs, difference, simulate, spectrum, response, estimate, acf };

/// Exit statuses of the command-line tool.
enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 1,        ///< bad flags or parameter out of range
    exit_input = 2,        ///< input file missing or malformed
    exit_consistency = 3,  ///< numeric cross-check failed
};

struct Parameters {
    std::optional<double> order;
    std::optional<std::size_t> truncation;  ///< also the exact-kernel half-width
    std::string family = "gl";
    std::optional<double> d;
    std::optional<std::size_t> n;
    std::uint64_t seed = 0;
    double sigma = 1.0;
    std::optional<std::size_t> bandwidth;
    std::string boundary = "zero";
    std::size_t grid = 256;
    std::size_t burn_in = 0;
    std::optional<std::size_t> max_lag;
    std::vector<double> ar;
    std::vector<double> ma;
};

struct RunConfig {
    Command command = Command::kernel;
    std::optional<std::string> input_path;  ///< "-" or unset reads standard input
    std::string output_path = "-";          ///< "-" writes standard output
    Parameters params;
};

/// Raised for invalid flags or parameter values; message names the parameter.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Default truncation for a series of length n: min(n, 4096).
[[nodiscard]] std::size_t default_truncation(std::size_t n);

/**
 * @brief Parse argv into a RunConfig.
 *
 * Returns std::nullopt after printing help (exit status 0 expected).
 * @throws UsageError on unknown flags, missing required flags, or bad values.
 */
[[nodiscard]] std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& help_out);

/**
 * @brief Check every parameter the command uses against its preconditions.
 * @throws UsageError naming the offending parameter and bound.
 */
void validate(const RunConfig& config);

/**
 * @brief Execute one command. Data goes to the output target only after the
 *        whole result is computed; diagnostics go to `err` as a single line.
 */
[[nodiscard]] int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

/// parse_args + run, for main().
[[nodiscard]] int main_entry(int argc, const char* const* argv, std::istream& in, std::ostream& out,
                             std::ostream& err);

}  // namespace fracmem::cli
