#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace mockgauss {

inline const std::vector<std::string> kSubcommands = {"sample",        "density-check", "cumulants",
                                                      "mu",            "trace-moments", "mock-gauss",
                                                      "variance-deviation", "verify-counting"};

struct CliInvocation {
    std::string subcommand;
    std::optional<std::string> config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> samples;
    std::optional<std::string> output;
    std::optional<std::string> format;
    bool serial = false;
};

/// Runs a parsed invocation. The report goes to the output file when one is
/// set (else to `out`); the one-line verdicts go to `out` when writing a file
/// and to `err` otherwise. Returns 0 iff every pass flag is true.
int execute(const CliInvocation& invocation, std::ostream& out, std::ostream& err);

/// Parses argv and executes. Usage and config errors give a nonzero status.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mockgauss
