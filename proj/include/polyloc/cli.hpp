#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "polyloc/io.hpp"

namespace polyloc::cli {

enum ExitStatus : int {
    kPass = 0,
    kViolation = 1,
    kUsage = 2,
    kSolverFailure = 3,
};

enum class OutputFormat { JsonReport, CsvModuli, Polynomial };

std::optional<OutputFormat> parse_format(const std::string& name);
std::string format_name(OutputFormat f);

struct RunConfig {
    /// One of: "eig", "bounds cauchy", "verify ds", "verify schur",
    /// "verify unit-circle", "extremal inf", "extremal sup",
    /// "extremal schur-sup", "counterexample", "example mass-spring",
    /// "sweep ds", "sweep schur".
    std::string command;
    std::string input;
    std::optional<int> n;
    std::optional<int> m;
    std::optional<double> r;
    std::optional<int> k;
    std::optional<int> trials;
    std::uint64_t seed = 0;
    std::optional<double> tol;
    std::string output;
    OutputFormat format = OutputFormat::JsonReport;
    bool timing = false;
};

struct RunResult {
    int status = kPass;
    /// Report (or polynomial) text; empty when the run failed before a
    /// report could be produced.
    std::string document;
    /// Diagnostic for stderr; empty on success.
    std::string message;
};

/// Executes one command. Never throws for library errors; they are mapped
/// onto exit statuses.
RunResult run(const RunConfig& config);

/// Report rendered as the flat moduli CSV.
std::string moduli_csv(const Json& report);

}  // namespace polyloc::cli
