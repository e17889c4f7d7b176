#ifndef HARDY_COMMANDS_HPP
#define HARDY_COMMANDS_HPP

#include <optional>
#include <string>

#include "hardy/error.hpp"
#include "hardy/interp.hpp"
#include "hardy/io.hpp"
#include "hardy/verify.hpp"

namespace hardy::cmd {

enum ExitCode : int {
    exit_ok = 0,
    exit_verification_failed = 1,
    exit_input_error = 2,
    exit_infeasible = 3,
};

struct Result {
    int exit_code = exit_ok;
    io::Json output;
    /// One-line human-readable summary (errors, violated bounds, worst
    /// residuals).
    std::string message;
};

/// Exit code for a library error: input problems give 2, infeasible or
/// degenerate problems give 3.
int exit_code_for(ErrorCode code) noexcept;

/// Parts, Parseval report and reconstruction residual of f for the basis of
/// b. The series is analysed at its own length.
Result decompose(const std::string& series_json, const std::string& blaschke_json, const RunConfig& cfg);

struct InterpolateOptions {
    /// "direct" (minimal-norm parametrisation) or "schur" (norm-bounded
    /// solutions through a Schur function).
    std::string route = "direct";
    RowKind row = RowKind::orthonormal;
};

/// Routes by the problem's "kind". A linear-functional problem whose points
/// all coincide becomes a first-order derivative problem.
Result interpolate(const std::string& problem_json, const std::optional<std::string>& parameter_json,
                   const InterpolateOptions& opts, const RunConfig& cfg);

/// Central (or parametrised) tangential interpolant with its residual and
/// contractivity certificate.
Result np(const std::string& data_json, const std::optional<std::string>& parameter_json, const RunConfig& cfg);

/// Schur representation of H, plain or through the basis of b.
Result leech(const std::string& series_json, const std::optional<std::string>& blaschke_json,
             const RunConfig& cfg);

/// `suite` is cuntz, leech, dbr, interp or all.
Result verify(const std::string& suite, const RunConfig& cfg);

struct DbrOptions {
    int grid_points = 32;
    double grid_radius = 0.95;
};

/// Kernel identities for s (a Blaschke product or a polynomial; s = 0 when
/// absent) composed with b.
Result dbr_check(const std::string& blaschke_json, const std::optional<std::string>& schur_json,
                 const DbrOptions& opts, const RunConfig& cfg);

} // namespace hardy::cmd

#endif
