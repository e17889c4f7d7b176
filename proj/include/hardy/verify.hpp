#ifndef HARDY_VERIFY_HPP
#define HARDY_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace hardy {

struct RunConfig {
    std::size_t truncation = 256;
    double tol = 1e-8;
    /// Boundary samples for contractivity certificates.
    int samples = 512;
    /// Radius of the certification circle.
    double radius = 0.999;
    std::uint64_t seed = 0;

    /// Throws invalid_argument unless N >= 16, 0 < radius < 1, tol > 0 and
    /// samples >= 8.
    void validate() const;

    /// Battery thresholds are written for tol = 1e-8 and scale linearly.
    double scale() const noexcept { return tol / 1e-8; }
};

struct Check {
    std::string name;
    double value = 0.0;
    double threshold = 0.0;
    bool passed = false;
    /// Set when the check could not be evaluated.
    std::string error;
};

struct BatteryReport {
    std::string suite;
    std::vector<Check> checks;

    bool passed() const;
    /// The failing check with the largest value / threshold ratio, or the
    /// worst passing one when everything passed.
    const Check* worst() const;
};

/// Battery names in the order `all` runs them.
const std::vector<std::string>& battery_names();

/// Runs one battery: cuntz, leech, dbr or interp. Deterministic for a given
/// configuration.
BatteryReport run_battery(const std::string& suite, const RunConfig& cfg);

/// `all` or a single battery name.
std::vector<BatteryReport> run_verify(const std::string& selector, const RunConfig& cfg);

} // namespace hardy

#endif
