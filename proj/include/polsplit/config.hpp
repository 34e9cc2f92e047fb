#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "polsplit/medium.hpp"

namespace polsplit {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Flat view of the JSON configuration schema. When `alpha` is omitted it is
/// calibrated so that the near-resonant component's transparency-point group
/// index equals kSodiumGroupIndexTarget under the configured G.
struct SimulationConfig {
    double gamma_big_per_s = 3.1e7;
    double lambda_angstrom = 5890.0;
    double number_density_per_cm3 = 2.2e11;
    double length_cm = 1.0;
    std::optional<double> alpha;
    double g_over_gamma = 0.15;
    double delta_over_gamma = 0.0;
    double b_over_gamma = 10.0;
    double gamma12_over_gamma = 0.0;
    double gamma23_over_gamma = 0.0;

    /// Rejects unknown keys and non-numeric values with ConfigError.
    static SimulationConfig from_json(const nlohmann::json& j);

    /// Emits every key of the schema; alpha is materialized (calibrated if
    /// it was absent) so the result pins the medium exactly.
    nlohmann::json to_json() const;

    AtomicMedium medium() const;
    DriveConfig drive() const;

    /// The alpha actually in effect (field value or calibration result).
    double resolved_alpha() const;

  private:
    AtomicMedium medium_without_alpha() const;
};

SimulationConfig load_config(const std::string& path);

}  // namespace polsplit
