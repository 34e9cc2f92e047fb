#include "polsplit/config.hpp"

#include <fstream>
#include <set>

#include <json.hpp>

namespace polsplit {

using nlohmann::json;

namespace {

const std::set<std::string>& schema_keys() {
    static const std::set<std::string> keys = {
        "gamma_big_per_s",   "lambda_angstrom", "number_density_per_cm3",
        "length_cm",         "alpha",           "G_over_gamma",
        "Delta_over_gamma",  "B_over_gamma",    "gamma12_over_gamma",
        "gamma23_over_gamma"};
    return keys;
}

double number_at(const json& j, const std::string& key, double fallback) {
    if (!j.contains(key)) return fallback;
    const json& v = j.at(key);
    if (!v.is_number()) throw ConfigError("config key '" + key + "' must be a number");
    return v.get<double>();
}

}  // namespace

SimulationConfig SimulationConfig::from_json(const json& j) {
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    for (const auto& item : j.items())
        if (schema_keys().count(item.key()) == 0)
            throw ConfigError("unknown config key '" + item.key() + "'");
    SimulationConfig c;
    c.gamma_big_per_s = number_at(j, "gamma_big_per_s", c.gamma_big_per_s);
    c.lambda_angstrom = number_at(j, "lambda_angstrom", c.lambda_angstrom);
    c.number_density_per_cm3 =
        number_at(j, "number_density_per_cm3", c.number_density_per_cm3);
    c.length_cm = number_at(j, "length_cm", c.length_cm);
    if (j.contains("alpha")) c.alpha = number_at(j, "alpha", 0.0);
    c.g_over_gamma = number_at(j, "G_over_gamma", c.g_over_gamma);
    c.delta_over_gamma = number_at(j, "Delta_over_gamma", c.delta_over_gamma);
    c.b_over_gamma = number_at(j, "B_over_gamma", c.b_over_gamma);
    c.gamma12_over_gamma = number_at(j, "gamma12_over_gamma", c.gamma12_over_gamma);
    c.gamma23_over_gamma = number_at(j, "gamma23_over_gamma", c.gamma23_over_gamma);
    return c;
}

DriveConfig SimulationConfig::drive() const {
    DriveConfig d{g_over_gamma, delta_over_gamma, b_over_gamma};
    validate(d);
    return d;
}

double SimulationConfig::resolved_alpha() const {
    if (alpha) return *alpha;
    AtomicMedium probe = medium_without_alpha();
    return calibrate_alpha(kSodiumGroupIndexTarget, drive(), probe);
}

AtomicMedium SimulationConfig::medium() const {
    AtomicMedium m = medium_without_alpha();
    try {
        m.alpha = resolved_alpha();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("cannot calibrate alpha: ") + e.what() +
                          " (set 'alpha' explicitly or give G_over_gamma > 0)");
    }
    try {
        validate(m);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    return m;
}

AtomicMedium SimulationConfig::medium_without_alpha() const {
    AtomicMedium m;
    m.gamma_big = gamma_big_per_s;
    m.lambda = lambda_angstrom * 1e-8;
    m.carrier_omega =
        m.lambda > 0.0 ? 2.0 * kPi * kSpeedOfLight / m.lambda : 0.0;
    m.number_density = number_density_per_cm3;
    m.length = length_cm;
    m.gamma_12 = gamma12_over_gamma;
    m.gamma_23 = gamma23_over_gamma;
    return m;
}

json SimulationConfig::to_json() const {
    json j;
    j["gamma_big_per_s"] = gamma_big_per_s;
    j["lambda_angstrom"] = lambda_angstrom;
    j["number_density_per_cm3"] = number_density_per_cm3;
    j["length_cm"] = length_cm;
    j["alpha"] = resolved_alpha();
    j["G_over_gamma"] = g_over_gamma;
    j["Delta_over_gamma"] = delta_over_gamma;
    j["B_over_gamma"] = b_over_gamma;
    j["gamma12_over_gamma"] = gamma12_over_gamma;
    j["gamma23_over_gamma"] = gamma23_over_gamma;
    return j;
}

SimulationConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigError("cannot parse config file '" + path + "': " + e.what());
    }
    return SimulationConfig::from_json(j);
}

}  // namespace polsplit
