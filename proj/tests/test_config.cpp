#include <doctest.h>

#include <cmath>

#include <json.hpp>

#include "polsplit/config.hpp"

using namespace polsplit;
using nlohmann::json;

TEST_CASE("defaults reproduce the stock sodium setup") {
    const SimulationConfig cfg;
    const AtomicMedium from_cfg = cfg.medium();
    const AtomicMedium stock = default_sodium_medium();
    CHECK(from_cfg.alpha == stock.alpha);
    CHECK(from_cfg.gamma_big == stock.gamma_big);
    CHECK(from_cfg.carrier_omega == stock.carrier_omega);
    const DriveConfig d = cfg.drive();
    CHECK(d.g_rabi == 0.15);
    CHECK(d.b_zeeman == 10.0);
}

TEST_CASE("alpha is calibrated when omitted and honored when given") {
    SimulationConfig cfg;
    CHECK(cfg.resolved_alpha() == doctest::Approx(2.721416533766432e-4).epsilon(1e-12));
    cfg.alpha = 1.5e-4;
    CHECK(cfg.medium().alpha == 1.5e-4);
}

TEST_CASE("omitted alpha needs a usable control field") {
    SimulationConfig cfg;
    cfg.g_over_gamma = 0.0;
    CHECK_THROWS_AS(cfg.medium(), ConfigError);
}

TEST_CASE("schema rejects unknown keys and bad types") {
    CHECK_THROWS_AS(SimulationConfig::from_json(json{{"lenght_cm", 1.0}}), ConfigError);
    CHECK_THROWS_AS(SimulationConfig::from_json(json{{"length_cm", "one"}}), ConfigError);
    CHECK_THROWS_AS(SimulationConfig::from_json(json::array()), ConfigError);
}

TEST_CASE("schema round trip") {
    json j{{"gamma_big_per_s", 3.1e7},
           {"lambda_angstrom", 5890.0},
           {"number_density_per_cm3", 2.2e11},
           {"length_cm", 2.0},
           {"alpha", 3.0e-4},
           {"G_over_gamma", 0.2},
           {"Delta_over_gamma", 1.0},
           {"B_over_gamma", -10.0},
           {"gamma12_over_gamma", 1e-3},
           {"gamma23_over_gamma", 2e-3}};
    const SimulationConfig cfg = SimulationConfig::from_json(j);
    CHECK(cfg.to_json() == j);
    const AtomicMedium m = cfg.medium();
    CHECK(m.length == 2.0);
    CHECK(m.gamma_12 == 1e-3);
    CHECK(cfg.drive().b_zeeman == -10.0);
}

TEST_CASE("partial configs inherit defaults") {
    const SimulationConfig cfg = SimulationConfig::from_json(json{{"B_over_gamma", 3.0}});
    CHECK(cfg.b_over_gamma == 3.0);
    CHECK(cfg.g_over_gamma == 0.15);
    CHECK(cfg.length_cm == 1.0);
}

TEST_CASE("missing config files are reported") {
    CHECK_THROWS_AS(load_config("/nonexistent/polsplit.json"), ConfigError);
}
