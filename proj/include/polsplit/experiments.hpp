#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "polsplit/medium.hpp"
#include "polsplit/propagation.hpp"

namespace polsplit {

enum class FigureId { Fig2, Fig3, Fig4, Fig5a, Fig5b, Li7SignFlip };

std::string to_string(FigureId id);
FigureId figure_from_string(const std::string& name);  // throws std::invalid_argument
const std::vector<FigureId>& all_figures();

/// Deterministic dataset behind one reference scenario: named columns of
/// equal length plus the full parameter record needed to rebuild it.
struct FigureDataset {
    std::string figure_id;
    std::vector<std::string> column_names;
    std::vector<std::vector<double>> columns;
    nlohmann::json params_echo;
};

/// Knobs not covered by the simulation config. Defaults capture both
/// transparency windows (2B apart) of the default drive.
struct ReproduceOptions {
    double sweep_min = -20.0;        ///< pump/probe sweep range, units of gamma_big
    double sweep_max = 20.0;
    std::size_t sweep_points = 401;
    double chi_min = -25.0;          ///< susceptibility scan range
    double chi_max = 25.0;
    double chi_step = 0.01;
    std::size_t grid_points = std::size_t{1} << 14;
    double span_sigmas = 64.0;
    double tau_gamma_window = 10000.0;  ///< pulse datasets keep |tau * gamma| <= this
    double sigma = 2.0 * kPi * 4775.0;  ///< pulse spectral width, rad/s
    double amplitude = 1.0;
    double center_delta = 0.0;
};

FigureDataset reproduce(FigureId id, const AtomicMedium& medium,
                        const DriveConfig& drive,
                        const ReproduceOptions& options = {});

/// Rebuilds a dataset from a params_echo record; bit-for-bit identical to
/// the original.
FigureDataset reproduce_from_params(const nlohmann::json& params_echo);

/// Writes <path> as CSV (12 significant digits) and a sidecar parameter
/// record next to it with the .csv extension replaced by .params.json. Both
/// files are written to temporaries and renamed on success. I/O failures
/// surface as std::runtime_error carrying the path.
void write_dataset(const FigureDataset& dataset, const std::filesystem::path& csv_path);

}  // namespace polsplit
