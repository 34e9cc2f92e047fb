#include <doctest.h>

#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "polsplit/config.hpp"
#include "polsplit/experiments.hpp"

using namespace polsplit;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("polsplit_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    static int& counter() {
        static int c = 0;
        return c;
    }
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::vector<double>> parse_csv(const std::string& text,
                                           std::vector<std::string>* header = nullptr) {
    std::istringstream in(text);
    std::string line;
    REQUIRE(std::getline(in, line));
    std::vector<std::string> names;
    {
        std::istringstream h(line);
        std::string cell;
        while (std::getline(h, cell, ',')) names.push_back(cell);
    }
    if (header) *header = names;
    std::vector<std::vector<double>> cols(names.size());
    while (std::getline(in, line)) {
        std::istringstream row(line);
        std::string cell;
        std::size_t c = 0;
        while (std::getline(row, cell, ',')) cols.at(c++).push_back(std::stod(cell));
        REQUIRE(c == cols.size());
    }
    return cols;
}

std::size_t index_of(const std::vector<std::string>& names, const std::string& want) {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == want) return i;
    REQUIRE(false);
    return 0;
}

}  // namespace

TEST_CASE("figure ids round trip through their names") {
    for (FigureId id : all_figures()) CHECK(figure_from_string(to_string(id)) == id);
    CHECK_THROWS_AS(figure_from_string("fig9"), std::invalid_argument);
    CHECK(all_figures().size() == 6);
}

TEST_CASE("susceptibility scan dataset") {
    const FigureDataset ds =
        reproduce(FigureId::Fig2, default_sodium_medium(), default_drive());
    REQUIRE(ds.column_names.size() == 5);
    REQUIRE(ds.columns.size() == 5);
    const auto& delta = ds.columns[0];
    REQUIRE(delta.size() == 5001);
    const std::size_t mid = 2500;
    CHECK(delta[mid] == 0.0);
    // transparency point of the near component
    CHECK(ds.columns[4][mid] == 0.0);
    // residual absorption of the far component
    CHECK(ds.columns[2][mid] == doctest::Approx(3.3936682734673583e-7).epsilon(1e-9));
    CHECK(ds.figure_id == "fig2");
}

TEST_CASE("pump sweep dataset keeps the slow index constant") {
    const FigureDataset ds =
        reproduce(FigureId::Fig3, default_sodium_medium(), default_drive());
    const auto& ng_minus = ds.columns[2];
    REQUIRE(ng_minus.size() == 401);
    double lo = ng_minus.front(), hi = lo;
    for (double v : ng_minus) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    CHECK((hi - lo) / hi < 1e-3);
}

TEST_CASE("probe sweep dataset has the splitting extremum at the window") {
    const AtomicMedium m = default_sodium_medium();
    const FigureDataset ds = reproduce(FigureId::Fig4, m, default_drive());
    const auto& delta = ds.columns[0];
    const auto& gamma_sep = ds.columns[1];
    const auto& sep = ds.columns[2];
    std::size_t jmin = 0;
    for (std::size_t j = 0; j < sep.size(); ++j)
        if (sep[j] < sep[jmin]) jmin = j;
    CHECK(delta[jmin] == 0.0);
    CHECK(sep[jmin] == doctest::Approx(-1.3074979058450711e-4).epsilon(1e-8));
    CHECK(sep[jmin] * 1e6 == doctest::Approx(-130.75).epsilon(3.0 / 130.0));
    CHECK(gamma_sep[jmin] == doctest::Approx(sep[jmin] * m.gamma_big).epsilon(1e-12));
}

TEST_CASE("input pulse dataset") {
    const FigureDataset ds =
        reproduce(FigureId::Fig5a, default_sodium_medium(), default_drive());
    REQUIRE(ds.column_names.size() == 2);
    const auto& tau_gamma = ds.columns[0];
    const auto& intensity = ds.columns[1];
    REQUIRE(!intensity.empty());
    std::size_t jmax = 0;
    for (std::size_t j = 0; j < intensity.size(); ++j)
        if (intensity[j] > intensity[jmax]) jmax = j;
    CHECK(tau_gamma[jmax] == 0.0);
    CHECK(intensity[jmax] == 1.0);
    for (double tg : tau_gamma) CHECK(std::abs(tg) <= 10000.0);
}

TEST_CASE("output pulse dataset splits the components") {
    const FigureDataset ds =
        reproduce(FigureId::Fig5b, default_sodium_medium(), default_drive());
    REQUIRE(ds.column_names.size() == 3);
    const auto& tau_gamma = ds.columns[0];
    const auto& plus = ds.columns[1];
    const auto& minus = ds.columns[2];
    std::size_t jp = 0, jm = 0;
    for (std::size_t j = 0; j < plus.size(); ++j) {
        if (plus[j] > plus[jp]) jp = j;
        if (minus[j] > minus[jm]) jm = j;
    }
    // slow component exits later and keeps most of its peak
    CHECK(tau_gamma[jm] > tau_gamma[jp]);
    CHECK(tau_gamma[jm] == doctest::Approx(4044.0).epsilon(0.05));
    CHECK(minus[jm] == doctest::Approx(0.8559).epsilon(0.01));
    CHECK(plus[jp] == doctest::Approx(0.6345).epsilon(0.01));
}

TEST_CASE("flipped-field dataset reverses the exit order") {
    const FigureDataset ds =
        reproduce(FigureId::Li7SignFlip, default_sodium_medium(), default_drive());
    const auto& tau_gamma = ds.columns[0];
    const auto& plus = ds.columns[1];
    const auto& minus = ds.columns[2];
    std::size_t jp = 0, jm = 0;
    for (std::size_t j = 0; j < plus.size(); ++j) {
        if (plus[j] > plus[jp]) jp = j;
        if (minus[j] > minus[jm]) jm = j;
    }
    CHECK(tau_gamma[jm] < tau_gamma[jp]);
    // the echoed configuration keeps the unflipped field
    CHECK(ds.params_echo.at("config").at("B_over_gamma").get<double>() == 10.0);
}

TEST_CASE("datasets rebuild bit for bit from their parameter echo") {
    for (FigureId id : {FigureId::Fig4, FigureId::Fig5b, FigureId::Li7SignFlip}) {
        ReproduceOptions opts;
        opts.sweep_points = 41;
        opts.grid_points = 1024;
        const FigureDataset ds =
            reproduce(id, default_sodium_medium(), default_drive(), opts);
        const FigureDataset again = reproduce_from_params(ds.params_echo);
        REQUIRE(again.columns.size() == ds.columns.size());
        for (std::size_t c = 0; c < ds.columns.size(); ++c) {
            REQUIRE(again.columns[c].size() == ds.columns[c].size());
            for (std::size_t j = 0; j < ds.columns[c].size(); ++j)
                CHECK(again.columns[c][j] == ds.columns[c][j]);
        }
    }
}

TEST_CASE("parameter echo round trips through the config schema") {
    const FigureDataset ds =
        reproduce(FigureId::Fig2, default_sodium_medium(), default_drive());
    const SimulationConfig cfg = SimulationConfig::from_json(ds.params_echo.at("config"));
    CHECK(cfg.to_json() == ds.params_echo.at("config"));
}

TEST_CASE("dataset files") {
    TempDir dir;
    ReproduceOptions opts;
    opts.grid_points = 1024;
    const FigureDataset ds =
        reproduce(FigureId::Fig5b, default_sodium_medium(), default_drive(), opts);
    const fs::path csv = dir.path / "fig5b.csv";
    write_dataset(ds, csv);

    SUBCASE("CSV has the three-column schema") {
        std::vector<std::string> header;
        const auto cols = parse_csv(slurp(csv), &header);
        REQUIRE(header.size() == 3);
        CHECK(header[0] == "tau_gamma");
        CHECK(header[1] == "intensity_plus");
        CHECK(header[2] == "intensity_minus");
        for (std::size_t c = 0; c < cols.size(); ++c) {
            REQUIRE(cols[c].size() == ds.columns[c].size());
            for (std::size_t j = 0; j < cols[c].size(); ++j)
                CHECK(cols[c][j] ==
                      doctest::Approx(ds.columns[c][j]).epsilon(1e-11));
        }
    }

    SUBCASE("sidecar parameters parse back") {
        const fs::path params = dir.path / "fig5b.params.json";
        REQUIRE(fs::exists(params));
        const auto echoed = nlohmann::json::parse(slurp(params));
        CHECK(echoed == ds.params_echo);
    }

    SUBCASE("rewriting is byte identical") {
        const std::string first = slurp(csv);
        write_dataset(ds, csv);
        CHECK(slurp(csv) == first);
        const FigureDataset again =
            reproduce(FigureId::Fig5b, default_sodium_medium(), default_drive(), opts);
        write_dataset(again, csv);
        CHECK(slurp(csv) == first);
    }

    SUBCASE("unwritable paths carry the path in the error") {
        const fs::path bad = dir.path / "missing_dir_that_is_a_file";
        std::ofstream(bad).put('x');
        bool threw = false;
        try {
            write_dataset(ds, bad / "fig5b.csv");
        } catch (const std::runtime_error& e) {
            threw = true;
            CHECK(std::string(e.what()).find("missing_dir_that_is_a_file") !=
                  std::string::npos);
        }
        CHECK(threw);
    }
}

TEST_CASE("malformed datasets are rejected") {
    FigureDataset ds;
    ds.figure_id = "fig2";
    ds.column_names = {"a", "b"};
    ds.columns = {{1.0, 2.0}, {1.0}};
    TempDir dir;
    CHECK_THROWS_AS(write_dataset(ds, dir.path / "x.csv"), std::invalid_argument);
}
