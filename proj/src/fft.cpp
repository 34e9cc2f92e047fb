#include "polsplit/fft.hpp"

#include <mutex>
#include <stdexcept>

#include <fftw3.h>

namespace polsplit::fft {

namespace {

// FFTW plan creation is not thread safe; execution is.
std::mutex planner_mutex;

void run(std::vector<std::complex<double>>& data, int sign) {
    if (data.empty()) throw std::invalid_argument("fft: empty input");
    auto* buf = reinterpret_cast<fftw_complex*>(data.data());
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(planner_mutex);
        plan = fftw_plan_dft_1d(static_cast<int>(data.size()), buf, buf, sign,
                                FFTW_ESTIMATE);
    }
    if (!plan) throw std::runtime_error("fft: planner failed");
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(planner_mutex);
        fftw_destroy_plan(plan);
    }
}

}  // namespace

void forward(std::vector<std::complex<double>>& data) { run(data, FFTW_FORWARD); }

void inverse(std::vector<std::complex<double>>& data) { run(data, FFTW_BACKWARD); }

}  // namespace polsplit::fft
