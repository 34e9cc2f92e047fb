#pragma once

#include <complex>
#include <vector>

namespace polsplit::fft {

/// In-place unnormalized DFT, sum_k x_k exp(-2 pi i j k / n).
void forward(std::vector<std::complex<double>>& data);

/// In-place unnormalized DFT, sum_k x_k exp(+2 pi i j k / n).
void inverse(std::vector<std::complex<double>>& data);

}  // namespace polsplit::fft
