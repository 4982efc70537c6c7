#pragma once

#include <complex>

#include "mpde/grid.hpp"

namespace mpde::detail {

// Unnormalized in-place DFT on an N^dim cube. sign = -1 forward, +1 backward.
void dft_inplace(const Grid& grid, std::complex<double>* data, int sign);

}  // namespace mpde::detail
