#pragma once

#include <cstdint>

#include "mpde/field.hpp"

namespace mpde {

/// Seeded band-limited trigonometric polynomial: complex Gaussian Fourier
/// coefficients on modes with |m|_inf <= band, scaled to the requested L^2
/// norm. Deterministic given (grid, seed, band).
Field random_band_limited(const Grid& grid, std::uint64_t seed, int band, double l2_norm);

}  // namespace mpde
