#include "mpde/random_field.hpp"

#include <random>

#include "mpde/norms.hpp"

namespace mpde {

Field random_band_limited(const Grid& grid, std::uint64_t seed, int band, double l2_norm) {
    if (band < 0 || band >= grid.points() / 2)
        throw std::invalid_argument("random_band_limited: band out of range");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<cplx> v(grid.size(), cplx(0.0, 0.0));
    // Fixed index order keeps the draw sequence reproducible.
    for (std::size_t i = 0; i < v.size(); ++i) {
        auto idx = grid.unflatten(i);
        bool in_band = true;
        for (int d = 0; d < grid.dim(); ++d)
            if (std::abs(grid.freq_index(idx[d])) > band)
                in_band = false;
        if (!in_band)
            continue;
        double re = gauss(rng);
        double im = gauss(rng);
        v[i] = cplx(re, im);
    }
    Field f(grid, Rep::fourier, std::move(v));
    double cur = lp_norm(f, 2.0);
    if (cur == 0.0)
        return f;
    return cplx(l2_norm / cur, 0.0) * f;
}

}  // namespace mpde
