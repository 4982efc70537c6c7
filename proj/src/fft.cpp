#include "mpde/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <tuple>
#include <vector>

namespace mpde::detail {

namespace {

// Plans are cached per (dim, N, sign) and created under a lock; execution
// uses the new-array interface, which is safe from multiple threads.
// FFTW_ESTIMATE keeps planning deterministic.
struct PlanCache {
    std::mutex mu;
    std::map<std::tuple<int, int, int>, fftw_plan> plans;

    fftw_plan get(int dim, int n, int sign) {
        std::scoped_lock lock(mu);
        auto key = std::make_tuple(dim, n, sign);
        auto it = plans.find(key);
        if (it != plans.end())
            return it->second;
        std::vector<int> dims(dim, n);
        std::size_t total = 1;
        for (int d = 0; d < dim; ++d)
            total *= static_cast<std::size_t>(n);
        fftw_complex* buf = fftw_alloc_complex(total);
        fftw_plan p = fftw_plan_dft(dim, dims.data(), buf, buf, sign,
                                    FFTW_ESTIMATE | FFTW_UNALIGNED);
        fftw_free(buf);
        plans.emplace(key, p);
        return p;
    }
};

PlanCache& cache() {
    static PlanCache c;
    return c;
}

}  // namespace

void dft_inplace(const Grid& grid, std::complex<double>* data, int sign) {
    fftw_plan p = cache().get(grid.dim(), grid.points(), sign);
    fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(data),
                     reinterpret_cast<fftw_complex*>(data));
}

}  // namespace mpde::detail
