#include "warplab/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <tuple>
#include <vector>

namespace warplab::fft {

namespace {

struct PlanKey {
    int rank;
    int n0;
    int n1;
    int sign;
    bool operator<(const PlanKey& o) const {
        return std::tie(rank, n0, n1, sign) < std::tie(o.rank, o.n0, o.n1, o.sign);
    }
};

// fftw planning is not thread-safe; fftw_execute_dft on distinct buffers is.
std::mutex plan_mutex;
std::map<PlanKey, fftw_plan>& plan_cache() {
    static std::map<PlanKey, fftw_plan> cache;
    return cache;
}

fftw_plan get_plan(int rank, int n0, int n1, int sign) {
    const PlanKey key{rank, n0, n1, sign};
    std::lock_guard<std::mutex> lock(plan_mutex);
    auto& cache = plan_cache();
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    // Plan on a scratch buffer; FFTW_UNALIGNED makes the plan valid for any
    // correctly-sized array passed to fftw_execute_dft later.
    std::vector<cd> scratch(static_cast<std::size_t>(n0) * (rank == 2 ? n1 : 1));
    auto* ptr = reinterpret_cast<fftw_complex*>(scratch.data());
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    fftw_plan plan = rank == 1 ? fftw_plan_dft_1d(n0, ptr, ptr, sign, flags)
                               : fftw_plan_dft_2d(n0, n1, ptr, ptr, sign, flags);
    cache.emplace(key, plan);
    return plan;
}

void execute(int rank, int n0, int n1, int sign, cd* data) {
    fftw_plan plan = get_plan(rank, n0, n1, sign);
    auto* ptr = reinterpret_cast<fftw_complex*>(data);
    fftw_execute_dft(plan, ptr, ptr);
}

}  // namespace

void forward_1d(cd* data, int n) { execute(1, n, 1, FFTW_FORWARD, data); }
void inverse_1d(cd* data, int n) { execute(1, n, 1, FFTW_BACKWARD, data); }
void forward_2d(cd* data, int n0, int n1) { execute(2, n0, n1, FFTW_FORWARD, data); }
void inverse_2d(cd* data, int n0, int n1) { execute(2, n0, n1, FFTW_BACKWARD, data); }

}  // namespace warplab::fft
