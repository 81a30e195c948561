#include "warplab/grid.hpp"

#include <cmath>
#include <string>

#include "warplab/errors.hpp"

namespace warplab {

namespace {

void check_axis(double L, int M) {
    if (L <= 0.0) throw ValidationError("torus grid: circumference must be positive, got " + std::to_string(L));
    if (M < 4 || M % 2 != 0)
        throw ValidationError("torus grid: modes per axis must be even and >= 4, got " + std::to_string(M));
}

}  // namespace

TorusGrid TorusGrid::line(double L, int M) {
    check_axis(L, M);
    TorusGrid g;
    g.dim = 1;
    g.length = {L, 0.0};
    g.modes = {M, 1};
    return g;
}

TorusGrid TorusGrid::plane(double Lx, int Mx, double Ly, int My) {
    check_axis(Lx, Mx);
    check_axis(Ly, My);
    TorusGrid g;
    g.dim = 2;
    g.length = {Lx, Ly};
    g.modes = {Mx, My};
    return g;
}

TorusGrid TorusGrid::square(int M) {
    const double two_pi = 2.0 * M_PI;
    return plane(two_pi, M, two_pi, M);
}

std::size_t TorusGrid::point_count() const {
    std::size_t n = static_cast<std::size_t>(modes[0]);
    if (dim == 2) n *= static_cast<std::size_t>(modes[1]);
    return n;
}

double TorusGrid::cell_weight() const {
    double w = length[0] / modes[0];
    if (dim == 2) w *= length[1] / modes[1];
    return w;
}

double TorusGrid::volume() const {
    double v = length[0];
    if (dim == 2) v *= length[1];
    return v;
}

bool TorusGrid::mode_in_range(const std::array<int, 2>& k) const {
    for (int j = 0; j < dim; ++j)
        if (k[j] < -modes[j] / 2 || k[j] >= modes[j] / 2) return false;
    return true;
}

std::size_t TorusGrid::storage_index(const std::array<int, 2>& k) const {
    const int i0 = k[0] >= 0 ? k[0] : k[0] + modes[0];
    if (dim == 1) return static_cast<std::size_t>(i0);
    const int i1 = k[1] >= 0 ? k[1] : k[1] + modes[1];
    return static_cast<std::size_t>(i0) * modes[1] + i1;
}

std::array<int, 2> TorusGrid::mode_at(std::size_t idx) const {
    auto unfold = [](int i, int M) { return i < M / 2 ? i : i - M; };
    if (dim == 1) return {unfold(static_cast<int>(idx), modes[0]), 0};
    const int i0 = static_cast<int>(idx) / modes[1];
    const int i1 = static_cast<int>(idx) % modes[1];
    return {unfold(i0, modes[0]), unfold(i1, modes[1])};
}

double TorusGrid::dual_frequency(int axis, int k) const {
    return 2.0 * M_PI * static_cast<double>(k) / length[axis];
}

double laplacian_symbol(const std::array<int, 2>& k, const TorusGrid& grid) {
    if (!grid.mode_in_range(k))
        throw ValidationError("laplacian_symbol: mode (" + std::to_string(k[0]) + "," + std::to_string(k[1]) +
                              ") outside the grid frequency window");
    double sum = 0.0;
    for (int j = 0; j < grid.dim; ++j) {
        const double kj = grid.dual_frequency(j, k[j]);
        sum += kj * kj;
    }
    return -sum;
}

double frequency_magnitude(const std::array<int, 2>& k, const TorusGrid& grid) {
    return std::sqrt(-laplacian_symbol(k, grid));
}

int aliasing_min_modes(int band, int power) {
    if (band < 0 || power < 1) throw ValidationError("aliasing_min_modes: need band >= 0 and power >= 1");
    const int needed = (power + 1) * band + 2;
    int m = 4;
    while (m < needed) m *= 2;
    return m;
}

FrequencyBox FrequencyBox::ball(int radius) {
    if (radius < 0) throw ValidationError("frequency ball: radius must be >= 0");
    FrequencyBox b;
    b.kind = Kind::ball;
    b.radius = radius;
    return b;
}

FrequencyBox FrequencyBox::box(int b0, int b1) {
    if (b0 < 0 || b1 < 0) throw ValidationError("frequency box: bounds must be >= 0");
    FrequencyBox b;
    b.kind = Kind::box;
    b.bounds = {b0, b1};
    return b;
}

bool FrequencyBox::contains(const std::array<int, 2>& k, int dim) const {
    if (kind == Kind::ball) {
        long long sq = 0;
        for (int j = 0; j < dim; ++j) sq += static_cast<long long>(k[j]) * k[j];
        return sq <= static_cast<long long>(radius) * radius;
    }
    for (int j = 0; j < dim; ++j)
        if (k[j] < -bounds[j] || k[j] > bounds[j]) return false;
    return true;
}

}  // namespace warplab
