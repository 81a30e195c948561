#include "warplab/propagator.hpp"

#include <cmath>

#include "warplab/errors.hpp"

namespace warplab {

FourierField propagate(const FourierField& phi, const TimeWarp& warp, double t, double s) {
    const TorusGrid& grid = phi.grid();
    const double dg = warp.g(t) - warp.g(s);
    std::vector<cd> out = phi.coeffs();
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (out[i] == cd(0.0, 0.0)) continue;
        out[i] *= std::polar(1.0, dg * laplacian_symbol(grid.mode_at(i), grid));
    }
    return FourierField::from_coeffs(grid, std::move(out));
}

FourierField duhamel(const FourierField& phi, const SpaceTimeField& forcing, const TimeWarp& warp, double t) {
    const TimeGrid& times = forcing.times();
    const double eps = 1e-12 * (1.0 + std::abs(times.t1 - times.t0));
    if (t < times.t0 - eps || t > times.t1 + eps || 0.0 < times.t0 - eps || 0.0 > times.t1 + eps)
        throw ValidationError("duhamel: t or 0 outside the forcing window");
    if (phi.grid() != forcing.grid()) throw ValidationError("duhamel: datum and forcing grids differ");

    // Simpson quadrature of int_0^t e^{+i(g(t)-g(s)) sym(k)} f_k(s) ds on the
    // sub-lattice between 0 and t; both endpoints are snapped to the nearest
    // nodes (the forcing lattice is required to contain them).
    auto node_at = [&](double x) {
        const int i = static_cast<int>(std::llround((x - times.t0) / times.step()));
        if (std::abs(times.node(i) - x) > 1e-9 * (1.0 + std::abs(x)))
            throw ValidationError("duhamel: t and 0 must be nodes of the forcing lattice");
        return i;
    };
    const int i_zero = node_at(0.0);
    const int i_t = node_at(t);
    const int lo = std::min(i_zero, i_t), hi = std::max(i_zero, i_t);
    const double sign = i_t >= i_zero ? 1.0 : -1.0;

    const TorusGrid& grid = phi.grid();
    FourierField result = propagate(phi, warp, t, 0.0);
    if (lo == hi) return result;

    const int count = hi - lo + 1;
    std::vector<double> w(count, 0.0);
    const double h = times.step();
    if (count >= 3 && (count - 1) % 2 == 0) {
        w[0] = w[count - 1] = h / 3.0;
        for (int i = 1; i < count - 1; ++i) w[i] = (i % 2 == 1 ? 4.0 : 2.0) * h / 3.0;
    } else {
        // Odd interval count: Simpson on the leading even part, trapezoid on
        // the last cell.
        if (count > 2) {
            w[0] = h / 3.0;
            for (int i = 1; i < count - 2; ++i) w[i] = (i % 2 == 1 ? 4.0 : 2.0) * h / 3.0;
            w[count - 2] = h / 3.0;
        }
        w[count - 2] += h / 2.0;
        w[count - 1] += h / 2.0;
    }

    const double gt = warp.g(t);
    std::vector<cd> acc(grid.point_count(), cd(0.0, 0.0));
    for (int i = lo; i <= hi; ++i) {
        const double s = times.node(i);
        const double dg = gt - warp.g(s);
        const double weight = sign * w[i - lo];
        const auto& coeffs = forcing.slice(i).coeffs();
        for (std::size_t m = 0; m < acc.size(); ++m) {
            if (coeffs[m] == cd(0.0, 0.0)) continue;
            acc[m] += weight * coeffs[m] * std::polar(1.0, dg * laplacian_symbol(grid.mode_at(m), grid));
        }
    }
    result += FourierField::from_coeffs(grid, std::move(acc));
    return result;
}

}  // namespace warplab
