#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "warplab/field.hpp"
#include "warplab/grid.hpp"
#include "warplab/rng.hpp"

namespace testutil {

using warplab::cd;

// Deterministic random field: unit-scale complex coefficients on modes with
// |k_j| <= band (all modes below Nyquist when band < 0).
inline warplab::FourierField random_field(const warplab::TorusGrid& grid, std::uint64_t seed, int band = -1) {
    std::vector<cd> coeffs(grid.point_count(), cd(0.0, 0.0));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const auto k = grid.mode_at(i);
        bool keep = true;
        for (int j = 0; j < grid.dim; ++j) {
            if (k[j] == -grid.modes[j] / 2) keep = false;
            if (band >= 0 && std::abs(k[j]) > band) keep = false;
        }
        if (!keep) continue;
        const std::uint64_t h = warplab::mix64(seed, static_cast<std::uint64_t>(i) + 1);
        const double re = 2.0 * warplab::unit_double(h) - 1.0;
        const double im = 2.0 * warplab::unit_double(warplab::splitmix64(h)) - 1.0;
        coeffs[i] = cd(re, im);
    }
    return warplab::FourierField::from_coeffs(grid, std::move(coeffs));
}

inline double rel_err(double got, double want) {
    return std::abs(got - want) / std::max(1e-300, std::abs(want));
}

inline double rel_err(cd got, cd want) {
    return std::abs(got - want) / std::max(1e-300, std::abs(want));
}

}
