#include "warplab/field.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "warplab/errors.hpp"
#include "warplab/fft.hpp"

namespace warplab {

namespace {

void zero_nyquist(const TorusGrid& grid, std::vector<cd>& coeffs) {
    // Nyquist plane along axis 0.
    if (grid.dim == 1) {
        coeffs[static_cast<std::size_t>(grid.modes[0] / 2)] = 0.0;
        return;
    }
    const int M0 = grid.modes[0], M1 = grid.modes[1];
    for (int i1 = 0; i1 < M1; ++i1) coeffs[static_cast<std::size_t>(M0 / 2) * M1 + i1] = 0.0;
    for (int i0 = 0; i0 < M0; ++i0) coeffs[static_cast<std::size_t>(i0) * M1 + M1 / 2] = 0.0;
}

}  // namespace

FourierField FourierField::zero(const TorusGrid& grid) {
    FourierField f;
    f.grid_ = grid;
    f.coeffs_.assign(grid.point_count(), cd(0.0, 0.0));
    return f;
}

FourierField FourierField::from_coeffs(const TorusGrid& grid, std::vector<cd> coeffs) {
    if (coeffs.size() != grid.point_count())
        throw ValidationError("field: coefficient count " + std::to_string(coeffs.size()) +
                              " does not match grid with " + std::to_string(grid.point_count()) + " modes");
    FourierField f;
    f.grid_ = grid;
    f.coeffs_ = std::move(coeffs);
    zero_nyquist(grid, f.coeffs_);
    return f;
}

FourierField FourierField::mode(const TorusGrid& grid, const std::array<int, 2>& k, cd amplitude) {
    if (!grid.mode_in_range(k)) throw ValidationError("field: mode outside grid frequency window");
    FourierField f = zero(grid);
    f.coeffs_[grid.storage_index(k)] = amplitude;
    zero_nyquist(grid, f.coeffs_);
    return f;
}

cd FourierField::coeff(const std::array<int, 2>& k) const {
    if (!grid_.mode_in_range(k)) throw ValidationError("field: mode outside grid frequency window");
    return coeffs_[grid_.storage_index(k)];
}

void FourierField::set_coeff(const std::array<int, 2>& k, cd value) {
    if (!grid_.mode_in_range(k)) throw ValidationError("field: mode outside grid frequency window");
    bool nyquist = false;
    for (int j = 0; j < grid_.dim; ++j) nyquist = nyquist || (k[j] == -grid_.modes[j] / 2);
    coeffs_[grid_.storage_index(k)] = nyquist ? cd(0.0, 0.0) : value;
}

double FourierField::l2_norm() const {
    double sum = 0.0;
    for (const cd& c : coeffs_) sum += std::norm(c);
    return std::sqrt(sum / grid_.volume());
}

double FourierField::max_abs_coeff() const {
    double m = 0.0;
    for (const cd& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

int FourierField::active_band(double rel_tol) const {
    const double cut = rel_tol * max_abs_coeff();
    int band = 0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (std::abs(coeffs_[i]) <= cut) continue;
        const auto k = grid_.mode_at(i);
        for (int j = 0; j < grid_.dim; ++j) band = std::max(band, std::abs(k[j]));
    }
    return band;
}

int FourierField::active_band_axis(int axis, double rel_tol) const {
    const double cut = rel_tol * max_abs_coeff();
    int band = 0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (std::abs(coeffs_[i]) <= cut) continue;
        band = std::max(band, std::abs(grid_.mode_at(i)[axis]));
    }
    return band;
}

FourierField& FourierField::operator+=(const FourierField& o) {
    if (grid_ != o.grid_) throw ValidationError("field arithmetic: grids differ");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

FourierField& FourierField::operator-=(const FourierField& o) {
    if (grid_ != o.grid_) throw ValidationError("field arithmetic: grids differ");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

FourierField& FourierField::operator*=(cd scale) {
    for (cd& c : coeffs_) c *= scale;
    return *this;
}

FourierField forward_transform(const TorusGrid& grid, std::span<const cd> samples) {
    if (samples.size() != grid.point_count())
        throw ValidationError("forward_transform: sample count " + std::to_string(samples.size()) +
                              " does not match grid with " + std::to_string(grid.point_count()) + " points");
    std::vector<cd> buf(samples.begin(), samples.end());
    if (grid.dim == 1)
        fft::forward_1d(buf.data(), grid.modes[0]);
    else
        fft::forward_2d(buf.data(), grid.modes[0], grid.modes[1]);
    const double w = grid.cell_weight();
    for (cd& c : buf) c *= w;
    return FourierField::from_coeffs(grid, std::move(buf));
}

std::vector<cd> inverse_transform(const FourierField& field) {
    const TorusGrid& grid = field.grid();
    std::vector<cd> buf = field.coeffs();
    if (grid.dim == 1)
        fft::inverse_1d(buf.data(), grid.modes[0]);
    else
        fft::inverse_2d(buf.data(), grid.modes[0], grid.modes[1]);
    const double scale = 1.0 / grid.volume();
    for (cd& c : buf) c *= scale;
    return buf;
}

double sobolev_norm(const FourierField& field, double s) {
    const TorusGrid& grid = field.grid();
    double sum = 0.0;
    for (std::size_t i = 0; i < field.coeffs().size(); ++i) {
        const double a2 = std::norm(field.coeffs()[i]);
        if (a2 == 0.0) continue;
        const double mag = frequency_magnitude(grid.mode_at(i), grid);
        sum += std::pow(1.0 + mag, 2.0 * s) * a2;
    }
    return std::sqrt(sum / grid.volume());
}

double lp_space_norm(std::span<const cd> samples, double p, const TorusGrid& grid) {
    if (p < 1.0) throw ValidationError("lp_space_norm: p must be >= 1");
    if (samples.size() != grid.point_count()) throw ValidationError("lp_space_norm: sample count mismatch");
    double sum = 0.0;
    for (const cd& v : samples) sum += std::pow(std::abs(v), p);
    return std::pow(sum * grid.cell_weight(), 1.0 / p);
}

FourierField project(const FourierField& field, const FrequencyBox& box) {
    const TorusGrid& grid = field.grid();
    std::vector<cd> out = field.coeffs();
    for (std::size_t i = 0; i < out.size(); ++i)
        if (!box.contains(grid.mode_at(i), grid.dim)) out[i] = 0.0;
    return FourierField::from_coeffs(grid, std::move(out));
}

std::vector<cd> evaluate_on_lattice(const FourierField& field, const std::vector<double>& points0,
                                    const std::vector<double>& points1) {
    const TorusGrid& grid = field.grid();
    const std::vector<cd>& coeffs = field.coeffs();
    const double inv_vol = 1.0 / grid.volume();

    // Per-axis phase tables e^{i (2pi k/L) x}; the evaluation is then a tensor
    // contraction, exact for band-limited fields.
    auto phase_table = [&](int axis, const std::vector<double>& pts) {
        const int M = grid.modes[axis];
        std::vector<cd> tab(pts.size() * M);
        for (std::size_t m = 0; m < pts.size(); ++m)
            for (int i = 0; i < M; ++i) {
                const int k = i < M / 2 ? i : i - M;
                tab[m * M + i] = std::polar(1.0, grid.dual_frequency(axis, k) * pts[m]);
            }
        return tab;
    };

    const std::vector<cd> ph0 = phase_table(0, points0);
    if (grid.dim == 1) {
        std::vector<cd> out(points0.size());
        const int M0 = grid.modes[0];
        for (std::size_t m = 0; m < points0.size(); ++m) {
            cd acc(0.0, 0.0);
            for (int i = 0; i < M0; ++i) acc += ph0[m * M0 + i] * coeffs[i];
            out[m] = acc * inv_vol;
        }
        return out;
    }

    const std::vector<cd> ph1 = phase_table(1, points1);
    const int M0 = grid.modes[0], M1 = grid.modes[1];
    // Contract axis 1 first: partial[m1][i0] = sum_{i1} coeffs[i0][i1] ph1[m1][i1].
    std::vector<cd> partial(points1.size() * M0);
    for (std::size_t m1 = 0; m1 < points1.size(); ++m1)
        for (int i0 = 0; i0 < M0; ++i0) {
            cd acc(0.0, 0.0);
            const cd* row = &coeffs[static_cast<std::size_t>(i0) * M1];
            const cd* ph = &ph1[m1 * M1];
            for (int i1 = 0; i1 < M1; ++i1) acc += row[i1] * ph[i1];
            partial[m1 * M0 + i0] = acc;
        }
    std::vector<cd> out(points0.size() * points1.size());
    for (std::size_t m0 = 0; m0 < points0.size(); ++m0)
        for (std::size_t m1 = 0; m1 < points1.size(); ++m1) {
            cd acc(0.0, 0.0);
            const cd* ph = &ph0[m0 * M0];
            const cd* par = &partial[m1 * M0];
            for (int i0 = 0; i0 < M0; ++i0) acc += ph[i0] * par[i0];
            out[m0 * points1.size() + m1] = acc * inv_vol;
        }
    return out;
}

}  // namespace warplab
