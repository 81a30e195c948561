#pragma once

#include <complex>
#include <span>
#include <vector>

#include "warplab/grid.hpp"

namespace warplab {

using cd = std::complex<double>;

// Modal representation of a function on a torus.  Coefficients follow the
// convention uhat(k) = (cell weight) * sum_m e^{-i 2pi k.m/M} u(x_m), so a
// constant function c has uhat(0) = c * volume and the inverse transform is
// u(x_m) = volume^{-1} sum_k e^{+i 2pi k.m/M} uhat(k).
//
// Values are immutable-by-convention after construction (all operations
// return new fields), which keeps them safe to share across workers.
class FourierField {
  public:
    FourierField() = default;

    static FourierField zero(const TorusGrid& grid);
    // Takes ownership of a coefficient vector in storage order; zeroes the
    // Nyquist modes.
    static FourierField from_coeffs(const TorusGrid& grid, std::vector<cd> coeffs);
    // Single mode k with the given coefficient value.
    static FourierField mode(const TorusGrid& grid, const std::array<int, 2>& k, cd amplitude);

    const TorusGrid& grid() const { return grid_; }
    const std::vector<cd>& coeffs() const { return coeffs_; }
    std::vector<cd>& mutable_coeffs() { return coeffs_; }

    cd coeff(const std::array<int, 2>& k) const;
    void set_coeff(const std::array<int, 2>& k, cd value);

    double l2_norm() const;                 // Plancherel: (volume^{-1} sum |uhat|^2)^{1/2}
    double max_abs_coeff() const;
    // Largest |k_j| carrying a coefficient above rel_tol * max|uhat|.
    int active_band(double rel_tol = 1e-13) const;
    // Per-axis variant of the same.
    int active_band_axis(int axis, double rel_tol = 1e-13) const;

    FourierField& operator+=(const FourierField& o);
    FourierField& operator-=(const FourierField& o);
    FourierField& operator*=(cd scale);
    friend FourierField operator+(FourierField a, const FourierField& b) { return a += b; }
    friend FourierField operator-(FourierField a, const FourierField& b) { return a -= b; }
    friend FourierField operator*(FourierField a, cd s) { return a *= s; }
    friend FourierField operator*(cd s, FourierField a) { return a *= s; }

  private:
    TorusGrid grid_;
    std::vector<cd> coeffs_;
};

// Quadrature transform pair (exact inverse of one another up to roundoff).
FourierField forward_transform(const TorusGrid& grid, std::span<const cd> samples);
std::vector<cd> inverse_transform(const FourierField& field);

// (sum_k (1+|k|_L)^{2s} |uhat(k)|^2 / volume)^{1/2}; s = 0 recovers the L^2
// norm for every circumference.
double sobolev_norm(const FourierField& field, double s);

// Discrete L^p norm (sum_m |u(x_m)|^p cellweight)^{1/p}; exact for
// trigonometric polynomials resolved by the grid.
double lp_space_norm(std::span<const cd> samples, double p, const TorusGrid& grid);

// Zero all coefficients outside the box/ball.  Idempotent orthogonal projector.
FourierField project(const FourierField& field, const FrequencyBox& box);

// Evaluate a band-limited field at arbitrary points by direct mode summation
// (exact; used by coordinate-change transports).  `points` lists per-axis
// coordinates; for dim 2 the result is evaluated on the tensor lattice
// points0 x points1 in row-major order.
std::vector<cd> evaluate_on_lattice(const FourierField& field, const std::vector<double>& points0,
                                    const std::vector<double>& points1);

}
