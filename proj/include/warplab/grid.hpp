#pragma once

#include <array>
#include <cstddef>

namespace warplab {

// Uniform collocation grid on a torus of per-axis circumference L_j with M_j
// points, x_{j,m} = m L_j / M_j.  M_j must be even and >= 4; the retained
// frequency range per axis is the symmetric window [-M_j/2, M_j/2) and the
// Nyquist index -M_j/2 is always kept at zero amplitude by FourierField.
struct TorusGrid {
    int dim = 1;
    std::array<double, 2> length{0.0, 0.0};
    std::array<int, 2> modes{0, 0};

    static TorusGrid line(double L, int M);
    static TorusGrid plane(double Lx, int Mx, double Ly, int My);
    // The 2pi-torus used throughout the constant-circumference experiments.
    static TorusGrid square(int M);

    std::size_t point_count() const;
    double cell_weight() const;  // prod_j L_j / M_j
    double volume() const;       // prod_j L_j
    double collocation(int axis, int m) const { return static_cast<double>(m) * length[axis] / modes[axis]; }

    // Storage uses FFT-natural ordering per axis (0..M/2-1, -M/2..-1),
    // row-major across axes.
    bool mode_in_range(const std::array<int, 2>& k) const;
    std::size_t storage_index(const std::array<int, 2>& k) const;
    std::array<int, 2> mode_at(std::size_t idx) const;

    // Dual frequency 2 pi k / L_j of an integer mode index.
    double dual_frequency(int axis, int k) const;

    bool operator==(const TorusGrid& o) const { return dim == o.dim && length == o.length && modes == o.modes; }
    bool operator!=(const TorusGrid& o) const { return !(*this == o); }
};

// -sum_j (2 pi k_j / L_j)^2; equals -|k|^2 when every L_j = 2 pi.
// Rejects k outside the grid's frequency window.
double laplacian_symbol(const std::array<int, 2>& k, const TorusGrid& grid);

// sqrt of minus the symbol: the scaled frequency magnitude |k|_L.
double frequency_magnitude(const std::array<int, 2>& k, const TorusGrid& grid);

// Smallest power of two >= (q+1) N + 2: grid size under which products of
// band-<=N fields up to total power q are quadrature-exact (no aliasing).
int aliasing_min_modes(int band, int power);

// Frequency-space projector support: ball |k| <= radius in integer indices,
// or a per-axis box |k_j| <= bound_j.
struct FrequencyBox {
    enum class Kind { ball, box };
    Kind kind = Kind::ball;
    int radius = 0;
    std::array<int, 2> bounds{0, 0};

    static FrequencyBox ball(int radius);
    static FrequencyBox box(int b0, int b1);
    bool contains(const std::array<int, 2>& k, int dim) const;
};

}
