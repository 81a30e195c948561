#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "warplab/field.hpp"
#include "warplab/space_time.hpp"

namespace warplab {

// Strictly positive 2pi-periodic coefficient of one axis of the elliptic
// operator sum_j a_j(x_j) d^2/dx_j^2.  Accepted as a closed form
// ("const:c", "cos:a0,a1" meaning a0 + a1 cos x) or as a table of 2^k
// samples; tables are evaluated by trigonometric interpolation.
class CoefficientFunction {
  public:
    static CoefficientFunction constant(double c);
    static CoefficientFunction cosine(double a0, double a1);
    static CoefficientFunction from_samples(std::vector<double> samples, std::string label = "table");
    static CoefficientFunction parse(const std::string& spec);

    double operator()(double x) const { return fn_(x); }
    double derivative(double x) const { return dfn_(x); }
    const std::string& label() const { return label_; }
    double min_value() const { return min_value_; }
    double max_value() const { return max_value_; }

    // Positivity on 2^12 samples and spectral-tail smoothness at the given
    // resolution: mass above index resolution/4 must be <= 1e-10 of total.
    void validate(int resolution) const;

  private:
    CoefficientFunction() = default;
    std::function<double(double)> fn_, dfn_;
    std::string label_;
    double min_value_ = 0.0;
    double max_value_ = 0.0;
};

// One axis of the change of variables: the cumulative map
// A(x) = int_0^x a(s)^{-1/2} ds built spectrally at `resolution` samples,
// its inverse alpha = A^{-1} on the reduced circumference L = A(2pi)
// (monotone bisection+Newton to `tol`), alpha'(y) = sqrt(a(alpha(y))), and
// the per-axis gauge exponent phi(y) = -(1/2) log(alpha'(y)/alpha'(0)).
class AxisReduction {
  public:
    AxisReduction(CoefficientFunction a, int resolution, double tol);

    double circumference() const { return L_; }
    double A(double x) const;
    double alpha(double y) const;  // periodic: alpha(y + L) = alpha(y) + 2pi
    double alpha_prime(double y) const;
    double phi(double y) const;
    // Closed form -a'(alpha(y)) / (4 sqrt(a(alpha(y)))) = -(1/2) alpha''/alpha'.
    double phi_prime(double y) const;
    const CoefficientFunction& coefficient() const { return a_; }

  private:
    CoefficientFunction a_;
    int resolution_;
    double tol_;
    double L_ = 0.0;
    double mean_ = 0.0;            // Fourier mean of a^{-1/2}
    std::vector<cd> fc_;           // Fourier coefficients of a^{-1/2}
    double alpha_prime_origin_ = 1.0;
};

// The full reduction: per-axis diffeomorphisms, gauge Phi, potential beta
// (by spectral differentiation of Phi on the reduced grid), nonlinearity
// weight e^{-2 Phi}, and the reduced torus grid with circumferences L_j.
class Reduction {
  public:
    int dim() const { return original_grid_.dim; }
    const TorusGrid& original_grid() const { return original_grid_; }
    const TorusGrid& reduced_grid() const { return reduced_grid_; }
    const AxisReduction& axis(int j) const { return axes_[j]; }

    // Samples on the reduced grid, storage order.
    const std::vector<double>& phi() const { return phi_; }
    const std::vector<double>& beta() const { return beta_; }
    const std::vector<double>& weight() const { return weight_; }

    // alpha(y_m) per axis at the reduced-grid nodes.
    const std::vector<double>& alpha_nodes(int j) const { return alpha_nodes_[j]; }

    // u(alpha(y_m)) for a band-limited field on the original torus (exact
    // direct summation; no gauge factor).
    std::vector<cd> pullback_samples(const FourierField& u) const;

    friend Reduction build_reduction(std::vector<CoefficientFunction> a, int resolution, double tol,
                                     std::array<int, 2> original_modes, std::array<int, 2> reduced_modes);

  private:
    std::vector<AxisReduction> axes_;
    TorusGrid original_grid_, reduced_grid_;
    std::vector<double> phi_, beta_, weight_;
    std::array<std::vector<double>, 2> alpha_nodes_;
    std::array<std::vector<double>, 2> phi_axis_nodes_;
};

Reduction build_reduction(std::vector<CoefficientFunction> a, int resolution, double tol,
                          std::array<int, 2> original_modes, std::array<int, 2> reduced_modes);

// w0(y) = e^{Phi(y)} u0(alpha(y)) as coefficients on the reduced grid.
FourierField forward_transport(const FourierField& u0, const Reduction& red);

// u(x) = e^{-Phi(A(x))} w(A(x)) back on the original torus.
FourierField backward_transport(const FourierField& w, const Reduction& red);

// Max-over-interior-times spatial L^2 residual of
//   i du/dt + sum_j a_j(x_j) d^2_{x_j} u - [u |u|^{p-1}]   (nonlinear_rhs)
// with 4th-order centered time differences and spectral space derivatives.
double residual_original(const SpaceTimeField& u, const std::vector<CoefficientFunction>& a, int p,
                         bool nonlinear_rhs);

}
