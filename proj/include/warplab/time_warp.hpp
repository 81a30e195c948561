#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace warplab {

// The time reparameterization g with g(0)=0, strictly increasing, and its
// derivative and inverse.  g'(0)=0 for the degenerate built-ins; the identity
// warp is the non-degenerate baseline.  Construction validates monotonicity,
// the inverse, and the derivative against finite differences on a working
// interval.
class TimeWarp {
  public:
    static TimeWarp identity();
    // g(t) = sign(t) |t|^alpha / alpha, alpha > 1; g'(t) = |t|^{alpha-1}.
    static TimeWarp power(double alpha);
    // g(t) = t^3/3 (power warp with alpha = 3 under its own label).
    static TimeWarp cubic();
    // User-supplied pair; the inverse is computed by bisection+Newton to
    // 1e-12 and memoized.  `interval` is the working interval the
    // construction checks run on.
    static TimeWarp custom(std::string label, std::function<double(double)> g,
                           std::function<double(double)> g_prime, double growth_exponent,
                           std::pair<double, double> interval);
    // "identity" | "cubic" | "power:alpha=<a>"
    static TimeWarp parse(const std::string& label);

    double g(double t) const { return g_(t); }
    double g_prime(double t) const { return gp_(t); }
    double g_inverse(double tau) const { return ginv_(tau); }
    double growth_exponent() const { return growth_exponent_; }
    const std::string& label() const { return label_; }
    bool is_identity() const { return label_ == "identity"; }

    // max |g'| sampled on [t0,t1] (1025 points); used by the
    // phase-resolution rule.
    double max_g_prime(double t0, double t1) const;

    // Construction-time checks on [t0,t1]: g(0)=0, strict increase on 1e3
    // points, inverse roundtrip to 1e-10, derivative vs centered differences
    // to 1e-6.  Throws ValidationError on violation.
    void validate(double t0, double t1) const;

  private:
    TimeWarp() = default;
    std::function<double(double)> g_, gp_, ginv_;
    double growth_exponent_ = 1.0;
    std::string label_;
};

// Uniform quadrature lattice in time; node count is odd so composite Simpson
// weights exist.
struct TimeGrid {
    double t0 = 0.0, t1 = 1.0;
    int n = 3;

    static TimeGrid uniform(double t0, double t1, int n);
    double step() const { return (t1 - t0) / (n - 1); }
    double node(int i) const { return t0 + i * step(); }
    double length() const { return t1 - t0; }
};

std::vector<double> simpson_weights(const TimeGrid& grid);

// Phase-resolution rule: dt <= min(1/(8 max|g'| Lambda), (t1-t0)/64), where
// Lambda is the largest phase rate among active modes (or tau_max for
// time-transform quadratures).  `oversample` shrinks the step further.
TimeGrid resolved_time_grid(const TimeWarp& warp, double t0, double t1, double lambda, int oversample = 1);

// Uniform symmetric lattice for the tau-side of the modified transform.
struct TauGrid {
    double tau_max = 1.0;
    int n = 3;

    static TauGrid uniform(double tau_max, int n);
    double step() const { return 2.0 * tau_max / (n - 1); }
    double node(int j) const { return -tau_max + j * step(); }
};

// Truncation rule: tau_max = 4 Lambda + 40/(t1-t0), dtau <= 1/(2 (t1-t0)).
TauGrid resolved_tau_grid(double lambda, double t0, double t1);

}
