#include "warplab/modified_fourier.hpp"

#include <algorithm>
#include <cmath>

#include "warplab/errors.hpp"

namespace warplab {

namespace {

void check_sizes(std::size_t got, int expected, const char* what) {
    if (got != static_cast<std::size_t>(expected))
        throw ValidationError(std::string(what) + ": sample count does not match the lattice");
}

void warn_leakage(std::span<const cd> u, std::vector<std::string>* warnings, const char* what) {
    if (warnings && has_support_leakage(u))
        warnings->push_back(std::string(what) + ": support leakage at window endpoints");
}

}  // namespace

bool has_support_leakage(std::span<const cd> u, double rel_tol) {
    if (u.empty()) return false;
    double peak = 0.0;
    for (const cd& v : u) peak = std::max(peak, std::abs(v));
    if (peak == 0.0) return false;
    return std::abs(u.front()) > rel_tol * peak || std::abs(u.back()) > rel_tol * peak;
}

std::vector<cd> modified_fourier(std::span<const cd> u, const TimeWarp& warp, const TimeGrid& times,
                                 const TauGrid& taus, std::vector<std::string>* warnings) {
    check_sizes(u.size(), times.n, "modified_fourier");
    warn_leakage(u, warnings, "modified_fourier");

    const std::vector<double> w = simpson_weights(times);
    std::vector<cd> out(taus.n, cd(0.0, 0.0));
    const double dtau = taus.step();
    // e^{i g(t_i) tau_j} advanced by recurrence along j: one exp per node i.
    for (int i = 0; i < times.n; ++i) {
        const cd f = w[i] * u[i];
        if (f == cd(0.0, 0.0)) continue;
        const double gt = warp.g(times.node(i));
        cd phase = std::polar(1.0, gt * taus.node(0));
        const cd rot = std::polar(1.0, gt * dtau);
        for (int j = 0; j < taus.n; ++j) {
            out[j] += f * phase;
            phase *= rot;
        }
    }
    return out;
}

std::vector<cd> inverse_modified_fourier(std::span<const cd> v, const TimeWarp& warp, const TauGrid& taus,
                                         const TimeGrid& times, std::vector<std::string>* warnings) {
    check_sizes(v.size(), taus.n, "inverse_modified_fourier");
    warn_leakage(v, warnings, "inverse_modified_fourier");

    // Simpson weights on the tau lattice.
    std::vector<double> w(taus.n);
    const double h = taus.step();
    w[0] = w[taus.n - 1] = h / 3.0;
    for (int j = 1; j < taus.n - 1; ++j) w[j] = (j % 2 == 1 ? 4.0 : 2.0) * h / 3.0;

    const double inv_two_pi = 1.0 / (2.0 * M_PI);
    std::vector<cd> out(times.n);
    for (int i = 0; i < times.n; ++i) {
        const double t = times.node(i);
        const double gt = warp.g(t);
        cd phase = std::polar(1.0, -gt * taus.node(0));
        const cd rot = std::polar(1.0, -gt * h);
        cd acc(0.0, 0.0);
        for (int j = 0; j < taus.n; ++j) {
            acc += w[j] * v[j] * phase;
            phase *= rot;
        }
        out[i] = warp.g_prime(t) * inv_two_pi * acc;
    }
    return out;
}

double h_pb_g_norm(std::span<const cd> f, double p, double b, const TimeWarp& warp, const TimeGrid& times,
                   const TauGrid& taus) {
    if (p < 1.0) throw ValidationError("h_pb_g_norm: p must be >= 1");
    const std::vector<cd> ft = modified_fourier(f, warp, times, taus);
    std::vector<double> w(taus.n);
    const double h = taus.step();
    w[0] = w[taus.n - 1] = h / 3.0;
    for (int j = 1; j < taus.n - 1; ++j) w[j] = (j % 2 == 1 ? 4.0 : 2.0) * h / 3.0;

    double sum = 0.0;
    for (int j = 0; j < taus.n; ++j) {
        const double tau = taus.node(j);
        const double bracket = std::sqrt(1.0 + tau * tau);
        sum += w[j] * std::pow(bracket, p * b) * std::pow(std::abs(ft[j]), p);
    }
    return std::pow(sum / (2.0 * M_PI), 1.0 / p);
}

}  // namespace warplab
