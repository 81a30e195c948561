#include "warplab/xsb.hpp"

#include <algorithm>
#include <cmath>

#include "warplab/errors.hpp"
#include "warplab/modified_fourier.hpp"

namespace warplab {

namespace {

// Composite Simpson weights over an index subrange [lo, hi] of a uniform
// lattice with step h; falls back to trapezoid on a trailing odd cell.
void subrange_simpson(std::vector<double>& w, int count, double h) {
    w.assign(count, 0.0);
    if (count == 1) return;
    if (count == 2) {
        w[0] = w[1] = h / 2.0;
        return;
    }
    const int even_count = (count % 2 == 1) ? count : count - 1;
    w[0] = h / 3.0;
    for (int i = 1; i < even_count - 1; ++i) w[i] = (i % 2 == 1 ? 4.0 : 2.0) * h / 3.0;
    w[even_count - 1] = h / 3.0;
    if (even_count != count) {
        w[count - 2] += h / 2.0;
        w[count - 1] += h / 2.0;
    }
}

}  // namespace

SliceStream materialize(const SpaceTimeField& u) {
    SliceStream s;
    s.grid = u.grid();
    s.times = u.times();
    s.fill = [&u](int i, std::vector<cd>& out) { out = u.slice(i).coeffs(); };
    return s;
}

double xsb_stream_norm(const SliceStream& u, double xs, double b, const TimeWarp* warp, const TauGrid& taus,
                       bool tilde, bool paraboloid, const TauWindow& window,
                       const std::vector<std::size_t>* active, std::vector<std::string>* warnings) {
    const TorusGrid& grid = u.grid;
    const TimeGrid& times = u.times;
    const std::size_t n_points = grid.point_count();

    // Active-mode detection pass (skipped when the caller already knows).
    std::vector<std::size_t> detected;
    if (!active) {
        std::vector<double> peak(n_points, 0.0);
        std::vector<cd> buf;
        double global_peak = 0.0;
        for (int i = 0; i < times.n; ++i) {
            u.fill(i, buf);
            for (std::size_t m = 0; m < n_points; ++m) {
                const double a = std::abs(buf[m]);
                peak[m] = std::max(peak[m], a);
                global_peak = std::max(global_peak, a);
            }
        }
        for (std::size_t m = 0; m < n_points; ++m)
            if (peak[m] > 1e-14 * global_peak) detected.push_back(m);
        active = &detected;
    }
    if (active->empty()) return 0.0;

    // Per-mode tau windows on the shared lattice.
    struct ModeSlot {
        std::size_t storage;
        double weight_center;  // |k|_L^2 or 0
        double spatial_weight; // (1+|k|_L)^{2s}
        int j_lo;
        int count;
        std::size_t acc_offset;
    };
    std::vector<ModeSlot> slots;
    slots.reserve(active->size());
    const double dtau = taus.step();
    std::size_t acc_size = 0;
    for (std::size_t m : *active) {
        ModeSlot slot;
        slot.storage = m;
        const auto k = grid.mode_at(m);
        const double mag = frequency_magnitude(k, grid);
        slot.weight_center = paraboloid ? mag * mag : 0.0;
        slot.spatial_weight = std::pow(1.0 + mag, 2.0 * xs);
        if (window.halfwidth > 0.0) {
            const double H = window.halfwidth + window.pad;
            const double lo_tau = slot.weight_center - H;
            const double hi_tau = slot.weight_center + H;
            int j_lo = static_cast<int>(std::floor((lo_tau + taus.tau_max) / dtau));
            int j_hi = static_cast<int>(std::ceil((hi_tau + taus.tau_max) / dtau));
            j_lo = std::clamp(j_lo, 0, taus.n - 1);
            j_hi = std::clamp(j_hi, 0, taus.n - 1);
            if (j_hi - j_lo + 1 < 3) j_hi = std::min(taus.n - 1, j_lo + 2);
            slot.j_lo = j_lo;
            slot.count = j_hi - j_lo + 1;
        } else {
            slot.j_lo = 0;
            slot.count = taus.n;
        }
        slot.acc_offset = acc_size;
        acc_size += static_cast<std::size_t>(slot.count);
        slots.push_back(slot);
    }

    // Time sweep: accumulate u~(tau_j, k) = sum_i W_i c_i e^{+i g(t_i) tau_j}
    // with the phase advanced by recurrence along j.
    std::vector<cd> acc(acc_size, cd(0.0, 0.0));
    const std::vector<double> tw = simpson_weights(times);
    std::vector<cd> buf;
    double endpoint_peak = 0.0, global_peak = 0.0;
    for (int i = 0; i < times.n; ++i) {
        u.fill(i, buf);
        const double t = times.node(i);
        const double gt = warp ? warp->g(t) : t;
        const double factor = tilde ? (warp ? warp->g_prime(t) : 1.0) : 1.0;
        const double wi = tw[i] * factor;
        const cd rot = std::polar(1.0, gt * dtau);
        for (const ModeSlot& slot : slots) {
            const cd c = buf[slot.storage];
            const double a = std::abs(c);
            global_peak = std::max(global_peak, a);
            if (i == 0 || i == times.n - 1) endpoint_peak = std::max(endpoint_peak, a);
            if (c == cd(0.0, 0.0)) continue;
            const cd base = wi * c * std::polar(1.0, gt * taus.node(slot.j_lo));
            cd phase = base;
            cd* dst = &acc[slot.acc_offset];
            for (int j = 0; j < slot.count; ++j) {
                dst[j] += phase;
                phase *= rot;
            }
        }
    }
    if (warnings && global_peak > 0.0 && endpoint_peak > 1e-12 * global_peak)
        warnings->push_back("space-time norm: support leakage at window endpoints");

    // Weighted tau integral per mode.
    double total = 0.0;
    std::vector<double> qw;
    for (const ModeSlot& slot : slots) {
        subrange_simpson(qw, slot.count, dtau);
        double mode_sum = 0.0;
        for (int j = 0; j < slot.count; ++j) {
            const double tau = taus.node(slot.j_lo + j);
            const double off = tau - slot.weight_center;
            const double bracket = 1.0 + std::abs(off);
            mode_sum += qw[j] * std::pow(bracket, 2.0 * b) * std::norm(acc[slot.acc_offset + j]);
        }
        total += slot.spatial_weight * mode_sum;
    }
    return std::sqrt(total / (2.0 * M_PI) / grid.volume());
}

double xsb_norm(const SpaceTimeField& u, double s, double b, const TauGrid& taus, const TauWindow& window,
                std::vector<std::string>* warnings) {
    return xsb_stream_norm(materialize(u), s, b, nullptr, taus, false, true, window, nullptr, warnings);
}

double xsb_g_norm(const SpaceTimeField& u, double s, double b, const TimeWarp& warp, const TauGrid& taus,
                  const TauWindow& window, std::vector<std::string>* warnings) {
    return xsb_stream_norm(materialize(u), s, b, &warp, taus, false, true, window, nullptr, warnings);
}

double xtilde_g_norm(const SpaceTimeField& u, double s, double b, const TimeWarp& warp, const TauGrid& taus,
                     const TauWindow& window, std::vector<std::string>* warnings) {
    return xsb_stream_norm(materialize(u), s, b, &warp, taus, true, true, window, nullptr, warnings);
}

double mixed_sobolev_norm(const SpaceTimeField& u, double p1, double s1, const TimeWarp* warp,
                          const TauGrid& taus, const TauWindow& window) {
    return xsb_stream_norm(materialize(u), s1, p1, warp, taus, false, false, window, nullptr, nullptr);
}

double time_weight_norm(std::span<const cd> h, double b, double mu, const TimeWarp* warp, const TimeGrid& times,
                        const TauGrid& taus) {
    const TimeWarp identity_warp = TimeWarp::identity();
    const TimeWarp& w = warp ? *warp : identity_warp;
    const std::vector<cd> ht = modified_fourier(h, w, times, taus);
    std::vector<double> qw;
    subrange_simpson(qw, taus.n, taus.step());
    double sum = 0.0;
    for (int j = 0; j < taus.n; ++j) {
        const double bracket = 1.0 + std::abs(taus.node(j) - mu);
        sum += qw[j] * std::pow(bracket, 2.0 * b) * std::norm(ht[j]);
    }
    return std::sqrt(sum / (2.0 * M_PI));
}

double twisted_norm(const SpaceTimeField& u, double s, double b, const TwistSpec& twist, const TauGrid& taus,
                    const TauWindow& window) {
    std::vector<std::string> missing;
    if ((twist.base == TwistBase::warped || twist.base == TwistBase::warped_tilde) && !twist.warp)
        missing.push_back("warp (required by the warped base space)");
    if (twist.phi && !twist.reduction) {
        if (twist.phi->size() != u.grid().point_count())
            missing.push_back("phi samples matching the trajectory grid");
    }
    if (twist.phi && twist.reduction) {
        if (twist.phi->size() != twist.reduction->reduced_grid().point_count())
            missing.push_back("phi samples matching the reduced grid");
    }
    if (!missing.empty()) {
        std::string msg = "twisted_norm: missing components:";
        for (const std::string& piece : missing) msg += " " + piece + ";";
        throw ValidationError(msg);
    }

    // Assemble e^{phi} (pulled-back) slices on the target grid.
    const TorusGrid target = twist.reduction ? twist.reduction->reduced_grid() : u.grid();
    const std::vector<double>* phi = twist.phi;
    if (!phi && twist.reduction) phi = &twist.reduction->phi();

    std::vector<FourierField> slices;
    slices.reserve(u.slice_count());
    for (int i = 0; i < u.slice_count(); ++i) {
        std::vector<cd> samples =
            twist.reduction ? twist.reduction->pullback_samples(u.slice(i)) : inverse_transform(u.slice(i));
        if (phi)
            for (std::size_t m = 0; m < samples.size(); ++m) samples[m] *= std::exp((*phi)[m]);
        slices.push_back(forward_transform(target, samples));
    }
    const SpaceTimeField twisted = SpaceTimeField::from_slices(u.times(), std::move(slices));

    switch (twist.base) {
        case TwistBase::standard:
            return xsb_norm(twisted, s, b, taus, window);
        case TwistBase::warped:
            return xsb_g_norm(twisted, s, b, *twist.warp, taus, window);
        case TwistBase::warped_tilde:
            return xtilde_g_norm(twisted, s, b, *twist.warp, taus, window);
    }
    throw ValidationError("twisted_norm: unknown base space");
}

}  // namespace warplab
