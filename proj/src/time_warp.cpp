#include "warplab/time_warp.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

#include "warplab/errors.hpp"

namespace warplab {

namespace {

// Monotone inverse by bracketed bisection refined with Newton.
double invert_increasing(const std::function<double(double)>& g, const std::function<double(double)>& gp,
                         double target, double lo, double hi, double tol) {
    // Extend the bracket geometrically if the target lies outside.
    while (g(lo) > target) lo = lo < 0 ? 2 * lo : lo - std::max(1.0, std::abs(lo));
    while (g(hi) < target) hi = hi > 0 ? 2 * hi : hi + std::max(1.0, std::abs(hi));
    double x = 0.5 * (lo + hi);
    for (int iter = 0; iter < 200; ++iter) {
        const double f = g(x) - target;
        if (std::abs(f) <= tol * (1.0 + std::abs(target))) return x;
        if (f > 0)
            hi = x;
        else
            lo = x;
        const double d = gp(x);
        double next = d > 0 ? x - f / d : x;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        x = next;
    }
    return x;
}

}  // namespace

TimeWarp TimeWarp::identity() {
    TimeWarp w;
    w.label_ = "identity";
    w.g_ = [](double t) { return t; };
    w.gp_ = [](double) { return 1.0; };
    w.ginv_ = [](double tau) { return tau; };
    w.growth_exponent_ = 1.0;
    w.validate(-4.0, 4.0);
    return w;
}

TimeWarp TimeWarp::power(double alpha) {
    if (!(alpha > 1.0)) throw ValidationError("power warp: alpha must be > 1");
    TimeWarp w;
    std::ostringstream label;
    label << "power:alpha=" << alpha;
    w.label_ = label.str();
    w.g_ = [alpha](double t) { return std::copysign(std::pow(std::abs(t), alpha) / alpha, t); };
    w.gp_ = [alpha](double t) { return std::pow(std::abs(t), alpha - 1.0); };
    w.ginv_ = [alpha](double tau) { return std::copysign(std::pow(alpha * std::abs(tau), 1.0 / alpha), tau); };
    w.growth_exponent_ = alpha;
    w.validate(-4.0, 4.0);
    return w;
}

TimeWarp TimeWarp::cubic() {
    TimeWarp w;
    w.label_ = "cubic";
    w.g_ = [](double t) { return t * t * t / 3.0; };
    w.gp_ = [](double t) { return t * t; };
    w.ginv_ = [](double tau) { return std::cbrt(3.0 * tau); };
    w.growth_exponent_ = 3.0;
    w.validate(-4.0, 4.0);
    return w;
}

TimeWarp TimeWarp::custom(std::string label, std::function<double(double)> g,
                          std::function<double(double)> g_prime, double growth_exponent,
                          std::pair<double, double> interval) {
    TimeWarp w;
    w.label_ = std::move(label);
    w.g_ = std::move(g);
    w.gp_ = std::move(g_prime);
    w.growth_exponent_ = growth_exponent;
    // Inverse by rootfinding, memoized; the cache is mutex-guarded so the
    // warp stays shareable across workers.
    auto cache = std::make_shared<std::map<double, double>>();
    auto cache_mutex = std::make_shared<std::mutex>();
    auto gf = w.g_;
    auto gpf = w.gp_;
    const double lo = interval.first, hi = interval.second;
    w.ginv_ = [cache, cache_mutex, gf, gpf, lo, hi](double tau) {
        {
            std::lock_guard<std::mutex> lock(*cache_mutex);
            auto it = cache->find(tau);
            if (it != cache->end()) return it->second;
        }
        const double x = invert_increasing(gf, gpf, tau, lo, hi, 1e-12);
        std::lock_guard<std::mutex> lock(*cache_mutex);
        cache->emplace(tau, x);
        return x;
    };
    w.validate(interval.first, interval.second);
    return w;
}

TimeWarp TimeWarp::parse(const std::string& label) {
    if (label == "identity") return identity();
    if (label == "cubic") return cubic();
    const std::string prefix = "power:alpha=";
    if (label.rfind(prefix, 0) == 0) {
        try {
            return power(std::stod(label.substr(prefix.size())));
        } catch (const std::invalid_argument&) {
            throw ValidationError("warp label: cannot parse alpha in '" + label + "'");
        }
    }
    throw ValidationError("warp label: unknown '" + label + "' (expected identity | cubic | power:alpha=<a>)");
}

double TimeWarp::max_g_prime(double t0, double t1) const {
    const int n = 1025;
    double m = 0.0;
    for (int i = 0; i < n; ++i) m = std::max(m, std::abs(gp_(t0 + (t1 - t0) * i / (n - 1))));
    return m;
}

void TimeWarp::validate(double t0, double t1) const {
    if (std::abs(g_(0.0)) > 1e-14) throw ValidationError("warp '" + label_ + "': g(0) != 0");

    const int n_mono = 1000;
    double prev = g_(t0);
    for (int i = 1; i < n_mono; ++i) {
        const double t = t0 + (t1 - t0) * i / (n_mono - 1);
        const double cur = g_(t);
        if (!(cur > prev)) throw ValidationError("warp '" + label_ + "': g not strictly increasing on the lattice");
        prev = cur;
    }

    for (int i = 0; i < 1000; ++i) {
        const double t = t0 + (t1 - t0) * i / 999.0;
        const double tau = g_(t);
        if (std::abs(g_(ginv_(tau)) - tau) > 1e-10 * (1.0 + std::abs(tau)))
            throw ValidationError("warp '" + label_ + "': inverse roundtrip exceeds 1e-10");
    }

    // Derivative against centered differences; skew the sample phase so the
    // kink at t=0 of the power warps is never hit exactly.
    for (int i = 0; i < 100; ++i) {
        const double t = t0 + (t1 - t0) * (i + 0.371) / 100.0;
        const double h = 1e-6 * (1.0 + std::abs(t));
        const double fd = (g_(t + h) - g_(t - h)) / (2.0 * h);
        if (std::abs(fd - gp_(t)) > 1e-6 * (1.0 + std::abs(fd)))
            throw ValidationError("warp '" + label_ + "': g' disagrees with finite differences");
    }
}

TimeGrid TimeGrid::uniform(double t0, double t1, int n) {
    if (!(t0 < t1)) throw ValidationError("time grid: need t0 < t1");
    if (n < 3 || n % 2 == 0) throw ValidationError("time grid: node count must be odd and >= 3");
    return TimeGrid{t0, t1, n};
}

std::vector<double> simpson_weights(const TimeGrid& grid) {
    std::vector<double> w(grid.n, 0.0);
    const double h = grid.step();
    w[0] = w[grid.n - 1] = h / 3.0;
    for (int i = 1; i < grid.n - 1; ++i) w[i] = (i % 2 == 1 ? 4.0 : 2.0) * h / 3.0;
    return w;
}

TimeGrid resolved_time_grid(const TimeWarp& warp, double t0, double t1, double lambda, int oversample) {
    if (oversample < 1) throw ValidationError("resolved_time_grid: oversample must be >= 1");
    const double rate = warp.max_g_prime(t0, t1) * std::max(lambda, 0.0);
    double dt = (t1 - t0) / 64.0;
    if (rate > 0.0) dt = std::min(dt, 1.0 / (8.0 * rate));
    dt /= oversample;
    int n = static_cast<int>(std::ceil((t1 - t0) / dt)) + 1;
    if (n % 2 == 0) ++n;
    n = std::max(n, 3);
    return TimeGrid::uniform(t0, t1, n);
}

TauGrid TauGrid::uniform(double tau_max, int n) {
    if (!(tau_max > 0)) throw ValidationError("tau grid: tau_max must be positive");
    if (n < 3 || n % 2 == 0) throw ValidationError("tau grid: node count must be odd and >= 3");
    return TauGrid{tau_max, n};
}

TauGrid resolved_tau_grid(double lambda, double t0, double t1) {
    const double window = t1 - t0;
    if (!(window > 0)) throw ValidationError("resolved_tau_grid: need t0 < t1");
    const double tau_max = 4.0 * std::max(lambda, 0.0) + 40.0 / window;
    const double dtau = 1.0 / (2.0 * window);
    int n = static_cast<int>(std::ceil(2.0 * tau_max / dtau)) + 1;
    if (n % 2 == 0) ++n;
    return TauGrid::uniform(tau_max, n);
}

}  // namespace warplab
