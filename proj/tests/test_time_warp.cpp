#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "support/test_util.hpp"
#include "warplab/cutoff.hpp"
#include "warplab/errors.hpp"
#include "warplab/modified_fourier.hpp"
#include "warplab/propagator.hpp"
#include "warplab/space_time.hpp"
#include "warplab/time_warp.hpp"

using namespace warplab;
using testutil::random_field;
using testutil::rel_err;

namespace {

const double kSqrt2Pi = std::sqrt(2.0 * M_PI);

// The warped Gaussian pair: u = g'(t) e^{-g(t)^2/2} transforms to
// sqrt(2pi) e^{-tau^2/2} for every warp (substitute t' = g(t)).
std::vector<cd> warped_gaussian(const TimeWarp& w, const TimeGrid& grid) {
    std::vector<cd> u(grid.n);
    for (int i = 0; i < grid.n; ++i) {
        const double t = grid.node(i);
        const double gt = w.g(t);
        u[i] = w.g_prime(t) * std::exp(-0.5 * gt * gt);
    }
    return u;
}

double l2_time(const std::vector<cd>& u, const TimeGrid& grid) {
    const std::vector<double> w = simpson_weights(grid);
    double s = 0.0;
    for (int i = 0; i < grid.n; ++i) s += w[i] * std::norm(u[i]);
    return std::sqrt(s);
}

double l2_tau(const std::vector<cd>& v, const TauGrid& taus) {
    double s = 0.0;
    const double h = taus.step();
    for (int j = 0; j < taus.n; ++j) {
        const double w = (j == 0 || j == taus.n - 1) ? h / 3.0 : (j % 2 == 1 ? 4.0 : 2.0) * h / 3.0;
        s += w * std::norm(v[j]);
    }
    return std::sqrt(s / (2.0 * M_PI));
}

}  // namespace

TEST_CASE("warp built-ins validate and parse") {
    const TimeWarp id = TimeWarp::identity();
    CHECK(id.g(0.7) == doctest::Approx(0.7));
    const TimeWarp cub = TimeWarp::cubic();
    CHECK(cub.g(2.0) == doctest::Approx(8.0 / 3.0));
    CHECK(cub.g_prime(-2.0) == doctest::Approx(4.0));
    CHECK(cub.g_inverse(9.0) == doctest::Approx(3.0));
    const TimeWarp pw = TimeWarp::power(2.0);
    CHECK(pw.g(-2.0) == doctest::Approx(-2.0));
    CHECK(pw.g_prime(-3.0) == doctest::Approx(3.0));

    CHECK(TimeWarp::parse("power:alpha=2.5").growth_exponent() == doctest::Approx(2.5));
    CHECK_THROWS_AS(TimeWarp::parse("quartic"), ValidationError);
    CHECK_THROWS_AS(TimeWarp::power(1.0), ValidationError);
    // Decreasing "warp" must be rejected by construction checks.
    CHECK_THROWS_AS(TimeWarp::custom(
                        "bad", [](double t) { return -t; }, [](double) { return -1.0; }, 1.0, {-1.0, 1.0}),
                    ValidationError);
}

TEST_CASE("custom warp inverse via rootfinding") {
    const TimeWarp w = TimeWarp::custom(
        "sinhwarp", [](double t) { return std::sinh(t); }, [](double t) { return std::cosh(t); }, 1.0,
        {-3.0, 3.0});
    for (double tau : {-5.0, -0.3, 0.0, 1.2, 8.0}) CHECK(std::abs(w.g(w.g_inverse(tau)) - tau) < 1e-10 * (1 + std::abs(tau)));
}

TEST_CASE("lattice validation and resolution rules") {
    CHECK_THROWS_AS(TimeGrid::uniform(0.0, 1.0, 4), ValidationError);
    CHECK_THROWS_AS(TimeGrid::uniform(1.0, 0.0, 5), ValidationError);
    CHECK_THROWS_AS(TauGrid::uniform(-1.0, 5), ValidationError);

    const TimeWarp id = TimeWarp::identity();
    const TimeGrid g = resolved_time_grid(id, 0.0, 1.0, 16.0);
    CHECK(g.n % 2 == 1);
    CHECK(g.step() <= 1.0 / (8.0 * 16.0));

    const TauGrid taus = resolved_tau_grid(16.0, 0.0, 1.0);
    CHECK(taus.tau_max == doctest::Approx(4.0 * 16.0 + 40.0));
    CHECK(taus.step() <= 0.5);

    // Simpson weights integrate cubics exactly.
    const TimeGrid s = TimeGrid::uniform(0.0, 1.0, 9);
    const std::vector<double> w = simpson_weights(s);
    double integral = 0.0;
    for (int i = 0; i < s.n; ++i) integral += w[i] * std::pow(s.node(i), 3);
    CHECK(integral == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("cutoff profile") {
    const CutoffSpec chi{0.4};
    CHECK(chi(0.3) == 1.0);
    CHECK(chi(-0.4) == 1.0);
    CHECK(chi(0.81) == 0.0);
    CHECK(chi(0.6) == doctest::Approx(0.5));  // 1.5 delta: symmetric glue midpoint
    CHECK(bump_profile(1.25) + bump_profile(3.0 - 1.25) == doctest::Approx(1.0));
    for (double x : {1.1, 1.5, 1.9}) {
        CHECK(bump_profile(x) > 0.0);
        CHECK(bump_profile(x) < 1.0);
    }
}

TEST_CASE("modified transform: identity warp reduces to the Fourier transform") {
    const TimeGrid grid = TimeGrid::uniform(-8.0, 8.0, 513);
    const TauGrid taus = TauGrid::uniform(8.0, 257);
    std::vector<cd> u(grid.n);
    for (int i = 0; i < grid.n; ++i) u[i] = std::exp(-0.5 * grid.node(i) * grid.node(i));
    const std::vector<cd> ut = modified_fourier(u, TimeWarp::identity(), grid, taus);
    for (int j = 0; j < taus.n; ++j) {
        const double tau = taus.node(j);
        const double want = kSqrt2Pi * std::exp(-0.5 * tau * tau);
        CHECK(std::abs(ut[j] - cd(want, 0.0)) < 1e-6 * kSqrt2Pi);
    }
}

TEST_CASE("modified transform: cubic-warp Gaussian pair") {
    const TimeWarp w = TimeWarp::cubic();
    const TimeGrid grid = TimeGrid::uniform(-3.6, 3.6, 6001);
    const TauGrid taus = TauGrid::uniform(9.0, 401);
    const std::vector<cd> u = warped_gaussian(w, grid);
    const std::vector<cd> ut = modified_fourier(u, w, grid, taus);
    for (int j = 0; j < taus.n; ++j) {
        const double tau = taus.node(j);
        const double want = kSqrt2Pi * std::exp(-0.5 * tau * tau);
        CHECK(std::abs(ut[j] - cd(want, 0.0)) < 1e-6 * kSqrt2Pi);
    }
}

TEST_CASE("modified transform Plancherel for cubic and power warps") {
    for (const TimeWarp& w : {TimeWarp::cubic(), TimeWarp::power(2.0)}) {
        const double t_end = w.g_inverse(8.0);
        const TimeGrid grid = TimeGrid::uniform(-t_end, t_end, 8193);
        const TauGrid taus = TauGrid::uniform(10.0, 801);
        const std::vector<cd> u = warped_gaussian(w, grid);
        const std::vector<cd> ut = modified_fourier(u, w, grid, taus);

        // || u~ ||_{L^2 tau} vs || u / sqrt(g') ||_{L^2 t}; the pair makes the
        // right side integrable despite g'(0) = 0.
        std::vector<cd> scaled(grid.n);
        for (int i = 0; i < grid.n; ++i) {
            const double gp = w.g_prime(grid.node(i));
            scaled[i] = gp > 0 ? u[i] / std::sqrt(gp) : cd(0.0, 0.0);
        }
        CHECK(rel_err(l2_tau(ut, taus), l2_time(scaled, grid)) < 1e-5);
    }
}

TEST_CASE("inverse modified transform: roundtrip and derivative identity") {
    const TimeWarp w = TimeWarp::cubic();
    const TimeGrid grid = TimeGrid::uniform(-3.6, 3.6, 6001);
    const TauGrid taus = TauGrid::uniform(12.0, 801);
    const std::vector<cd> u = warped_gaussian(w, grid);
    const std::vector<cd> ut = modified_fourier(u, w, grid, taus);
    const std::vector<cd> back = inverse_modified_fourier(ut, w, taus, grid);
    double err = 0.0;
    for (int i = 0; i < grid.n; ++i) err = std::max(err, std::abs(back[i] - u[i]));
    CHECK(err < 1e-4);

    // F(du/dt)(tau) = (-i tau) F(g'u)(tau); du/dt in closed form.
    std::vector<cd> du(grid.n), gpu(grid.n);
    for (int i = 0; i < grid.n; ++i) {
        const double t = grid.node(i);
        const double gt = w.g(t), gp = w.g_prime(t);
        du[i] = (2.0 * t - gt * gp * gp) * std::exp(-0.5 * gt * gt);
        gpu[i] = gp * u[i].real();
    }
    const std::vector<cd> lhs = modified_fourier(du, w, grid, taus);
    const std::vector<cd> rhs = modified_fourier(gpu, w, grid, taus);
    double dev = 0.0;
    for (int j = 0; j < taus.n; ++j)
        dev = std::max(dev, std::abs(lhs[j] - cd(0.0, -taus.node(j)) * rhs[j]));
    CHECK(dev < 1e-4);
}

TEST_CASE("support leakage warning") {
    const TimeGrid grid = TimeGrid::uniform(-1.0, 1.0, 65);
    const TauGrid taus = TauGrid::uniform(4.0, 33);
    std::vector<cd> u(grid.n, cd(1.0, 0.0));  // no decay at endpoints
    std::vector<std::string> warnings;
    (void)modified_fourier(u, TimeWarp::identity(), grid, taus, &warnings);
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("support leakage") != std::string::npos);
}

TEST_CASE("h_pb_g norm") {
    const TimeWarp id = TimeWarp::identity();
    const TimeGrid grid = TimeGrid::uniform(-8.0, 8.0, 1025);
    const TauGrid taus = TauGrid::uniform(10.0, 801);
    std::vector<cd> f(grid.n);
    for (int i = 0; i < grid.n; ++i) f[i] = std::exp(-0.5 * grid.node(i) * grid.node(i));

    // b = 0, p = 2: Plancherel down to the plain L^2 norm.
    CHECK(rel_err(h_pb_g_norm(f, 2.0, 0.0, id, grid, taus), l2_time(f, grid)) < 1e-5);

    // Monotone in b.
    const double n1 = h_pb_g_norm(f, 2.0, 0.25, id, grid, taus);
    const double n2 = h_pb_g_norm(f, 2.0, 0.75, id, grid, taus);
    CHECK(n1 <= n2);

    // Cubic warp against a 10x-resolution quadrature of the same integral.
    const TimeWarp cub = TimeWarp::cubic();
    const TimeGrid tg = TimeGrid::uniform(-3.6, 3.6, 2001);
    const TauGrid tcoarse = TauGrid::uniform(9.0, 401);
    const std::vector<cd> u = warped_gaussian(cub, tg);
    const double coarse = h_pb_g_norm(u, 2.0, 0.5, cub, tg, tcoarse);
    const TimeGrid tg10 = TimeGrid::uniform(-3.6, 3.6, 20001);
    const TauGrid tfine = TauGrid::uniform(9.0, 4001);
    const double fine = h_pb_g_norm(warped_gaussian(cub, tg10), 2.0, 0.5, cub, tg10, tfine);
    CHECK(rel_err(coarse, fine) < 1e-4);
}

TEST_CASE("propagator: identity at t=s, explicit multiplier, group law, unitarity") {
    const TorusGrid g = TorusGrid::square(16);
    const FourierField f = random_field(g, 3);
    const TimeWarp cub = TimeWarp::cubic();

    const FourierField same = propagate(f, cub, 0.37, 0.37);
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) CHECK(same.coeffs()[i] == f.coeffs()[i]);

    // Cubic warp, t=1, s=0, k=(1,1): multiplier e^{-i 2/3}.
    const FourierField m = FourierField::mode(g, {1, 1}, cd(1.0, 0.0));
    const FourierField prop = propagate(m, cub, 1.0, 0.0);
    CHECK(std::abs(prop.coeff({1, 1}) - std::polar(1.0, -2.0 / 3.0)) < 1e-14);

    for (int rep = 0; rep < 8; ++rep) {
        const double r = -1.0 + 2.0 * unit_double(mix64(9, rep));
        const double s = -1.0 + 2.0 * unit_double(mix64(10, rep));
        const double t = -1.0 + 2.0 * unit_double(mix64(11, rep));
        const FourierField one_hop = propagate(f, cub, t, s);
        const FourierField two_hop = propagate(propagate(f, cub, r, s), cub, t, r);
        double err = 0.0;
        for (std::size_t i = 0; i < f.coeffs().size(); ++i)
            err = std::max(err, std::abs(one_hop.coeffs()[i] - two_hop.coeffs()[i]));
        CHECK(err < 1e-12);
        CHECK(rel_err(one_hop.l2_norm(), f.l2_norm()) < 1e-14);
    }
}

TEST_CASE("propagator solves the warped equation (centered differences)") {
    const TorusGrid g = TorusGrid::square(16);
    const TimeWarp cub = TimeWarp::cubic();
    const FourierField phi = FourierField::mode(g, {2, 1}, cd(1.0, 0.0));
    const double t = 0.7, h = 1e-4;
    const FourierField up = propagate(phi, cub, t + h, 0.0);
    const FourierField dn = propagate(phi, cub, t - h, 0.0);
    const FourierField mid = propagate(phi, cub, t, 0.0);
    // residual = i du/dt + g' lap u, mode-wise.
    const cd dudt = (up.coeff({2, 1}) - dn.coeff({2, 1})) / (2.0 * h);
    const cd res = cd(0.0, 1.0) * dudt + cub.g_prime(t) * laplacian_symbol({2, 1}, g) * mid.coeff({2, 1});
    CHECK(std::abs(res) < 1e-6 * phi.l2_norm());
}

TEST_CASE("duhamel: zero forcing, closed-form constant forcing, linearity") {
    const TorusGrid g = TorusGrid::square(8);
    const TimeWarp id = TimeWarp::identity();
    const TimeGrid window = TimeGrid::uniform(0.0, 1.0, 1025);

    const FourierField phi = random_field(g, 17, 2);
    const SpaceTimeField zero_forcing = SpaceTimeField::zero(g, window);
    const FourierField free_only = duhamel(phi, zero_forcing, id, 1.0);
    const FourierField want = propagate(phi, id, 1.0, 0.0);
    for (std::size_t i = 0; i < want.coeffs().size(); ++i)
        CHECK(std::abs(free_only.coeffs()[i] - want.coeffs()[i]) < 1e-14);

    // phi = 0, constant single-mode forcing c: integral c (1 - e^{-i t |k|^2}) / (i |k|^2).
    const std::array<int, 2> k{2, 1};
    const cd c(0.8, -0.4);
    std::vector<FourierField> slices(window.n, FourierField::mode(g, k, c));
    const SpaceTimeField forcing = SpaceTimeField::from_slices(window, std::move(slices));
    const FourierField out = duhamel(FourierField::zero(g), forcing, id, 1.0);
    const double k2 = 5.0;
    const cd expect = c * (cd(1.0, 0.0) - std::polar(1.0, -k2)) / cd(0.0, k2);
    CHECK(std::abs(out.coeff(k) - expect) < 1e-8);

    // Linearity in (phi, forcing).
    const FourierField phi2 = random_field(g, 18, 2);
    SpaceTimeField f1 = SpaceTimeField::zero(g, window), f2 = SpaceTimeField::zero(g, window);
    for (int i = 0; i < window.n; ++i) {
        f1.slice(i) = random_field(g, mix64(100, i), 2);
        f2.slice(i) = random_field(g, mix64(200, i), 2);
    }
    const cd a(0.3, 0.1), b(-0.7, 0.45);
    SpaceTimeField combo = f1;
    for (int i = 0; i < window.n; ++i) combo.slice(i) = a * f1.slice(i) + b * f2.slice(i);
    const FourierField lhs = duhamel(a * phi + b * phi2, combo, id, 1.0);
    const FourierField r1 = duhamel(phi, f1, id, 1.0), r2 = duhamel(phi2, f2, id, 1.0);
    double err = 0.0;
    for (std::size_t i = 0; i < lhs.coeffs().size(); ++i)
        err = std::max(err, std::abs(lhs.coeffs()[i] - (a * r1.coeffs()[i] + b * r2.coeffs()[i])));
    CHECK(err < 1e-12);

    CHECK_THROWS_AS(duhamel(phi, forcing, id, 1.5), ValidationError);
}

TEST_CASE("free evolution trajectory matches propagate slice-wise") {
    const TorusGrid g = TorusGrid::square(8);
    const TimeWarp w = TimeWarp::power(2.0);
    const TimeGrid times = TimeGrid::uniform(-0.5, 0.5, 33);
    const FourierField phi = random_field(g, 40, 3);
    const SpaceTimeField traj = free_evolution(phi, w, times);
    const FourierField direct = propagate(phi, w, times.node(7), 0.0);
    double err = 0.0;
    for (std::size_t i = 0; i < direct.coeffs().size(); ++i)
        err = std::max(err, std::abs(traj.slice(7).coeffs()[i] - direct.coeffs()[i]));
    CHECK(err == 0.0);
}
