#include "warplab/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "warplab/errors.hpp"
#include "warplab/fft.hpp"

namespace warplab {

namespace {

const double kTwoPi = 2.0 * M_PI;

// Series coefficients c_k (f = sum c_k e^{ikx}) of real samples on [0,2pi).
std::vector<cd> series_coefficients(const std::vector<double>& samples) {
    const int n = static_cast<int>(samples.size());
    std::vector<cd> buf(samples.begin(), samples.end());
    fft::forward_1d(buf.data(), n);
    for (cd& c : buf) c /= static_cast<double>(n);
    buf[n / 2] = 0.0;  // drop Nyquist
    return buf;
}

// Spectral derivative of real axis samples with circumference L.
std::vector<double> spectral_derivative(const std::vector<double>& samples, double L) {
    const int n = static_cast<int>(samples.size());
    std::vector<cd> buf(samples.begin(), samples.end());
    fft::forward_1d(buf.data(), n);
    for (int i = 0; i < n; ++i) {
        const int k = i < n / 2 ? i : i - n;
        buf[i] *= cd(0.0, kTwoPi * k / L);
    }
    buf[n / 2] = 0.0;
    fft::inverse_1d(buf.data(), n);
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = buf[i].real() / n;
    return out;
}

int check_pow2(std::size_t n, const char* what) {
    if (n < 8 || (n & (n - 1)) != 0)
        throw ValidationError(std::string(what) + ": sample count must be a power of two >= 8");
    return static_cast<int>(n);
}

}  // namespace

// ---------------------------------------------------------------------------
// CoefficientFunction
// ---------------------------------------------------------------------------

CoefficientFunction CoefficientFunction::constant(double c) {
    CoefficientFunction f;
    std::ostringstream label;
    label << "const:" << c;
    f.label_ = label.str();
    f.fn_ = [c](double) { return c; };
    f.dfn_ = [](double) { return 0.0; };
    f.min_value_ = c;
    f.max_value_ = c;
    return f;
}

CoefficientFunction CoefficientFunction::cosine(double a0, double a1) {
    CoefficientFunction f;
    std::ostringstream label;
    label << "cos:" << a0 << "," << a1;
    f.label_ = label.str();
    f.fn_ = [a0, a1](double x) { return a0 + a1 * std::cos(x); };
    f.dfn_ = [a1](double x) { return -a1 * std::sin(x); };
    f.min_value_ = a0 - std::abs(a1);
    f.max_value_ = a0 + std::abs(a1);
    return f;
}

CoefficientFunction CoefficientFunction::from_samples(std::vector<double> samples, std::string label) {
    const int n = check_pow2(samples.size(), "coefficient table");
    CoefficientFunction f;
    f.label_ = std::move(label);
    auto coeffs = std::make_shared<std::vector<cd>>(series_coefficients(samples));
    f.min_value_ = *std::min_element(samples.begin(), samples.end());
    f.max_value_ = *std::max_element(samples.begin(), samples.end());
    f.fn_ = [coeffs, n](double x) {
        // Trigonometric interpolation, symmetric mode range.
        cd acc(0.0, 0.0);
        for (int i = 0; i < n; ++i) {
            const int k = i < n / 2 ? i : i - n;
            acc += (*coeffs)[i] * std::polar(1.0, k * x);
        }
        return acc.real();
    };
    f.dfn_ = [coeffs, n](double x) {
        cd acc(0.0, 0.0);
        for (int i = 0; i < n; ++i) {
            const int k = i < n / 2 ? i : i - n;
            acc += (*coeffs)[i] * cd(0.0, k) * std::polar(1.0, k * x);
        }
        return acc.real();
    };
    return f;
}

CoefficientFunction CoefficientFunction::parse(const std::string& spec) {
    auto split_args = [](const std::string& body) {
        std::vector<double> vals;
        std::stringstream ss(body);
        std::string item;
        while (std::getline(ss, item, ',')) vals.push_back(std::stod(item));
        return vals;
    };
    try {
        if (spec.rfind("const:", 0) == 0) {
            const auto v = split_args(spec.substr(6));
            if (v.size() != 1) throw ValidationError("");
            return constant(v[0]);
        }
        if (spec.rfind("cos:", 0) == 0) {
            const auto v = split_args(spec.substr(4));
            if (v.size() != 2) throw ValidationError("");
            return cosine(v[0], v[1]);
        }
    } catch (const std::exception&) {
        throw ValidationError("coefficient spec: cannot parse '" + spec + "'");
    }
    throw ValidationError("coefficient spec: unknown '" + spec + "' (expected const:c | cos:a0,a1)");
}

void CoefficientFunction::validate(int resolution) const {
    const int n_check = 4096;
    double lo = fn_(0.0);
    for (int i = 1; i < n_check; ++i) lo = std::min(lo, fn_(kTwoPi * i / n_check));
    if (!(lo > 0.0))
        throw ValidationError("coefficient '" + label_ + "': not strictly positive (min sampled value " +
                              std::to_string(lo) + ")");

    std::vector<double> samples(resolution);
    for (int i = 0; i < resolution; ++i) samples[i] = fn_(kTwoPi * i / resolution);
    const std::vector<cd> c = series_coefficients(samples);
    double total = 0.0, tail = 0.0;
    for (int i = 0; i < resolution; ++i) {
        const int k = i < resolution / 2 ? i : i - resolution;
        const double m = std::norm(c[i]);
        total += m;
        if (std::abs(k) > resolution / 4) tail += m;
    }
    if (tail > 1e-10 * total)
        throw ValidationError("coefficient '" + label_ + "': spectral tail " + std::to_string(tail / total) +
                              " of total mass at resolution " + std::to_string(resolution) +
                              " (function too rough)");
}

// ---------------------------------------------------------------------------
// AxisReduction
// ---------------------------------------------------------------------------

AxisReduction::AxisReduction(CoefficientFunction a, int resolution, double tol)
    : a_(std::move(a)), resolution_(resolution), tol_(tol) {
    check_pow2(static_cast<std::size_t>(resolution), "axis reduction resolution");
    a_.validate(resolution);

    std::vector<double> f(resolution);
    for (int i = 0; i < resolution; ++i) f[i] = 1.0 / std::sqrt(a_(kTwoPi * i / resolution));
    fc_ = series_coefficients(f);
    mean_ = fc_[0].real();
    L_ = mean_ * kTwoPi;
    alpha_prime_origin_ = std::sqrt(a_(0.0));
}

double AxisReduction::A(double x) const {
    // Exact antiderivative of the trigonometric interpolant of a^{-1/2}:
    // A(x) = c0 x + sum_{k != 0} c_k (e^{ikx} - 1) / (ik).
    cd acc(0.0, 0.0);
    const int n = resolution_;
    for (int i = 1; i < n; ++i) {
        if (i == n / 2) continue;
        const int k = i < n / 2 ? i : i - n;
        acc += fc_[i] * (std::polar(1.0, k * x) - 1.0) / cd(0.0, k);
    }
    return mean_ * x + acc.real();
}

double AxisReduction::alpha(double y) const {
    // Reduce to the fundamental cell using alpha(y + nL) = alpha(y) + 2 pi n.
    const double n_cells = std::floor(y / L_);
    const double y0 = y - n_cells * L_;
    double lo = 0.0, hi = kTwoPi;
    double x = y0 / mean_;  // first guess: invert the mean part
    x = std::clamp(x, lo, hi);
    for (int iter = 0; iter < 100; ++iter) {
        const double err = A(x) - y0;
        if (std::abs(err) <= tol_) break;
        if (err > 0)
            hi = x;
        else
            lo = x;
        const double d = 1.0 / std::sqrt(a_(x));
        double next = x - err / d;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        x = next;
    }
    return x + kTwoPi * n_cells;
}

double AxisReduction::alpha_prime(double y) const { return std::sqrt(a_(alpha(y))); }

double AxisReduction::phi(double y) const { return -0.5 * std::log(alpha_prime(y) / alpha_prime_origin_); }

double AxisReduction::phi_prime(double y) const {
    const double ay = alpha(y);
    return -a_.derivative(ay) / (4.0 * std::sqrt(a_(ay)));
}

// ---------------------------------------------------------------------------
// Reduction
// ---------------------------------------------------------------------------

Reduction build_reduction(std::vector<CoefficientFunction> a, int resolution, double tol,
                          std::array<int, 2> original_modes, std::array<int, 2> reduced_modes) {
    if (a.empty() || a.size() > 2) throw ValidationError("build_reduction: need one coefficient per axis (dim 1 or 2)");
    if (!(tol > 0.0)) throw ValidationError("build_reduction: tol must be positive");
    const int dim = static_cast<int>(a.size());

    Reduction red;
    for (int j = 0; j < dim; ++j) red.axes_.emplace_back(std::move(a[j]), resolution, tol);

    red.original_grid_ = dim == 1 ? TorusGrid::line(kTwoPi, original_modes[0])
                                  : TorusGrid::plane(kTwoPi, original_modes[0], kTwoPi, original_modes[1]);
    red.reduced_grid_ = dim == 1
                            ? TorusGrid::line(red.axes_[0].circumference(), reduced_modes[0])
                            : TorusGrid::plane(red.axes_[0].circumference(), reduced_modes[0],
                                               red.axes_[1].circumference(), reduced_modes[1]);

    // Per-axis node tables on the reduced grid, with an inversion-quality
    // check: A(alpha(y_m)) must return y_m to within tol.
    std::array<std::vector<double>, 2> phi_prime_spectral;
    std::array<std::vector<double>, 2> beta_axis;
    for (int j = 0; j < dim; ++j) {
        const AxisReduction& ax = red.axes_[j];
        const int m = red.reduced_grid_.modes[j];
        const double L = red.reduced_grid_.length[j];
        auto& alpha_nodes = red.alpha_nodes_[j];
        auto& phi_nodes = red.phi_axis_nodes_[j];
        alpha_nodes.resize(m);
        phi_nodes.resize(m);
        double worst = 0.0;
        for (int i = 0; i < m; ++i) {
            const double y = L * i / m;
            alpha_nodes[i] = ax.alpha(y);
            phi_nodes[i] = ax.phi(y);
            worst = std::max(worst, std::abs(ax.A(alpha_nodes[i]) - y));
        }
        if (worst > 10.0 * tol)
            throw NumericalError("build_reduction: inversion residual " + std::to_string(worst) +
                                 " exceeds tolerance on axis " + std::to_string(j));

        // beta_j = phi_j'' + (phi_j')^2 by spectral differentiation of the
        // sampled gauge exponent.
        const std::vector<double> d1 = spectral_derivative(phi_nodes, L);
        const std::vector<double> d2 = spectral_derivative(d1, L);
        phi_prime_spectral[j] = d1;
        beta_axis[j].resize(m);
        for (int i = 0; i < m; ++i) beta_axis[j][i] = d2[i] + d1[i] * d1[i];
    }

    const std::size_t points = red.reduced_grid_.point_count();
    red.phi_.resize(points);
    red.beta_.resize(points);
    red.weight_.resize(points);
    const int m1 = dim == 2 ? red.reduced_grid_.modes[1] : 1;
    for (std::size_t idx = 0; idx < points; ++idx) {
        const int i0 = static_cast<int>(idx) / m1;
        const int i1 = static_cast<int>(idx) % m1;
        double phi = red.phi_axis_nodes_[0][i0];
        double beta = beta_axis[0][i0];
        if (dim == 2) {
            phi += red.phi_axis_nodes_[1][i1];
            beta += beta_axis[1][i1];
        }
        red.phi_[idx] = phi;
        red.beta_[idx] = beta;
        red.weight_[idx] = std::exp(-2.0 * phi);
    }
    return red;
}

std::vector<cd> Reduction::pullback_samples(const FourierField& u) const {
    if (u.grid().dim != dim()) throw ValidationError("pullback: dimension mismatch");
    const std::vector<double> empty;
    return evaluate_on_lattice(u, alpha_nodes_[0], dim() == 2 ? alpha_nodes_[1] : empty);
}

namespace {

// Aliasing guard for the coordinate change: the target Nyquist must cover the
// source's significant content (relative level 1e-8; the compositions are
// analytic, so mass below that cannot corrupt transports at the 1e-8 scale)
// after the frequency stretch of the map.  The per-axis stretch is bounded by
// max|dx/dy| = sqrt(a_max) going forward and max|dy/dx| = 1/sqrt(a_min)
// going back.
void check_transport_resolution(const FourierField& src, const Reduction& red, bool forward,
                                const char* what) {
    const TorusGrid& target = forward ? red.reduced_grid() : red.original_grid();
    const TorusGrid& source = src.grid();
    for (int j = 0; j < target.dim; ++j) {
        const double a_min = red.axis(j).coefficient().min_value();
        const double a_max = red.axis(j).coefficient().max_value();
        const int band = src.active_band_axis(j, 1e-8);
        // source dual frequency of the band edge, stretched by the map slope
        const double freq = 2.0 * M_PI * band / source.length[j];
        const double stretched = freq * (forward ? std::sqrt(a_max) : 1.0 / std::sqrt(a_min));
        const int needed = static_cast<int>(std::ceil(stretched * target.length[j] / (2.0 * M_PI))) + 2;
        if (target.modes[j] / 2 < needed)
            throw NumericalError(std::string(what) + ": target grid (M=" + std::to_string(target.modes[j]) +
                                 ") under-resolves the transported band on axis " + std::to_string(j) +
                                 " (need M >= " + std::to_string(2 * needed) + ")");
    }
}

}  // namespace

FourierField forward_transport(const FourierField& u0, const Reduction& red) {
    check_transport_resolution(u0, red, true, "forward_transport");
    std::vector<cd> w = red.pullback_samples(u0);
    for (std::size_t i = 0; i < w.size(); ++i) w[i] *= std::exp(red.phi()[i]);
    return forward_transform(red.reduced_grid(), w);
}

FourierField backward_transport(const FourierField& w, const Reduction& red) {
    check_transport_resolution(w, red, false, "backward_transport");
    const TorusGrid& orig = red.original_grid();
    const int dim = red.dim();

    std::array<std::vector<double>, 2> y_nodes;  // A_j(x_m) per axis
    std::array<std::vector<double>, 2> phi_at;
    for (int j = 0; j < dim; ++j) {
        const int m = orig.modes[j];
        y_nodes[j].resize(m);
        phi_at[j].resize(m);
        for (int i = 0; i < m; ++i) {
            const double x = orig.collocation(j, i);
            y_nodes[j][i] = red.axis(j).A(x);
            phi_at[j][i] = red.axis(j).phi(y_nodes[j][i]);
        }
    }
    std::vector<cd> samples =
        evaluate_on_lattice(w, y_nodes[0], dim == 2 ? y_nodes[1] : std::vector<double>{});
    const int m1 = dim == 2 ? orig.modes[1] : 1;
    for (std::size_t idx = 0; idx < samples.size(); ++idx) {
        const int i0 = static_cast<int>(idx) / m1;
        const int i1 = static_cast<int>(idx) % m1;
        double phi = phi_at[0][i0];
        if (dim == 2) phi += phi_at[1][i1];
        samples[idx] *= std::exp(-phi);
    }
    return forward_transform(orig, samples);
}

double residual_original(const SpaceTimeField& u, const std::vector<CoefficientFunction>& a, int p,
                         bool nonlinear_rhs) {
    const TimeGrid& times = u.times();
    if (times.n < 5) throw ValidationError("residual_original: need at least 5 time nodes");
    const TorusGrid& grid = u.grid();
    const int dim = grid.dim;
    if (static_cast<int>(a.size()) != dim) throw ValidationError("residual_original: one coefficient per axis");

    // a_j at the collocation nodes.
    std::array<std::vector<double>, 2> coeff;
    for (int j = 0; j < dim; ++j) {
        coeff[j].resize(grid.modes[j]);
        for (int i = 0; i < grid.modes[j]; ++i) coeff[j][i] = a[j](grid.collocation(j, i));
    }

    // Elliptic part sum_j a_j(x_j) d^2_{x_j} u per slice (spectral derivative,
    // pointwise multiply), plus samples of the slice itself.
    const int n = times.n;
    std::vector<std::vector<cd>> samples(n), elliptic(n);
    const int m1 = dim == 2 ? grid.modes[1] : 1;
    for (int i = 0; i < n; ++i) {
        samples[i] = inverse_transform(u.slice(i));
        elliptic[i].assign(grid.point_count(), cd(0.0, 0.0));
        for (int j = 0; j < dim; ++j) {
            std::vector<cd> d2 = u.slice(i).coeffs();
            for (std::size_t m = 0; m < d2.size(); ++m) {
                const auto k = grid.mode_at(m);
                const double kj = grid.dual_frequency(j, k[j]);
                d2[m] *= -kj * kj;
            }
            const std::vector<cd> d2s = inverse_transform(FourierField::from_coeffs(grid, std::move(d2)));
            for (std::size_t m = 0; m < d2s.size(); ++m) {
                const int i0 = static_cast<int>(m) / m1;
                const int i1 = static_cast<int>(m) % m1;
                elliptic[i][m] += coeff[j][j == 0 ? i0 : i1] * d2s[m];
            }
        }
    }

    const double h = times.step();
    double worst = 0.0;
    std::vector<cd> res(grid.point_count());
    for (int i = 2; i < n - 2; ++i) {
        for (std::size_t m = 0; m < res.size(); ++m) {
            const cd dudt =
                (-samples[i + 2][m] + 8.0 * samples[i + 1][m] - 8.0 * samples[i - 1][m] + samples[i - 2][m]) /
                (12.0 * h);
            cd r = cd(0.0, 1.0) * dudt + elliptic[i][m];
            if (nonlinear_rhs) r -= samples[i][m] * std::pow(std::abs(samples[i][m]), p - 1);
            res[m] = r;
        }
        worst = std::max(worst, lp_space_norm(res, 2.0, grid));
    }
    return worst;
}

}  // namespace warplab
