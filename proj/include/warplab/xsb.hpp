#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "warplab/field.hpp"
#include "warplab/reduction.hpp"
#include "warplab/space_time.hpp"
#include "warplab/time_warp.hpp"

namespace warplab {

// Space-time norms
//
//   ||u||^2 = volume^{-1} sum_k (1+|k|_L)^{2s} (2pi)^{-1}
//             int <tau - |k|_L^2>^{2b} |u~(tau,k)|^2 dtau,
//
// with u~ the per-mode time transform (kernel e^{+i g(t) tau}; the identity
// warp gives the standard transform).  The tilde variant measures g'(t) u.
// Trajectories are expected time-localized inside their window; endpoint
// mass raises a "support leakage" warning.
//
// The tau integral runs on the working TauGrid.  Because localized fields
// concentrate near the paraboloid tau = |k|^2, nodes outside a per-mode
// decay window contribute below quadrature tolerance and may be skipped;
// `TauWindow` controls that cut.  halfwidth <= 0 integrates the full grid
// (the oracle-grade setting).  `pad` widens the window for fields whose
// tau-content is displaced (products, modulations).

struct TauWindow {
    double halfwidth = 0.0;
    double pad = 0.0;
};

// Lazily generated trajectory: fill(i, out) writes slice i's coefficients in
// storage order.  Use materialize() for in-memory fields.
struct SliceStream {
    TorusGrid grid;
    TimeGrid times;
    std::function<void(int, std::vector<cd>&)> fill;
};

SliceStream materialize(const SpaceTimeField& u);

// Core accumulator behind all the norms below.  `paraboloid` selects the
// weight center (|k|_L^2 when true, 0 for plain <tau>^{2b} weights); `xs`
// is the spatial exponent; `tilde` multiplies slices by g'(t).  `active`
// optionally restricts the mode set (storage indices); when absent a
// detection pass finds the nonzero modes.
double xsb_stream_norm(const SliceStream& u, double xs, double b, const TimeWarp* warp, const TauGrid& taus,
                       bool tilde, bool paraboloid, const TauWindow& window = {},
                       const std::vector<std::size_t>* active = nullptr,
                       std::vector<std::string>* warnings = nullptr);

double xsb_norm(const SpaceTimeField& u, double s, double b, const TauGrid& taus, const TauWindow& window = {},
                std::vector<std::string>* warnings = nullptr);

double xsb_g_norm(const SpaceTimeField& u, double s, double b, const TimeWarp& warp, const TauGrid& taus,
                  const TauWindow& window = {}, std::vector<std::string>* warnings = nullptr);

double xtilde_g_norm(const SpaceTimeField& u, double s, double b, const TimeWarp& warp, const TauGrid& taus,
                     const TauWindow& window = {}, std::vector<std::string>* warnings = nullptr);

// Mixed Sobolev H^{p1}_t H^{s1}_x norm (weight <tau>^{2 p1} (1+|k|)^{2 s1});
// pass a warp for the modified-transform variant.
double mixed_sobolev_norm(const SpaceTimeField& u, double p1, double s1, const TimeWarp* warp,
                          const TauGrid& taus, const TauWindow& window = {});

// One-dimensional helper: ((2pi)^{-1} int <tau - mu>^{2b} |h~(tau)|^2 dtau)^{1/2}
// for time samples h; the tensor-factorization oracle and scalar shortcuts.
double time_weight_norm(std::span<const cd> h, double b, double mu, const TimeWarp* warp, const TimeGrid& times,
                        const TauGrid& taus);

// Norms of gauge/coordinate-twisted spaces: pull the trajectory back through
// alpha if a reduction is present, multiply by e^{phi}, then apply the
// selected base norm.  phi defaults to the reduction's gauge when a
// reduction is given, else to zero.
enum class TwistBase { standard, warped, warped_tilde };

struct TwistSpec {
    TwistBase base = TwistBase::standard;
    const TimeWarp* warp = nullptr;           // required for warped bases
    const Reduction* reduction = nullptr;     // optional alpha-map
    const std::vector<double>* phi = nullptr; // samples on the target grid
};

double twisted_norm(const SpaceTimeField& u, double s, double b, const TwistSpec& twist, const TauGrid& taus,
                    const TauWindow& window = {});

}
