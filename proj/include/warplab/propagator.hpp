#pragma once

#include "warplab/field.hpp"
#include "warplab/space_time.hpp"
#include "warplab/time_warp.hpp"

namespace warplab {

// Solution operator of i du/dt + g'(t) Lap u = 0: multiplies mode k by
// e^{+i (g(t)-g(s)) lap_symbol(k)} = e^{-i (g(t)-g(s)) |k|_L^2}.  Satisfies
// S(t,t) = I and S(t,s) = S(t,r) S(r,s) exactly and preserves the L^2 norm.
FourierField propagate(const FourierField& phi, const TimeWarp& warp, double t, double s);

// S(t) phi + int_0^t S(t,s) forcing(s) ds with mode-wise Simpson quadrature.
// This is the plain linear combination; to solve i du/dt + g' Lap u = f pass
// forcing = -i f (inverting the i in front of du/dt contributes the -i).
// Requires the forcing window to contain [0, t] (either sign of t).
FourierField duhamel(const FourierField& phi, const SpaceTimeField& forcing, const TimeWarp& warp, double t);

}
