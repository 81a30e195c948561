#pragma once

#include <span>
#include <string>
#include <vector>

#include "warplab/field.hpp"
#include "warplab/time_warp.hpp"

namespace warplab {

// Time transform subordinate to the warp g, with the convention
//
//   (F u)(tau)      = int e^{+i g(t) tau} u(t) dt,
//   (F^-1 v)(t)     = g'(t) (2pi)^{-1} int e^{-i g(t) tau} v(tau) dtau,
//
// and every tau-side norm integral carrying the measure dtau/(2pi).  Under
// this pairing the transform inverts exactly, Plancherel reads
// ||u~||_{L^2(tau)} = ||u/sqrt(g')||_{L^2(t)}, the derivative identity is
// F(du/dt) = (-i tau) F(g'u), and the free evolution of
// i du/dt + g' Lap u = 0 concentrates at tau = +|k|^2.  The identity warp
// recovers the ordinary Fourier transform.
//
// Integrals are composite-Simpson quadratures on the given lattices; inputs
// are expected to have decayed below 1e-12 (relative) at the window
// endpoints, otherwise a "support leakage" warning is appended.

std::vector<cd> modified_fourier(std::span<const cd> u, const TimeWarp& warp, const TimeGrid& times,
                                 const TauGrid& taus, std::vector<std::string>* warnings = nullptr);

std::vector<cd> inverse_modified_fourier(std::span<const cd> v, const TimeWarp& warp, const TauGrid& taus,
                                         const TimeGrid& times, std::vector<std::string>* warnings = nullptr);

// || f ||_{H^{p,b}_g} = ( (2pi)^{-1} int <tau>^{pb} |f~(tau)|^p dtau )^{1/p}.
double h_pb_g_norm(std::span<const cd> f, double p, double b, const TimeWarp& warp, const TimeGrid& times,
                   const TauGrid& taus);

// Support-leakage check shared by the transform-based norms.
bool has_support_leakage(std::span<const cd> u, double rel_tol = 1e-12);

}
