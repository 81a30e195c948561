#pragma once

namespace warplab {

// C-infinity glue h(2-|x|)/(h(2-|x|)+h(|x|-1)) with h(u)=e^{-1/u} for u>0:
// psi == 1 on [-1,1], == 0 outside [-2,2], values in [0,1], psi(1.5) = 1/2.
double bump_profile(double x);

// chi(t) = psi(t/delta): identically 1 on [-delta,delta], supported on
// [-2 delta, 2 delta].
struct CutoffSpec {
    double delta = 1.0;
    double operator()(double t) const;
};

}
