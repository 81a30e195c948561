#include "warplab/cutoff.hpp"

#include <cmath>

#include "warplab/errors.hpp"

namespace warplab {

namespace {
double glue(double u) { return u > 0.0 ? std::exp(-1.0 / u) : 0.0; }
}

double bump_profile(double x) {
    const double a = std::abs(x);
    if (a <= 1.0) return 1.0;
    if (a >= 2.0) return 0.0;
    const double up = glue(2.0 - a);
    const double down = glue(a - 1.0);
    return up / (up + down);
}

double CutoffSpec::operator()(double t) const {
    if (!(delta > 0.0)) throw ValidationError("cutoff: delta must be positive");
    return bump_profile(t / delta);
}

}  // namespace warplab
