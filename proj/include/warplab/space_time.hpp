#pragma once

#include <functional>
#include <vector>

#include "warplab/field.hpp"
#include "warplab/time_warp.hpp"

namespace warplab {

// Trajectory of Fourier fields on a uniform time lattice; every slice shares
// one grid.  The substrate for space-time norms, residual checks, and solver
// output.
class SpaceTimeField {
  public:
    SpaceTimeField() = default;

    static SpaceTimeField zero(const TorusGrid& grid, const TimeGrid& times);
    static SpaceTimeField from_slices(const TimeGrid& times, std::vector<FourierField> slices);

    const TorusGrid& grid() const { return grid_; }
    const TimeGrid& times() const { return times_; }
    int slice_count() const { return times_.n; }
    const FourierField& slice(int i) const { return slices_[i]; }
    FourierField& slice(int i) { return slices_[i]; }

    // Multiply slice i by scale(t_i); returns *this for chaining.
    SpaceTimeField& scale_in_time(const std::function<double(double)>& scale);
    SpaceTimeField& operator*=(cd s);
    SpaceTimeField& operator-=(const SpaceTimeField& o);
    SpaceTimeField& operator+=(const SpaceTimeField& o);

    double sup_l2_distance(const SpaceTimeField& o) const;
    int active_band(double rel_tol = 1e-13) const;

  private:
    TorusGrid grid_;
    TimeGrid times_;
    std::vector<FourierField> slices_;
};

// Pointwise (in space and time) product; exact when the grid resolves the
// sum of the factors' bands.
SpaceTimeField pointwise_product(const SpaceTimeField& a, const SpaceTimeField& b);
SpaceTimeField conjugate(const SpaceTimeField& a);

// Slices S(t_i, 0) datum: the free evolution along the warp.
SpaceTimeField free_evolution(const FourierField& datum, const TimeWarp& warp, const TimeGrid& times);

}
