#include "warplab/space_time.hpp"

#include <algorithm>
#include <cmath>

#include "warplab/errors.hpp"
#include "warplab/propagator.hpp"

namespace warplab {

SpaceTimeField SpaceTimeField::zero(const TorusGrid& grid, const TimeGrid& times) {
    SpaceTimeField f;
    f.grid_ = grid;
    f.times_ = times;
    f.slices_.assign(times.n, FourierField::zero(grid));
    return f;
}

SpaceTimeField SpaceTimeField::from_slices(const TimeGrid& times, std::vector<FourierField> slices) {
    if (slices.size() != static_cast<std::size_t>(times.n))
        throw ValidationError("space-time field: slice count does not match the time lattice");
    for (const FourierField& s : slices)
        if (s.grid() != slices.front().grid()) throw ValidationError("space-time field: slices on different grids");
    SpaceTimeField f;
    f.grid_ = slices.front().grid();
    f.times_ = times;
    f.slices_ = std::move(slices);
    return f;
}

SpaceTimeField& SpaceTimeField::scale_in_time(const std::function<double(double)>& scale) {
    for (int i = 0; i < times_.n; ++i) slices_[i] *= cd(scale(times_.node(i)), 0.0);
    return *this;
}

SpaceTimeField& SpaceTimeField::operator*=(cd s) {
    for (FourierField& f : slices_) f *= s;
    return *this;
}

SpaceTimeField& SpaceTimeField::operator-=(const SpaceTimeField& o) {
    if (grid_ != o.grid_ || times_.n != o.times_.n)
        throw ValidationError("space-time field arithmetic: shape mismatch");
    for (int i = 0; i < times_.n; ++i) slices_[i] -= o.slices_[i];
    return *this;
}

SpaceTimeField& SpaceTimeField::operator+=(const SpaceTimeField& o) {
    if (grid_ != o.grid_ || times_.n != o.times_.n)
        throw ValidationError("space-time field arithmetic: shape mismatch");
    for (int i = 0; i < times_.n; ++i) slices_[i] += o.slices_[i];
    return *this;
}

double SpaceTimeField::sup_l2_distance(const SpaceTimeField& o) const {
    if (grid_ != o.grid_ || times_.n != o.times_.n)
        throw ValidationError("space-time field distance: shape mismatch");
    double sup = 0.0;
    for (int i = 0; i < times_.n; ++i) {
        FourierField d = slices_[i];
        d -= o.slices_[i];
        sup = std::max(sup, d.l2_norm());
    }
    return sup;
}

int SpaceTimeField::active_band(double rel_tol) const {
    int band = 0;
    for (const FourierField& s : slices_) band = std::max(band, s.active_band(rel_tol));
    return band;
}

SpaceTimeField pointwise_product(const SpaceTimeField& a, const SpaceTimeField& b) {
    if (a.grid() != b.grid() || a.times().n != b.times().n)
        throw ValidationError("pointwise_product: shape mismatch");
    std::vector<FourierField> slices;
    slices.reserve(a.slice_count());
    for (int i = 0; i < a.slice_count(); ++i) {
        std::vector<cd> sa = inverse_transform(a.slice(i));
        const std::vector<cd> sb = inverse_transform(b.slice(i));
        for (std::size_t m = 0; m < sa.size(); ++m) sa[m] *= sb[m];
        slices.push_back(forward_transform(a.grid(), sa));
    }
    return SpaceTimeField::from_slices(a.times(), std::move(slices));
}

SpaceTimeField conjugate(const SpaceTimeField& a) {
    std::vector<FourierField> slices;
    slices.reserve(a.slice_count());
    for (int i = 0; i < a.slice_count(); ++i) {
        std::vector<cd> s = inverse_transform(a.slice(i));
        for (cd& v : s) v = std::conj(v);
        slices.push_back(forward_transform(a.grid(), s));
    }
    return SpaceTimeField::from_slices(a.times(), std::move(slices));
}

SpaceTimeField free_evolution(const FourierField& datum, const TimeWarp& warp, const TimeGrid& times) {
    std::vector<FourierField> slices;
    slices.reserve(times.n);
    for (int i = 0; i < times.n; ++i) slices.push_back(propagate(datum, warp, times.node(i), 0.0));
    return SpaceTimeField::from_slices(times, std::move(slices));
}

}  // namespace warplab
