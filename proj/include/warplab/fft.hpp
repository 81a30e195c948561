#pragma once

#include <complex>

namespace warplab::fft {

using cd = std::complex<double>;

// Unnormalized in-place complex DFTs.  Forward kernel is e^{-i 2pi k m / M}
// per axis, inverse is e^{+i 2pi k m / M}; inverse(forward(x)) = M_total * x.
// Layout is row-major [m0][m1] for the 2-D case.
//
// Backed by FFTW with a process-wide plan cache (FFTW_ESTIMATE|FFTW_UNALIGNED,
// so plans are reusable on any buffer and identical between runs).  Plan
// creation is mutex-guarded; execution is concurrency-safe.
void forward_1d(cd* data, int n);
void inverse_1d(cd* data, int n);
void forward_2d(cd* data, int n0, int n1);
void inverse_2d(cd* data, int n0, int n1);

}
