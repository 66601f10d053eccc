#ifndef MDMVFIF_FFT_HPP
#define MDMVFIF_FFT_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace mdmvfif::fft {

inline constexpr int forward = -1;
inline constexpr int backward = +1;

/// Unnormalized complex DFT applied in place along each axis in `axes` of a
/// row-major array with shape `dims`. The transform along one axis is run
/// independently over every 1-D line; lines are distributed over the default
/// pool. Backward is the unscaled inverse: callers divide by the product of
/// the transformed extents.
void transform(std::complex<double>* data,
               std::span<const std::size_t> dims,
               std::span<const std::size_t> axes,
               int sign);

/// Convenience: full n-D transform over all axes.
void transform_all(std::complex<double>* data,
                   std::span<const std::size_t> dims,
                   int sign);

} // namespace mdmvfif::fft

#endif
