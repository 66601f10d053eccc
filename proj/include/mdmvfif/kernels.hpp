#ifndef MDMVFIF_KERNELS_HPP
#define MDMVFIF_KERNELS_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace mdmvfif {

/// Radial kernel profile k(u): even, nonnegative, continuous, k(u) = 0 for
/// |u| >= 1. Plugging a different profile (e.g. a tabulated Fokker-Planck
/// curve) swaps the filter family without touching any other module.
using KernelProfile = std::function<double(double)>;

/// C-infinity compactly supported mollifier exp(1/(u^2-1)), the default
/// profile. Satisfies every property the filtering stages rely on:
/// smoothness, evenness, compact support, strict decay from the center.
double mollifier_profile(double u);

/// 1-D smoothing kernel of half-support L: 2L+1 nonnegative weights, even
/// around the center, unit sum. Sampled at u = j/(L+1) so the boundary zeros
/// of the profile fall strictly outside the sampled points.
struct Kernel1D {
    std::size_t half_length = 0;
    std::vector<double> weights; // length 2*half_length+1
};

/// n-D smoothing kernel with per-axis half-supports. Weights are the radial
/// profile evaluated in axis-normalized coordinates (ellipsoidal support),
/// clamped to zero for r >= 1, normalized to unit sum.
struct KernelND {
    std::vector<std::size_t> half_lengths;
    std::vector<double> weights; // row-major, shape (2*half_lengths+1)
};

/// Per-axis half-support lengths estimated from a signal's oscillation.
struct SupportSpec {
    std::vector<std::size_t> half_lengths;
};

Kernel1D make_kernel_1d(std::size_t half_length, KernelProfile profile = {});
KernelND make_kernel_nd(const SupportSpec& support, KernelProfile profile = {});

/// (n+1)-D kernel for the space-time variant: tensor product of a spatial
/// kernel and a 1-D time kernel, renormalized to unit mass. The time axis is
/// appended last.
KernelND tensor_product(const KernelND& spatial, const Kernel1D& temporal);

/// Real transfer values of a kernel on a DFT grid.
///
/// The kernel is zero-padded and circularly centered (weight of offset j at
/// grid index j mod N per axis), transformed, and the imaginary parts
/// (guaranteed ~1e-16 by even symmetry) discarded. Values are then clamped
/// into [0,1]: the sifting iteration f <- f - f*w diverges on any frequency
/// whose transfer leaves that interval. clamped_bins records how many bins
/// the clamp touched.
struct Spectrum {
    std::vector<double> values;
    std::vector<std::size_t> shape;
    std::size_t clamped_bins = 0;
};

Spectrum kernel_spectrum(const Kernel1D& kernel, std::size_t grid_extent);
Spectrum kernel_spectrum(const KernelND& kernel, std::span<const std::size_t> grid_shape);

} // namespace mdmvfif

#endif
