#ifndef MDMVFIF_TEMPORAL_HPP
#define MDMVFIF_TEMPORAL_HPP

#include <cstddef>

#include "mdmvfif/cube.hpp"
#include "mdmvfif/kernels.hpp"
#include "mdmvfif/sift.hpp"
#include "mdmvfif/spatial.hpp"

namespace mdmvfif {

/// Rotation angles between consecutive time slices, radians in [0, pi].
struct ThetaSeries {
    std::vector<double> angles; // length T-1
};

/// angles[t] = arccos of the normalized inner product of slices t and t+1,
/// flattened over all spatial points and clamped into [-1, 1] before arccos
/// so roundoff at near-parallel slices cannot produce NaN. Throws
/// DegenerateSlice if any slice has zero norm.
ThetaSeries rotation_angles(const SignalCube& cube);

/// Time filter half-length: twice the mean distance between consecutive
/// extrema of the rotation-angle series. quantum > 0 snaps angles first.
/// Throws NoOscillation when the series has fewer than two extrema.
std::size_t temporal_filter_length(const ThetaSeries& theta, double quantum = 0.0);

/// Extracts one temporal IMF: 1-D kernel of the given half-length, spectrum
/// over the time axis (spatial locations broadcast), one global iteration
/// count. Throws KernelTooLarge if 2*half_length+1 exceeds the time extent.
StageResult extract_temporal_imf(const SignalCube& cube, std::size_t half_length,
                                 const StopConfig& stop, KernelProfile profile = {});

} // namespace mdmvfif

#endif
