#ifndef MDMVFIF_SIFT_HPP
#define MDMVFIF_SIFT_HPP

#include <cstddef>
#include <span>

#include "mdmvfif/cube.hpp"
#include "mdmvfif/kernels.hpp"

namespace mdmvfif {

/// Stopping configuration shared by the inner (sift) and outer (IMF) loops.
struct StopConfig {
    double delta = 1e-3;        // relative-change threshold, > 0
    std::size_t max_inner = 200; // inner iteration cap, >= 1
    std::size_t max_imfs = 9;    // outer cap per stage, >= 1
};

/// Throws Error if any StopConfig invariant is violated.
void validate(const StopConfig& stop);

/// Which cube axes a spectrum spans; the remaining axes broadcast.
enum class SpectrumAxes {
    Spatial,  // all spatial axes; time broadcast
    Temporal, // time axis only; spatial locations broadcast
    All,      // the full space-time grid
};

/// Reflection extension (mirror without repeating the edge sample) by pad[a]
/// samples on both ends of each axis. pad[a] must be <= extent[a]-1.
SignalCube extend_boundary(const SignalCube& cube, std::span<const std::size_t> pad);

/// Removes exactly what extend_boundary added: trim(extend(c, p), p) == c.
SignalCube trim_boundary(const SignalCube& cube, std::span<const std::size_t> pad);

struct SiftResult {
    SignalCube imf;
    std::size_t iterations = 0;
};

/// The spectral inner loop shared by all stages.
///
/// Transforms the cube once over the axes the spectrum spans, then iterates
/// F_k = (1 - w)^k F bin by bin. After each step the relative change
/// r_k = |F_k - F_{k-1}| / |F_{k-1}| is evaluated directly in the frequency
/// domain (the DFT scaling cancels in the ratio, so this equals the
/// space-domain relative change). Stops at the first k with r_k < stop.delta,
/// or at stop.max_inner. Equivalent to k explicit steps f <- f - f*w of
/// circular convolution with the kernel behind the spectrum.
///
/// A zero cube returns (zero, 0) without transforming.
SiftResult sift_spectral(const SignalCube& cube, const Spectrum& spectrum,
                         SpectrumAxes axes, const StopConfig& stop);

} // namespace mdmvfif

#endif
