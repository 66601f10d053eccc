#ifndef MDMVFIF_SPATIAL_HPP
#define MDMVFIF_SPATIAL_HPP

#include "mdmvfif/cube.hpp"
#include "mdmvfif/kernels.hpp"
#include "mdmvfif/sift.hpp"

namespace mdmvfif {

struct StageResult {
    SignalCube imf;
    std::size_t iterations = 0;
    std::size_t clamped_bins = 0;
};

/// Extracts one spatial IMF: builds the n-D kernel of the given support,
/// takes its spectrum over the spatial axes (time broadcast), and sifts the
/// whole cube with one global iteration count for all time slices.
StageResult extract_spatial_imf(const SignalCube& cube, const SupportSpec& support,
                                const StopConfig& stop, KernelProfile profile = {});

} // namespace mdmvfif

#endif
