#ifndef MDMVFIF_OSCILLATION_HPP
#define MDMVFIF_OSCILLATION_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "mdmvfif/cube.hpp"
#include "mdmvfif/kernels.hpp"

namespace mdmvfif {

/// Interior strict local extrema of a series. A plateau of equal values
/// flanked by strictly lower (or strictly higher) neighbors counts once, at
/// the plateau's left edge.
struct ExtremaReport {
    std::vector<std::size_t> positions; // strictly increasing, interior only
    std::size_t count() const { return positions.size(); }
};

ExtremaReport local_extrema(std::span<const double> series);

/// Count-only variant over strided data. quantum > 0 snaps values to that
/// grid first, so noise below the quantum cannot fake an oscillation.
std::size_t count_extrema_strided(const double* base, std::size_t length,
                                  std::size_t stride, double quantum = 0.0);

/// Half-support from extrema spacing: max(1, round(multiplier * mean gap)).
/// Throws NoOscillation when fewer than two extrema exist.
std::size_t filter_length_from_spacing(const ExtremaReport& report, double multiplier);

/// Per-axis spatial half-supports of one time slice: every 1-D line along an
/// axis is scanned, extrema are summed, and the half-length is
/// max(1, round(xi * samples / extrema)). An axis with no extrema at all
/// gets maximal smoothing, floor(extent/2) - 1.
SupportSpec estimate_spatial_support(const SignalCube& cube, std::size_t t,
                                     double xi, double noise_floor = 0.0);

/// Same estimate for a standalone n-D array (natural row-major strides).
SupportSpec estimate_spatial_support(std::span<const double> slice,
                                     std::span<const std::size_t> shape,
                                     double xi, double noise_floor = 0.0);

/// Elementwise minimum of the per-slice support estimates over all t: the
/// one support used for every time slice of a spatial extraction.
SupportSpec min_support_over_time(const SignalCube& cube, double xi,
                                  double noise_floor = 0.0);

} // namespace mdmvfif

#endif
