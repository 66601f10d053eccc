#ifndef MDMVFIF_CUBE_HPP
#define MDMVFIF_CUBE_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace mdmvfif {

/// Dense real-valued signal over an n-dimensional spatial grid evolving in
/// time. Storage is row-major with the time axis last, so the series at a
/// fixed spatial location is contiguous. Spatial rank n >= 1.
class SignalCube {
public:
    SignalCube() = default;

    /// Zero-filled cube of the given shape (spatial extents..., time extent).
    explicit SignalCube(std::vector<std::size_t> dims);

    SignalCube(std::vector<std::size_t> dims, std::vector<double> values);

    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t rank() const { return dims_.size(); }
    std::size_t spatial_rank() const { return dims_.size() - 1; }
    std::size_t extent(std::size_t axis) const { return dims_[axis]; }
    std::size_t time_extent() const { return dims_.back(); }
    std::size_t spatial_points() const;
    std::size_t size() const { return values_.size(); }

    /// Spatial extents only (time axis dropped).
    std::vector<std::size_t> spatial_dims() const;

    double* data() { return values_.data(); }
    const double* data() const { return values_.data(); }
    std::vector<double>& values() { return values_; }
    const std::vector<double>& values() const { return values_; }

    double operator[](std::size_t i) const { return values_[i]; }
    double& operator[](std::size_t i) { return values_[i]; }

    /// Linear index of (spatial flat index, t).
    std::size_t index(std::size_t spatial_flat, std::size_t t) const {
        return spatial_flat * dims_.back() + t;
    }

    bool same_shape(const SignalCube& other) const { return dims_ == other.dims_; }

    void subtract(const SignalCube& other);
    void add(const SignalCube& other);

    double max_abs() const;
    double norm2() const;
    double mean() const;

    /// Throws Error if any value is NaN or Inf (ingestion contract).
    void ensure_finite() const;

private:
    std::vector<std::size_t> dims_;
    std::vector<double> values_;
};

/// Product of extents; throws Error on empty shape or a zero extent.
std::size_t checked_volume(std::span<const std::size_t> dims);

} // namespace mdmvfif

#endif
