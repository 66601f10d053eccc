#ifndef MDMVFIF_ERRORS_HPP
#define MDMVFIF_ERRORS_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace mdmvfif {

/// Base class for every error the library raises.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidFilterLength : public Error {
public:
    using Error::Error;
};

class KernelTooLarge : public Error {
public:
    using Error::Error;
};

class SeriesTooShort : public Error {
public:
    using Error::Error;
};

/// Raised when a series has fewer than two extrema: the content is a trend
/// and no filter length can be derived. Callers use this to terminate.
class NoOscillation : public Error {
public:
    using Error::Error;
};

class GridTooSmall : public Error {
public:
    using Error::Error;
};

class PadTooLarge : public Error {
public:
    using Error::Error;
};

class SpectrumOutOfRange : public Error {
public:
    using Error::Error;
};

class BadFrequency : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

/// A time slice with zero Euclidean norm makes the rotation angle undefined.
class DegenerateSlice : public Error {
public:
    DegenerateSlice(const std::string& msg, std::size_t t)
        : Error(msg), time_index(t) {}
    std::size_t time_index;
};

class FormatError : public Error {
public:
    FormatError(const std::string& msg, std::uint64_t offset)
        : Error(msg), byte_offset(offset) {}
    std::uint64_t byte_offset;
};

class ShapeMismatch : public Error {
public:
    ShapeMismatch(const std::string& msg, std::size_t t)
        : Error(msg), time_step(t) {}
    std::size_t time_step;
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::string file, std::size_t row, std::size_t col)
        : Error(msg), file(std::move(file)), row(row), col(col) {}
    std::string file;
    std::size_t row;
    std::size_t col;
};

/// Wraps a stage failure inside decompose/st_fif with the outer round index.
class StageError : public Error {
public:
    StageError(const std::string& msg, std::size_t round)
        : Error(msg), round(round) {}
    std::size_t round;
};

} // namespace mdmvfif

#endif
