#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dq {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed expression text. `position()` is the 0-based byte offset.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class BasisMismatch : public Error {
public:
    using Error::Error;
};

/// Exponent bound (< 64 per variable) exceeded.
class DegreeOverflow : public Error {
public:
    using Error::Error;
};

/// Argument outside the documented range (projector index, grid size, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Singular closed form: Gaussian star with non-invertible covariance, star
/// exponential at cos(wt/2) = 0, kernel caustic at sin(wt) = 0.
class SingularityError : public Error {
public:
    using Error::Error;
};

class UnsupportedError : public Error {
public:
    using Error::Error;
};

/// Numerical procedure did not meet its own accuracy checks.
class NumericalError : public Error {
public:
    using Error::Error;
};

}  // namespace dq
