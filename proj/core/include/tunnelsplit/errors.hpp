#ifndef TUNNELSPLIT_ERRORS_HPP
#define TUNNELSPLIT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tunnelsplit {

// Base class for every error this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --- expression parsing ---

struct SyntaxError : Error {
    SyntaxError(const std::string& what, std::size_t pos)
        : Error(what + " at offset " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

struct UnknownFunctionError : Error {
    UnknownFunctionError(const std::string& name, std::size_t pos)
        : Error("unknown function '" + name + "' at offset " + std::to_string(pos)),
          position(pos) {}
    std::size_t position;
};

struct NonIntegerExponentError : Error {
    explicit NonIntegerExponentError(std::size_t pos)
        : Error("exponent must be an integer at offset " + std::to_string(pos)),
          position(pos) {}
    std::size_t position;
};

// --- evaluation / analysis ---

struct DomainError : Error {
    using Error::Error;
};

struct NotDoubleWellError : Error {
    using Error::Error;
};

struct AsymmetricPotentialError : Error {
    using Error::Error;
};

struct MultipleBarriersError : Error {
    using Error::Error;
};

// --- quadrature / root finding ---

struct NoConvergenceError : Error {
    using Error::Error;
};

struct NonFiniteSampleError : Error {
    using Error::Error;
};

struct NoBracketError : Error {
    using Error::Error;
};

// --- semiclassical chain ---

struct EOutOfRangeError : Error {
    using Error::Error;
};

struct MatchPointOutsideWellError : Error {
    using Error::Error;
};

struct BarrierTooLowError : Error {
    using Error::Error;
};

// --- oracle ---

struct BoxTooSmallError : Error {
    using Error::Error;
};

struct NoSeparationError : Error {
    using Error::Error;
};

struct NotConvergingError : Error {
    using Error::Error;
};

}  // namespace tunnelsplit

#endif
