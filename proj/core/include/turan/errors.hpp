#pragma once

#include <stdexcept>
#include <string>

namespace turan {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Instance does not fit a hard size limit (64-vertex graphs, 16-vertex
// canonicalization regime, solver edge caps, enumeration caps).
struct CapacityExceeded : Error {
    using Error::Error;
};

struct BadParameter : Error {
    using Error::Error;
};

// Malformed graph6/sparse6 input; `offset` is the byte position of the
// first offending byte.
struct ParseError : Error {
    std::size_t offset;
    ParseError(const std::string& what, std::size_t off)
        : Error(what + " (byte " + std::to_string(off) + ")"), offset(off) {}
};

// ex^-1(k,F) is infinite: F is a matching or a star.
struct InfiniteInverse : Error {
    using Error::Error;
};

struct Unsupported : Error {
    using Error::Error;
};

}  // namespace turan
