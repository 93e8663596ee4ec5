#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lrc {

// Library-wide error; subclasses carry the failure category so callers
// (and tests) can match on the condition rather than the message text.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FieldMismatch : Error {
    using Error::Error;
};
struct DivisionByZero : Error {
    using Error::Error;
};
struct DimensionMismatch : Error {
    using Error::Error;
};
struct PoleError : Error {
    using Error::Error;
};
struct InvalidArgument : Error {
    using Error::Error;
};
struct RecoveryError : Error {
    std::size_t fibre_index;
    RecoveryError(const std::string& msg, std::size_t fibre) : Error(msg), fibre_index(fibre) {}
};

// FNV-1a, used for the content hash embedded in reports.
inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

}  // namespace lrc
