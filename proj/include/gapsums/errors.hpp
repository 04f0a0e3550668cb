#pragma once

#include <stdexcept>
#include <string>

namespace gapsums {

// Guard exceeded (enumeration too large etc.). CLI exit code 3.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

// A stated hypothesis of a bound does not hold for the given inputs.
struct PreconditionError : std::invalid_argument {
    explicit PreconditionError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Rejection sampling gave up.
struct SamplingError : std::runtime_error {
    long rejections;
    SamplingError(const std::string& msg, long rej)
        : std::runtime_error(msg), rejections(rej) {}
};

// A hard invariant failed at runtime (sweep chain inequality). CLI exit code 2.
struct InvariantViolation : std::runtime_error {
    explicit InvariantViolation(const std::string& msg) : std::runtime_error(msg) {}
};

struct IOError : std::runtime_error {
    explicit IOError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace gapsums
