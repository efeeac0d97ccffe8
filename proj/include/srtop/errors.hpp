#pragma once

#include <stdexcept>
#include <string>

namespace srtop {

// Maps to CLI exit code 1.
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid input data (bad facet list, ghost vertex, non-antichain, ...). Exit code 1.
struct ValidationError : UsageError {
    explicit ValidationError(const std::string& msg) : UsageError(msg) {}
};

// An enumeration cap would be exceeded; rerun with an explicit override. Exit code 2.
struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

// A computation produced something mathematically impossible. Exit code 3.
struct InvariantViolation : std::runtime_error {
    explicit InvariantViolation(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace srtop
