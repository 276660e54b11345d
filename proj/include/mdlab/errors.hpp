#pragma once

#include <stdexcept>
#include <string>

namespace mdlab {

// Thrown when a computation exceeds the configured desk-scale limits
// (variable count, generator degree, or wall-clock budget). Maps to its own
// CLI exit code.
struct DeskScaleExceeded : std::runtime_error {
    explicit DeskScaleExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when independent random coordinate changes disagree; the caller may
// retry with a fresh seed.
struct NonGenericError : std::runtime_error {
    explicit NonGenericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mdlab
