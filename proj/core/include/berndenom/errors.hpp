#pragma once

#include <stdexcept>
#include <string>

namespace berndenom {

/// Raised when a requested table or scan would exceed its configured size
/// budget, or when a sieve does not cover the primes an operation needs.
class SizingError : public std::length_error {
public:
    explicit SizingError(const std::string& what) : std::length_error(what) {}
};

/// Raised for unreadable, corrupt or mismatched checkpoint files.
class CheckpointError : public std::runtime_error {
public:
    explicit CheckpointError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace berndenom
