#pragma once
/// @file errors.hpp
/// @brief Error types shared across the library.
///
/// DomainError signals invalid mathematical input (bad matrix, context
/// mismatch, out-of-range index) and maps to exit code 1 in the CLI.
/// ResourceError signals that a computation would exceed the configured
/// memory budget and maps to exit code 2.

#include <stdexcept>
#include <string>

namespace nilcox {

/// Invalid input or inapplicable operation.
class DomainError : public std::runtime_error {
public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Computation exceeds the configured resource budget.
class ResourceError : public std::runtime_error {
public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace nilcox
