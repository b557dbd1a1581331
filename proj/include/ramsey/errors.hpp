#pragma once

#include <stdexcept>
#include <string>

namespace ramsey {

// Invalid parameter values, out-of-regime requests, unsupported orders.
// CLI maps these to exit status 1.
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Index outside a precomputed table.
struct RangeError : DomainError {
  explicit RangeError(const std::string& what) : DomainError(what) {}
};

// A configured cap (enumeration nodes, oracle size, subset cost) would be
// exceeded. CLI maps these to exit status 3.
struct ResourceError : std::runtime_error {
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ramsey
