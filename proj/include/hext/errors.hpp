#pragma once

#include <stdexcept>
#include <string>

namespace hext {

/// Base class for every error raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed data: schema violations, out-of-range elements, signature
/// mismatches. The message names the offending field or value.
struct ValidationError : Error {
  using Error::Error;
};

/// Work refused because it would exceed a size cap. Raised instead of
/// silently producing a wrong or truncated answer.
struct CapacityError : Error {
  using Error::Error;
};

}  // namespace hext
