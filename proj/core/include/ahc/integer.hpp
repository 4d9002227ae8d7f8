#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace ahc {

/// Arbitrary-precision signed integer used for every count derived from binomials.
using Integer = boost::multiprecision::cpp_int;

/// Narrow to int64, throwing std::overflow_error when the value does not fit.
inline std::int64_t to_int64(const Integer& value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("integer does not fit in 64 bits: " + value.str());
  }
  return static_cast<std::int64_t>(value);
}

inline std::string to_string(const Integer& value) { return value.str(); }

}  // namespace ahc
