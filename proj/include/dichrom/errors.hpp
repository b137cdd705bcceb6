#pragma once

#include <stdexcept>
#include <string>

namespace dichrom {

/// An input exceeds a configured size cap (vertex or edge count).
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require_cap(long long value, long long cap, const std::string& what) {
  if (value > cap)
    throw CapExceeded(what + " " + std::to_string(value) + " exceeds cap " + std::to_string(cap));
}

}  // namespace dichrom
