#pragma once

#include <stdexcept>

namespace mfl {

// Request lies outside what the artifact computes (size caps, column counts).
struct CapabilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace mfl
