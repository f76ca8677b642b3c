#pragma once

#include <stdexcept>

namespace rxpot {

// An iterative routine exhausted its budget without meeting tolerance.
struct NoConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The requested operation is not defined for this potential family.
struct Unsupported : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace rxpot
