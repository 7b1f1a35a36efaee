#pragma once

#include <stdexcept>

namespace diffvar {

// Exact integer work exceeded the supported width.
class capacity_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Root iteration did not reach the residual target within the sweep cap.
class convergence_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The chosen root subset violates reciprocal pairing or conjugate closure.
class selection_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace diffvar
