#pragma once

#include <stdexcept>
#include <string>

namespace optomech {

struct NonConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnreachableTargetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ZeroCouplingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidModelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct StepTooLargeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnphysicalStateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TruncationTooSmallError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PositivityLossError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidSpecError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace optomech
