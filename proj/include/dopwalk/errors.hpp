#pragma once

#include <stdexcept>
#include <string>

namespace dopwalk {

// Base class for all library errors. run() maps these to exit code 2.
struct WalkError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnknownVertex : WalkError {
  using WalkError::WalkError;
};
struct DuplicateEdge : WalkError {
  using WalkError::WalkError;
};
struct MissingEdgeAssignment : WalkError {
  using WalkError::WalkError;
};
struct WrongCoinDimension : WalkError {
  using WalkError::WalkError;
};
struct IsolatedVertex : WalkError {
  using WalkError::WalkError;
};
struct UnitarityCheckFailed : WalkError {
  using WalkError::WalkError;
};
struct PairOutsideBasis : WalkError {
  using WalkError::WalkError;
};
struct NonUnitCoinVector : WalkError {
  using WalkError::WalkError;
};
struct DimensionMismatch : WalkError {
  using WalkError::WalkError;
};
struct ZeroProbabilityOutcome : WalkError {
  using WalkError::WalkError;
};
struct DimensionTooLarge : WalkError {
  using WalkError::WalkError;
};
struct ConfigParseError : WalkError {
  using WalkError::WalkError;
};
struct ValidationError : WalkError {
  using WalkError::WalkError;
};
struct IoError : WalkError {
  using WalkError::WalkError;
};

}  // namespace dopwalk
