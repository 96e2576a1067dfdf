#pragma once

#include <stdexcept>
#include <string>

namespace flagtoric {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad user input (CLI exit code 1).
struct InvalidShape : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct InvalidDegrees : Error { using Error::Error; };
struct PartitionSizeMismatch : Error { using Error::Error; };
struct NotARoofEdge : Error { using Error::Error; };
struct NotInCone : Error { using Error::Error; };
struct NotFeasible : Error { using Error::Error; };
struct DegenerateInput : Error { using Error::Error; };
struct TruncationTooSmall : Error { using Error::Error; };

// Internal certificate failures (CLI exit code 2). These signal construction
// bugs, not bad input.
struct ConsistencyError : Error { using Error::Error; };
struct ReflexivityFailure : ConsistencyError { using ConsistencyError::ConsistencyError; };
struct UnimodularityFailure : ConsistencyError { using ConsistencyError::ConsistencyError; };
struct ContainmentFailure : ConsistencyError { using ConsistencyError::ConsistencyError; };
struct NormalFormFailure : ConsistencyError { using ConsistencyError::ConsistencyError; };
struct FunctionalMismatch : ConsistencyError { using ConsistencyError::ConsistencyError; };

} // namespace flagtoric
