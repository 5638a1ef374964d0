#pragma once

#include <stdexcept>
#include <string>

namespace synkit {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input/model errors
struct InvalidAutomaton : Error { using Error::Error; };
struct InvalidWord : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct SizeMismatch : Error { using Error::Error; };

// Algebraic preconditions
struct NotSynchronizing : Error { using Error::Error; };
struct PreconditionViolation : Error { using Error::Error; };
struct DegeneratePair : Error { using Error::Error; };
struct TrivialAutomaton : Error { using Error::Error; };
struct NotACongruence : Error { using Error::Error; };
struct NotAnIdeal : Error { using Error::Error; };
struct EmptyIdeal : Error { using Error::Error; };
struct NotLeftIdeal : Error { using Error::Error; };
struct NoQuotient : Error { using Error::Error; };
struct NotSemisimple : Error { using Error::Error; };
struct WrongClass : Error { using Error::Error; };

// Resource limits
struct CapExceeded : Error { using Error::Error; };

// Property sweeps
struct VerificationFailure : Error { using Error::Error; };

}  // namespace synkit
