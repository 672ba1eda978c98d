#pragma once

#include <stdexcept>
#include <string>

namespace sesq {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Construction errors
struct NonNormalizedInput : Error { using Error::Error; };
struct EmptyState : Error { using Error::Error; };
struct EntropyOutOfRange : Error { using Error::Error; };
struct InvariantViolation : Error { using Error::Error; };

// Contraction / subset errors
struct InvalidSubset : Error { using Error::Error; };
struct BlockCapExceeded : Error { using Error::Error; };

// Solver errors
struct InstanceTooLarge : Error { using Error::Error; };
struct TableTooLarge : Error { using Error::Error; };
struct NotSeparable : Error { using Error::Error; };
struct NotAdditiveWeight : Error { using Error::Error; };

// Reduction errors
struct EpsilonTooLarge : Error { using Error::Error; };
struct WindowTooNarrow : Error { using Error::Error; };

// I/O errors
struct ParseError : Error { using Error::Error; };

}  // namespace sesq
