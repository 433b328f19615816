#ifndef SUBFIELD_ERRORS_HPP
#define SUBFIELD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace subfield {

/// Base class for all library errors.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Field construction / arithmetic
struct NonPrimeError final : Error { using Error::Error; };
struct ReducibleModulusError final : Error { using Error::Error; };
struct SpecMismatchError final : Error { using Error::Error; };
struct DivisionByZeroError final : Error { using Error::Error; };
struct WrongExtensionDegreeError final : Error { using Error::Error; };
struct GammaInBaseFieldError final : Error { using Error::Error; };

// Parsing
struct ParseError final : Error { using Error::Error; };
struct ExponentOutOfRangeError final : Error { using Error::Error; };

// Metric / parameters
struct LambdaTooSmallError final : Error { using Error::Error; };
struct LengthMismatchError final : Error { using Error::Error; };
struct EmptySetError final : Error { using Error::Error; };
struct SizeTooSmallError final : Error { using Error::Error; };

// Code constructions
struct NotADivisorError final : Error { using Error::Error; };
struct DependentPointsError final : Error { using Error::Error; };
struct LengthExceedsDegreeError final : Error { using Error::Error; };

// Enumeration limits
struct TooLargeError final : Error { using Error::Error; };

// Enumerator / transform consistency
struct NonIntegerCoefficientError final : Error { using Error::Error; };
struct NegativeCoefficientError final : Error { using Error::Error; };
struct NotConstantOnClassError final : Error { using Error::Error; };
struct RoundingTooLargeError final : Error { using Error::Error; };

// Asymptotics
struct RadiusOutOfRangeError final : Error { using Error::Error; };
struct NoConvergenceError final : Error { using Error::Error; };

struct InvalidArgumentError final : Error { using Error::Error; };

}  // namespace subfield

#endif
