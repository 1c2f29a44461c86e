#pragma once

#include <stdexcept>
#include <string>

namespace spinor {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// exact arithmetic / linear algebra
struct NonUnitDenominator : Error { using Error::Error; };
struct SingularMatrix : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct PrimeMismatch : Error { using Error::Error; };

// apartment combinatorics
struct LengthMismatch : Error { using Error::Error; };
struct SizeMismatch : Error { using Error::Error; };
struct RankTooLarge : Error { using Error::Error; };

// class field layer
struct ElementOutOfRange : Error { using Error::Error; };
struct InvalidGeoType : Error { using Error::Error; };
struct UnknownPlace : Error { using Error::Error; };
struct NotLocallySymmetric : Error { using Error::Error; };
struct MissingGeoType : Error { using Error::Error; };
struct EmptySet : Error { using Error::Error; };
struct ModulusMismatch : Error { using Error::Error; };

// interchange formats
struct ParseError : Error { using Error::Error; };

} // namespace spinor
