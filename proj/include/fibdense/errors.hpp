#pragma once

#include <stdexcept>
#include <string>

namespace fibdense {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PrecisionTooLow : Error {
  using Error::Error;
};
struct WordTooLong : Error {
  using Error::Error;
};
struct InvalidSpec : Error {
  using Error::Error;
};
struct NonIntegralResult : Error {
  using Error::Error;
};
struct DegenerateDenominator : Error {
  using Error::Error;
};
struct ImaginaryResidue : Error {
  using Error::Error;
};
struct InsufficientDepth : Error {
  using Error::Error;
};
struct WindowTooLarge : Error {
  using Error::Error;
};
struct ZeroLeadingDenominator : Error {
  using Error::Error;
};

}  // namespace fibdense
