#pragma once

#include <stdexcept>
#include <string>

namespace lie {

/// Base class for every domain error raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

/// A catalog parameter lies outside its validity domain.
struct ParamDomain : Error {
  using Error::Error;
};

struct NotSemisimple : Error {
  using Error::Error;
};

struct NotNilpotent : Error {
  using Error::Error;
};

struct NotNilpotentAlgebra : Error {
  using Error::Error;
};

/// A span handed to a subalgebra operation is not closed under the bracket.
struct NotClosed : Error {
  using Error::Error;
};

struct ZeroPolynomial : Error {
  using Error::Error;
};

}  // namespace lie
