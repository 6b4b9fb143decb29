// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace ordscale {

/// Base class for every error raised by the library.
class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input data (unsorted samples, NaN integrands, bad files).
class InputError : public Error
{
  public:
    using Error::Error;
};

/// Censoring indices that violate 1 <= a <= b <= n or b - a >= 2.
class SchemeError : public Error
{
  public:
    using Error::Error;
};

/// Argument outside the mathematical domain of a function.
class DomainError : public Error
{
  public:
    using Error::Error;
};

/// Quadrature or root finding did not converge, or a root was not bracketed.
class NumericalError : public Error
{
  public:
    using Error::Error;
};

/// Simulation or estimator configuration that cannot be evaluated.
class ConfigError : public Error
{
  public:
    using Error::Error;
};

/// File could not be opened, read or written.
class IoError : public Error
{
  public:
    using Error::Error;
};

}  // namespace ordscale
