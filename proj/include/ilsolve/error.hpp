#pragma once

#include <stdexcept>
#include <string>

namespace ilsolve {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// interval-core
class DomainError : public Error { using Error::Error; };
class OverflowError : public Error { using Error::Error; };
class DimensionError : public Error { using Error::Error; };
class NonSquareError : public DimensionError { using DimensionError::DimensionError; };
class EmptyIntersectionError : public Error { using Error::Error; };

// linsys / verified-solve
class SingularMidpointError : public Error { using Error::Error; };
class NotCertifiedError : public Error { using Error::Error; };
class VerificationFailedError : public Error { using Error::Error; };
class DegenerateBoundError : public Error { using Error::Error; };

// bench
class ConfigError : public Error { using Error::Error; };
class DegenerateHullError : public Error { using Error::Error; };
class GenerationExhaustedError : public Error { using Error::Error; };
class ParseError : public Error { using Error::Error; };

}  // namespace ilsolve
