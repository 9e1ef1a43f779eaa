#pragma once

#include <stdexcept>
#include <string>

namespace hylab {

/// Base class for all hylab errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Integrability precondition violated (e.g. (alpha-1)p <= -1 for a power-exponential).
class NonIntegrableError : public Error {
public:
    using Error::Error;
};

/// A quadrature routine could not reach the requested tolerance.
class QuadratureError : public Error {
public:
    using Error::Error;
};

/// The defining integral diverges for the requested evaluation point.
class DivergentIntegralError : public Error {
public:
    using Error::Error;
};

/// A sup/argmax search did not converge within its budget.
class SearchError : public Error {
public:
    using Error::Error;
};

/// Power iteration or another linear-algebra kernel failed.
class LinearAlgebraError : public Error {
public:
    using Error::Error;
};

/// Operation requested for a function variant it does not support.
class UnsupportedFunctionError : public Error {
public:
    using Error::Error;
};

/// Curve leaves the closed right half-plane (or another curve precondition fails).
class CurveError : public Error {
public:
    using Error::Error;
};

/// A declared curve class precondition does not hold; message names the condition.
class ClassPreconditionError : public Error {
public:
    using Error::Error;
};

/// Certificate missing or violated outright (positive mass, zero projection bound).
class CertificateError : public Error {
public:
    using Error::Error;
};

/// Exponent p outside the range required by a bound.
class ExponentRangeError : public Error {
public:
    using Error::Error;
};

/// Named bound not applicable at the requested angle/exponent.
class MethodNotApplicableError : public Error {
public:
    using Error::Error;
};

/// Rectangle corners are not of the form k/3^m.
class NonTriadicRectangleError : public Error {
public:
    using Error::Error;
};

/// Principal-value evaluation requested exactly at a jump of the density.
class SingularityError : public Error {
public:
    using Error::Error;
};

/// Measure support leaves the required sector.
class SectorError : public Error {
public:
    using Error::Error;
};

/// Series truncation too short for the requested tolerance; message carries the tail estimate.
class TruncationError : public Error {
public:
    using Error::Error;
};

/// Malformed configuration or JSON input.
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace hylab
