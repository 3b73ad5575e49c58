// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace beamtrace {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// geometry
class ZeroDistance : public Error {
public:
    ZeroDistance() : Error("positions coincide (distance below 1e-9 m)") {}
};

// phased array
class BadPowerCoefficients : public Error {
public:
    using Error::Error;
};
class EmptyBeamSet : public Error {
public:
    EmptyBeamSet() : Error("beam set is empty") {}
};
class TooManyBeams : public Error {
public:
    using Error::Error;
};
class DimensionMismatch : public Error {
public:
    using Error::Error;
};
class EmptyGrid : public Error {
public:
    EmptyGrid() : Error("evaluation grid is empty") {}
};
class BadGrid : public Error {
public:
    using Error::Error;
};

// link
class NonPositiveDistance : public Error {
public:
    NonPositiveDistance() : Error("link distance must be > 0") {}
};
class ZeroChannel : public Error {
public:
    ZeroChannel() : Error("cannot precode a zero channel") {}
};
class EmptyLinkSet : public Error {
public:
    EmptyLinkSet() : Error("link set is empty") {}
};

// trace
class TraceError : public Error {
public:
    using Error::Error;
};
class ParseError : public TraceError {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what_part)
        : TraceError("parse error at line " + std::to_string(line) + ", column " +
                     std::to_string(column) + ": " + what_part),
          line_(line),
          column_(column) {}
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};
class NonMonotoneTime : public TraceError {
public:
    using TraceError::TraceError;
};
class TooShort : public TraceError {
public:
    TooShort() : TraceError("trace needs at least 2 samples") {}
};
class BadPeriod : public TraceError {
public:
    using TraceError::TraceError;
};
class BadParams : public Error {
public:
    using Error::Error;
};

// scenario
class GeometryInfeasible : public Error {
public:
    using Error::Error;
};
class EmptyResults : public Error {
public:
    EmptyResults() : Error("result set is empty") {}
};
class AllOutage : public Error {
public:
    AllOutage() : Error("every sample is in outage; no Rx statistics") {}
};

// cli
class ConfigError : public Error {
public:
    using Error::Error;
};
class OverwriteRefused : public Error {
public:
    using Error::Error;
};

}  // namespace beamtrace
