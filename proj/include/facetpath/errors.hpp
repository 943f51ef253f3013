#pragma once

#include <stdexcept>
#include <string>

namespace facetpath {

enum class ErrorCode {
    InvalidSimplex,
    InvalidEdge,
    Dimension,
    Capacity,
    Range,
    Parameter,
    Parse,
    TheoremDomain,
    UndefinedBase,
};

/// Base class for all library errors; carries a machine-readable code.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

class InvalidSimplexError : public Error {
public:
    explicit InvalidSimplexError(const std::string& what)
        : Error(ErrorCode::InvalidSimplex, what) {}
};

class InvalidEdgeError : public Error {
public:
    explicit InvalidEdgeError(const std::string& what)
        : Error(ErrorCode::InvalidEdge, what) {}
};

class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& what)
        : Error(ErrorCode::Dimension, what) {}
};

class CapacityError : public Error {
public:
    explicit CapacityError(const std::string& what)
        : Error(ErrorCode::Capacity, what) {}
};

class RangeError : public Error {
public:
    explicit RangeError(const std::string& what)
        : Error(ErrorCode::Range, what) {}
};

class ParameterError : public Error {
public:
    explicit ParameterError(const std::string& what)
        : Error(ErrorCode::Parameter, what) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what)
        : Error(ErrorCode::Parse, what) {}
};

/// A bound was requested outside the hypotheses of the theorem it comes from.
class TheoremDomainError : public Error {
public:
    explicit TheoremDomainError(const std::string& what)
        : Error(ErrorCode::TheoremDomain, what) {}
};

class UndefinedBaseError : public Error {
public:
    explicit UndefinedBaseError(const std::string& what)
        : Error(ErrorCode::UndefinedBase, what) {}
};

}  // namespace facetpath
