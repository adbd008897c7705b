#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "hvdc/types.hpp"

namespace hvdc {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An argument outside the mathematical domain of an operation
// (negative quantity, loss fraction >= 1, non-positive price in a ratio test).
class DomainError : public Error {
public:
    using Error::Error;
};

// Malformed input text. line() is 1-based; 0 when the position is unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class DuplicateError : public ParseError {
public:
    using ParseError::ParseError;
};

// A loaded structure breaks one or more model invariants.
class ValidationError : public Error {
public:
    using Error::Error;
};

// Two ways of specifying the same quantity disagree.
class ConfigConflictError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// A reference (region, link, timestep) cannot be resolved.
class ResolutionError : public Error {
public:
    using Error::Error;
};

// Price or capacity data do not cover the requested horizon.
class AlignmentError : public ResolutionError {
public:
    AlignmentError(const std::string& what, std::vector<Timestep> missing)
        : ResolutionError(what), missing_(std::move(missing)) {}
    const std::vector<Timestep>& missing() const noexcept { return missing_; }

private:
    std::vector<Timestep> missing_;
};

// Requested dispatch exceeds a link rating.
class CapacityError : public Error {
public:
    CapacityError(const std::string& what, std::string link_id)
        : Error(what), link_id_(std::move(link_id)) {}
    const std::string& link_id() const noexcept { return link_id_; }

private:
    std::string link_id_;
};

}  // namespace hvdc
