#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace obddlab {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class FormulaError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class WidthError : public ParseError {
public:
    using ParseError::ParseError;
};

class TautologyError : public ParseError {
public:
    using ParseError::ParseError;
};

class EnumerationTooLarge : public Error {
public:
    using Error::Error;
};

class NotAMatchingFormula : public Error {
public:
    using Error::Error;
};

class NotMatchingSubformula : public Error {
public:
    using Error::Error;
};

class TooManyClauses : public Error {
public:
    using Error::Error;
};

class NotEnoughVariables : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

class GraphTooLarge : public Error {
public:
    using Error::Error;
};

class GraphTooSmall : public Error {
public:
    using Error::Error;
};

class PartsOverlap : public Error {
public:
    using Error::Error;
};

class EdgeWithoutClause : public Error {
public:
    using Error::Error;
};

class PartialAssignment : public Error {
public:
    using Error::Error;
};

class UnknownStrategy : public Error {
public:
    using Error::Error;
};

class TooManyVariables : public Error {
public:
    using Error::Error;
};

class NotMonotone : public Error {
public:
    using Error::Error;
};

// Raised when the OBDD node table passes its configured limit. Sweeps catch
// it and record a blow-up row instead of aborting.
class CapacityExceeded : public Error {
public:
    explicit CapacityExceeded(std::size_t peak)
        : Error("OBDD node capacity exceeded (" + std::to_string(peak) + " nodes)"),
          peak_(peak) {}
    std::size_t peak() const noexcept { return peak_; }

private:
    std::size_t peak_;
};

class ConfigError : public Error {
public:
    ConfigError(std::string field, const std::string& what)
        : Error("config field '" + field + "': " + what), field_(std::move(field)) {}
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

class SchemaError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

} // namespace obddlab
